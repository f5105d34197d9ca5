// Copyright 2026 The DQD Decoherence Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DQD_CHANNELS_HPP_
#define DQD_CHANNELS_HPP_

#include <string>

#include "dqd/density.hpp"

namespace dqd {

// Superoperators act on column-stacked density matrices,
// vec(rho)[i + N*j] = rho(i, j), so vec(A X B) = (B^T (x) A) vec(X).
// Composite systems order their factors most-significant first, matching kron().

inline constexpr double kChannelTolerance = 1e-10;

enum class GateKind { NOT, PHASE };

std::string to_string(GateKind kind);

/// Constant-Hamiltonian single-qubit gate: splitting eps held for tau = pi hbar / eps.
struct GateSpec {
    GateKind kind = GateKind::NOT;
    double splitting_eps = 0.0;  // J
    double duration_tau = 0.0;   // s

    static GateSpec from_splitting(GateKind kind, double splitting_eps);
    static GateSpec from_duration(GateKind kind, double duration_tau);
};

/// Linear map on N x N matrices stored as its N^2 x N^2 matrix. Construction
/// checks trace and Hermiticity preservation to 1e-10.
class Channel {
public:
    Channel(Eigen::Index dim, Matrix superoperator, std::string label);

    Eigen::Index dim() const { return dim_; }
    const Matrix &matrix() const { return matrix_; }
    const std::string &label() const { return label_; }

private:
    Eigen::Index dim_;
    Matrix matrix_;
    std::string label_;
};

struct ThermalPopulations {
    double p_plus = 1.0;   // ground state |+>
    double p_minus = 0.0;  // excited state |->
};

/// Boltzmann populations of the levels -eps/2 (|+>) and +eps/2 (|->).
ThermalPopulations thermal_populations(double splitting_eps, double temperature);

/// Markovian relaxation at rate gamma in the energy basis {|+>, |->}:
/// populations relax to thermal values as e^{-gamma t}, coherences decay as
/// e^{-gamma t / 2} while rotating at eps / hbar.
Channel relaxation_channel_energy_basis(double gamma, double splitting_eps, double temperature,
                                        double t);

/// The same relaxation map expressed in the logical basis {|0>, |1>}, where
/// |+-> = (|0> +- |1>)/sqrt 2. This is what ideal_channel(NOT) is compared to.
Channel not_gate_channel(double gamma, double splitting_eps, double temperature, double t);

/// Pure dephasing in the logical basis: populations fixed, rho_01 multiplied
/// by e^{-B2 + i eps t / hbar}.
Channel phase_gate_channel(double b2, double splitting_eps, double t);

/// Noiseless evolution under H = -(eps_A/2) sigma_x - (eps_P/2) sigma_z for 0 <= t <= tau.
Channel ideal_channel(const GateSpec &gate, double t);

Channel identity_channel(Eigen::Index dim);

/// rho -> u rho u^dagger.
Channel unitary_channel(const Matrix &u, std::string label);

/// Applies the channel and checks the output is a valid state (trace and
/// Hermiticity to 1e-10, positivity to -1e-10); throws ChannelValidityError.
DensityMatrix apply_channel(const Channel &channel, const DensityMatrix &rho);

/// Raw superoperator applied to an arbitrary matrix, no validation.
Matrix apply_superoperator(const Matrix &superoperator, const Matrix &x);

/// Superoperator of A (x) B acting on the composite space of dimension
/// dim_a * dim_b.
Matrix tensor_superoperators(const Matrix &a, Eigen::Index dim_a, const Matrix &b,
                             Eigen::Index dim_b);

Channel tensor_channels(const Channel &a, const Channel &b);

/// second o first.
Channel compose(const Channel &second, const Channel &first);

/// Re-expresses the channel in the basis formed by the columns of `basis`
/// (a unitary): rho_new = basis rho_old basis^dagger on both sides.
Channel change_basis(const Channel &channel, const Matrix &basis);

/// Choi matrix sum_ij T(|i><j|) (x) |i><j|; PSD iff the map is completely positive.
Matrix choi_matrix(const Channel &channel);

struct Timescales {
    double t1 = 0.0;
    double t2 = 0.0;
};

/// T1 = 1/gamma from the population decay, T2 = 2/gamma from the coherence decay.
Timescales extract_timescales(double gamma);

/// Hadamard matrix, columns |+> and |->.
Matrix hadamard();

}  // namespace dqd

#endif  // DQD_CHANNELS_HPP_

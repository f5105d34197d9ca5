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

#ifndef DQD_DENSITY_HPP_
#define DQD_DENSITY_HPP_

#include <vector>

#include "dqd/errors.hpp"
#include "dqd/linalg.hpp"

namespace dqd {

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kNormalizationTolerance = 1e-12;
inline constexpr double kPositivityTolerance = 1e-10;

/// Normalised state vector |phi>.
class PureState {
public:
    /// Throws NormalizationError when |sum |c_j|^2 - 1| > 1e-12.
    explicit PureState(Vector amplitudes);

    /// Scales the input to unit norm. Throws InvalidArgument on a zero vector.
    static PureState normalized(Vector amplitudes);

    Eigen::Index dim() const { return amplitudes_.size(); }
    const Vector &amplitudes() const { return amplitudes_; }

private:
    Vector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite N x N matrix.
class DensityMatrix {
public:
    /// Validates every invariant; throws InvariantError or PositivityError.
    explicit DensityMatrix(Matrix entries);

    static DensityMatrix diagonal(const std::vector<double> &populations);
    static DensityMatrix maximally_mixed(Eigen::Index dim);

    Eigen::Index dim() const { return entries_.rows(); }
    const Matrix &matrix() const { return entries_; }
    Complex operator()(Eigen::Index j, Eigen::Index k) const { return entries_(j, k); }

private:
    Matrix entries_;
};

/// rho - rho_ideal: Hermitian and traceless.
class DeviationMatrix {
public:
    /// Validates Hermiticity and zero trace within 1e-12.
    explicit DeviationMatrix(Matrix entries);

    Eigen::Index dim() const { return entries_.rows(); }
    const Matrix &matrix() const { return entries_; }
    Complex operator()(Eigen::Index j, Eigen::Index k) const { return entries_(j, k); }

private:
    Matrix entries_;
};

/// |phi><phi|.
DensityMatrix density_from_pure(const PureState &state);

/// Entrywise actual - ideal. Throws DimensionError on mismatch.
DeviationMatrix deviation(const DensityMatrix &actual, const DensityMatrix &ideal);

/// ||sigma||_lambda = max_i |lambda_i|.
double eigenvalue_norm(const DeviationMatrix &sigma);

/// ||sigma||_Tr = sum_i |lambda_i|.
double trace_norm(const DeviationMatrix &sigma);

/// Von Neumann entropy -Tr(rho ln rho) in nats, with 0 ln 0 = 0.
double entropy(const DensityMatrix &rho);

/// 1 - Tr(rho^2).
double idempotency_defect(const DensityMatrix &rho);

/// Tr(rho_ideal rho). Throws DimensionError on mismatch.
double fidelity(const DensityMatrix &ideal, const DensityMatrix &actual);

/// Conjugation u rho u^dagger; u must be unitary.
DensityMatrix conjugate(const DensityMatrix &rho, const Matrix &u);

/// Tensor product of states; first factor is the most significant index.
DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);

/// Reduced state of the first `keep_dim` factor of a bipartite state.
DensityMatrix partial_trace_second(const DensityMatrix &rho, Eigen::Index keep_dim);

}  // namespace dqd

#endif  // DQD_DENSITY_HPP_

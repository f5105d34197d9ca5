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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dqd/channels.hpp"
#include "dqd/constants.hpp"
#include "dqd/errors.hpp"
#include "oracles.hpp"

namespace dqd {
namespace {

using constants::boltzmann;
using constants::elementary_charge;
using constants::hbar;
using constants::pi;

const double kEps = 30e-6 * elementary_charge;
const double kTau = pi * hbar / kEps;

double max_abs(const Matrix &m) { return m.cwiseAbs().maxCoeff(); }

DensityMatrix random_density(Eigen::Index n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Matrix z(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) z(i, j) = Complex(g(rng), g(rng));
    Matrix rho = z * z.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(0.5 * (rho + rho.adjoint()));
}

Vector ket_plus() { return Vector::Ones(2) / std::sqrt(2.0); }
Vector ket_minus() {
    Vector v(2);
    v << 1.0, -1.0;
    return v / std::sqrt(2.0);
}

Matrix thermal_logical(double eps, double temperature) {
    const ThermalPopulations p = thermal_populations(eps, temperature);
    return p.p_plus * ket_plus() * ket_plus().adjoint() + p.p_minus * ket_minus() * ket_minus().adjoint();
}

TEST(GateSpec, DurationFromSplitting) {
    const GateSpec g = GateSpec::from_splitting(GateKind::NOT, kEps);
    EXPECT_NEAR(g.duration_tau, pi * hbar / kEps, 1e-12 * g.duration_tau);
    const GateSpec h = GateSpec::from_duration(GateKind::PHASE, g.duration_tau);
    EXPECT_NEAR(h.splitting_eps, kEps, 1e-12 * kEps);
    EXPECT_THROW(GateSpec::from_splitting(GateKind::NOT, 0.0), InvalidArgument);
}

TEST(ThermalPopulations, Examples) {
    const ThermalPopulations hot = thermal_populations(kEps, 1e9);
    EXPECT_NEAR(hot.p_plus, 0.5, 1e-9);
    EXPECT_NEAR(hot.p_minus, 0.5, 1e-9);
    const ThermalPopulations cold = thermal_populations(kEps, 0.0);
    EXPECT_EQ(cold.p_plus, 1.0);
    EXPECT_EQ(cold.p_minus, 0.0);
    const ThermalPopulations third = thermal_populations(kEps, kEps / (boltzmann * std::log(3.0)));
    EXPECT_NEAR(third.p_plus, 0.75, 1e-14);
    EXPECT_NEAR(third.p_minus, 0.25, 1e-14);
    for (double t : {0.001, 0.05, 1.0, 100.0}) {
        const ThermalPopulations p = thermal_populations(kEps, t);
        EXPECT_NEAR(p.p_plus + p.p_minus, 1.0, 1e-15);
        EXPECT_GE(p.p_plus, p.p_minus);
    }
}

TEST(NotGateChannel, IdentityAtZeroTime) {
    EXPECT_LT(max_abs(not_gate_channel(1e7, kEps, 0.05, 0.0).matrix() - Matrix::Identity(4, 4)), 1e-15);
    EXPECT_LT(max_abs(relaxation_channel_energy_basis(1e7, kEps, 0.05, 0.0).matrix() - Matrix::Identity(4, 4)),
              1e-15);
}

TEST(NotGateChannel, NoiselessLimitIsIdealRotation) {
    for (double f : {0.0, 0.25, 0.5, 1.0}) {
        const double t = f * kTau;
        const Channel noisy = not_gate_channel(0.0, kEps, 0.05, t);
        const Channel ideal = ideal_channel(GateSpec::from_splitting(GateKind::NOT, kEps), t);
        EXPECT_LT(max_abs(noisy.matrix() - ideal.matrix()), 1e-12);
    }
}

TEST(NotGateChannel, EnergyBasisEntries) {
    const double gamma = 2e9, t = 0.4 * kTau, temp = 0.02;
    const ThermalPopulations p = thermal_populations(kEps, temp);
    Matrix r(2, 2);
    r << 0.3, Complex(0.1, 0.2), Complex(0.1, -0.2), 0.7;
    const Matrix out = apply_superoperator(relaxation_channel_energy_basis(gamma, kEps, temp, t).matrix(), r);
    const double e = std::exp(-gamma * t);
    EXPECT_NEAR(std::abs(out(0, 0) - (p.p_plus + (0.3 - p.p_plus) * e)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(out(1, 1) - (p.p_minus + (0.7 - p.p_minus) * e)), 0.0, 1e-14);
    const Complex c = Complex(0.1, 0.2) * std::exp(Complex(-0.5 * gamma * t, kEps * t / hbar));
    EXPECT_NEAR(std::abs(out(0, 1) - c), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(out(1, 0) - std::conj(c)), 0.0, 1e-14);
}

TEST(NotGateChannel, ThermalStateIsFixed) {
    const double temp = 0.05;
    const DensityMatrix thermal(thermal_logical(kEps, temp));
    for (double t : {0.1 * kTau, kTau, 10.0 * kTau}) {
        const DensityMatrix out = apply_channel(not_gate_channel(3e9, kEps, temp, t), thermal);
        EXPECT_LT(max_abs(out.matrix() - thermal.matrix()), 1e-12);
    }
}

TEST(NotGateChannel, RelaxesToThermalState) {
    std::mt19937_64 rng(37);
    const double temp = 0.2;
    const Channel late = not_gate_channel(1e9, kEps, temp, 1e-7);  // Gamma t = 100
    for (int k = 0; k < 20; ++k) {
        const DensityMatrix out = apply_channel(late, random_density(2, rng));
        EXPECT_LT(max_abs(out.matrix() - thermal_logical(kEps, temp)), 1e-12);
    }
}

TEST(NotGateChannel, Semigroup) {
    const double gamma = 5e8, temp = 0.07;
    for (auto [t1, t2] : {std::pair{1e-11, 3e-11}, std::pair{2e-10, 7e-10}}) {
        const Channel ab = compose(not_gate_channel(gamma, kEps, temp, t1), not_gate_channel(gamma, kEps, temp, t2));
        EXPECT_LT(max_abs(ab.matrix() - not_gate_channel(gamma, kEps, temp, t1 + t2).matrix()), 1e-10);
    }
}

TEST(NotGateChannel, RejectsNegativeInputs) {
    EXPECT_THROW(not_gate_channel(-1.0, kEps, 0.05, 1e-11), InvalidArgument);
    EXPECT_THROW(not_gate_channel(1.0, kEps, 0.05, -1e-11), InvalidArgument);
}

TEST(PhaseGateChannel, NoiselessLimitIsIdealPhaseGate) {
    for (double f : {0.0, 0.5, 1.0}) {
        const double t = f * kTau;
        EXPECT_LT(max_abs(phase_gate_channel(0.0, kEps, t).matrix() -
                          ideal_channel(GateSpec::from_splitting(GateKind::PHASE, kEps), t).matrix()),
                  1e-12);
    }
}

TEST(PhaseGateChannel, KeepsDiagonalsAndDephases) {
    std::mt19937_64 rng(41);
    const Channel ch = phase_gate_channel(0.3, kEps, kTau);
    for (int k = 0; k < 20; ++k) {
        const DensityMatrix rho = random_density(2, rng);
        const DensityMatrix out = apply_channel(ch, rho);
        EXPECT_NEAR(std::abs(out(0, 0) - rho(0, 0)), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(out(1, 1) - rho(1, 1)), 0.0, 1e-15);
        EXPECT_NEAR(std::abs(out(0, 1)), std::exp(-0.3) * std::abs(rho(0, 1)), 1e-15);
    }
    for (double p : {0.0, 0.2, 0.5, 1.0}) {
        const DensityMatrix d = DensityMatrix::diagonal({p, 1.0 - p});
        EXPECT_LT(max_abs(apply_channel(ch, d).matrix() - d.matrix()), 1e-15);
    }
    const DensityMatrix plus = density_from_pure(PureState(ket_plus()));
    EXPECT_LT(std::abs(apply_channel(phase_gate_channel(800.0, kEps, kTau), plus)(0, 1)), 1e-300);
    EXPECT_THROW(phase_gate_channel(-0.1, kEps, kTau), InvalidArgument);
}

TEST(IdealChannel, GateActions) {
    const GateSpec not_gate = GateSpec::from_splitting(GateKind::NOT, kEps);
    const DensityMatrix zero = DensityMatrix::diagonal({1.0, 0.0});
    const DensityMatrix flipped = apply_channel(ideal_channel(not_gate, kTau), zero);
    EXPECT_LT(max_abs(flipped.matrix() - DensityMatrix::diagonal({0.0, 1.0}).matrix()), 1e-15);

    const GateSpec phase = GateSpec::from_splitting(GateKind::PHASE, kEps);
    Vector in(2), expected(2);
    in << Complex(0.6, 0.0), Complex(0.0, 0.8);
    expected << Complex(0.6, 0.0), Complex(0.0, -0.8);
    const DensityMatrix out = apply_channel(ideal_channel(phase, kTau), density_from_pure(PureState(in)));
    EXPECT_LT(max_abs(out.matrix() - density_from_pure(PureState(expected)).matrix()), 1e-15);

    EXPECT_LT(max_abs(ideal_channel(not_gate, 0.0).matrix() - Matrix::Identity(4, 4)), 1e-15);
    EXPECT_THROW(ideal_channel(not_gate, 1.01 * kTau), InvalidArgument);
    EXPECT_THROW(ideal_channel(not_gate, -1e-15), InvalidArgument);
}

TEST(IdealChannel, PreservesPurity) {
    std::mt19937_64 rng(43);
    for (GateKind kind : {GateKind::NOT, GateKind::PHASE}) {
        const Channel ch = ideal_channel(GateSpec::from_splitting(kind, kEps), 0.37 * kTau);
        for (int k = 0; k < 50; ++k) {
            const DensityMatrix rho = random_density(2, rng);
            EXPECT_NEAR(idempotency_defect(apply_channel(ch, rho)), idempotency_defect(rho), 1e-12);
        }
    }
}

TEST(ApplyChannel, IdentityTraceAndDimensions) {
    std::mt19937_64 rng(47);
    const DensityMatrix rho = random_density(3, rng);
    EXPECT_LT(max_abs(apply_channel(identity_channel(3), rho).matrix() - rho.matrix()), 1e-15);
    EXPECT_THROW(apply_channel(identity_channel(2), rho), DimensionError);

    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 1000; ++k) {
        const double temp = 0.5 * u(rng);
        const Channel ch = k % 2 == 0 ? not_gate_channel(1e10 * u(rng), kEps, temp, kTau * u(rng))
                                      : phase_gate_channel(3.0 * u(rng), kEps, kTau * u(rng));
        const DensityMatrix out = apply_channel(ch, random_density(2, rng));
        EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-10);
    }
}

TEST(Channel, RejectsInvalidSuperoperators) {
    EXPECT_THROW(Channel(2, 2.0 * Matrix::Identity(4, 4), "scaled"), ChannelValidityError);
    Matrix not_hermitian = Matrix::Identity(4, 4);
    not_hermitian(1, 1) = Complex(0.0, 1.0);
    EXPECT_THROW(Channel(2, not_hermitian, "skew"), ChannelValidityError);
    EXPECT_THROW(Channel(2, Matrix::Identity(3, 3), "shape"), DimensionError);
}

TEST(TensorChannels, IdentityFactorisationAssociativity) {
    EXPECT_LT(max_abs(tensor_channels(identity_channel(2), identity_channel(2)).matrix() - Matrix::Identity(16, 16)),
              1e-15);
    std::mt19937_64 rng(53);
    const Channel a = not_gate_channel(2e9, kEps, 0.1, 0.3 * kTau);
    const Channel b = phase_gate_channel(0.4, kEps, 0.8 * kTau);
    const Channel c = not_gate_channel(7e9, kEps, 0.02, 0.9 * kTau);
    const Channel ab = tensor_channels(a, b);
    EXPECT_EQ(ab.dim(), 4);
    for (int k = 0; k < 20; ++k) {
        const DensityMatrix ra = random_density(2, rng), rb = random_density(2, rng);
        const DensityMatrix lhs = apply_channel(ab, tensor(ra, rb));
        const DensityMatrix rhs = tensor(apply_channel(a, ra), apply_channel(b, rb));
        EXPECT_LT(max_abs(lhs.matrix() - rhs.matrix()), 1e-13);
    }
    const Matrix left = tensor_channels(tensor_channels(a, b), c).matrix();
    const Matrix right = tensor_channels(a, tensor_channels(b, c)).matrix();
    EXPECT_LT(max_abs(left - right), 1e-12);
}

TEST(CompletePositivity, ChoiSpectrumOnGrid) {
    for (double gt : {0.0, 0.01, 0.5, 2.0, 20.0}) {
        for (double temp : {0.0, 0.01, 0.1, 10.0}) {
            const double gamma = gt / kTau;
            const Channel ch = not_gate_channel(gamma, kEps, temp, kTau);
            const Matrix choi = oracle::choi(ch.matrix(), 2);
            EXPECT_GE(hermitian_eigenvalues(choi).minCoeff(), -1e-9);
            // Same matrix up to the order of the two tensor factors.
            const Matrix lib = choi_matrix(ch);
            for (int a = 0; a < 2; ++a)
                for (int i = 0; i < 2; ++i)
                    for (int b = 0; b < 2; ++b)
                        for (int j = 0; j < 2; ++j)
                            EXPECT_NEAR(std::abs(lib(a * 2 + i, b * 2 + j) - choi(i * 2 + a, j * 2 + b)), 0.0, 1e-14);
        }
    }
    for (double b2 : {0.0, 0.001, 0.1, 1.0, 10.0}) {
        const Channel ch = phase_gate_channel(b2, kEps, kTau);
        EXPECT_GE(hermitian_eigenvalues(oracle::choi(ch.matrix(), 2)).minCoeff(), -1e-9);
    }
}

TEST(Timescales, Examples) {
    const Timescales one = extract_timescales(1.0);
    EXPECT_EQ(one.t1, 1.0);
    EXPECT_EQ(one.t2, 2.0);
    const Timescales fast = extract_timescales(2e6);
    EXPECT_NEAR(fast.t1, 5e-7, 1e-22);
    EXPECT_NEAR(fast.t2, 1e-6, 1e-21);
    for (double g : {1e3, 7e8}) EXPECT_EQ(extract_timescales(g).t2, 2.0 * extract_timescales(g).t1);
    EXPECT_THROW(extract_timescales(0.0), InvalidArgument);
}

TEST(ChangeBasis, HadamardRoundTrip) {
    const Channel energy = relaxation_channel_energy_basis(4e9, kEps, 0.05, 0.6 * kTau);
    const Channel logical = change_basis(energy, hadamard());
    EXPECT_LT(max_abs(change_basis(logical, hadamard()).matrix() - energy.matrix()), 1e-14);
    EXPECT_LT(max_abs(logical.matrix() - not_gate_channel(4e9, kEps, 0.05, 0.6 * kTau).matrix()), 1e-15);
}

}  // namespace
}  // namespace dqd

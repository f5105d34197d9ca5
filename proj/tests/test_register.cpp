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

#include "dqd/constants.hpp"
#include "dqd/errors.hpp"
#include "dqd/register.hpp"

namespace dqd {
namespace {

using constants::boltzmann;
using constants::elementary_charge;
using constants::hbar;
using constants::pi;

const double kEps = 30e-6 * elementary_charge;
const double kTau = pi * hbar / kEps;

OptimizerConfig quick() {
    OptimizerConfig cfg;
    cfg.multistart_count = 16;
    return cfg;
}

QubitChannels dephasing(double b2) {
    return {phase_gate_channel(b2, kEps, kTau), ideal_channel(GateSpec::from_splitting(GateKind::PHASE, kEps), kTau)};
}

QubitChannels relaxing(double gamma_tau, double eps_over_kt) {
    return {not_gate_channel(gamma_tau / kTau, kEps, kEps / (boltzmann * eps_over_kt), kTau),
            ideal_channel(GateSpec::from_splitting(GateKind::NOT, kEps), kTau)};
}

QubitChannels noiseless(GateKind kind) {
    const Channel ideal = ideal_channel(GateSpec::from_splitting(kind, kEps), kTau);
    return {ideal, ideal};
}

// Exact D for two equal dephasing qubits: sigma = (F - J) o psi psi^dagger with
// F_ij = f^{hamming(i,j)}; states with all |psi_i| = 1/2 give (4 - (1+f)^2)/4.
double dephasing_pair_exact(double b2) {
    const double b = 1.0 - std::exp(-b2);
    return b - 0.25 * b * b;
}

double reduced_defect(const Vector &psi) {
    Matrix r = Matrix::Zero(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < psi.size() / 2; ++k) r(i, j) += psi(i * psi.size() / 2 + k) * std::conj(psi(j * psi.size() / 2 + k));
    return 1.0 - r.squaredNorm();
}

TEST(BuildRegister, SizesAndValidation) {
    const QubitChannels q = dephasing(0.2);
    const auto [one_actual, one_ideal] = build_register_channels({{q}});
    EXPECT_EQ(one_actual.matrix(), q.actual.matrix());
    EXPECT_EQ(one_ideal.matrix(), q.ideal.matrix());

    const QubitChannels id{identity_channel(2), identity_channel(2)};
    const auto [pair_actual, pair_ideal] = build_register_channels({{id, id}});
    EXPECT_EQ(pair_actual.dim(), 4);
    EXPECT_LT((pair_actual.matrix() - Matrix::Identity(16, 16)).cwiseAbs().maxCoeff(), 1e-15);

    EXPECT_THROW(build_register_channels({{q, q, q, q}}), SizeError);
    EXPECT_THROW(build_register_channels({{}}), SizeError);
    EXPECT_THROW(build_register_channels({{QubitChannels{identity_channel(3), identity_channel(3)}}}),
                 DimensionError);
}

TEST(BuildRegister, ProductStatesFactorise) {
    std::mt19937_64 rng(61);
    const QubitChannels a = relaxing(0.4, 2.0), b = dephasing(0.3);
    const auto [actual, ideal] = build_register_channels({{a, b}});
    for (int k = 0; k < 10; ++k) {
        const DensityMatrix ra = density_from_pure(PureState(haar_random_state(2, rng)));
        const DensityMatrix rb = density_from_pure(PureState(haar_random_state(2, rng)));
        const Matrix lhs = apply_channel(actual, tensor(ra, rb)).matrix();
        const Matrix rhs = tensor(apply_channel(a.actual, ra), apply_channel(b.actual, rb)).matrix();
        EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-13);
    }
}

TEST(RegisterNorm, IdealRegisterIsZero) {
    const AdditivityReport r = additivity_check({{noiseless(GateKind::NOT), noiseless(GateKind::PHASE)}}, quick());
    EXPECT_NEAR(r.d_register, 0.0, 1e-15);
    EXPECT_NEAR(r.sum_singles, 0.0, 1e-15);
    EXPECT_TRUE(r.bound_satisfied);
    EXPECT_EQ(r.relative_gap, 0.0);
}

TEST(RegisterNorm, EqualDephasingPair) {
    const RegisterSpec spec{{dephasing(0.01), dephasing(0.01)}};
    const DecoherenceReport r = register_deviation_norm(spec, quick());
    EXPECT_NEAR(r.value, 2.0 * d_phase_closed(0.01), 0.1 * 2.0 * d_phase_closed(0.01));
    EXPECT_NEAR(r.value, dephasing_pair_exact(0.01), 1e-6);
    for (double b2 : {0.001, 0.1, 1.0}) {
        EXPECT_NEAR(register_deviation_norm({{dephasing(b2), dephasing(b2)}}, quick()).value,
                    dephasing_pair_exact(b2), 1e-6);
    }
}

TEST(RegisterNorm, IdealSpectatorQubit) {
    for (GateKind spectator : {GateKind::NOT, GateKind::PHASE}) {
        const double d_phase = register_deviation_norm({{dephasing(0.2), noiseless(spectator)}}, quick()).value;
        EXPECT_NEAR(d_phase, d_phase_closed(0.2), 1e-5);
        const double d_not = register_deviation_norm({{noiseless(spectator), relaxing(0.6, 3.0)}}, quick()).value;
        EXPECT_NEAR(d_not, d_not_closed(0.6 / kTau, kTau, kEps, kEps / (boltzmann * 3.0)), 1e-5);
    }
}

TEST(Additivity, BoundHoldsOnMixedRegisters) {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int k = 0; k < 6; ++k) {
        RegisterSpec spec;
        const int n = 2 + k % 2;
        for (int q = 0; q < n; ++q) {
            spec.qubits.push_back(u(rng) < 0.5 ? relaxing(2.0 * u(rng), 0.1 + 10.0 * u(rng))
                                              : dephasing(2.0 * u(rng)));
        }
        const AdditivityReport r = additivity_check(spec, quick());
        EXPECT_TRUE(r.bound_satisfied) << r.d_register << " > " << r.sum_singles;
        EXPECT_EQ(r.d_singles.size(), static_cast<std::size_t>(n));
    }
}

TEST(Additivity, PermutationInvariance) {
    const QubitChannels a = relaxing(0.7, 1.5), b = dephasing(0.4);
    const double ab = register_deviation_norm({{a, b}}, quick()).value;
    const double ba = register_deviation_norm({{b, a}}, quick()).value;
    EXPECT_NEAR(ab, ba, 1e-6);
    const QubitChannels c = dephasing(0.05);
    EXPECT_NEAR(register_deviation_norm({{c, c, a}}, quick()).value,
                register_deviation_norm({{a, c, c}}, quick()).value, 1e-6);
}

TEST(Additivity, EntangledStatesAreSearched) {
    const AdditivityReport r = additivity_check({{dephasing(0.01), dephasing(0.01)}}, quick());
    EXPECT_GT(reduced_defect(r.register_argmax), 0.01);
    EXPECT_NEAR(r.d_register, dephasing_pair_exact(0.01), 1e-6);
}

TEST(Additivity, SmallNoiseLinearity) {
    double previous = 1.0;
    for (double dq : {0.01, 0.005, 0.002, 0.001}) {
        const double b2 = -std::log(1.0 - 2.0 * dq);  // d_phase_closed(b2) = dq
        const double ratio = register_deviation_norm({{dephasing(b2), dephasing(b2)}}, quick()).value / (2.0 * dq);
        const double deviation = std::abs(1.0 - ratio);
        EXPECT_LT(deviation, previous);
        previous = deviation;
    }
    EXPECT_LT(previous, 1e-3);
}

TEST(DiamondSubadditivity, Examples) {
    const DiamondSubadditivityReport ideal =
        diamond_subadditivity_check({{noiseless(GateKind::PHASE), noiseless(GateKind::NOT)}}, quick());
    EXPECT_NEAR(ideal.k_register, 0.0, 1e-15);
    EXPECT_NEAR(ideal.k_first, 0.0, 1e-15);
    EXPECT_NEAR(ideal.k_second, 0.0, 1e-15);

    const DiamondSubadditivityReport pair = diamond_subadditivity_check({{dephasing(0.1), dephasing(0.1)}}, quick());
    EXPECT_TRUE(pair.satisfied);
    EXPECT_LE(pair.k_register, pair.k_first + pair.k_second + 1e-4);

    const DiamondSubadditivityReport spectator =
        diamond_subadditivity_check({{dephasing(0.3), noiseless(GateKind::NOT)}}, quick());
    EXPECT_NEAR(spectator.k_register, spectator.k_first, 1e-4);
    EXPECT_FALSE(spectator.note.empty());

    EXPECT_THROW(diamond_subadditivity_check({{dephasing(0.1)}}, quick()), SizeError);
}

}  // namespace
}  // namespace dqd

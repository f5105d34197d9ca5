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

#include "dqd/measure.hpp"

#include <cmath>
#include <vector>

#include "dqd/constants.hpp"

namespace dqd {
namespace {

Matrix difference_superoperator(const Channel &actual, const Channel &ideal) {
    if (actual.dim() != ideal.dim()) {
        throw DimensionError("actual and ideal channels have different dimensions");
    }
    return actual.matrix() - ideal.matrix();
}

Matrix deviation_of(const Matrix &delta, const Vector &psi) {
    Matrix sigma = apply_superoperator(delta, psi * psi.adjoint());
    return 0.5 * (sigma + sigma.adjoint());
}

/// ((Delta (x) I) |psi><psi|) on system (x) ancilla, both of dimension n.
/// Builds the output block by block: for ancilla indices (j, l) the system
/// block is Delta(Psi_j Psi_l^dagger), Psi_j the j-th ancilla slice of psi.
Matrix extended_deviation(const Matrix &delta, const Vector &psi, Eigen::Index n) {
    const Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>
        slices(psi.data(), n, n);  // slices(i, j) = psi[i * n + j]
    Matrix out(n * n, n * n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index l = 0; l < n; ++l) {
            const Matrix block =
                apply_superoperator(delta, slices.col(j) * slices.col(l).adjoint());
            for (Eigen::Index i = 0; i < n; ++i) {
                for (Eigen::Index k = 0; k < n; ++k) out(i * n + j, k * n + l) = block(i, k);
            }
        }
    }
    return 0.5 * (out + out.adjoint());
}

}  // namespace

DecoherenceReport maximal_deviation_norm(const Channel &actual, const Channel &ideal,
                                         const OptimizerConfig &cfg, NormKind kind) {
    const Matrix delta = difference_superoperator(actual, ideal);
    const Eigen::Index n = actual.dim();
    auto objective = [&](const Vector &psi) {
        const Matrix sigma = deviation_of(delta, psi);
        return kind == NormKind::eigenvalue ? spectral_max_abs(sigma) : spectral_abs_sum(sigma);
    };
    const PureStateSearchResult found = maximize_over_pure_states(n, objective, cfg);
    DeviationMatrix sigma(deviation_of(delta, found.argmax));
    const double value =
        kind == NormKind::eigenvalue ? eigenvalue_norm(sigma) : trace_norm(sigma);
    return DecoherenceReport{value, PureState::normalized(found.argmax), std::move(sigma), kind,
                             found.converged};
}

double d_not_closed(double gamma, double tau, double splitting_eps, double temperature) {
    if (!(gamma >= 0.0) || !(tau >= 0.0) || !(temperature >= 0.0)) {
        throw InvalidArgument("d_not_closed: gamma, tau and temperature must be >= 0");
    }
    if (!(splitting_eps > 0.0)) throw InvalidArgument("d_not_closed: splitting_eps must be > 0");
    const double boltz =
        temperature == 0.0 ? 0.0
                           : std::exp(-splitting_eps / (constants::boltzmann * temperature));
    return -std::expm1(-gamma * tau) / (1.0 + boltz);
}

double d_phase_closed(double b2) {
    if (!(b2 >= 0.0)) throw InvalidArgument("d_phase_closed: B2 must be >= 0");
    return -0.5 * std::expm1(-b2);
}

DiamondEstimate diamond_norm_lower_bound(const Channel &actual, const Channel &ideal,
                                         const OptimizerConfig &cfg) {
    return diamond_norm_lower_bound(actual, ideal, cfg, Vector());
}

DiamondEstimate diamond_norm_lower_bound(const Channel &actual, const Channel &ideal,
                                         const OptimizerConfig &cfg, const Vector &system_hint) {
    const Matrix delta = difference_superoperator(actual, ideal);
    const Eigen::Index n = actual.dim();
    auto objective = [&](const Vector &psi) {
        return spectral_abs_sum(extended_deviation(delta, psi, n));
    };

    std::vector<Vector> warm;
    Vector entangled = Vector::Zero(n * n);
    for (Eigen::Index i = 0; i < n; ++i) entangled(i * n + i) = 1.0;
    warm.push_back(entangled / std::sqrt(static_cast<double>(n)));
    if (system_hint.size() == n) {
        Vector ancilla = Vector::Zero(n);
        ancilla(0) = 1.0;
        Vector product(n * n);
        for (Eigen::Index i = 0; i < n; ++i) product.segment(i * n, n) = system_hint(i) * ancilla;
        warm.push_back(product / product.norm());
    } else if (system_hint.size() != 0) {
        throw DimensionError("diamond_norm_lower_bound: hint has the wrong dimension");
    }

    const PureStateSearchResult found = maximize_over_pure_states(n * n, objective, cfg, warm);
    return DiamondEstimate{found.value, PureState::normalized(found.argmax), found.converged};
}

InequalityChainReport verify_inequality_chain(const Channel &actual, const Channel &ideal,
                                              const OptimizerConfig &cfg) {
    const DecoherenceReport eig = maximal_deviation_norm(actual, ideal, cfg, NormKind::eigenvalue);
    const DecoherenceReport tr = maximal_deviation_norm(actual, ideal, cfg, NormKind::trace);
    const DiamondEstimate k =
        diamond_norm_lower_bound(actual, ideal, cfg, tr.argmax_state.amplitudes());
    InequalityChainReport report;
    report.d = eig.value;
    report.half_trace_sup = 0.5 * tr.value;
    report.half_diamond = 0.5 * k.value;
    report.holds = report.d <= report.half_trace_sup + kInequalitySlack &&
                   report.half_trace_sup <= report.half_diamond + kInequalitySlack &&
                   k.value <= 2.0 + 1e-9;
    report.converged = eig.converged && tr.converged && k.converged;
    return report;
}

}  // namespace dqd

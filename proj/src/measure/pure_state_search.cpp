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

#include "dqd/pure_state_search.hpp"

#include <cmath>

#include "dqd/nelder_mead.hpp"

namespace dqd {

void OptimizerConfig::validate() const {
    if (multistart_count < 1) throw InvalidArgument("optimizer.multistart_count must be >= 1");
    if (!(local_tolerance > 0.0)) throw InvalidArgument("optimizer.local_tolerance must be > 0");
    if (max_iterations < 1) throw InvalidArgument("optimizer.max_iterations must be >= 1");
}

std::size_t parameter_count(Eigen::Index dim) {
    if (dim < 2) throw DimensionError("pure-state search needs dim >= 2");
    return dim == 2 ? 3 : static_cast<std::size_t>(2 * dim - 2);
}

Vector amplitudes_from_parameters(std::span<const double> params, Eigen::Index dim) {
    if (params.size() != parameter_count(dim)) {
        throw DimensionError("amplitudes_from_parameters: wrong parameter count");
    }
    Vector psi(dim);
    if (dim == 2) {
        const double theta = params[0], alpha = params[1], gamma = params[2];
        psi(0) = std::polar(std::cos(theta), alpha + gamma);
        psi(1) = -std::polar(std::sin(theta), gamma - alpha);
        return psi;
    }
    const auto n = static_cast<std::size_t>(dim);
    double sin_product = 1.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double modulus = sin_product * std::cos(params[k]);
        sin_product *= std::sin(params[k]);
        const double phase = (k == 0) ? 0.0 : params[n - 1 + k - 1];
        psi(static_cast<Eigen::Index>(k)) = std::polar(modulus, phase);
    }
    psi(dim - 1) = std::polar(sin_product, params[2 * n - 3]);
    return psi;
}

std::vector<double> parameters_from_amplitudes(const Vector &amplitudes) {
    const Eigen::Index dim = amplitudes.size();
    std::vector<double> params(parameter_count(dim));
    const Vector psi = amplitudes / amplitudes.norm();
    if (dim == 2) {
        // psi0 = e^{i(a+g)} cos t, psi1 = -e^{i(g-a)} sin t
        const double theta = std::atan2(std::abs(psi(1)), std::abs(psi(0)));
        const double sum = std::arg(psi(0));
        const double diff = std::arg(-psi(1));
        params = {theta, 0.5 * (sum - diff), 0.5 * (sum + diff)};
        return params;
    }
    const auto n = static_cast<std::size_t>(dim);
    const double ref_phase = std::arg(psi(0));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double tail = psi.tail(dim - static_cast<Eigen::Index>(k) - 1).norm();
        params[k] = std::atan2(tail, std::abs(psi(static_cast<Eigen::Index>(k))));
    }
    for (std::size_t k = 1; k < n; ++k) {
        params[n - 1 + k - 1] = std::arg(psi(static_cast<Eigen::Index>(k))) - ref_phase;
    }
    return params;
}

Vector haar_random_state(Eigen::Index dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Vector psi(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        psi(i) = Complex(re, im);
    }
    return psi / psi.norm();
}

std::mt19937_64 start_stream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

PureStateSearchResult maximize_over_pure_states(
    Eigen::Index dim, const std::function<double(const Vector &)> &objective,
    const OptimizerConfig &cfg, std::span<const Vector> warm_starts) {
    cfg.validate();
    auto f = [&](std::span<const double> p) {
        return objective(amplitudes_from_parameters(p, dim));
    };

    auto local_search = [&](std::vector<double> start) {
        NelderMeadOptions options{cfg.local_tolerance, cfg.max_iterations, 0.3};
        NelderMeadResult run = nelder_mead_maximize(f, std::move(start), options);
        // Restart from the optimum with a fresh simplex until it stops moving.
        for (int polish = 0; polish < 4; ++polish) {
            options.initial_step = 0.05;
            NelderMeadResult again = nelder_mead_maximize(f, run.x, options);
            const bool improved = again.value > run.value + cfg.local_tolerance;
            if (again.value >= run.value) {
                again.converged = again.converged && run.converged;
                run = std::move(again);
            }
            if (!improved) break;
        }
        return run;
    };

    PureStateSearchResult best;
    best.value = -1.0;
    auto consider = [&](NelderMeadResult run) {
        if (run.value > best.value) {
            best.value = run.value;
            best.argmax = amplitudes_from_parameters(run.x, dim);
            best.converged = run.converged;
        }
    };

    for (const Vector &w : warm_starts) {
        if (w.size() != dim) throw DimensionError("warm start has the wrong dimension");
        consider(local_search(parameters_from_amplitudes(w)));
    }
    for (int s = 0; s < cfg.multistart_count; ++s) {
        std::mt19937_64 rng = start_stream(cfg.rng_seed, static_cast<std::uint64_t>(s));
        consider(local_search(parameters_from_amplitudes(haar_random_state(dim, rng))));
    }
    best.argmax /= best.argmax.norm();
    return best;
}

}  // namespace dqd

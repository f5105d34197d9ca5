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

#ifndef DQD_PURE_STATE_SEARCH_HPP_
#define DQD_PURE_STATE_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "dqd/density.hpp"

namespace dqd {

struct OptimizerConfig {
    int multistart_count = 64;
    double local_tolerance = 1e-8;
    int max_iterations = 20000;
    std::uint64_t rng_seed = 20260101;

    void validate() const;
};

/// Number of real search parameters for pure states of dimension `dim`:
/// three angles (theta, alpha, gamma) for a qubit, 2*dim - 2 otherwise
/// (dim - 1 hyperspherical moduli angles plus dim - 1 relative phases).
std::size_t parameter_count(Eigen::Index dim);

/// Maps search parameters to a unit vector. For dim 2 this is the first
/// column of U(theta, alpha, gamma) = [[e^{i(a+g)} cos t, e^{i(a-g)} sin t],
/// [-e^{i(g-a)} sin t, e^{-i(a+g)} cos t]].
Vector amplitudes_from_parameters(std::span<const double> params, Eigen::Index dim);

/// Inverse of amplitudes_from_parameters up to a global phase.
std::vector<double> parameters_from_amplitudes(const Vector &amplitudes);

/// Uniformly distributed (Haar) pure state.
Vector haar_random_state(Eigen::Index dim, std::mt19937_64 &rng);

/// Independent generator for multistart `index`; results do not depend on
/// the order in which starts are run.
std::mt19937_64 start_stream(std::uint64_t seed, std::uint64_t index);

struct PureStateSearchResult {
    double value = 0.0;
    Vector argmax;
    bool converged = false;
};

/// Multistart Nelder-Mead maximisation of objective(|phi>) over unit vectors
/// of dimension `dim`. Warm starts run first, then cfg.multistart_count Haar
/// random starts; each local run is polished by restarts until it stops
/// improving by more than cfg.local_tolerance. Deterministic for a given seed.
PureStateSearchResult maximize_over_pure_states(
    Eigen::Index dim, const std::function<double(const Vector &)> &objective,
    const OptimizerConfig &cfg, std::span<const Vector> warm_starts = {});

}  // namespace dqd

#endif  // DQD_PURE_STATE_SEARCH_HPP_

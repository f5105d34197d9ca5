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

#include "dqd/nelder_mead.hpp"

#include <algorithm>
#include <numeric>

#include "dqd/errors.hpp"

namespace dqd {

NelderMeadResult nelder_mead_maximize(const std::function<double(std::span<const double>)> &f,
                                      std::vector<double> start, const NelderMeadOptions &options) {
    const std::size_t n = start.size();
    if (n == 0) throw InvalidArgument("nelder_mead_maximize: empty start point");

    // Work on -f so the textbook minimisation moves apply unchanged.
    auto cost = [&](const std::vector<double> &x) { return -f(std::span<const double>(x)); };

    std::vector<std::vector<double>> simplex(n + 1, start);
    for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.initial_step;
    std::vector<double> values(n + 1);
    for (std::size_t i = 0; i <= n; ++i) values[i] = cost(simplex[i]);

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    NelderMeadResult result;
    int iter = 0;
    for (; iter < options.max_iterations; ++iter) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
        const std::size_t best = order.front();
        const std::size_t worst = order.back();
        const std::size_t second_worst = order[n - 1];
        if (values[worst] - values[best] <= options.tolerance) {
            result.converged = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            const auto &v = simplex[order[k]];
            for (std::size_t d = 0; d < n; ++d) centroid[d] += v[d];
        }
        for (double &c : centroid) c /= static_cast<double>(n);

        const auto &w = simplex[worst];
        for (std::size_t d = 0; d < n; ++d) trial[d] = centroid[d] + (centroid[d] - w[d]);
        const double reflected = cost(trial);

        if (reflected < values[best]) {
            for (std::size_t d = 0; d < n; ++d) trial2[d] = centroid[d] + 2.0 * (centroid[d] - w[d]);
            const double expanded = cost(trial2);
            if (expanded < reflected) {
                simplex[worst] = trial2;
                values[worst] = expanded;
            } else {
                simplex[worst] = trial;
                values[worst] = reflected;
            }
            continue;
        }
        if (reflected < values[second_worst]) {
            simplex[worst] = trial;
            values[worst] = reflected;
            continue;
        }

        const bool outside = reflected < values[worst];
        for (std::size_t d = 0; d < n; ++d) {
            trial2[d] = outside ? centroid[d] + 0.5 * (trial[d] - centroid[d])
                                : centroid[d] + 0.5 * (w[d] - centroid[d]);
        }
        const double contracted = cost(trial2);
        if (contracted < std::min(reflected, values[worst])) {
            simplex[worst] = trial2;
            values[worst] = contracted;
            continue;
        }

        // shrink toward the best vertex
        for (std::size_t k = 1; k <= n; ++k) {
            auto &v = simplex[order[k]];
            for (std::size_t d = 0; d < n; ++d) {
                v[d] = simplex[best][d] + 0.5 * (v[d] - simplex[best][d]);
            }
            values[order[k]] = cost(v);
        }
    }

    const auto best_it = std::min_element(values.begin(), values.end());
    const std::size_t best = static_cast<std::size_t>(best_it - values.begin());
    result.x = simplex[best];
    result.value = -values[best];
    result.iterations = iter;
    return result;
}

}  // namespace dqd

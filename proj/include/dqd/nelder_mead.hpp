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

#ifndef DQD_NELDER_MEAD_HPP_
#define DQD_NELDER_MEAD_HPP_

#include <functional>
#include <span>
#include <vector>

namespace dqd {

struct NelderMeadOptions {
    double tolerance = 1e-8;  // absolute spread of simplex values
    int max_iterations = 20000;
    double initial_step = 0.3;
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Derivative-free maximisation with the standard reflection / expansion /
/// contraction / shrink moves (coefficients 1, 2, 1/2, 1/2).
NelderMeadResult nelder_mead_maximize(const std::function<double(std::span<const double>)> &f,
                                      std::vector<double> start, const NelderMeadOptions &options);

}  // namespace dqd

#endif  // DQD_NELDER_MEAD_HPP_

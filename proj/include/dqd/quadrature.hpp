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

#ifndef DQD_QUADRATURE_HPP_
#define DQD_QUADRATURE_HPP_

#include <cstddef>
#include <vector>

namespace dqd {

/// Gauss-Legendre nodes and weights mapped onto [lo, hi].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Order-n rule on [lo, hi]; nodes are Legendre roots found by Newton
/// iteration from the Tricomi initial guesses. n >= 1.
GaussLegendreRule gauss_legendre(std::size_t n, double lo = -1.0, double hi = 1.0);

}  // namespace dqd

#endif  // DQD_QUADRATURE_HPP_

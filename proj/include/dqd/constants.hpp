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

#ifndef DQD_CONSTANTS_HPP_
#define DQD_CONSTANTS_HPP_

#include <numbers>

// Exact SI values (2019 redefinition), except hbar which inherits h exactly.
namespace dqd::constants {

inline constexpr double pi = std::numbers::pi;
inline constexpr double planck_h = 6.62607015e-34;           // J s
inline constexpr double hbar = planck_h / (2.0 * pi);        // J s
inline constexpr double boltzmann = 1.380649e-23;            // J / K
inline constexpr double elementary_charge = 1.602176634e-19; // C

}  // namespace dqd::constants

#endif  // DQD_CONSTANTS_HPP_

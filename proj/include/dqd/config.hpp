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

#ifndef DQD_CONFIG_HPP_
#define DQD_CONFIG_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dqd/channels.hpp"
#include "dqd/phonon_bath.hpp"
#include "dqd/pure_state_search.hpp"

namespace dqd {

enum class SweepAxis { eps, T, L, a, tau, t };
enum class SweepScale { linear, log };

std::string to_string(SweepAxis axis);

struct SweepSpec {
    SweepAxis axis = SweepAxis::T;
    double min = 0.0;  // SI
    double max = 0.0;  // SI
    int steps = 2;
    SweepScale scale = SweepScale::linear;

    /// steps points from min to max inclusive.
    std::vector<double> points() const;
};

/// Everything a subcommand needs. All quantities are SI.
struct RunConfig {
    MaterialSpec material;
    DeviceGeometry geometry;
    BathSpec bath;
    GateSpec gate;
    std::optional<double> evaluation_time;  // defaults to the gate duration
    SweepSpec sweep;
    QuadratureConfig quadrature;
    OptimizerConfig optimizer;
    std::vector<GateKind> register_kinds = {GateKind::PHASE, GateKind::PHASE};
    std::string output_path;
};

/// Parses the line-oriented `key = value [unit]` format. '#' starts a
/// comment. Unknown or duplicate keys, bad units and out-of-range values
/// raise ParseError with the offending line number.
RunConfig parse_config(std::string_view text);

RunConfig load_config(const std::filesystem::path &path);

}  // namespace dqd

#endif  // DQD_CONFIG_HPP_

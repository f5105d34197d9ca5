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

#ifndef DQD_COMMANDS_HPP_
#define DQD_COMMANDS_HPP_

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "dqd/channels.hpp"
#include "dqd/config.hpp"
#include "dqd/phonon_bath.hpp"
#include "dqd/register.hpp"

namespace dqd {

enum class Subcommand { rates, gate_not, gate_phase, measure, register_ };

/// "rates", "gate-not", "gate-phase", "measure", "register".
Subcommand parse_subcommand(std::string_view name);
std::string to_string(Subcommand command);

/// Physical parameters at one sweep point, SI units.
struct PointParameters {
    double splitting_eps = 0.0;
    double temperature = 0.0;
    double separation = 0.0;
    double dot_size = 0.0;
    double duration_tau = 0.0;
    double time = 0.0;  // evaluation time t

    DeviceGeometry geometry() const { return {dot_size, separation}; }
    BathSpec bath() const { return {temperature}; }
};

/// Applies one sweep value on top of the base configuration. Sweeping eps
/// or tau keeps eps * tau = pi hbar; the evaluation time follows tau unless
/// it was fixed in the config or is itself the sweep axis.
PointParameters resolve_point(const RunConfig &config, double axis_value);

/// Actual and ideal single-qubit channels for a gate at one point.
QubitChannels gate_channels(GateKind kind, const PointParameters &point, const RunConfig &config);

struct SubcommandOutput {
    std::string csv;
    std::vector<std::string> warnings;
};

/// Runs every sweep point (in parallel) and renders the rows in axis order.
SubcommandOutput run_subcommand(Subcommand command, const RunConfig &config);

/// Evaluates fn(i) for i in [0, n) on up to `threads` workers. The first
/// exception by index is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn, unsigned threads = 0);

}  // namespace dqd

#endif  // DQD_COMMANDS_HPP_

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

#include "dqd/register.hpp"

#include <cmath>
#include <sstream>

namespace dqd {

void RegisterSpec::validate() const {
    if (qubits.empty() || qubits.size() > kMaxRegisterQubits) {
        std::ostringstream msg;
        msg << "register must hold 1 to " << kMaxRegisterQubits << " qubits, got "
            << qubits.size();
        throw SizeError(msg.str());
    }
    for (const QubitChannels &q : qubits) {
        if (q.actual.dim() != 2 || q.ideal.dim() != 2) {
            throw DimensionError("register qubit channels must have dimension 2");
        }
    }
}

std::pair<Channel, Channel> build_register_channels(const RegisterSpec &spec) {
    spec.validate();
    Channel actual = spec.qubits.front().actual;
    Channel ideal = spec.qubits.front().ideal;
    for (std::size_t i = 1; i < spec.qubits.size(); ++i) {
        actual = tensor_channels(actual, spec.qubits[i].actual);
        ideal = tensor_channels(ideal, spec.qubits[i].ideal);
    }
    return {std::move(actual), std::move(ideal)};
}

DecoherenceReport register_deviation_norm(const RegisterSpec &spec, const OptimizerConfig &cfg) {
    const auto [actual, ideal] = build_register_channels(spec);
    return maximal_deviation_norm(actual, ideal, cfg);
}

AdditivityReport additivity_check(const RegisterSpec &spec, const OptimizerConfig &cfg) {
    const DecoherenceReport whole = register_deviation_norm(spec, cfg);
    AdditivityReport report;
    report.d_register = whole.value;
    report.converged = whole.converged;
    report.register_argmax = whole.argmax_state.amplitudes();
    for (const QubitChannels &q : spec.qubits) {
        const DecoherenceReport single = maximal_deviation_norm(q.actual, q.ideal, cfg);
        report.d_singles.push_back(single.value);
        report.sum_singles += single.value;
        report.converged = report.converged && single.converged;
    }
    report.bound_satisfied = report.d_register <= report.sum_singles + kAdditivitySlack;
    report.relative_gap = report.sum_singles > 0.0
                              ? std::abs(report.d_register - report.sum_singles) / report.sum_singles
                              : 0.0;
    return report;
}

DiamondSubadditivityReport diamond_subadditivity_check(const RegisterSpec &spec,
                                                       const OptimizerConfig &cfg, double slack) {
    spec.validate();
    if (spec.qubits.size() != 2) {
        throw SizeError("diamond_subadditivity_check needs exactly two qubits");
    }
    const auto [actual, ideal] = build_register_channels(spec);
    DiamondSubadditivityReport report;
    report.k_first =
        diamond_norm_lower_bound(spec.qubits[0].actual, spec.qubits[0].ideal, cfg).value;
    report.k_second =
        diamond_norm_lower_bound(spec.qubits[1].actual, spec.qubits[1].ideal, cfg).value;
    report.k_register = diamond_norm_lower_bound(actual, ideal, cfg).value;
    report.satisfied = report.k_register <= report.k_first + report.k_second + slack;
    report.note = "values are optimiser lower bounds; the comparison is informational";
    return report;
}

}  // namespace dqd

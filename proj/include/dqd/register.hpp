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

#ifndef DQD_REGISTER_HPP_
#define DQD_REGISTER_HPP_

#include <string>
#include <utility>
#include <vector>

#include "dqd/measure.hpp"

namespace dqd {

inline constexpr std::size_t kMaxRegisterQubits = 3;

struct QubitChannels {
    Channel actual;
    Channel ideal;
};

/// Noninteracting qubits, each with its own bath. Qubit 0 is the most
/// significant tensor factor.
struct RegisterSpec {
    std::vector<QubitChannels> qubits;

    /// 1 <= n <= 3 (SizeError otherwise) and every channel of dimension 2.
    void validate() const;
};

/// Tensor products of the per-qubit actual and ideal channels.
std::pair<Channel, Channel> build_register_channels(const RegisterSpec &spec);

/// D of the whole register, searching all pure states of dimension 2^n,
/// entangled ones included.
DecoherenceReport register_deviation_norm(const RegisterSpec &spec, const OptimizerConfig &cfg);

inline constexpr double kAdditivitySlack = 1e-6;

struct AdditivityReport {
    double d_register = 0.0;
    std::vector<double> d_singles;
    double sum_singles = 0.0;
    bool bound_satisfied = false;  // d_register <= sum_singles + 1e-6
    double relative_gap = 0.0;     // |d_register - sum_singles| / sum_singles, 0 if sum is 0
    bool converged = false;
    Vector register_argmax;
};

AdditivityReport additivity_check(const RegisterSpec &spec, const OptimizerConfig &cfg);

struct DiamondSubadditivityReport {
    double k_register = 0.0;
    double k_first = 0.0;
    double k_second = 0.0;
    bool satisfied = false;  // k_register <= k_first + k_second + slack
    std::string note;
};

/// Two-qubit check of K(register) <= K_1 + K_2 on optimiser lower bounds.
/// Informational: lower bounds cannot certify the inequality.
DiamondSubadditivityReport diamond_subadditivity_check(const RegisterSpec &spec,
                                                       const OptimizerConfig &cfg,
                                                       double slack = 1e-4);

}  // namespace dqd

#endif  // DQD_REGISTER_HPP_

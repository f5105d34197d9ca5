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

#ifndef DQD_MEASURE_HPP_
#define DQD_MEASURE_HPP_

#include "dqd/channels.hpp"
#include "dqd/pure_state_search.hpp"

namespace dqd {

enum class NormKind { eigenvalue, trace };

/// Worst-case deviation of `actual` from `ideal` over initial states.
struct DecoherenceReport {
    double value = 0.0;  // D for NormKind::eigenvalue, sup ||sigma||_Tr for trace
    PureState argmax_state;
    DeviationMatrix sigma_at_max;
    NormKind norm_kind = NormKind::eigenvalue;
    bool converged = false;
};

/// sup over initial states of ||(T - T_ideal) rho||. By convexity the
/// supremum is attained on pure states, so only those are searched. The value
/// is the best one found, hence a lower bound on the true supremum.
DecoherenceReport maximal_deviation_norm(const Channel &actual, const Channel &ideal,
                                         const OptimizerConfig &cfg,
                                         NormKind kind = NormKind::eigenvalue);

/// (1 - e^{-gamma tau}) / (1 + e^{-eps / k_B T}).
double d_not_closed(double gamma, double tau, double splitting_eps, double temperature);

/// (1 - e^{-B2}) / 2.
double d_phase_closed(double b2);

struct DiamondEstimate {
    double value = 0.0;
    PureState argmax_state;  // on system (x) ancilla, system index most significant
    bool converged = false;
};

/// Lower bound on ||T - T_ideal||_diamond: sup over pure states of the doubled
/// space of ||((T - T_ideal) (x) I) rho||_Tr. Restricting to pure states
/// loses nothing because the trace norm is convex in rho.
DiamondEstimate diamond_norm_lower_bound(const Channel &actual, const Channel &ideal,
                                         const OptimizerConfig &cfg);

/// Same, with an extra system-space warm start (extended by |0> on the ancilla).
DiamondEstimate diamond_norm_lower_bound(const Channel &actual, const Channel &ideal,
                                         const OptimizerConfig &cfg, const Vector &system_hint);

inline constexpr double kInequalitySlack = 1e-6;

struct InequalityChainReport {
    double d = 0.0;               // sup ||sigma||_lambda
    double half_trace_sup = 0.0;  // sup ||sigma||_Tr / 2
    double half_diamond = 0.0;    // K / 2 (lower-bound estimate)
    bool holds = false;
    bool converged = false;
};

/// Computes D <= sup||sigma||_Tr / 2 <= K / 2 and checks the ordering with
/// 1e-6 slack, plus K <= 2.
InequalityChainReport verify_inequality_chain(const Channel &actual, const Channel &ideal,
                                              const OptimizerConfig &cfg);

}  // namespace dqd

#endif  // DQD_MEASURE_HPP_

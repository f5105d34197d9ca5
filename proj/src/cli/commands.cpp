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

#include "dqd/commands.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include "dqd/constants.hpp"
#include "dqd/csv.hpp"
#include "dqd/density.hpp"
#include "dqd/errors.hpp"
#include "dqd/measure.hpp"

namespace dqd {
namespace {

using constants::elementary_charge;
using constants::hbar;
using constants::pi;

// Columns shared by every subcommand, in CLI units.
std::vector<std::string> parameter_header() {
    return {"axis", "axis_value", "eps_ueV", "temperature_K", "separation_nm", "dot_size_nm", "tau_s", "t_s"};
}

double axis_display_value(SweepAxis axis, double si) {
    switch (axis) {
        case SweepAxis::eps: return si / elementary_charge * 1e6;
        case SweepAxis::L:
        case SweepAxis::a: return si * 1e9;
        default: return si;
    }
}

std::vector<CsvField> parameter_fields(const RunConfig &config, double axis_value, const PointParameters &p) {
    return {to_string(config.sweep.axis),
            axis_display_value(config.sweep.axis, axis_value),
            p.splitting_eps / elementary_charge * 1e6,
            p.temperature,
            p.separation * 1e9,
            p.dot_size * 1e9,
            p.duration_tau,
            p.time};
}

std::vector<std::string> with_parameters(std::vector<std::string> extra) {
    std::vector<std::string> header = parameter_header();
    header.insert(header.end(), extra.begin(), extra.end());
    return header;
}

double relaxation_gamma(const RunConfig &config, const PointParameters &p) {
    return relaxation_rate(config.material, p.geometry(), p.splitting_eps, p.bath());
}

double phase_b2(const RunConfig &config, const PointParameters &p) {
    return dephasing_B2(config.material, p.geometry(), p.bath(), p.time, config.quadrature);
}

struct GateSnapshot {
    double fidelity;
    double entropy;
    double idempotency_defect;
    double deviation_norm;
};

GateSnapshot snapshot(const QubitChannels &channels, const PureState &initial) {
    const DensityMatrix rho = density_from_pure(initial);
    const DensityMatrix actual = apply_channel(channels.actual, rho);
    const DensityMatrix ideal = apply_channel(channels.ideal, rho);
    return {fidelity(ideal, actual), entropy(actual), idempotency_defect(actual),
            eigenvalue_norm(deviation(actual, ideal))};
}

std::string kinds_label(const std::vector<GateKind> &kinds) {
    std::string out;
    for (GateKind k : kinds) out += (out.empty() ? "" : "+") + to_string(k);
    return out;
}

std::vector<std::string> header_for(Subcommand command, const RunConfig &config) {
    switch (command) {
        case Subcommand::rates:
            return with_parameters({"n_th", "W_a", "W_a_quadrature", "W_e", "Gamma", "T1_s", "T2_s"});
        case Subcommand::gate_not:
            return with_parameters({"Gamma", "p_plus", "p_minus", "fidelity", "entropy",
                                    "idempotency_defect", "deviation_norm", "D_closed"});
        case Subcommand::gate_phase:
            return with_parameters({"B2", "fidelity", "entropy", "idempotency_defect", "deviation_norm",
                                    "D_closed"});
        case Subcommand::measure:
            return with_parameters({"gate", "noise_parameter", "D_closed", "D_optimized", "abs_diff",
                                    "converged"});
        case Subcommand::register_: {
            std::vector<std::string> extra = {"qubits", "D_register"};
            for (std::size_t q = 0; q < config.register_kinds.size(); ++q) {
                extra.push_back("D_q" + std::to_string(q));
            }
            for (const char *c : {"sum_singles", "relative_gap", "bound_satisfied", "converged"}) {
                extra.emplace_back(c);
            }
            return with_parameters(extra);
        }
    }
    throw InvalidArgument("unknown subcommand");
}

std::vector<CsvField> row_for(Subcommand command, const RunConfig &config, double axis_value) {
    const PointParameters p = resolve_point(config, axis_value);
    std::vector<CsvField> row = parameter_fields(config, axis_value, p);
    auto append = [&row](std::initializer_list<CsvField> fields) {
        row.insert(row.end(), fields.begin(), fields.end());
    };
    switch (command) {
        case Subcommand::rates: {
            const PhononRates r = phonon_rates(config.material, p.geometry(), p.splitting_eps, p.bath());
            const double wa_quad = absorption_rate_quadrature(config.material, p.geometry(), p.splitting_eps,
                                                              p.bath(), config.quadrature);
            const Timescales ts = extract_timescales(r.gamma);
            append({r.occupation, r.absorption, wa_quad, r.emission, r.gamma, ts.t1, ts.t2});
            break;
        }
        case Subcommand::gate_not: {
            const double gamma = relaxation_gamma(config, p);
            const ThermalPopulations pops = thermal_populations(p.splitting_eps, p.temperature);
            const QubitChannels ch = gate_channels(GateKind::NOT, p, config);
            const GateSnapshot s = snapshot(ch, PureState(Vector::Unit(2, 0)));
            append({gamma, pops.p_plus, pops.p_minus, s.fidelity, s.entropy, s.idempotency_defect,
                    s.deviation_norm, d_not_closed(gamma, p.time, p.splitting_eps, p.temperature)});
            break;
        }
        case Subcommand::gate_phase: {
            const double b2 = phase_b2(config, p);
            const QubitChannels ch = gate_channels(GateKind::PHASE, p, config);
            const GateSnapshot s = snapshot(ch, PureState::normalized(Vector::Ones(2)));
            append({b2, s.fidelity, s.entropy, s.idempotency_defect, s.deviation_norm, d_phase_closed(b2)});
            break;
        }
        case Subcommand::measure: {
            const GateKind kind = config.gate.kind;
            double noise = 0.0;
            double closed = 0.0;
            if (kind == GateKind::NOT) {
                noise = relaxation_gamma(config, p);
                closed = d_not_closed(noise, p.time, p.splitting_eps, p.temperature);
            } else {
                noise = phase_b2(config, p);
                closed = d_phase_closed(noise);
            }
            const QubitChannels ch = gate_channels(kind, p, config);
            const DecoherenceReport report = maximal_deviation_norm(ch.actual, ch.ideal, config.optimizer);
            append({to_string(kind), noise, closed, report.value, std::abs(report.value - closed),
                    report.converged});
            break;
        }
        case Subcommand::register_: {
            RegisterSpec spec;
            for (GateKind kind : config.register_kinds) spec.qubits.push_back(gate_channels(kind, p, config));
            const AdditivityReport report = additivity_check(spec, config.optimizer);
            append({kinds_label(config.register_kinds), report.d_register});
            for (double d : report.d_singles) row.emplace_back(d);
            append({report.sum_singles, report.relative_gap, report.bound_satisfied, report.converged});
            break;
        }
    }
    return row;
}

}  // namespace

Subcommand parse_subcommand(std::string_view name) {
    if (name == "rates") return Subcommand::rates;
    if (name == "gate-not") return Subcommand::gate_not;
    if (name == "gate-phase") return Subcommand::gate_phase;
    if (name == "measure") return Subcommand::measure;
    if (name == "register") return Subcommand::register_;
    throw InvalidArgument("unknown subcommand '" + std::string(name) +
                          "' (expected rates, gate-not, gate-phase, measure or register)");
}

std::string to_string(Subcommand command) {
    switch (command) {
        case Subcommand::rates: return "rates";
        case Subcommand::gate_not: return "gate-not";
        case Subcommand::gate_phase: return "gate-phase";
        case Subcommand::measure: return "measure";
        case Subcommand::register_: return "register";
    }
    return "?";
}

PointParameters resolve_point(const RunConfig &config, double axis_value) {
    PointParameters p;
    p.splitting_eps = config.gate.splitting_eps;
    p.duration_tau = config.gate.duration_tau;
    p.temperature = config.bath.temperature;
    p.separation = config.geometry.separation;
    p.dot_size = config.geometry.dot_size;
    switch (config.sweep.axis) {
        case SweepAxis::eps:
            p.splitting_eps = axis_value;
            p.duration_tau = pi * hbar / axis_value;
            break;
        case SweepAxis::tau:
            p.duration_tau = axis_value;
            p.splitting_eps = pi * hbar / axis_value;
            break;
        case SweepAxis::T: p.temperature = axis_value; break;
        case SweepAxis::L: p.separation = axis_value; break;
        case SweepAxis::a: p.dot_size = axis_value; break;
        case SweepAxis::t: break;
    }
    if (config.sweep.axis == SweepAxis::t) {
        p.time = axis_value;
    } else {
        p.time = config.evaluation_time.value_or(p.duration_tau);
    }
    if (p.time > p.duration_tau * (1.0 + 1e-12)) {
        throw InvalidArgument("evaluation time " + format_double(p.time) + " s exceeds the gate duration " +
                              format_double(p.duration_tau) + " s");
    }
    p.geometry().validate();
    p.bath().validate();
    return p;
}

QubitChannels gate_channels(GateKind kind, const PointParameters &point, const RunConfig &config) {
    const GateSpec gate{kind, point.splitting_eps, point.duration_tau};
    if (kind == GateKind::NOT) {
        const double gamma = relaxation_gamma(config, point);
        return {not_gate_channel(gamma, point.splitting_eps, point.temperature, point.time),
                ideal_channel(gate, point.time)};
    }
    return {phase_gate_channel(phase_b2(config, point), point.splitting_eps, point.time),
            ideal_channel(gate, point.time)};
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn, unsigned threads) {
    if (n == 0) return;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::vector<std::exception_ptr> errors(n);
    std::mutex mutex;
    std::size_t next = 0;
    auto worker = [&] {
        for (;;) {
            std::size_t i = 0;
            {
                std::lock_guard<std::mutex> lock(mutex);
                if (next >= n) return;
                i = next++;
            }
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
        for (std::thread &t : pool) t.join();
    }
    for (const std::exception_ptr &e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

SubcommandOutput run_subcommand(Subcommand command, const RunConfig &config) {
    SubcommandOutput out;
    const std::vector<double> points = config.sweep.points();

    // Validate every point and collect geometry warnings before any heavy work.
    for (double v : points) {
        const PointParameters p = resolve_point(config, v);
        if (auto w = overlap_warning(p.geometry())) {
            if (std::find(out.warnings.begin(), out.warnings.end(), *w) == out.warnings.end()) {
                out.warnings.push_back(*w);
            }
        }
    }

    CsvTable table(header_for(command, config));
    std::vector<std::vector<CsvField>> rows(points.size());
    parallel_for(points.size(), [&](std::size_t i) { rows[i] = row_for(command, config, points[i]); });
    for (auto &row : rows) table.add_row(std::move(row));
    out.csv = table.render();
    return out;
}

}  // namespace dqd

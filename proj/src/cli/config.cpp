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

#include "dqd/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "dqd/constants.hpp"
#include "dqd/errors.hpp"

namespace dqd {
namespace {

enum class Quantity { energy, temperature, length, time, plain, integer, text };

struct KeyInfo {
    Quantity quantity;
    bool required;
};

const std::map<std::string, KeyInfo, std::less<>> &known_keys() {
    static const std::map<std::string, KeyInfo, std::less<>> keys = {
        {"material.piezo_modulus", {Quantity::plain, true}},
        {"material.mass_density", {Quantity::plain, true}},
        {"material.sound_speed", {Quantity::plain, true}},
        {"geometry.dot_size", {Quantity::length, true}},
        {"geometry.separation", {Quantity::length, true}},
        {"bath.temperature", {Quantity::temperature, true}},
        {"gate.kind", {Quantity::text, true}},
        {"gate.splitting_eps", {Quantity::energy, false}},
        {"gate.duration", {Quantity::time, false}},
        {"gate.time", {Quantity::time, false}},
        {"sweep.axis", {Quantity::text, true}},
        {"sweep.min", {Quantity::text, true}},
        {"sweep.max", {Quantity::text, true}},
        {"sweep.steps", {Quantity::integer, true}},
        {"sweep.scale", {Quantity::text, false}},
        {"quadrature.relative_tolerance", {Quantity::plain, false}},
        {"quadrature.max_refinements", {Quantity::integer, false}},
        {"quadrature.q_cutoff_factor", {Quantity::plain, false}},
        {"optimizer.multistart_count", {Quantity::integer, false}},
        {"optimizer.local_tolerance", {Quantity::plain, false}},
        {"optimizer.max_iterations", {Quantity::integer, false}},
        {"optimizer.rng_seed", {Quantity::integer, false}},
        {"register.qubits", {Quantity::text, false}},
        {"output.path", {Quantity::text, false}},
    };
    return keys;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

struct Entry {
    std::string value;
    std::size_t line;
};

double unit_scale(Quantity quantity, std::string_view unit, std::size_t line) {
    using constants::elementary_charge;
    struct UnitScale {
        std::string_view name;
        double scale;
    };
    static constexpr UnitScale energy[] = {{"ueV", 1e-6}, {"meV", 1e-3}};
    static constexpr UnitScale temperature[] = {{"K", 1.0}, {"mK", 1e-3}};
    static constexpr UnitScale length[] = {{"nm", 1e-9}, {"um", 1e-6}};
    static constexpr UnitScale time[] = {{"s", 1.0}, {"ns", 1e-9}, {"ps", 1e-12}};

    auto lookup = [&](std::span<const UnitScale> table, const char *what) {
        for (const UnitScale &u : table) {
            if (u.name == unit) return u.scale;
        }
        std::string allowed;
        for (const UnitScale &u : table) allowed += (allowed.empty() ? "" : ", ") + std::string(u.name);
        throw ParseError(line, std::string("bad ") + what + " unit '" + std::string(unit) +
                                   "' (expected one of " + allowed + ")");
    };
    switch (quantity) {
        case Quantity::energy:
            return lookup(energy, "energy") * elementary_charge;
        case Quantity::temperature:
            return lookup(temperature, "temperature");
        case Quantity::length:
            return lookup(length, "length");
        case Quantity::time:
            return lookup(time, "time");
        case Quantity::plain:
        case Quantity::integer:
            if (!unit.empty()) {
                throw ParseError(line, "unexpected unit '" + std::string(unit) +
                                           "' on an SI or dimensionless value");
            }
            return 1.0;
        case Quantity::text:
            break;
    }
    throw ParseError(line, "internal: no unit table");
}

double parse_quantity(const Entry &entry, Quantity quantity) {
    const std::string_view v = trim(entry.value);
    double number = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), number);
    if (ec != std::errc() || !std::isfinite(number)) {
        throw ParseError(entry.line, "expected a number, got '" + std::string(v) + "'");
    }
    const std::string_view unit = trim(v.substr(static_cast<std::size_t>(ptr - v.data())));
    if (unit.empty() && quantity != Quantity::plain && quantity != Quantity::integer) {
        throw ParseError(entry.line, "missing unit on '" + std::string(v) + "'");
    }
    return number * unit_scale(quantity, unit, entry.line);
}

long long parse_integer(const Entry &entry) {
    const std::string_view v = trim(entry.value);
    long long number = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), number);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw ParseError(entry.line, "expected an integer, got '" + std::string(v) + "'");
    }
    return number;
}

GateKind parse_gate_kind(std::string_view text, std::size_t line) {
    std::string upper(trim(text));
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "NOT") return GateKind::NOT;
    if (upper == "PHASE") return GateKind::PHASE;
    throw ParseError(line, "gate kind must be NOT or PHASE, got '" + upper + "'");
}

SweepAxis parse_axis(std::string_view text, std::size_t line) {
    const std::string_view t = trim(text);
    if (t == "eps") return SweepAxis::eps;
    if (t == "T") return SweepAxis::T;
    if (t == "L") return SweepAxis::L;
    if (t == "a") return SweepAxis::a;
    if (t == "tau") return SweepAxis::tau;
    if (t == "t") return SweepAxis::t;
    throw ParseError(line, "sweep.axis must be one of eps, T, L, a, tau, t; got '" +
                               std::string(t) + "'");
}

Quantity axis_quantity(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::eps: return Quantity::energy;
        case SweepAxis::T: return Quantity::temperature;
        case SweepAxis::L:
        case SweepAxis::a: return Quantity::length;
        case SweepAxis::tau:
        case SweepAxis::t: return Quantity::time;
    }
    return Quantity::plain;
}

template <class Fn>
void with_line(std::size_t line, Fn &&fn) {
    try {
        fn();
    } catch (const ParseError &) {
        throw;
    } catch (const Error &e) {
        throw ParseError(line, e.what());
    }
}

}  // namespace

std::string to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::eps: return "eps";
        case SweepAxis::T: return "T";
        case SweepAxis::L: return "L";
        case SweepAxis::a: return "a";
        case SweepAxis::tau: return "tau";
        case SweepAxis::t: return "t";
    }
    return "?";
}

std::vector<double> SweepSpec::points() const {
    std::vector<double> out(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(steps - 1);
        out[static_cast<std::size_t>(i)] =
            scale == SweepScale::linear ? min + f * (max - min)
                                        : std::exp(std::log(min) + f * (std::log(max) - std::log(min)));
    }
    out.front() = min;
    out.back() = max;
    return out;
}

RunConfig parse_config(std::string_view text) {
    std::map<std::string, Entry, std::less<>> entries;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            if (end == text.size()) break;
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError(line_no, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (known_keys().find(key) == known_keys().end()) {
            throw ParseError(line_no, "unknown key '" + key + "'");
        }
        if (value.empty()) throw ParseError(line_no, "empty value for '" + key + "'");
        if (!entries.emplace(key, Entry{value, line_no}).second) {
            throw ParseError(line_no, "duplicate key '" + key + "'");
        }
        if (end == text.size()) break;
    }
    for (const auto &[key, info] : known_keys()) {
        if (info.required && entries.find(key) == entries.end()) {
            throw ParseError(0, "missing required key '" + key + "'");
        }
    }

    auto get = [&](std::string_view key) -> const Entry * {
        const auto it = entries.find(key);
        return it == entries.end() ? nullptr : &it->second;
    };
    auto quantity = [&](std::string_view key) {
        const auto info = known_keys().find(key)->second;
        return parse_quantity(*get(key), info.quantity);
    };

    RunConfig cfg;
    cfg.material.piezo_modulus = quantity("material.piezo_modulus");
    cfg.material.mass_density = quantity("material.mass_density");
    cfg.material.sound_speed = quantity("material.sound_speed");
    with_line(get("material.piezo_modulus")->line, [&] { cfg.material.validate(); });

    cfg.geometry.dot_size = quantity("geometry.dot_size");
    cfg.geometry.separation = quantity("geometry.separation");
    with_line(get("geometry.dot_size")->line, [&] { cfg.geometry.validate(); });

    cfg.bath.temperature = quantity("bath.temperature");
    with_line(get("bath.temperature")->line, [&] { cfg.bath.validate(); });

    const Entry &kind = *get("gate.kind");
    const GateKind gate_kind = parse_gate_kind(kind.value, kind.line);
    const Entry *eps = get("gate.splitting_eps");
    const Entry *duration = get("gate.duration");
    if ((eps == nullptr) == (duration == nullptr)) {
        throw ParseError(eps ? eps->line : (duration ? duration->line : 0),
                         "exactly one of gate.splitting_eps and gate.duration is required");
    }
    if (eps) {
        with_line(eps->line, [&] {
            cfg.gate = GateSpec::from_splitting(gate_kind, quantity("gate.splitting_eps"));
        });
    } else {
        with_line(duration->line, [&] {
            cfg.gate = GateSpec::from_duration(gate_kind, quantity("gate.duration"));
        });
    }
    if (const Entry *t = get("gate.time")) {
        const double value = quantity("gate.time");
        if (!(value >= 0.0)) throw ParseError(t->line, "gate.time must be >= 0");
        cfg.evaluation_time = value;
    }

    const Entry &axis = *get("sweep.axis");
    cfg.sweep.axis = parse_axis(axis.value, axis.line);
    const Quantity axis_q = axis_quantity(cfg.sweep.axis);
    cfg.sweep.min = parse_quantity(*get("sweep.min"), axis_q);
    cfg.sweep.max = parse_quantity(*get("sweep.max"), axis_q);
    const Entry &steps = *get("sweep.steps");
    const long long n_steps = parse_integer(steps);
    if (n_steps < 2 || n_steps > 100000) throw ParseError(steps.line, "sweep.steps must be >= 2");
    cfg.sweep.steps = static_cast<int>(n_steps);
    if (!(cfg.sweep.min < cfg.sweep.max)) {
        throw ParseError(get("sweep.max")->line, "sweep.min must be < sweep.max");
    }
    if (const Entry *scale = get("sweep.scale")) {
        const std::string_view s = trim(scale->value);
        if (s == "linear") {
            cfg.sweep.scale = SweepScale::linear;
        } else if (s == "log") {
            cfg.sweep.scale = SweepScale::log;
        } else {
            throw ParseError(scale->line, "sweep.scale must be linear or log");
        }
    }
    if (cfg.sweep.scale == SweepScale::log && !(cfg.sweep.min > 0.0)) {
        throw ParseError(get("sweep.min")->line, "log sweeps need sweep.min > 0");
    }
    const bool strictly_positive_axis = cfg.sweep.axis != SweepAxis::T && cfg.sweep.axis != SweepAxis::t;
    if (strictly_positive_axis && !(cfg.sweep.min > 0.0)) {
        throw ParseError(get("sweep.min")->line, "sweep.min must be > 0 for this axis");
    }
    if (!strictly_positive_axis && !(cfg.sweep.min >= 0.0)) {
        throw ParseError(get("sweep.min")->line, "sweep.min must be >= 0 for this axis");
    }

    // Each optional setting is checked as it is applied so the error names its line.
    auto apply = [&](std::string_view key, auto &&assign, auto &&validate) {
        if (const Entry *e = get(key)) {
            assign(*e);
            with_line(e->line, validate);
        }
    };
    auto check_quadrature = [&] { cfg.quadrature.validate(); };
    auto check_optimizer = [&] { cfg.optimizer.validate(); };
    apply("quadrature.relative_tolerance",
          [&](const Entry &e) { cfg.quadrature.relative_tolerance = parse_quantity(e, Quantity::plain); },
          check_quadrature);
    apply("quadrature.max_refinements",
          [&](const Entry &e) { cfg.quadrature.max_refinements = static_cast<int>(parse_integer(e)); },
          check_quadrature);
    apply("quadrature.q_cutoff_factor",
          [&](const Entry &e) { cfg.quadrature.q_cutoff_factor = parse_quantity(e, Quantity::plain); },
          check_quadrature);
    apply("optimizer.multistart_count",
          [&](const Entry &e) { cfg.optimizer.multistart_count = static_cast<int>(parse_integer(e)); },
          check_optimizer);
    apply("optimizer.local_tolerance",
          [&](const Entry &e) { cfg.optimizer.local_tolerance = parse_quantity(e, Quantity::plain); },
          check_optimizer);
    apply("optimizer.max_iterations",
          [&](const Entry &e) { cfg.optimizer.max_iterations = static_cast<int>(parse_integer(e)); },
          check_optimizer);
    apply("optimizer.rng_seed",
          [&](const Entry &e) {
              const long long seed = parse_integer(e);
              if (seed < 0) throw ParseError(e.line, "optimizer.rng_seed must be >= 0");
              cfg.optimizer.rng_seed = static_cast<std::uint64_t>(seed);
          },
          check_optimizer);

    if (const Entry *e = get("register.qubits")) {
        cfg.register_kinds.clear();
        std::string_view list = e->value;
        while (!list.empty()) {
            const std::size_t comma = list.find(',');
            cfg.register_kinds.push_back(parse_gate_kind(list.substr(0, comma), e->line));
            if (comma == std::string_view::npos) break;
            list.remove_prefix(comma + 1);
        }
        if (cfg.register_kinds.empty() || cfg.register_kinds.size() > 3) {
            throw ParseError(e->line, "register.qubits must list 1 to 3 gate kinds");
        }
    }
    if (const Entry *e = get("output.path")) cfg.output_path = e->value;
    return cfg;
}

RunConfig load_config(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open config file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace dqd

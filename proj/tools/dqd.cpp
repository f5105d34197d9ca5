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

// dqd: phonon decoherence of double-quantum-dot charge qubits.
//
//   dqd <rates|gate-not|gate-phase|measure|register> --config FILE [--seed N] [--out FILE]

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dqd/commands.hpp"
#include "dqd/config.hpp"
#include "dqd/errors.hpp"

int main(int argc, char **argv) {
    CLI::App app{"Phonon decoherence of double-quantum-dot charge qubits"};
    app.require_subcommand(1, 1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;

    const char *names[] = {"rates", "gate-not", "gate-phase", "measure", "register"};
    const char *descriptions[] = {
        "phonon absorption/emission rates and T1, T2",
        "NOT gate under relaxation: populations, fidelity, entropy, D",
        "phase gate under dephasing: B^2, fidelity, entropy, D",
        "optimized maximal deviation norm against the closed form",
        "register deviation norm against the sum of single-qubit norms",
    };
    for (std::size_t i = 0; i < std::size(names); ++i) {
        CLI::App *sub = app.add_subcommand(names[i], descriptions[i]);
        sub->add_option("--config", config_path, "configuration file")->required()->check(CLI::ExistingFile);
        sub->add_option("--seed", seed, "override optimizer.rng_seed");
        sub->add_option("--out", out_path, "CSV output path (default: output.path, else stdout)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        const dqd::Subcommand command = dqd::parse_subcommand(app.get_subcommands().front()->get_name());
        dqd::RunConfig config = dqd::load_config(config_path);
        if (seed) config.optimizer.rng_seed = *seed;
        if (!out_path.empty()) config.output_path = out_path;

        const dqd::SubcommandOutput result = dqd::run_subcommand(command, config);
        for (const std::string &w : result.warnings) std::cerr << "warning: " << w << '\n';

        if (config.output_path.empty() || config.output_path == "-") {
            std::cout << result.csv;
        } else {
            std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
            if (!out) throw dqd::Error("cannot open output file '" + config.output_path + "'");
            out << result.csv;
            if (!out) throw dqd::Error("failed writing '" + config.output_path + "'");
        }
    } catch (const dqd::ParseError &e) {
        std::cerr << "error: " << config_path << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

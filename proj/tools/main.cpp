/*
 * Copyright 2026 The ftrans Authors. All rights reserved.
 * This file is licensed to you under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License. You may obtain a copy
 * of the License at http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software distributed under
 * the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
 * OF ANY KIND, either express or implied. See the License for the specific language
 * governing permissions and limitations under the License.
 */
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

using namespace ftrans;
using namespace ftrans::cli;

struct Common {
    std::vector<std::string> inputs;
    std::string format = "json";
    std::optional<double> tol;
};

void add_common(CLI::App* sub, Common& c, bool with_inputs = true) {
    if (with_inputs) {
        sub->add_option("inputs", c.inputs, "input file (json), or P and Q files (csv); '-' reads stdin")
            ->required()
            ->expected(1, 2);
        sub->add_option("--format", c.format, "input format")->check(CLI::IsMember({"json", "csv"}));
    }
    sub->add_option("--tol", c.tol, "geometric tolerance (default: FT_TOL or 1e-9)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete Frechet distance under translation"};
    app.require_subcommand(1);

    Common common;
    double delta = 0.0;
    std::optional<double> oracle_delta;
    std::string backend_text = "fast";
    std::string mode = "exact";
    std::optional<double> eps;
    std::string dump_path;
    BenchOptions bench;
    const std::map<std::string, Backend> backends{{"fast", Backend::fast}, {"naive", Backend::naive}};

    auto* stationary = app.add_subcommand("stationary", "Frechet distance without translation");
    add_common(stationary, common);

    auto* dec = app.add_subcommand("decide", "is some translation within delta");
    add_common(dec, common);
    dec->add_option("--delta", delta, "distance threshold")->required();
    dec->add_option("--backend", backend_text)->check(CLI::IsMember({"fast", "naive"}));
    dec->add_option("--dump-arrangement", dump_path, "write the disk arrangement as JSON to this file");

    auto* opt = app.add_subcommand("optimize", "minimum distance over all translations");
    add_common(opt, common);
    opt->add_option("--mode", mode)->check(CLI::IsMember({"exact", "bisect"}));
    opt->add_option("--eps", eps, "interval width for bisect mode");
    opt->add_option("--backend", backend_text)->check(CLI::IsMember({"fast", "naive"}));

    auto* oracle = app.add_subcommand("oracle", "brute-force answer, checked against the fast one");
    add_common(oracle, common);
    oracle->add_option("--delta", oracle_delta, "decide at this threshold instead of optimizing");

    auto* bn = app.add_subcommand("bench", "random instances with instrumentation");
    add_common(bn, common, false);
    bn->add_option("--m", bench.m)->required();
    bn->add_option("--n", bench.n)->required();
    bn->add_option("--seed", bench.seed);
    bn->add_option("--trials", bench.trials);
    bn->add_option("--toggles", bench.toggles, "random single-entry updates per trial");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParseError;
    }

    try {
        const Tolerance tol = resolve_tolerance(common.tol);
        const Backend backend = backends.at(backend_text);
        CommandResult result;
        if (*bn) {
            result = cmd_bench(bench, tol);
        } else {
            const Input in = load_input(common.inputs, common.format);
            if (*stationary) result = cmd_stationary(in, tol);
            else if (*dec) result = cmd_decide(in, delta, backend, tol, dump_path);
            else if (*opt) result = cmd_optimize(in, mode, eps, backend, tol);
            else result = cmd_oracle(in, oracle_delta, tol);
        }
        std::cout << result.doc.dump() << '\n';
        if (result.exit_code == kInvariantViolation) std::cerr << "ftrans: cross-check failed\n";
        return result.exit_code;
    } catch (const InvariantViolation& e) {
        std::cerr << "ftrans: invariant violation: " << e.what() << '\n';
        return kInvariantViolation;
    } catch (const std::exception& e) {
        std::cerr << "ftrans: " << e.what() << '\n';
        return kParseError;
    }
}

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
#pragma once

// Command implementations behind the ftrans binary. Each command returns the result
// document and the process exit code, so tests can drive them without a subprocess.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "arrangement_json.hpp"
#include "ftrans/ftrans.hpp"

namespace ftrans::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kInfeasible = 1, kParseError = 2, kInvariantViolation = 3 };

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct CommandResult {
    json doc;
    int exit_code = kOk;
};

struct Input {
    PointSequence p;
    PointSequence q;
};

inline std::string read_file(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline PointSequence sequence_from_json(const json& arr, const char* name) {
    if (!arr.is_array()) throw ParseError(std::string(name) + " must be an array of [x, y] pairs");
    std::vector<Point2> pts;
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
            throw ParseError(std::string(name) + " must be an array of [x, y] pairs");
        }
        pts.push_back({item[0].get<double>(), item[1].get<double>()});
    }
    return PointSequence(std::move(pts));
}

inline Input parse_json_input(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object() || !doc.contains("P") || !doc.contains("Q")) {
        throw ParseError("input must be an object with arrays \"P\" and \"Q\"");
    }
    return {sequence_from_json(doc["P"], "P"), sequence_from_json(doc["Q"], "Q")};
}

/// One point per line as `x,y`; blank lines and lines starting with '#' are skipped.
inline PointSequence parse_csv_points(const std::string& text) {
    std::vector<Point2> pts;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    auto number = [&](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
            throw ParseError("bad number on line " + std::to_string(lineno));
        }
        return v;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view s(line);
        if (s.find_first_not_of(" \t\r") == std::string_view::npos || s.front() == '#') continue;
        const auto comma = s.find(',');
        if (comma == std::string_view::npos) throw ParseError("expected x,y on line " + std::to_string(lineno));
        pts.push_back({number(s.substr(0, comma)), number(s.substr(comma + 1))});
    }
    return PointSequence(std::move(pts));
}

inline Input load_input(const std::vector<std::string>& files, const std::string& format) {
    if (format == "json") {
        if (files.size() != 1) throw ParseError("json format takes exactly one input file");
        return parse_json_input(read_file(files[0]));
    }
    if (format == "csv") {
        if (files.size() != 2) throw ParseError("csv format takes two files, P then Q");
        return {parse_csv_points(read_file(files[0])), parse_csv_points(read_file(files[1]))};
    }
    throw ParseError("unknown format " + format);
}

/// Flag value if given, else FT_TOL, else the library default.
inline Tolerance resolve_tolerance(std::optional<double> flag, const char* env = std::getenv("FT_TOL")) {
    if (flag) return Tolerance(*flag);
    if (env && *env) {
        std::string_view s(env);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("FT_TOL is not a number");
        return Tolerance(v);
    }
    return Tolerance();
}

inline json stats_json(const DecisionStats& s) {
    return {{"faces_visited", s.faces_visited},
            {"distinct_faces", s.distinct_faces},
            {"steps", s.steps},
            {"toggles", s.toggles},
            {"probes", s.probes},
            {"queries", s.queries},
            {"phi_rebuilds", s.phi_rebuilds},
            {"max_phi_rebuilds", s.max_phi_rebuilds},
            {"update_work", s.update_work},
            {"candidates", s.candidates},
            {"dp_cells", s.dp_cells}};
}

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline const char* backend_name(Backend b) { return b == Backend::fast ? "fast" : "naive"; }

inline CommandResult cmd_stationary(const Input& in, Tolerance tol) {
    Stopwatch sw;
    const double v = stationary_frechet(in.p, in.q, tol);
    return {{{"command", "stationary"}, {"value", v}, {"tolerance", tol.eps()}, {"wall_ms", sw.ms()}}, kOk};
}

inline CommandResult cmd_decide(const Input& in, double delta, Backend backend, Tolerance tol,
                                const std::string& dump_path = {}) {
    Stopwatch sw;
    DecideOptions opts;
    opts.backend = backend;
    opts.tol = tol;
    const auto r = decide(in.p, in.q, delta, opts);
    json doc{{"command", "decide"},
             {"backend", backend_name(backend)},
             {"delta", delta},
             {"feasible", r.feasible},
             {"tolerance", tol.eps()},
             {"stats", stats_json(r.stats)}};
    if (r.witness) doc["witness"] = point_json(*r.witness);
    if (!dump_path.empty()) {
        const auto ag = build_arrangement(build_disks(in.p, in.q, delta), tol);
        std::ofstream out(dump_path);
        if (!out) throw ParseError("cannot write " + dump_path);
        out << arrangement_to_json(ag).dump(1) << '\n';
    }
    doc["wall_ms"] = sw.ms();
    return {doc, r.feasible ? kOk : kInfeasible};
}

inline CommandResult cmd_optimize(const Input& in, const std::string& mode, std::optional<double> eps,
                                  Backend backend, Tolerance tol) {
    Stopwatch sw;
    DecideOptions opts;
    opts.backend = backend;
    opts.tol = tol;
    json doc{{"command", "optimize"}, {"mode", mode}, {"backend", backend_name(backend)}, {"tolerance", tol.eps()}};
    if (mode == "exact") {
        const auto r = optimize_exact(in.p, in.q, opts);
        doc["value"] = r.delta;
        doc["witness"] = point_json(r.witness);
        doc["decide_calls"] = r.decide_calls;
        doc["stats"] = stats_json(r.stats);
    } else if (mode == "bisect") {
        if (!eps) throw ParseError("--eps is required with --mode bisect");
        const auto r = optimize_bisect(in.p, in.q, *eps, opts);
        doc["eps"] = *eps;
        doc["value"] = r.hi;
        doc["interval"] = {r.lo, r.hi};
        doc["witness"] = point_json(r.witness);
        doc["decide_calls"] = r.decide_calls;
        doc["stats"] = stats_json(r.stats);
    } else {
        throw ParseError("unknown mode " + mode);
    }
    doc["wall_ms"] = sw.ms();
    return {doc, kOk};
}

/// Brute-force answer next to the fast one. Disagreement exits with kInvariantViolation.
inline CommandResult cmd_oracle(const Input& in, std::optional<double> delta, Tolerance tol) {
    Stopwatch sw;
    DecideOptions opts;
    opts.tol = tol;
    json doc{{"command", "oracle"}, {"tolerance", tol.eps()}};
    int code = kOk;
    if (delta) {
        const auto slow = naive_decide(in.p, in.q, *delta, tol);
        const auto fast = decide(in.p, in.q, *delta, opts);
        doc["delta"] = *delta;
        doc["feasible"] = slow.feasible;
        if (slow.witness) doc["witness"] = point_json(*slow.witness);
        doc["fast_feasible"] = fast.feasible;
        doc["agrees"] = slow.feasible == fast.feasible;
        doc["stats"] = stats_json(slow.stats);
        code = slow.feasible ? kOk : kInfeasible;
        if (slow.feasible != fast.feasible) code = kInvariantViolation;
    } else {
        const auto slow = naive_optimize(in.p, in.q, tol);
        const auto fast = optimize_exact(in.p, in.q, opts);
        const bool agrees = std::abs(slow.delta - fast.delta) <= CriticalValueSet::slack(slow.delta, tol);
        doc["value"] = slow.delta;
        doc["witness"] = point_json(slow.witness);
        doc["fast_value"] = fast.delta;
        doc["agrees"] = agrees;
        doc["stats"] = stats_json(slow.stats);
        if (!agrees) code = kInvariantViolation;
    }
    doc["wall_ms"] = sw.ms();
    return {doc, code};
}

struct BenchOptions {
    int m = 8;
    int n = 8;
    std::uint64_t seed = 1;
    int trials = 3;
    int toggles = 1000;
    double coord_range = 10.0;
    double delta_fraction = 0.3;   ///< of the untranslated distance
};

/// Random instances for the update structure and both decision backends. Everything
/// except the wall_* fields depends only on the options.
inline CommandResult cmd_bench(const BenchOptions& o, Tolerance tol) {
    if (o.m < 2 || o.n < 2) throw ParseError("bench needs m, n >= 2");
    if (o.trials < 1) throw ParseError("bench needs trials >= 1");
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> coord(0.0, o.coord_range);
    std::bernoulli_distribution bit(0.5);
    std::uniform_int_distribution<int> row(0, o.m - 1);
    std::uniform_int_distribution<int> col(0, o.n - 1);

    std::int64_t toggle_count = 0;
    std::int64_t toggle_rebuilds = 0;
    int toggle_max = 0;
    std::int64_t mismatches = 0;
    double wall_toggle = 0.0;

    DecisionStats fast_total;
    DecisionStats naive_total;
    std::int64_t fast_work = 0;
    double wall_fast = 0.0;
    double wall_naive = 0.0;
    int disagreements = 0;
    json instances = json::array();

    for (int trial = 0; trial < o.trials; ++trial) {
        FreeSpaceMatrix mat(o.m, o.n);
        for (int i = 0; i < o.m; ++i)
            for (int j = 0; j < o.n; ++j) mat.set(i, j, bit(rng));
        RectReachTree tree(mat);
        Stopwatch st;
        for (int k = 0; k < o.toggles; ++k) {
            const int i = row(rng);
            const int j = col(rng);
            const auto u = tree.toggle(i, j);
            mat.toggle(i, j);
            ++toggle_count;
            toggle_rebuilds += u.phi_rebuilds;
            toggle_max = std::max(toggle_max, u.phi_rebuilds);
            if (tree.query() != stationary_decide(mat)) ++mismatches;
        }
        wall_toggle += st.ms();

        std::vector<Point2> pv(o.m);
        std::vector<Point2> qv(o.n);
        for (auto& pt : pv) pt = {coord(rng), coord(rng)};
        for (auto& pt : qv) pt = {coord(rng), coord(rng)};
        const PointSequence p(pv);
        const PointSequence q(qv);
        const double delta = o.delta_fraction * stationary_frechet(p, q, tol);

        DecideOptions opts;
        opts.tol = tol;
        opts.stop_at_first = false;
        Stopwatch sf;
        const auto fast = decide(p, q, delta, opts);
        wall_fast += sf.ms();
        opts.backend = Backend::naive;
        Stopwatch sn;
        const auto slow = decide(p, q, delta, opts);
        wall_naive += sn.ms();

        const std::int64_t work = fast.stats.update_work + static_cast<std::int64_t>(o.m) * o.n;
        fast_total += fast.stats;
        naive_total += slow.stats;
        fast_work += work;
        if (fast.feasible != slow.feasible) ++disagreements;
        instances.push_back({{"delta", delta},
                             {"feasible", slow.feasible},
                             {"faces", fast.stats.distinct_faces},
                             {"fast_work", work},
                             {"naive_work", slow.stats.dp_cells}});
    }

    const double mean = toggle_count ? static_cast<double>(toggle_rebuilds) / toggle_count : 0.0;
    const double decide_mean = fast_total.toggles ? static_cast<double>(fast_total.phi_rebuilds) / fast_total.toggles : 0.0;
    json doc{{"command", "bench"},
             {"m", o.m},
             {"n", o.n},
             {"seed", o.seed},
             {"trials", o.trials},
             {"tolerance", tol.eps()},
             {"random_toggles",
              {{"toggles", toggle_count},
               {"mean_phi_rebuilds", mean},
               {"max_phi_rebuilds", toggle_max},
               {"query_mismatches", mismatches}}},
             {"decide",
              {{"instances", instances},
               {"mean_phi_rebuilds", decide_mean},
               {"max_phi_rebuilds", fast_total.max_phi_rebuilds},
               {"fast_work", fast_work},
               {"naive_work", naive_total.dp_cells},
               {"work_ratio", fast_work ? static_cast<double>(naive_total.dp_cells) / fast_work : 0.0},
               {"disagreements", disagreements},
               {"fast_stats", stats_json(fast_total)},
               {"naive_stats", stats_json(naive_total)}}},
             {"wall_toggle_ms", wall_toggle},
             {"wall_fast_ms", wall_fast},
             {"wall_naive_ms", wall_naive},
             {"wall_ratio", wall_fast > 0.0 ? wall_naive / wall_fast : 0.0}};
    const bool broken = mismatches != 0 || disagreements != 0;
    return {doc, broken ? kInvariantViolation : kOk};
}

} // namespace ftrans::cli

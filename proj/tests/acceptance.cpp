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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if a binding one fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ftrans/ftrans.hpp"
#include "support/grid_oracles.hpp"
#include "support/plan_replay.hpp"

namespace {

using namespace ftrans;
using testing::Rng;
using testing::uniform_int;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double time_limit_s;   ///< 0: no limit
    bool binding;
    std::function<Outcome()> run;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Block whole(const FreeSpaceMatrix& m) { return Block{0, 0, m.rows(), m.cols()}; }

Outcome exhaustive_square() {
    Rng rng(101);
    long checks = 0;
    long bad = 0;
    for (int mask = 0; mask < 512; ++mask) {
        FreeSpaceMatrix base(3, 3);
        for (int k = 0; k < 9; ++k) base.set(k / 3, k % 3, (mask >> k) & 1);
        SquareReachTree tree(base);
        if (tree.query() != stationary_decide(base)) ++bad;
        for (int seq = 0; seq < 256; ++seq) {
            SquareReachTree t = tree;
            FreeSpaceMatrix m = base;
            for (int step = 0; step < 5; ++step) {
                const int i = uniform_int(rng, 0, 2);
                const int j = uniform_int(rng, 0, 2);
                t.toggle(i, j);
                m.toggle(i, j);
                ++checks;
                if (t.query() != stationary_decide(m)) ++bad;
            }
        }
    }
    return {bad == 0, fmt("%ld queries after toggles, %ld mismatches", checks, bad)};
}

Outcome random_rect() {
    Rng rng(102);
    long checks = 0;
    long bad = 0;
    for (int inst = 0; inst < 500; ++inst) {
        const int m = uniform_int(rng, 2, 8);
        const int n = uniform_int(rng, m, 4 * m);
        FreeSpaceMatrix mat = testing::random_matrix(rng, m, n, 0.7);
        RectReachTree tree(mat);
        for (int k = 0; k < 50; ++k) {
            const int i = uniform_int(rng, 0, m - 1);
            const int j = uniform_int(rng, 0, n - 1);
            tree.toggle(i, j);
            mat.toggle(i, j);
            ++checks;
            if (tree.query() != stationary_decide(mat)) ++bad;
        }
    }
    return {bad == 0, fmt("%ld queries after toggles, %ld mismatches", checks, bad)};
}

Outcome merge_oracle() {
    Rng rng(103);
    int bad_merge = 0;
    int bad_bar = 0;
    int bad_stair = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto o = trial % 2 == 0 ? Orientation::horizontal : Orientation::vertical;
        const int a = uniform_int(rng, 1, 9);
        const int b = uniform_int(rng, 1, 9);
        const int c = uniform_int(rng, 1, 9);
        FreeSpaceMatrix m;
        Block v;
        Block w;
        if (o == Orientation::horizontal) {
            m = testing::random_matrix(rng, b + c - 1, a, 0.7);
            v = Block{0, 0, b, a};
            w = Block{b - 1, 0, c, a};
        } else {
            m = testing::random_matrix(rng, a, b + c - 1, 0.7);
            v = Block{0, 0, a, b};
            w = Block{0, b - 1, a, c};
        }
        const auto pv = build_phi_bruteforce(m, v);
        const auto pw = build_phi_bruteforce(m, w);
        const auto y = merge_phi(pv, pw, o);
        if (!(y == build_phi_bruteforce(m, whole(m)))) ++bad_merge;
        for (const auto* s : {&pv, &pw, &y})
            if (!satisfies_staircase(s->maps)) ++bad_stair;
        if (o == Orientation::vertical) {
            const auto bv = build_phi_bar_bruteforce(m, v);
            const auto bw = build_phi_bar_bruteforce(m, w);
            const auto ybar = merge_phi_bar(bv, bw);
            if (!(ybar == build_phi_bar_bruteforce(m, whole(m)))) ++bad_bar;
            for (const auto* s : {&bv, &bw, &ybar})
                if (!satisfies_staircase(s->maps)) ++bad_stair;
        }
    }
    return {bad_merge == 0 && bad_bar == 0 && bad_stair == 0,
            fmt("1000 pairs: merge mismatches %d, vertical merge mismatches %d, staircase violations %d",
                bad_merge, bad_bar, bad_stair)};
}

Outcome backend_agreement() {
    Rng rng(104);
    const double deltas[] = {0.4, 0.9, 1.5, 2.5};
    int disagree = 0;
    int unverified = 0;
    int feasible = 0;
    DecideOptions naive;
    naive.backend = Backend::naive;
    for (int inst = 0; inst < 200; ++inst) {
        const auto p = testing::random_integer_sequence(rng, uniform_int(rng, 1, 5), 0, 6);
        const auto q = testing::random_integer_sequence(rng, uniform_int(rng, 1, 5), 0, 6);
        const double delta = deltas[uniform_int(rng, 0, 3)];
        const auto fast = decide(p, q, delta);
        const auto slow = decide(p, q, delta, naive);
        if (fast.feasible != slow.feasible) ++disagree;
        for (const auto* r : {&fast, &slow}) {
            if (r->feasible && !feasible_at(p, q, *r->witness, delta)) ++unverified;
        }
        feasible += slow.feasible ? 1 : 0;
    }
    return {disagree == 0 && unverified == 0,
            fmt("200 instances (%d feasible): %d disagreements, %d unverified witnesses", feasible, disagree,
                unverified)};
}

Outcome optimizer() {
    Rng rng(105);
    int off = 0;
    int not_member = 0;
    int unverified = 0;
    double worst = 0.0;
    for (int inst = 0; inst < 100; ++inst) {
        const int m = uniform_int(rng, 1, 4);
        const int n = uniform_int(rng, 1, 4);
        const bool integer = inst % 2 == 0;
        const auto p = integer ? testing::random_integer_sequence(rng, m, 0, 6) : testing::random_real_sequence(rng, m, 0, 6);
        const auto q = integer ? testing::random_integer_sequence(rng, n, 0, 6) : testing::random_real_sequence(rng, n, 0, 6);
        const auto fast = optimize_exact(p, q);
        const auto slow = naive_optimize(p, q);
        const double diff = std::abs(fast.delta - slow.delta);
        worst = std::max(worst, diff);
        if (diff > 1e-9) ++off;
        if (!critical_values(p, q).contains(fast.delta)) ++not_member;
        if (!feasible_at(p, q, fast.witness, fast.delta)) ++unverified;
    }
    const PointSequence hp{{0, 0}, {1, 0}};
    const PointSequence hq{{0, 0}, {0, 1}};
    const auto hand = optimize_exact(hp, hq);
    const bool hand_ok = std::abs(hand.delta - std::sqrt(2.0) / 2) <= 1e-9 && feasible_at(hp, hq, hand.witness, hand.delta);
    return {off == 0 && not_member == 0 && unverified == 0 && hand_ok,
            fmt("100 instances: %d off by > 1e-9 (worst %.3g), %d not critical, %d unverified; hand instance %.12f %s",
                off, worst, not_member, unverified, hand.delta, hand_ok ? "ok" : "wrong")};
}

Outcome monotone() {
    Rng rng(106);
    int violations = 0;
    for (int inst = 0; inst < 50; ++inst) {
        const auto p = testing::random_real_sequence(rng, uniform_int(rng, 1, 4), 0, 5);
        const auto q = testing::random_real_sequence(rng, uniform_int(rng, 1, 4), 0, 5);
        const double top = 1.2 * stationary_frechet(p, q);
        std::uniform_real_distribution<double> u(0.0, top);
        std::vector<double> ladder(8);
        for (auto& d : ladder) d = u(rng);
        std::sort(ladder.begin(), ladder.end());
        bool was = false;
        for (double d : ladder) {
            const bool now = decide(p, q, d).feasible;
            if (was && !now) ++violations;
            was = was || now;
        }
    }
    return {violations == 0, fmt("50 ladders of 8: %d violations", violations)};
}

int max_rebuilds(Rng& rng, int m, int n, int toggles, double* mean) {
    RectReachTree tree(testing::random_matrix(rng, m, n, 0.5));
    int worst = 0;
    long total = 0;
    for (int k = 0; k < toggles; ++k) {
        const auto u = tree.toggle(uniform_int(rng, 0, m - 1), uniform_int(rng, 0, n - 1));
        worst = std::max(worst, u.phi_rebuilds);
        total += u.phi_rebuilds;
    }
    *mean = static_cast<double>(total) / toggles;
    return worst;
}

Outcome touch_count() {
    Rng rng(107);
    double mean_rect = 0.0;
    double mean_square = 0.0;
    const int rect = max_rebuilds(rng, 8, 64, 1000, &mean_rect);
    const int square = max_rebuilds(rng, 16, 16, 1000, &mean_square);
    return {rect <= 18 && square <= 10,
            fmt("8x64: max %d (bound 18, mean %.2f); 16x16: max %d (bound 10, mean %.2f)", rect, mean_rect, square,
                mean_square)};
}

Outcome traversal() {
    Rng rng(108);
    int bad_faces = 0;
    int bad_landings = 0;
    int bad_probes = 0;
    int unbalanced = 0;
    int unvisited = 0;
    long landings = 0;
    for (int inst = 0; inst < 50; ++inst) {
        const auto p = testing::random_real_sequence(rng, uniform_int(rng, 1, 4), 0, 5);
        const auto q = testing::random_real_sequence(rng, uniform_int(rng, 1, 4), 0, 5);
        const double delta = std::uniform_real_distribution<double>(0.3, 2.5)(rng);
        const auto ag = build_arrangement(build_disks(p, q, delta));
        for (const auto& f : ag.faces)
            if (f.circles != ag.circles_containing(f.sample)) ++bad_faces;
        const auto plan = make_traversal_plan(ag);
        const auto rep = testing::replay_plan(p, q, delta, ag, plan);
        std::vector<int> net(ag.circles.size(), 0);
        std::vector<std::uint8_t> inside(ag.circles.size(), 0);
        for (int g : plan.start_circles) inside[g] = 1;
        for (const auto& s : plan.steps) {
            if (s.circle < 0) continue;
            net[s.circle] += inside[s.circle] ? -1 : 1;
            inside[s.circle] ^= 1;
        }
        if (std::any_of(net.begin(), net.end(), [](int v) { return v != 0; }) || !rep.restored) ++unbalanced;
        bad_landings += rep.mismatched_landings;
        bad_probes += rep.mismatched_probes;
        unvisited += rep.unvisited_faces;
        landings += rep.landings;
    }
    return {bad_faces == 0 && bad_landings == 0 && bad_probes == 0 && unbalanced == 0 && unvisited == 0,
            fmt("50 instances, %ld landings: %d face-set, %d landing, %d probe mismatches; %d unvisited faces; "
                "%d plans with nonzero net toggles",
                landings, bad_faces, bad_landings, bad_probes, unvisited, unbalanced)};
}

Outcome work_ratio() {
    Rng rng(109);
    std::int64_t fast_work = 0;
    std::int64_t naive_work = 0;
    double wall_fast = 0.0;
    double wall_naive = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
        const auto p = testing::random_real_sequence(rng, 16, 0, 10);
        const auto q = testing::random_real_sequence(rng, 16, 0, 10);
        const double delta = 0.3 * stationary_frechet(p, q);
        DecideOptions opts;
        opts.stop_at_first = false;
        auto t0 = std::chrono::steady_clock::now();
        const auto fast = decide(p, q, delta, opts);
        auto t1 = std::chrono::steady_clock::now();
        opts.backend = Backend::naive;
        const auto slow = decide(p, q, delta, opts);
        auto t2 = std::chrono::steady_clock::now();
        fast_work += fast.stats.update_work + 16 * 16;
        naive_work += slow.stats.dp_cells;
        wall_fast += std::chrono::duration<double>(t1 - t0).count();
        wall_naive += std::chrono::duration<double>(t2 - t1).count();
    }
    const double ratio = static_cast<double>(naive_work) / static_cast<double>(fast_work);
    return {ratio >= 2.0, fmt("naive %lld vs fast %lld entry operations, ratio %.3f (target >= 2); wall ratio %.3f",
                              static_cast<long long>(naive_work), static_cast<long long>(fast_work), ratio,
                              wall_naive / wall_fast)};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "exhaustive 3x3 toggles", 10, true, exhaustive_square},
        {2, "random rectangular toggles", 60, true, random_rect},
        {3, "summary merge oracle", 60, true, merge_oracle},
        {4, "decision backend agreement", 120, true, backend_agreement},
        {5, "optimizer correctness", 120, true, optimizer},
        {6, "monotonicity in delta", 0, true, monotone},
        {7, "touch-count bound", 0, true, touch_count},
        {8, "traversal soundness", 0, true, traversal},
        {9, "fast vs naive work (non-binding)", 0, false, work_ratio},
    };
    int binding_failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = out.pass;
        if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
            pass = false;
            out.detail += fmt("; over the %.0f s limit", c.time_limit_s);
        }
        std::printf("%s criterion %d %s: %s [%.2f s]\n", pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(), secs);
        std::fflush(stdout);
        if (!pass && c.binding) ++binding_failures;
    }
    std::printf("%d binding criteria failed\n", binding_failures);
    return binding_failures == 0 ? 0 : 1;
}

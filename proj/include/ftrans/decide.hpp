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

// Decision under translation and the optimizers built on it.
//
// The fast backend walks the faces of the disk arrangement, keeping the free-space
// matrix of the current face in a RectReachTree: each step flips the entries of one
// circle, and every landing and vertex probe is answered by a constant-time query.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "ftrans/arrangement.hpp"
#include "ftrans/decision.hpp"
#include "ftrans/decomp_tree.hpp"
#include "ftrans/errors.hpp"
#include "ftrans/free_space.hpp"
#include "ftrans/oracles.hpp"

namespace ftrans {

enum class Backend { fast, naive };

struct DecideOptions {
    Backend backend = Backend::fast;
    bool stop_at_first = true;   ///< false: walk everything (for measurements)
    Tolerance tol;
};

inline DecisionResult decide_fast(const PointSequence& p, const PointSequence& q, double delta,
                                  const DecideOptions& opts = {}) {
    if (p.size() == 0 || q.size() == 0) throw EmptySequence();
    if (!(delta >= 0.0)) throw InvalidArgument("delta must be non-negative");
    const Tolerance tol = opts.tol;
    const auto ag = build_arrangement(build_disks(p, q, delta), tol);
    const auto plan = make_traversal_plan(ag);

    FreeSpaceMatrix start(static_cast<int>(p.size()), static_cast<int>(q.size()));
    for (int g : plan.start_circles)
        for (const Cell& c : ag.circles[g].entries) start.set(c.row, c.col, true);
    RectReachTree tree(start);

    DecisionResult result;
    DecisionStats& stats = result.stats;
    auto flip = [&](int circle) {
        for (const Cell& c : ag.circles[circle].entries) {
            const UpdateStats u = tree.toggle(c.row, c.col);
            ++stats.toggles;
            stats.phi_rebuilds += u.phi_rebuilds;
            stats.max_phi_rebuilds = std::max(stats.max_phi_rebuilds, u.phi_rebuilds);
            stats.update_work += u.work;
        }
    };
    auto accept = [&](Point2 t, const char* what) {
        if (!feasible_at(p, q, t, delta, tol)) {
            throw InvariantViolation(std::string("reachability structure accepted a ") + what +
                                     " whose matrix has no monotone path");
        }
        if (!result.feasible) {
            result.feasible = true;
            result.witness = t;
        }
    };

    std::vector<std::uint8_t> seen(ag.faces.size(), 0);
    for (const TraversalStep& step : plan.steps) {
        ++stats.steps;
        if (step.circle >= 0) flip(step.circle);
        if (step.face < 0) continue;
        ++stats.faces_visited;
        ++stats.queries;
        if (tree.query()) {
            accept(ag.faces[step.face].sample, "face sample");
            if (opts.stop_at_first) return result;
        }
        if (seen[step.face]) continue;
        seen[step.face] = 1;
        ++stats.distinct_faces;
        for (int k : plan.probes_by_face[step.face]) {
            const VertexProbe& probe = plan.probes[k];
            ++stats.probes;
            for (int g : probe.circles) flip(g);
            ++stats.queries;
            const bool ok = tree.query();
            for (int g : probe.circles) flip(g);
            if (ok) {
                accept(probe.position, "vertex");
                if (opts.stop_at_first) return result;
            }
        }
    }
    return result;
}

inline DecisionResult decide(const PointSequence& p, const PointSequence& q, double delta,
                             const DecideOptions& opts = {}) {
    if (opts.backend == Backend::naive) return naive_decide(p, q, delta, opts.tol, opts.stop_at_first);
    return decide_fast(p, q, delta, opts);
}

/// Smallest feasible candidate distance, by binary search over the sorted set.
inline OptimizationResult optimize_exact(const PointSequence& p, const PointSequence& q,
                                         const DecideOptions& opts = {}) {
    const auto cv = critical_values(p, q, opts.tol);
    OptimizationResult out;
    std::optional<DecisionResult> best;
    double best_value = 0.0;
    auto probe = [&](double delta) {
        ++out.decide_calls;
        auto r = decide(p, q, delta, opts);
        out.stats += r.stats;
        return r;
    };

    std::size_t lo = 0;
    std::size_t hi = cv.size() - 1;
    auto top = probe(cv[hi].value);
    if (!top.feasible) {
        // Rounding left the optimum above every candidate.
        out.delta = stationary_frechet(p, q, opts.tol);
        out.witness = Point2{};
        return out;
    }
    best = top;
    best_value = cv[hi].value;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        auto r = probe(cv[mid].value);
        if (r.feasible) {
            hi = mid;
            best = r;
            best_value = cv[mid].value;
        } else {
            lo = mid + 1;
        }
    }
    out.delta = best_value;
    out.witness = *best->witness;
    return out;
}

struct BisectionResult {
    double lo = 0.0;
    double hi = 0.0;
    Point2 witness;
    int decide_calls = 0;
    DecisionStats stats;
};

/// Interval (lo, hi] around the optimum with hi - lo <= eps_target; hi is feasible
/// and, unless the interval is [0, 0], lo is not.
inline BisectionResult optimize_bisect(const PointSequence& p, const PointSequence& q, double eps_target,
                                       const DecideOptions& opts = {}) {
    if (p.size() == 0 || q.size() == 0) throw EmptySequence();
    if (!(eps_target > 0.0)) throw InvalidArgument("eps_target must be positive");
    BisectionResult out;
    auto probe = [&](double delta) {
        ++out.decide_calls;
        auto r = decide(p, q, delta, opts);
        out.stats += r.stats;
        return r;
    };
    if (auto zero = probe(0.0); zero.feasible) {
        out.witness = *zero.witness;
        return out;
    }
    out.hi = stationary_frechet(p, q, opts.tol);
    out.witness = Point2{};
    while (out.hi - out.lo > eps_target) {
        const double mid = 0.5 * (out.lo + out.hi);
        auto r = probe(mid);
        if (r.feasible) {
            out.hi = mid;
            out.witness = *r.witness;
        } else {
            out.lo = mid;
        }
    }
    return out;
}

} // namespace ftrans

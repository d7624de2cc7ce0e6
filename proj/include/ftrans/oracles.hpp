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

// Slow reference procedures. They rebuild the matrix from scratch at every candidate
// translation and never touch the block summaries, the trees or the face walk.

#include <cstdint>
#include <vector>

#include "ftrans/decision.hpp"
#include "ftrans/errors.hpp"
#include "ftrans/free_space.hpp"
#include "ftrans/geometry.hpp"

namespace ftrans {

/// reach[i][j] is 1 iff (i, j) is reachable from (0, 0) by a monotone path of ones.
inline std::vector<std::vector<std::uint8_t>> matrix_reach_bruteforce(const FreeSpaceMatrix& m) {
    std::vector<std::vector<std::uint8_t>> reach(m.rows(), std::vector<std::uint8_t>(m.cols(), 0));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (!m(i, j)) continue;
            if (i == 0 && j == 0) {
                reach[i][j] = 1;
                continue;
            }
            const bool below = i > 0 && reach[i - 1][j];
            const bool left = j > 0 && reach[i][j - 1];
            const bool diag = i > 0 && j > 0 && reach[i - 1][j - 1];
            reach[i][j] = (below || left || diag) ? 1 : 0;
        }
    }
    return reach;
}

/// Translations that suffice for the decision: every intersection of two disk
/// boundaries, one point per boundary (its rightmost point, or the center when
/// delta = 0) and p_1 - q_1.
inline std::vector<Point2> naive_candidates(const PointSequence& p, const PointSequence& q, double delta,
                                            Tolerance tol = {}) {
    std::vector<Circle> disks;
    for (const auto& a : p)
        for (const auto& b : q) disks.push_back({a - b, delta});
    std::vector<Point2> out;
    if (delta > 0.0) {
        for (std::size_t x = 0; x < disks.size(); ++x) {
            for (std::size_t y = x + 1; y < disks.size(); ++y) {
                try {
                    for (const auto& pt : circle_circle_intersections(disks[x], disks[y], tol)) out.push_back(pt);
                } catch (const IdenticalCircles&) {
                    // Same boundary; its points are covered by the other pairs.
                }
            }
        }
        for (const auto& d : disks) out.push_back(rightmost_point(d));
    } else {
        for (const auto& d : disks) out.push_back(d.center);
    }
    out.push_back(p[0] - q[0]);
    return out;
}

inline DecisionResult naive_decide(const PointSequence& p, const PointSequence& q, double delta, Tolerance tol = {},
                                   bool stop_at_first = true) {
    if (p.size() == 0 || q.size() == 0) throw EmptySequence();
    if (!(delta >= 0.0)) throw InvalidArgument("delta must be non-negative");
    DecisionResult result;
    const auto cells = static_cast<std::int64_t>(p.size() * q.size());
    for (const Point2& t : naive_candidates(p, q, delta, tol)) {
        ++result.stats.candidates;
        result.stats.dp_cells += cells;
        if (!feasible_at(p, q, t, delta, tol)) continue;
        if (!result.feasible) {
            result.feasible = true;
            result.witness = t;
        }
        if (stop_at_first) break;
    }
    return result;
}

/// Scans the candidate distances in increasing order.
inline OptimizationResult naive_optimize(const PointSequence& p, const PointSequence& q, Tolerance tol = {}) {
    OptimizationResult out;
    for (const auto& c : critical_values(p, q, tol)) {
        ++out.decide_calls;
        const auto r = naive_decide(p, q, c.value, tol);
        out.stats += r.stats;
        if (r.feasible) {
            out.delta = c.value;
            out.witness = *r.witness;
            return out;
        }
    }
    // Rounding pushed the optimum past every candidate; the untranslated pair is
    // always feasible at its own distance.
    out.delta = stationary_frechet(p, q, tol);
    out.witness = Point2{};
    return out;
}

} // namespace ftrans

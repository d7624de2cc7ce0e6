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

// Result types shared by the decision procedures, and the candidate set for the
// optimal distance under translation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "ftrans/free_space.hpp"
#include "ftrans/geometry.hpp"

namespace ftrans {

struct DecisionStats {
    std::int64_t faces_visited = 0;   ///< landings on a face, including revisits
    std::int64_t distinct_faces = 0;
    std::int64_t steps = 0;
    std::int64_t toggles = 0;         ///< single-entry updates applied
    std::int64_t probes = 0;
    std::int64_t queries = 0;
    std::int64_t phi_rebuilds = 0;
    int max_phi_rebuilds = 0;         ///< per single-entry update
    std::int64_t update_work = 0;     ///< boundary entries touched by summary rebuilds
    std::int64_t candidates = 0;      ///< translations tested from scratch
    std::int64_t dp_cells = 0;        ///< matrix entries evaluated by from-scratch DPs

    DecisionStats& operator+=(const DecisionStats& o) {
        faces_visited += o.faces_visited;
        distinct_faces += o.distinct_faces;
        steps += o.steps;
        toggles += o.toggles;
        probes += o.probes;
        queries += o.queries;
        phi_rebuilds += o.phi_rebuilds;
        max_phi_rebuilds = std::max(max_phi_rebuilds, o.max_phi_rebuilds);
        update_work += o.update_work;
        candidates += o.candidates;
        dp_cells += o.dp_cells;
        return *this;
    }
};

struct DecisionResult {
    bool feasible = false;
    std::optional<Point2> witness;
    DecisionStats stats;
};

struct OptimizationResult {
    double delta = 0.0;
    Point2 witness;
    int decide_calls = 0;
    DecisionStats stats;
};

enum class CriticalKind { zero, half_distance, circumradius };

struct CriticalValue {
    double value = 0.0;
    CriticalKind kind = CriticalKind::zero;
};

/// Sorted, deduplicated candidate distances.
class CriticalValueSet {
public:
    CriticalValueSet() = default;
    CriticalValueSet(std::vector<CriticalValue> raw, Tolerance tol) {
        std::stable_sort(raw.begin(), raw.end(),
                         [](const CriticalValue& a, const CriticalValue& b) { return a.value < b.value; });
        for (const auto& c : raw) {
            if (!values_.empty() && c.value - values_.back().value <= slack(c.value, tol)) continue;
            values_.push_back(c);
        }
        tol_ = tol;
    }

    std::size_t size() const { return values_.size(); }
    const CriticalValue& operator[](std::size_t k) const { return values_[k]; }
    const std::vector<CriticalValue>& values() const { return values_; }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    bool contains(double v) const {
        return std::any_of(values_.begin(), values_.end(),
                           [&](const CriticalValue& c) { return std::abs(c.value - v) <= slack(v, tol_); });
    }

    static double slack(double v, Tolerance tol) { return std::max(tol.eps(), tol.eps() * std::abs(v)); }

private:
    std::vector<CriticalValue> values_;
    Tolerance tol_;
};

/// Distinct points of P - Q, merged within tolerance.
inline std::vector<Point2> difference_points(const PointSequence& p, const PointSequence& q, Tolerance tol = {}) {
    std::vector<Point2> out;
    for (const auto& a : p) {
        for (const auto& b : q) {
            const Point2 d = a - b;
            const bool seen = std::any_of(out.begin(), out.end(), [&](Point2 x) { return dist(x, d) <= tol.eps(); });
            if (!seen) out.push_back(d);
        }
    }
    return out;
}

/// 0, half of every pairwise distance and the circumradius of every non-collinear
/// triple of difference points. The optimum under translation is one of these.
inline CriticalValueSet critical_values(const PointSequence& p, const PointSequence& q, Tolerance tol = {}) {
    if (p.size() == 0 || q.size() == 0) throw EmptySequence();
    const auto pts = difference_points(p, q, tol);
    const std::size_t k = pts.size();
    std::vector<CriticalValue> raw{{0.0, CriticalKind::zero}};
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) raw.push_back({0.5 * dist(pts[a], pts[b]), CriticalKind::half_distance});
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            for (std::size_t c = b + 1; c < k; ++c)
                if (auto r = circumradius(pts[a], pts[b], pts[c], tol)) raw.push_back({*r, CriticalKind::circumradius});
    return CriticalValueSet(std::move(raw), tol);
}

/// True iff the matrix at translation t admits a monotone path.
inline bool feasible_at(const PointSequence& p, const PointSequence& q, Point2 t, double delta, Tolerance tol = {}) {
    return stationary_decide(build_matrix(p, q, t, delta, tol));
}

} // namespace ftrans

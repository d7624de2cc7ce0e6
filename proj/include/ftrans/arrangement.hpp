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

// Arrangement of the translation disks D(p_i - q_j, delta) and a walk over its faces
// in which every step enters or leaves exactly one circle.
//
// Disks with coincident centers have the same boundary circle, so they are grouped:
// a circle carries every matrix entry whose disk it bounds, and crossing it flips all
// of them together.
//
// Faces are traced on a half-edge structure. Every circle is split into arcs at the
// vertices lying on it (pairwise intersections, plus the rightmost point so that no
// circle is vertex-free). The counter-clockwise copy of an arc has the disk on its
// left, the clockwise copy has the outside on its left. Outgoing half-edges are
// ordered around a vertex by tangent direction; tangent ties are broken by curvature.
// Faces are traced per connected component, so a region containing several
// components is represented once per component; sample points and entry sets keep the
// walk consistent regardless.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <numbers>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ftrans/block_reach.hpp"
#include "ftrans/errors.hpp"
#include "ftrans/free_space.hpp"
#include "ftrans/geometry.hpp"

namespace ftrans {

struct DiskEntry {
    int i = 0;
    int j = 0;
    Circle disk;
};

struct DiskSet {
    double radius = 0.0;
    std::vector<DiskEntry> disks;
};

/// One disk per pair (i, j), centered at p_i - q_j.
inline DiskSet build_disks(const PointSequence& p, const PointSequence& q, double delta) {
    if (p.size() == 0 || q.size() == 0) throw EmptySequence();
    if (!(delta >= 0.0)) throw InvalidArgument("delta must be non-negative");
    DiskSet ds;
    ds.radius = delta;
    ds.disks.reserve(p.size() * q.size());
    for (int i = 0; i < static_cast<int>(p.size()); ++i)
        for (int j = 0; j < static_cast<int>(q.size()); ++j)
            ds.disks.push_back({i, j, Circle{p[i] - q[j], delta}});
    return ds;
}

struct ArrangementCircle {
    Point2 center;
    std::vector<Cell> entries;       ///< matrix entries bounded by this circle
    std::vector<int> vertices;       ///< by increasing angle from the positive x-axis
    std::vector<double> angles;      ///< in [0, 2 pi), parallel to vertices
    int component = -1;
};

struct ArrangementVertex {
    Point2 position;
    std::vector<int> circles;        ///< circles passing through, ascending
    bool artificial = false;         ///< only a rightmost point, no intersection
    int component = -1;
};

struct HalfEdge {
    int origin = -1;
    int dest = -1;
    int circle = -1;
    bool ccw = true;                 ///< disk on the left
    int twin = -1;
    int next = -1;
    int face = -1;
    double angle_from = 0.0;         ///< circle parameter range, increasing for both copies
    double angle_to = 0.0;
};

struct ArrangementFace {
    int component = -1;
    int first_edge = -1;             ///< -1 for the single face of a zero-radius arrangement
    int edge_count = 0;
    bool outer = false;              ///< unbounded face of its component
    Point2 sample;
    double clearance = 0.0;          ///< how far the sample's arc midpoint is from other circles
    std::vector<int> circles;        ///< circles whose closed disk contains the sample
};

/// Crossing arc `arc` moves between the face inside its circle and the face outside.
struct DualEdge {
    int inside = -1;
    int outside = -1;
    int circle = -1;
};

struct ComponentCounts {
    int vertices = 0;
    int edges = 0;
    int faces = 0;
};

struct ArrangementGraph {
    double radius = 0.0;
    double snap = 0.0;               ///< vertex merge and on-circle distance
    Tolerance tol;
    bool point_mode = false;         ///< radius 0: disks are points, one face, no edges
    std::vector<ArrangementCircle> circles;
    std::vector<ArrangementVertex> vertices;
    std::vector<HalfEdge> half_edges;  ///< arc a owns half-edges 2a (ccw) and 2a + 1 (cw)
    std::vector<ArrangementFace> faces;
    std::vector<DualEdge> dual_edges;  ///< indexed by arc
    std::vector<std::vector<int>> face_arcs;
    std::vector<ComponentCounts> components;
    std::vector<int> outer_face;       ///< per component

    int arc_count() const { return static_cast<int>(dual_edges.size()); }

    /// Circles whose closed disk contains t.
    std::vector<int> circles_containing(Point2 t) const {
        std::vector<int> out;
        for (int g = 0; g < static_cast<int>(circles.size()); ++g)
            if (point_in_closed_disk(t, Circle{circles[g].center, radius}, tol)) out.push_back(g);
        return out;
    }

    /// A point left of every disk.
    Point2 default_start() const {
        double min_x = circles.empty() ? 0.0 : circles.front().center.x;
        double y = circles.empty() ? 0.0 : circles.front().center.y;
        for (const auto& c : circles) {
            if (c.center.x < min_x) {
                min_x = c.center.x;
                y = c.center.y;
            }
        }
        return {min_x - radius - 1.0, y};
    }
};

namespace detail {

class SnapGrid {
public:
    explicit SnapGrid(double cell) : cell_(cell) {}

    int find(const std::vector<ArrangementVertex>& vs, Point2 p, double radius) const {
        const auto [cx, cy] = key_of(p);
        for (std::int64_t dx = -1; dx <= 1; ++dx) {
            for (std::int64_t dy = -1; dy <= 1; ++dy) {
                auto it = cells_.find(pack(cx + dx, cy + dy));
                if (it == cells_.end()) continue;
                for (int id : it->second)
                    if (dist(vs[id].position, p) <= radius) return id;
            }
        }
        return -1;
    }

    void insert(Point2 p, int id) {
        const auto [cx, cy] = key_of(p);
        cells_[pack(cx, cy)].push_back(id);
    }

private:
    std::pair<std::int64_t, std::int64_t> key_of(Point2 p) const {
        return {static_cast<std::int64_t>(std::floor(p.x / cell_)),
                static_cast<std::int64_t>(std::floor(p.y / cell_))};
    }
    static std::int64_t pack(std::int64_t x, std::int64_t y) { return x * 73856093LL ^ y * 19349663LL; }

    double cell_;
    std::unordered_map<std::int64_t, std::vector<int>> cells_;
};

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

inline double normalize_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a < 0.0) a += two_pi;
    return a;
}

inline Point2 on_circle(Point2 c, double r, double angle) {
    return {c.x + r * std::cos(angle), c.y + r * std::sin(angle)};
}

/// Orders the outgoing half-edges of one vertex counter-clockwise.
inline void sort_rotation(std::vector<int>& out, const ArrangementGraph& ag, int vertex, double angle_eps) {
    struct Key {
        int edge;
        double angle;
        int turn;
    };
    std::vector<Key> keys;
    keys.reserve(out.size());
    const Point2 v = ag.vertices[vertex].position;
    for (int e : out) {
        const HalfEdge& h = ag.half_edges[e];
        const Point2 u = v - ag.circles[h.circle].center;
        const Point2 dir = h.ccw ? Point2{-u.y, u.x} : Point2{u.y, -u.x};
        keys.push_back({e, normalize_angle(std::atan2(dir.y, dir.x)), h.ccw ? 1 : -1});
    }
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) { return a.angle < b.angle; });
    const std::size_t n = keys.size();
    if (n > 1) {
        // Start right after the widest angular gap so that no tie cluster straddles
        // the 0 / 2 pi seam.
        std::size_t start = 0;
        double widest = keys.front().angle + 2.0 * std::numbers::pi - keys.back().angle;
        for (std::size_t k = 1; k < n; ++k) {
            const double gap = keys[k].angle - keys[k - 1].angle;
            if (gap > widest) {
                widest = gap;
                start = k;
            }
        }
        std::rotate(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(start), keys.end());
        std::size_t lo = 0;
        while (lo < n) {
            std::size_t hi = lo + 1;
            while (hi < n) {
                double gap = keys[hi].angle - keys[hi - 1].angle;
                if (gap < 0.0) gap += 2.0 * std::numbers::pi;
                if (gap > angle_eps) break;
                ++hi;
            }
            // Equal tangents: the edge bending right lies clockwise of the one bending left.
            std::stable_sort(keys.begin() + static_cast<std::ptrdiff_t>(lo),
                             keys.begin() + static_cast<std::ptrdiff_t>(hi),
                             [](const Key& a, const Key& b) { return a.turn < b.turn; });
            lo = hi;
        }
    }
    for (std::size_t k = 0; k < n; ++k) out[k] = keys[k].edge;
}

} // namespace detail

inline ArrangementGraph build_arrangement(const DiskSet& ds, Tolerance tol = {}) {
    ArrangementGraph ag;
    ag.radius = ds.radius;
    ag.tol = tol;
    const double eps = tol.eps();
    const double r = ds.radius;

    double scale = 1.0 + r;
    for (const auto& d : ds.disks) scale = std::max({scale, std::abs(d.disk.center.x), std::abs(d.disk.center.y)});

    // Group disks with coincident centers.
    for (const auto& d : ds.disks) {
        int found = -1;
        for (int g = 0; g < static_cast<int>(ag.circles.size()); ++g) {
            if (dist(ag.circles[g].center, d.disk.center) <= eps) {
                found = g;
                break;
            }
        }
        if (found < 0) {
            ag.circles.push_back({d.disk.center, {}, {}, {}, -1});
            found = static_cast<int>(ag.circles.size()) - 1;
        }
        ag.circles[found].entries.push_back({d.i, d.j});
    }
    const int groups = static_cast<int>(ag.circles.size());

    if (r <= 0.0) {
        ag.point_mode = true;
        ag.snap = eps;
        for (int g = 0; g < groups; ++g) {
            ArrangementVertex v;
            v.position = ag.circles[g].center;
            v.circles = {g};
            v.component = g;
            ag.vertices.push_back(v);
            ag.circles[g].vertices = {g};
            ag.circles[g].angles = {0.0};
            ag.circles[g].component = g;
        }
        ArrangementFace f;
        f.outer = true;
        f.sample = ag.default_start();
        ag.faces.push_back(f);
        ag.face_arcs.resize(1);
        return ag;
    }

    ag.snap = std::min(64.0 * eps * scale, 0.01 * r);
    const double snap = ag.snap;

    // Vertices: pairwise intersections and rightmost points, merged within snap.
    detail::SnapGrid grid(std::max(snap, 1e-300));
    std::vector<std::uint8_t> real_vertex;
    auto add_candidate = [&](Point2 p, bool intersection) {
        int id = grid.find(ag.vertices, p, snap);
        if (id < 0) {
            id = static_cast<int>(ag.vertices.size());
            ag.vertices.push_back({p, {}, true, -1});
            real_vertex.push_back(0);
            grid.insert(p, id);
        }
        if (intersection) real_vertex[id] = 1;
    };
    for (int a = 0; a < groups; ++a) {
        for (int b = a + 1; b < groups; ++b) {
            if (dist(ag.circles[a].center, ag.circles[b].center) > 2.0 * r + snap) continue;
            for (const Point2& p : circle_circle_intersections({ag.circles[a].center, r}, {ag.circles[b].center, r}, tol))
                add_candidate(p, true);
        }
    }
    for (int g = 0; g < groups; ++g) add_candidate(rightmost_point({ag.circles[g].center, r}), false);

    for (int id = 0; id < static_cast<int>(ag.vertices.size()); ++id) {
        ArrangementVertex& v = ag.vertices[id];
        v.artificial = real_vertex[id] == 0;
        for (int g = 0; g < groups; ++g) {
            if (std::abs(dist(v.position, ag.circles[g].center) - r) <= snap) {
                v.circles.push_back(g);
                const Point2 u = v.position - ag.circles[g].center;
                ag.circles[g].vertices.push_back(id);
                ag.circles[g].angles.push_back(detail::normalize_angle(std::atan2(u.y, u.x)));
            }
        }
    }

    // Arcs and half-edges.
    constexpr double two_pi = 2.0 * std::numbers::pi;
    for (int g = 0; g < groups; ++g) {
        ArrangementCircle& c = ag.circles[g];
        std::vector<int> order(c.vertices.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int x, int y) { return c.angles[x] < c.angles[y]; });
        std::vector<int> vs;
        std::vector<double> as;
        for (int k : order) {
            vs.push_back(c.vertices[k]);
            as.push_back(c.angles[k]);
        }
        c.vertices = std::move(vs);
        c.angles = std::move(as);
        const int count = static_cast<int>(c.vertices.size());
        for (int k = 0; k < count; ++k) {
            const int k1 = (k + 1) % count;
            double from = c.angles[k];
            double to = c.angles[k1];
            if (to <= from) to += two_pi;
            const int e = static_cast<int>(ag.half_edges.size());
            ag.half_edges.push_back({c.vertices[k], c.vertices[k1], g, true, e + 1, -1, -1, from, to});
            ag.half_edges.push_back({c.vertices[k1], c.vertices[k], g, false, e, -1, -1, from, to});
        }
    }

    // Rotation system and face tracing.
    std::vector<std::vector<int>> outgoing(ag.vertices.size());
    for (int e = 0; e < static_cast<int>(ag.half_edges.size()); ++e) outgoing[ag.half_edges[e].origin].push_back(e);
    const double angle_eps = 2.0 * snap / r + 1e-12;
    std::vector<int> rotation_pos(ag.half_edges.size(), 0);
    for (int v = 0; v < static_cast<int>(ag.vertices.size()); ++v) {
        detail::sort_rotation(outgoing[v], ag, v, angle_eps);
        for (int k = 0; k < static_cast<int>(outgoing[v].size()); ++k) rotation_pos[outgoing[v][k]] = k;
    }
    for (auto& h : ag.half_edges) {
        const auto& rot = outgoing[h.dest];
        const int k = rotation_pos[h.twin];
        h.next = rot[(k + static_cast<int>(rot.size()) - 1) % static_cast<int>(rot.size())];
    }

    detail::UnionFind uf(static_cast<int>(ag.vertices.size()));
    for (const auto& h : ag.half_edges) uf.unite(h.origin, h.dest);
    std::unordered_map<int, int> comp_id;
    for (int v = 0; v < static_cast<int>(ag.vertices.size()); ++v) {
        const int root = uf.find(v);
        auto [it, inserted] = comp_id.emplace(root, static_cast<int>(comp_id.size()));
        ag.vertices[v].component = it->second;
    }
    ag.components.resize(comp_id.size());
    for (const auto& v : ag.vertices) ++ag.components[v.component].vertices;
    for (auto& c : ag.circles) c.component = ag.vertices[c.vertices.front()].component;

    // Arc midpoints and their clearance from every other circle.
    const int arcs = static_cast<int>(ag.half_edges.size()) / 2;
    std::vector<Point2> mid(arcs);
    std::vector<double> clearance(arcs);
    for (int a = 0; a < arcs; ++a) {
        const HalfEdge& h = ag.half_edges[2 * a];
        const Point2 c = ag.circles[h.circle].center;
        mid[a] = detail::on_circle(c, r, 0.5 * (h.angle_from + h.angle_to));
        double clear = r;
        for (int g = 0; g < groups; ++g) {
            if (g == h.circle) continue;
            const double d = dist(mid[a], ag.circles[g].center);
            if (d > 2.0 * r + clear) continue;
            clear = std::min(clear, std::abs(d - r));
        }
        clearance[a] = clear;
        ++ag.components[ag.vertices[h.origin].component].edges;
    }

    for (int e = 0; e < static_cast<int>(ag.half_edges.size()); ++e) {
        if (ag.half_edges[e].face >= 0) continue;
        const int f = static_cast<int>(ag.faces.size());
        ArrangementFace face;
        face.first_edge = e;
        face.component = ag.vertices[ag.half_edges[e].origin].component;
        face.clearance = -1.0;
        int cur = e;
        do {
            HalfEdge& h = ag.half_edges[cur];
            h.face = f;
            ++face.edge_count;
            const int a = cur / 2;
            if (clearance[a] > face.clearance) {
                face.clearance = clearance[a];
                const Point2 c = ag.circles[h.circle].center;
                const Point2 u = (1.0 / r) * (mid[a] - c);
                const double step = 0.5 * std::min(clearance[a], r);
                face.sample = h.ccw ? mid[a] - step * u : mid[a] + step * u;
            }
            cur = h.next;
        } while (cur != e);
        face.circles = ag.circles_containing(face.sample);
        ++ag.components[face.component].faces;
        ag.faces.push_back(std::move(face));
    }

    ag.dual_edges.resize(arcs);
    ag.face_arcs.assign(ag.faces.size(), {});
    for (int a = 0; a < arcs; ++a) {
        const DualEdge d{ag.half_edges[2 * a].face, ag.half_edges[2 * a + 1].face, ag.half_edges[2 * a].circle};
        ag.dual_edges[a] = d;
        ag.face_arcs[d.inside].push_back(a);
        if (d.outside != d.inside) ag.face_arcs[d.outside].push_back(a);
    }

    // The leftmost point of a component lies on its leftmost circle at angle pi; the
    // face left of the clockwise arc through it is unbounded.
    ag.outer_face.assign(ag.components.size(), -1);
    std::vector<int> leftmost(ag.components.size(), -1);
    for (int g = 0; g < groups; ++g) {
        int& best = leftmost[ag.circles[g].component];
        if (best < 0 || ag.circles[g].center.x < ag.circles[best].center.x) best = g;
    }
    for (int e = 1; e < static_cast<int>(ag.half_edges.size()); e += 2) {
        const HalfEdge& h = ag.half_edges[e];
        const int comp = ag.circles[h.circle].component;
        if (leftmost[comp] != h.circle || ag.outer_face[comp] >= 0) continue;
        const double pi = std::numbers::pi;
        if ((h.angle_from <= pi && pi <= h.angle_to) || (h.angle_from <= pi + two_pi && pi + two_pi <= h.angle_to)) {
            ag.outer_face[comp] = h.face;
            ag.faces[h.face].outer = true;
        }
    }
    return ag;
}

enum class StepKind { forward, backtrack, teleport };

/// Flip every entry of `circle` (none when -1); afterwards the walk stands in `face`,
/// or between faces when `face` is -1 (inside a teleport).
struct TraversalStep {
    int circle = -1;
    int face = -1;
    StepKind kind = StepKind::forward;
};

/// Temporarily flip `circles` while standing in `face` to obtain the matrix at the
/// vertex position.
struct VertexProbe {
    int vertex = -1;
    int face = -1;
    Point2 position;
    std::vector<int> circles;
};

struct TraversalPlan {
    Point2 start;
    std::vector<int> start_circles;
    std::vector<TraversalStep> steps;
    std::vector<VertexProbe> probes;
    std::vector<std::vector<int>> probes_by_face;
    int fallback_teleports = 0;      ///< faces the dual walk failed to reach
};

inline TraversalPlan make_traversal_plan(const ArrangementGraph& ag, std::optional<Point2> t0 = std::nullopt) {
    TraversalPlan plan;
    plan.start = t0.value_or(ag.default_start());
    plan.start_circles = ag.circles_containing(plan.start);

    const int groups = static_cast<int>(ag.circles.size());
    const int faces = static_cast<int>(ag.faces.size());
    std::vector<std::uint8_t> inside(groups, 0);
    for (int g : plan.start_circles) inside[g] = 1;

    auto teleport = [&](const std::vector<int>& target, int face) {
        std::vector<std::uint8_t> want(groups, 0);
        for (int g : target) want[g] = 1;
        std::vector<int> flips;
        for (int g = 0; g < groups; ++g)
            if (want[g] != inside[g]) flips.push_back(g);
        for (std::size_t k = 0; k < flips.size(); ++k) {
            inside[flips[k]] ^= 1;
            plan.steps.push_back({flips[k], k + 1 == flips.size() ? face : -1, StepKind::teleport});
        }
        if (flips.empty() && face >= 0) plan.steps.push_back({-1, face, StepKind::teleport});
    };

    std::vector<std::uint8_t> visited(faces, 0);
    auto walk = [&](int root) {
        struct Frame {
            int face;
            int via;
            std::size_t next;
        };
        visited[root] = 1;
        std::vector<Frame> stack{{root, -1, 0}};
        while (!stack.empty()) {
            Frame& top = stack.back();
            const auto& arcs = ag.face_arcs[top.face];
            if (top.next < arcs.size()) {
                const int a = arcs[top.next++];
                const DualEdge& d = ag.dual_edges[a];
                const int other = d.inside == top.face ? d.outside : d.inside;
                if (visited[other]) continue;
                visited[other] = 1;
                inside[d.circle] ^= 1;
                plan.steps.push_back({d.circle, other, StepKind::forward});
                stack.push_back({other, a, 0});
                continue;
            }
            const int via = top.via;
            stack.pop_back();
            if (!stack.empty()) {
                const int circle = ag.dual_edges[via].circle;
                inside[circle] ^= 1;
                plan.steps.push_back({circle, stack.back().face, StepKind::backtrack});
            }
        }
    };

    if (ag.point_mode) {
        teleport(ag.faces[0].circles, 0);
        visited[0] = 1;
    } else {
        std::vector<int> order(ag.components.size());
        std::iota(order.begin(), order.end(), 0);
        for (int comp : order) {
            const int root = ag.outer_face[comp];
            if (root < 0) continue;
            teleport(ag.faces[root].circles, root);
            walk(root);
        }
        for (int f = 0; f < faces; ++f) {
            if (visited[f]) continue;
            ++plan.fallback_teleports;
            teleport(ag.faces[f].circles, f);
            walk(f);
        }
    }
    teleport(plan.start_circles, -1);

    plan.probes_by_face.assign(faces, {});
    std::vector<int> incident(ag.vertices.size(), 0);
    for (auto it = ag.half_edges.rbegin(); it != ag.half_edges.rend(); ++it) incident[it->origin] = it->face;
    for (int v = 0; v < static_cast<int>(ag.vertices.size()); ++v) {
        VertexProbe probe;
        probe.vertex = v;
        probe.position = ag.vertices[v].position;
        probe.face = ag.point_mode ? 0 : incident[v];
        const auto& base = ag.faces[probe.face].circles;
        const auto here = ag.circles_containing(probe.position);
        std::set_symmetric_difference(base.begin(), base.end(), here.begin(), here.end(),
                                      std::back_inserter(probe.circles));
        plan.probes_by_face[probe.face].push_back(static_cast<int>(plan.probes.size()));
        plan.probes.push_back(std::move(probe));
    }
    return plan;
}

} // namespace ftrans

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

// Planar primitives shared by every other module. All predicates are evaluated in
// double precision against an absolute tolerance; closed disks are used throughout.

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "ftrans/errors.hpp"

namespace ftrans {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
    friend constexpr bool operator==(Point2 a, Point2 b) = default;

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }

struct Circle {
    Point2 center;
    double radius = 0.0;
};

/// Absolute comparison tolerance for geometric predicates, 0 < eps < 1.
class Tolerance {
public:
    static constexpr double kDefault = 1e-9;

    constexpr Tolerance() = default;
    explicit Tolerance(double eps) : eps_(eps) {
        if (!(eps > 0.0 && eps < 1.0)) {
            throw InvalidArgument("tolerance must lie in (0, 1)");
        }
    }

    constexpr double eps() const { return eps_; }

private:
    double eps_ = kDefault;
};

inline double dist(Point2 a, Point2 b) { return norm(a - b); }

/// Intersection points of two circle boundaries. Tangency yields one point; a proper
/// crossing yields two, the first one lying to the left of the directed line c1 -> c2.
/// Throws IdenticalCircles when the circles coincide within tolerance.
inline std::vector<Point2> circle_circle_intersections(const Circle& c1, const Circle& c2,
                                                       Tolerance tol = {}) {
    const double eps = tol.eps();
    const Point2 delta = c2.center - c1.center;
    const double d = norm(delta);
    const double r1 = c1.radius;
    const double r2 = c2.radius;

    if (d <= eps) {
        if (std::abs(r1 - r2) <= eps) throw IdenticalCircles();
        return {};
    }
    if (d > r1 + r2 + eps) return {};
    if (d < std::abs(r1 - r2) - eps) return {};

    const Point2 dir = (1.0 / d) * delta;
    const Point2 perp{-dir.y, dir.x};

    if (std::abs(d - (r1 + r2)) <= eps) {
        return {c1.center + r1 * dir};
    }
    if (std::abs(d - std::abs(r1 - r2)) <= eps) {
        if (r1 >= r2) return {c1.center + r1 * dir};
        return {c1.center - r1 * dir};
    }

    const double a = (d * d + r1 * r1 - r2 * r2) / (2.0 * d);
    const double h = std::sqrt(std::max(0.0, r1 * r1 - a * a));
    const Point2 base = c1.center + a * dir;
    return {base + h * perp, base - h * perp};
}

/// Center of the circle through three points, or nullopt when they are collinear
/// within tolerance (relative to the longest side).
inline std::optional<Point2> circumcenter(Point2 a, Point2 b, Point2 c, Tolerance tol = {}) {
    const Point2 ab = b - a;
    const Point2 ac = c - a;
    const double area2 = cross(ab, ac);
    const double longest = std::max({norm(ab), norm(ac), dist(b, c)});
    if (std::abs(area2) <= tol.eps() * std::max(1.0, longest * longest)) return std::nullopt;
    const double ab2 = dot(ab, ab);
    const double ac2 = dot(ac, ac);
    const double ux = (ac.y * ab2 - ab.y * ac2) / (2.0 * area2);
    const double uy = (ab.x * ac2 - ac.x * ab2) / (2.0 * area2);
    return a + Point2{ux, uy};
}

inline std::optional<double> circumradius(Point2 a, Point2 b, Point2 c, Tolerance tol = {}) {
    const Point2 ab = b - a;
    const Point2 ac = c - a;
    const double area2 = cross(ab, ac);
    const double la = norm(ab);
    const double lb = norm(ac);
    const double lc = dist(b, c);
    const double longest = std::max({la, lb, lc});
    if (std::abs(area2) <= tol.eps() * std::max(1.0, longest * longest)) return std::nullopt;
    return la * lb * lc / (2.0 * std::abs(area2));
}

inline bool point_in_closed_disk(Point2 t, const Circle& d, Tolerance tol = {}) {
    return dist(t, d.center) <= d.radius + tol.eps();
}

inline Point2 rightmost_point(const Circle& c) {
    if (!(c.radius > 0.0)) throw ZeroRadius();
    return {c.center.x + c.radius, c.center.y};
}

} // namespace ftrans

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
#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ftrans/geometry.hpp"

namespace ftrans {
namespace {

constexpr double kEps = 1e-9;

TEST(Dist, Examples) {
    EXPECT_EQ(dist({0, 0}, {0, 0}), 0.0);
    EXPECT_DOUBLE_EQ(dist({0, 0}, {3, 4}), 5.0);
    EXPECT_NEAR(dist({1, -1}, {0, 0}), std::sqrt(2.0), kEps);
}

TEST(Dist, MetricOnRandomPoints) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-100.0, 100.0);
    for (int k = 0; k < 2000; ++k) {
        const Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
        EXPECT_EQ(dist(a, b), dist(b, a));
        EXPECT_LE(dist(a, c), dist(a, b) + dist(b, c) + 4 * kEps);
    }
}

TEST(CircleIntersections, SymmetricLens) {
    const auto pts = circle_circle_intersections({{0, 0}, 1}, {{1, 0}, 1});
    ASSERT_EQ(pts.size(), 2u);
    EXPECT_NEAR(pts[0].x, 0.5, kEps);
    EXPECT_NEAR(pts[0].y, std::sqrt(3.0) / 2, kEps);
    EXPECT_NEAR(pts[1].x, 0.5, kEps);
    EXPECT_NEAR(pts[1].y, -std::sqrt(3.0) / 2, kEps);
}

TEST(CircleIntersections, TangentAndDisjoint) {
    const auto touch = circle_circle_intersections({{0, 0}, 1}, {{2, 0}, 1});
    ASSERT_EQ(touch.size(), 1u);
    EXPECT_NEAR(touch[0].x, 1.0, kEps);
    EXPECT_NEAR(touch[0].y, 0.0, kEps);
    EXPECT_TRUE(circle_circle_intersections({{0, 0}, 1}, {{3, 0}, 1}).empty());
    const auto inner = circle_circle_intersections({{0, 0}, 2}, {{1, 0}, 1});
    ASSERT_EQ(inner.size(), 1u);
    EXPECT_NEAR(inner[0].x, 2.0, kEps);
}

TEST(CircleIntersections, IdenticalCirclesThrow) {
    EXPECT_THROW(circle_circle_intersections({{1, 1}, 2}, {{1, 1}, 2}), IdenticalCircles);
    EXPECT_TRUE(circle_circle_intersections({{1, 1}, 2}, {{1, 1}, 3}).empty());
}

TEST(CircleIntersections, PointsLieOnBothCircles) {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_real_distribution<double> r(0.1, 4.0);
    for (int k = 0; k < 5000; ++k) {
        const Circle a{{u(rng), u(rng)}, r(rng)};
        const Circle b{{u(rng), u(rng)}, r(rng)};
        for (const auto& p : circle_circle_intersections(a, b)) {
            EXPECT_NEAR(dist(p, a.center), a.radius, 8 * kEps);
            EXPECT_NEAR(dist(p, b.center), b.radius, 8 * kEps);
        }
    }
}

TEST(Circumradius, Examples) {
    EXPECT_NEAR(*circumradius({0, 0}, {2, 0}, {1, 1}), 1.0, kEps);
    const auto center = circumcenter({0, 0}, {2, 0}, {1, 1});
    ASSERT_TRUE(center.has_value());
    EXPECT_NEAR(center->x, 1.0, kEps);
    EXPECT_NEAR(center->y, 0.0, kEps);
    EXPECT_FALSE(circumradius({0, 0}, {1, 0}, {2, 0}).has_value());
    EXPECT_NEAR(*circumradius({0, 0}, {0, -1}, {1, -1}), std::sqrt(2.0) / 2, kEps);
}

TEST(Circumradius, AtLeastHalfLongestSide) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int k = 0; k < 2000; ++k) {
        const Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
        const auto r = circumradius(a, b, c);
        if (!r) continue;
        const double half = std::max({dist(a, b), dist(a, c), dist(b, c)}) / 2;
        EXPECT_GE(*r, half - kEps);
    }
}

TEST(PointInClosedDisk, Examples) {
    EXPECT_TRUE(point_in_closed_disk({0, 0}, {{0, 0}, 1}));
    EXPECT_TRUE(point_in_closed_disk({1, 0}, {{0, 0}, 1}));
    EXPECT_FALSE(point_in_closed_disk({1.1, 0}, {{0, 0}, 1}));
}

TEST(RightmostPoint, Examples) {
    EXPECT_EQ(rightmost_point({{0, 0}, 2}), (Point2{2, 0}));
    EXPECT_EQ(rightmost_point({{-1, 3}, 1}), (Point2{0, 3}));
    EXPECT_THROW(rightmost_point({{0, 0}, 0}), ZeroRadius);
    const Circle c{{0.3, -7.25}, 1.5};
    EXPECT_EQ(dist(rightmost_point(c), c.center), c.radius);
}

TEST(Tolerance, Validation) {
    EXPECT_EQ(Tolerance{}.eps(), 1e-9);
    EXPECT_THROW(Tolerance(0.0), InvalidArgument);
    EXPECT_THROW(Tolerance(1.0), InvalidArgument);
    EXPECT_EQ(Tolerance(1e-6).eps(), 1e-6);
}

} // namespace
} // namespace ftrans

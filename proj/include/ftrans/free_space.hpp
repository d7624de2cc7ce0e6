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

// Free-space matrix of two point sequences and the stationary (no translation)
// decision and optimization procedures.
//
// Indexing is 0-based. Row i corresponds to p_i and is drawn bottom-up, column j
// corresponds to q_j and is drawn left-to-right; "up" increases the row index.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ftrans/errors.hpp"
#include "ftrans/geometry.hpp"

namespace ftrans {

class PointSequence {
public:
    PointSequence() = default;
    PointSequence(std::vector<Point2> points) : points_(std::move(points)) { validate(); }
    PointSequence(std::initializer_list<Point2> points) : points_(points) { validate(); }

    std::size_t size() const { return points_.size(); }
    const Point2& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point2>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    PointSequence translated(Point2 t) const {
        std::vector<Point2> moved = points_;
        for (auto& p : moved) p = p + t;
        return PointSequence(std::move(moved));
    }

private:
    void validate() const {
        if (points_.empty()) throw EmptySequence();
        for (const auto& p : points_) {
            if (!p.finite()) throw NonFiniteCoordinate();
        }
    }

    std::vector<Point2> points_;
};

enum class GridStep { up, right, diagonal };

struct GridOffset {
    int drow;
    int dcol;
};

constexpr GridOffset offset_of(GridStep step) {
    switch (step) {
    case GridStep::up: return {1, 0};
    case GridStep::right: return {0, 1};
    case GridStep::diagonal: return {1, 1};
    }
    return {0, 0};
}

inline constexpr GridStep kAllSteps[] = {GridStep::up, GridStep::right, GridStep::diagonal};

/// m x n 0/1 matrix; entry (i, j) is 1 iff dist(p_i, q_j + translation) <= delta at
/// construction. After toggles the bits are authoritative.
class FreeSpaceMatrix {
public:
    FreeSpaceMatrix() = default;
    FreeSpaceMatrix(int rows, int cols, bool fill = false)
        : rows_(rows), cols_(cols), bits_(static_cast<std::size_t>(rows) * cols, fill ? 1 : 0) {
        if (rows < 1 || cols < 1) throw InvalidArgument("matrix dimensions must be positive");
    }

    /// Rows listed bottom-up: rows[0] is the row of p_1.
    static FreeSpaceMatrix from_rows(const std::vector<std::vector<int>>& rows) {
        if (rows.empty() || rows.front().empty()) throw InvalidArgument("empty matrix");
        FreeSpaceMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
        for (int i = 0; i < m.rows_; ++i) {
            if (static_cast<int>(rows[i].size()) != m.cols_) throw InvalidArgument("ragged matrix");
            for (int j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j] != 0);
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double delta() const { return delta_; }
    Point2 translation() const { return translation_; }

    bool operator()(int i, int j) const { return bits_[index(i, j)] != 0; }
    bool at(int i, int j) const {
        check(i, j);
        return (*this)(i, j);
    }
    void set(int i, int j, bool bit) {
        check(i, j);
        bits_[index(i, j)] = bit ? 1 : 0;
    }
    void toggle(int i, int j) {
        check(i, j);
        bits_[index(i, j)] ^= 1;
    }

    std::size_t count_ones() const {
        return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
    }

    FreeSpaceMatrix transposed() const {
        FreeSpaceMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.bits_[t.index(j, i)] = bits_[index(i, j)];
        t.delta_ = delta_;
        t.translation_ = translation_;
        return t;
    }

    friend bool operator==(const FreeSpaceMatrix& a, const FreeSpaceMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
    }

    void set_metadata(double delta, Point2 translation) {
        delta_ = delta;
        translation_ = translation;
    }

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * cols_ + j; }
    void check(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
            throw IndexOutOfRange("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                  ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_));
        }
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::uint8_t> bits_;
    double delta_ = 0.0;
    Point2 translation_{};
};

inline FreeSpaceMatrix build_matrix(const PointSequence& p, const PointSequence& q, Point2 t,
                                    double delta, Tolerance tol = {}) {
    if (p.size() == 0 || q.size() == 0) throw EmptySequence();
    if (!(delta >= 0.0)) throw InvalidArgument("delta must be non-negative");
    FreeSpaceMatrix m(static_cast<int>(p.size()), static_cast<int>(q.size()));
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            m.set(i, j, point_in_closed_disk(t, Circle{p[i] - q[j], delta}, tol));
        }
    }
    m.set_metadata(delta, t);
    return m;
}

/// True iff a monotone path of 1-entries joins (0, 0) to (m-1, n-1).
inline bool stationary_decide(const FreeSpaceMatrix& m) {
    const int rows = m.rows();
    const int cols = m.cols();
    std::vector<std::uint8_t> below(cols, 0);
    std::vector<std::uint8_t> current(cols, 0);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            bool reach = false;
            if (m(i, j)) {
                if (i == 0 && j == 0) {
                    reach = true;
                } else {
                    reach = (i > 0 && below[j]) || (j > 0 && current[j - 1]) ||
                            (i > 0 && j > 0 && below[j - 1]);
                }
            }
            current[j] = reach ? 1 : 0;
        }
        std::swap(below, current);
    }
    return below[cols - 1] != 0;
}

/// Stationary discrete Frechet distance. The optimum is always one of the pairwise
/// distances, so the search runs over that sorted candidate set.
inline double stationary_frechet(const PointSequence& p, const PointSequence& q,
                                 Tolerance tol = {}) {
    if (p.size() == 0 || q.size() == 0) throw EmptySequence();
    std::vector<double> candidates;
    candidates.reserve(p.size() * q.size());
    for (const auto& a : p)
        for (const auto& b : q) candidates.push_back(dist(a, b));
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;  // largest distance: all-ones matrix
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (stationary_decide(build_matrix(p, q, Point2{}, candidates[mid], tol))) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return candidates[lo];
}

inline void toggle_entry(FreeSpaceMatrix& m, int i, int j) { m.toggle(i, j); }

} // namespace ftrans

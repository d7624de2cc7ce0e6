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

// Boundary-to-boundary reachability summaries of a block of the free-space matrix.
//
// A block spans rows [row0, row0 + rows) and columns [col0, col0 + cols). Its input
// boundary is the bottom row read right-to-left followed by the rest of the left
// column read bottom-to-top; its output boundary is the right column read
// bottom-to-top followed by the rest of the top row read right-to-left. Both have
// rows + cols - 1 entries and share the bottom-right and top-left corners.
//
// With these orders the set of outputs reachable from an input i is described by an
// interval [first(i), last(i)] together with per-output flags: an output inside the
// interval is reachable from i iff it is reachable from some input at all. Both
// interval endpoints are nondecreasing in i. Every routine here relies on those two
// facts, and the tests check them against brute force.
//
// The vertical variant keeps only the left column as inputs and the right column as
// outputs, both read bottom-to-top.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "ftrans/errors.hpp"
#include "ftrans/free_space.hpp"

namespace ftrans {

using BoundaryIndex = std::int32_t;
inline constexpr BoundaryIndex kUndefined = -1;

/// One bit per boundary entry.
using BoundaryMask = std::vector<std::uint8_t>;

struct Cell {
    int row = 0;
    int col = 0;
    friend constexpr bool operator==(Cell, Cell) = default;
};

struct Block {
    int row0 = 0;
    int col0 = 0;
    int rows = 1;
    int cols = 1;

    int last_row() const { return row0 + rows - 1; }
    int last_col() const { return col0 + cols - 1; }
    int boundary_size() const { return rows + cols - 1; }
    bool contains(int i, int j) const {
        return i >= row0 && i <= last_row() && j >= col0 && j <= last_col();
    }

    Cell input_cell(int k) const {
        if (k < cols) return {row0, last_col() - k};
        return {row0 + (k - cols + 1), col0};
    }
    Cell output_cell(int k) const {
        if (k < rows) return {row0 + k, last_col()};
        return {last_row(), last_col() - (k - rows + 1)};
    }
    BoundaryIndex input_index(Cell c) const {
        if (!contains(c.row, c.col)) return kUndefined;
        if (c.row == row0) return last_col() - c.col;
        if (c.col == col0) return cols - 1 + (c.row - row0);
        return kUndefined;
    }
    BoundaryIndex output_index(Cell c) const {
        if (!contains(c.row, c.col)) return kUndefined;
        if (c.col == last_col()) return c.row - row0;
        if (c.row == last_row()) return rows - 1 + (last_col() - c.col);
        return kUndefined;
    }

    Cell vertical_input_cell(int k) const { return {row0 + k, col0}; }
    Cell vertical_output_cell(int k) const { return {row0 + k, last_col()}; }

    friend constexpr bool operator==(const Block&, const Block&) = default;
};

/// first/last reachable output per input, reachability flag per output, and the
/// inverse lists L_A(j) = {i : first(i) = j}, L_Z(j) = {i : last(i) = j}.
///
/// Each input sits in at most one first-list and one last-list, so the lists are
/// stored intrusively as singly linked chains threaded through the inputs.
class IntervalMaps {
public:
    void reset(int input_size, int output_size) {
        first_.assign(input_size, kUndefined);
        last_.assign(input_size, kUndefined);
        flag_.assign(output_size, 0);
        first_head_.assign(output_size, kUndefined);
        last_head_.assign(output_size, kUndefined);
        first_next_.assign(input_size, kUndefined);
        last_next_.assign(input_size, kUndefined);
    }

    int input_size() const { return static_cast<int>(first_.size()); }
    int output_size() const { return static_cast<int>(flag_.size()); }

    bool defined(int i) const { return first_[i] != kUndefined; }
    BoundaryIndex first(int i) const { return first_[i]; }
    BoundaryIndex last(int i) const { return last_[i]; }
    bool flag(int j) const { return flag_[j] != 0; }

    void set_interval(int i, BoundaryIndex a, BoundaryIndex z) {
        first_[i] = a;
        last_[i] = z;
    }
    void set_flag(int j, bool value) { flag_[j] = value ? 1 : 0; }

    /// Rebuilds L_A / L_Z from the interval endpoints; lists come out in increasing
    /// input order.
    void rebuild_lists() {
        std::fill(first_head_.begin(), first_head_.end(), kUndefined);
        std::fill(last_head_.begin(), last_head_.end(), kUndefined);
        for (int i = input_size() - 1; i >= 0; --i) {
            if (!defined(i)) {
                first_next_[i] = last_next_[i] = kUndefined;
                continue;
            }
            first_next_[i] = first_head_[first_[i]];
            first_head_[first_[i]] = i;
            last_next_[i] = last_head_[last_[i]];
            last_head_[last_[i]] = i;
        }
    }

    template <class F>
    void for_each_first(int j, F&& f) const {
        for (BoundaryIndex i = first_head_[j]; i != kUndefined; i = first_next_[i]) f(i);
    }
    template <class F>
    void for_each_last(int j, F&& f) const {
        for (BoundaryIndex i = last_head_[j]; i != kUndefined; i = last_next_[i]) f(i);
    }

    std::vector<int> first_list(int j) const {
        std::vector<int> out;
        for_each_first(j, [&](int i) { out.push_back(i); });
        return out;
    }
    std::vector<int> last_list(int j) const {
        std::vector<int> out;
        for_each_last(j, [&](int i) { out.push_back(i); });
        return out;
    }

    /// Lists are derived from the endpoints, so equality of endpoints and flags is
    /// equality of the whole summary.
    friend bool operator==(const IntervalMaps& a, const IntervalMaps& b) {
        return a.first_ == b.first_ && a.last_ == b.last_ && a.flag_ == b.flag_;
    }

private:
    std::vector<BoundaryIndex> first_;
    std::vector<BoundaryIndex> last_;
    std::vector<std::uint8_t> flag_;
    std::vector<BoundaryIndex> first_head_;
    std::vector<BoundaryIndex> last_head_;
    std::vector<BoundaryIndex> first_next_;
    std::vector<BoundaryIndex> last_next_;
};

/// Summary over the full L-shaped input and output boundaries.
struct BlockReach {
    Block block;
    IntervalMaps maps;
    friend bool operator==(const BlockReach&, const BlockReach&) = default;
};

/// Summary restricted to the left column (inputs) and right column (outputs).
struct VerticalBlockReach {
    Block block;
    IntervalMaps maps;
    friend bool operator==(const VerticalBlockReach&, const VerticalBlockReach&) = default;
};

enum class Orientation {
    horizontal,  ///< first block lies below the second; they share one row
    vertical,    ///< first block lies left of the second; they share one column
};

namespace detail {

/// In-block reachability from `start`; returns a rows x cols mask in block coordinates.
inline void reach_from(const FreeSpaceMatrix& m, const Block& b, Cell start,
                       std::vector<std::uint8_t>& reach) {
    reach.assign(static_cast<std::size_t>(b.rows) * b.cols, 0);
    const int sr = start.row - b.row0;
    const int sc = start.col - b.col0;
    if (!m(start.row, start.col)) return;
    auto at = [&](int r, int c) -> std::uint8_t& {
        return reach[static_cast<std::size_t>(r) * b.cols + c];
    };
    at(sr, sc) = 1;
    for (int r = sr; r < b.rows; ++r) {
        for (int c = sc; c < b.cols; ++c) {
            if (r == sr && c == sc) continue;
            if (!m(b.row0 + r, b.col0 + c)) continue;
            const bool from_below = r > sr && at(r - 1, c);
            const bool from_left = c > sc && at(r, c - 1);
            const bool from_diag = r > sr && c > sc && at(r - 1, c - 1);
            if (from_below || from_left || from_diag) at(r, c) = 1;
        }
    }
}

inline void fill_prev_next(std::span<const std::uint8_t> marks, std::vector<BoundaryIndex>& next,
                           std::vector<BoundaryIndex>& prev) {
    const int n = static_cast<int>(marks.size());
    next.resize(n);
    prev.resize(n);
    BoundaryIndex last_seen = kUndefined;
    for (int k = 0; k < n; ++k) {
        if (marks[k]) last_seen = k;
        prev[k] = last_seen;
    }
    BoundaryIndex next_seen = std::numeric_limits<BoundaryIndex>::max();
    for (int k = n - 1; k >= 0; --k) {
        if (marks[k]) next_seen = k;
        next[k] = next_seen;
    }
}

/// Flags of the outputs of `w` after gluing: an output stays reachable iff it lies in
/// the interval of some input of `w` that is itself reachable from the glued inputs.
template <class Active, class Sink>
void sweep_output_flags(const IntervalMaps& w, std::vector<std::uint8_t>& queued, Active&& active,
                        Sink&& sink) {
    queued.assign(w.input_size(), 0);
    int open = 0;
    for (int j = 0; j < w.output_size(); ++j) {
        w.for_each_first(j, [&](int i) {
            if (active(i)) {
                queued[i] = 1;
                ++open;
            }
        });
        sink(j, open > 0 && w.flag(j));
        w.for_each_last(j, [&](int i) {
            if (queued[i]) {
                queued[i] = 0;
                --open;
            }
        });
    }
}

} // namespace detail

/// Reusable buffers for merges; one per writer.
struct MergeScratch {
    std::vector<std::uint8_t> marks;
    std::vector<BoundaryIndex> next_flag, prev_flag, next_good, prev_good;
    std::vector<std::uint8_t> queued;
    std::vector<int> cover;
};

/// Exhaustive construction: one in-block DP per input entry.
inline BlockReach build_phi_bruteforce(const FreeSpaceMatrix& m, const Block& b) {
    BlockReach out{b, {}};
    const int size = b.boundary_size();
    out.maps.reset(size, size);
    std::vector<std::uint8_t> reach;
    for (int i = 0; i < size; ++i) {
        const Cell start = b.input_cell(i);
        if (!m(start.row, start.col)) continue;
        detail::reach_from(m, b, start, reach);
        BoundaryIndex a = kUndefined;
        BoundaryIndex z = kUndefined;
        for (int j = 0; j < size; ++j) {
            const Cell c = b.output_cell(j);
            if (!reach[static_cast<std::size_t>(c.row - b.row0) * b.cols + (c.col - b.col0)]) continue;
            if (a == kUndefined) a = j;
            z = j;
            out.maps.set_flag(j, true);
        }
        if (a != kUndefined) out.maps.set_interval(i, a, z);
    }
    out.maps.rebuild_lists();
    return out;
}

/// Exhaustive construction of the vertical summary.
inline VerticalBlockReach build_phi_bar_bruteforce(const FreeSpaceMatrix& m, const Block& b) {
    VerticalBlockReach out{b, {}};
    out.maps.reset(b.rows, b.rows);
    std::vector<std::uint8_t> reach;
    for (int i = 0; i < b.rows; ++i) {
        const Cell start = b.vertical_input_cell(i);
        if (!m(start.row, start.col)) continue;
        detail::reach_from(m, b, start, reach);
        BoundaryIndex a = kUndefined;
        BoundaryIndex z = kUndefined;
        for (int j = 0; j < b.rows; ++j) {
            if (!reach[static_cast<std::size_t>(j) * b.cols + (b.cols - 1)]) continue;
            if (a == kUndefined) a = j;
            z = j;
            out.maps.set_flag(j, true);
        }
        if (a != kUndefined) out.maps.set_interval(i, a, z);
    }
    out.maps.rebuild_lists();
    return out;
}

/// Given which inputs are reachable from outside, marks the outputs that become
/// reachable. Linear in the boundary size: each input scans only the part of its
/// interval not already covered by the previous marked input.
inline BoundaryMask propagate_maps(const IntervalMaps& maps, std::span<const std::uint8_t> reachable_in) {
    BoundaryMask out(maps.output_size(), 0);
    BoundaryIndex covered = kUndefined;
    for (int i = 0; i < maps.input_size(); ++i) {
        if (!reachable_in[i] || !maps.defined(i)) continue;
        const BoundaryIndex from = covered == kUndefined ? maps.first(i) : std::max(covered, maps.first(i));
        for (BoundaryIndex j = from; j <= maps.last(i); ++j) {
            if (maps.flag(j)) out[j] = 1;
        }
        covered = std::max(covered, maps.last(i));
    }
    return out;
}

inline BoundaryMask propagate(const BlockReach& phi, std::span<const std::uint8_t> reachable_in) {
    return propagate_maps(phi.maps, reachable_in);
}

inline BoundaryMask propagate_vertical(const VerticalBlockReach& phi, std::span<const std::uint8_t> reachable_in) {
    return propagate_maps(phi.maps, reachable_in);
}

namespace detail {

// Index bookkeeping for gluing v and w into y. S is the shared row/column, addressed
// through v's output enumeration.
struct MergeLayout {
    Block y;
    int v_in_offset;          // v input k -> y input k + v_in_offset
    int v_out_y_lo, v_out_y_hi, v_out_y_offset;  // v outputs that are y outputs
    int s_lo, s_hi, s_to_w_in;                   // v outputs on S; w input = k + s_to_w_in
    int w_out_offset;                             // w output k -> y output k + offset
    int v_only_lo, v_only_hi;                     // y outputs fed by v alone
    Orientation orientation;

    bool w_in_shared(int k, int w_cols) const {
        return orientation == Orientation::horizontal ? k < w_cols : k >= w_cols - 1;
    }
    int w_in_to_y(int k, int v_rows) const {
        return orientation == Orientation::horizontal ? k + v_rows - 1 : k;
    }
};

inline MergeLayout make_layout(const Block& v, const Block& w, Orientation o) {
    MergeLayout l{};
    l.orientation = o;
    if (o == Orientation::horizontal) {
        if (v.col0 != w.col0 || v.cols != w.cols || w.row0 != v.last_row()) {
            throw IncompatibleBlocks("horizontal merge needs equal column ranges and one shared row");
        }
        l.y = Block{v.row0, v.col0, v.rows + w.rows - 1, v.cols};
        l.v_in_offset = 0;
        l.v_out_y_lo = 0;
        l.v_out_y_hi = v.rows - 1;
        l.v_out_y_offset = 0;
        l.s_lo = v.rows - 1;
        l.s_hi = v.boundary_size() - 1;
        l.s_to_w_in = -(v.rows - 1);
        l.w_out_offset = v.rows - 1;
        l.v_only_lo = 0;
        l.v_only_hi = v.rows - 2;
    } else {
        if (v.row0 != w.row0 || v.rows != w.rows || w.col0 != v.last_col()) {
            throw IncompatibleBlocks("vertical merge needs equal row ranges and one shared column");
        }
        l.y = Block{v.row0, v.col0, v.rows, v.cols + w.cols - 1};
        l.v_in_offset = w.cols - 1;
        l.v_out_y_lo = v.rows - 1;
        l.v_out_y_hi = v.boundary_size() - 1;
        l.v_out_y_offset = w.cols - 1;
        l.s_lo = 0;
        l.s_hi = v.rows - 1;
        l.s_to_w_in = w.cols - 1;
        l.w_out_offset = 0;
        l.v_only_lo = v.rows + w.cols - 1;
        l.v_only_hi = l.y.boundary_size() - 1;
    }
    return l;
}

} // namespace detail

/// Glues the summaries of two sibling blocks into the summary of their union.
///
/// Outputs of v that remain on the union's boundary keep their flags. Flags of w's
/// outputs are recomputed by sweeping w's first/last lists while tracking the open
/// intervals of w-inputs that are reachable from the union's inputs. An input of v
/// that reaches the shared boundary inherits the first/last outputs of w from the
/// first and last shared entry it reaches that continues into w.
inline void merge_phi_into(const BlockReach& v, const BlockReach& w, Orientation orientation,
                           BlockReach& y, MergeScratch& scratch) {
    const detail::MergeLayout l = detail::make_layout(v.block, w.block, orientation);
    const IntervalMaps& vm = v.maps;
    const IntervalMaps& wm = w.maps;
    const int v_out = vm.output_size();

    y.block = l.y;
    y.maps.reset(l.y.boundary_size(), l.y.boundary_size());

    scratch.marks.assign(v_out, 0);
    for (int k = 0; k < v_out; ++k) scratch.marks[k] = vm.flag(k) ? 1 : 0;
    detail::fill_prev_next(scratch.marks, scratch.next_flag, scratch.prev_flag);

    std::fill(scratch.marks.begin(), scratch.marks.end(), 0);
    for (int k = l.s_lo; k <= l.s_hi; ++k) {
        scratch.marks[k] = (vm.flag(k) && wm.defined(k + l.s_to_w_in)) ? 1 : 0;
    }
    detail::fill_prev_next(scratch.marks, scratch.next_good, scratch.prev_good);

    constexpr BoundaryIndex kNone = std::numeric_limits<BoundaryIndex>::max();
    for (int i = 0; i < vm.input_size(); ++i) {
        if (!vm.defined(i)) continue;
        const BoundaryIndex lo = vm.first(i);
        const BoundaryIndex hi = vm.last(i);
        BoundaryIndex a = kNone;
        BoundaryIndex z = kUndefined;

        const BoundaryIndex d_lo = std::max<BoundaryIndex>(lo, l.v_out_y_lo);
        const BoundaryIndex d_hi = std::min<BoundaryIndex>(hi, l.v_out_y_hi);
        if (d_lo <= d_hi && scratch.next_flag[d_lo] <= d_hi) {
            a = std::min(a, scratch.next_flag[d_lo] + l.v_out_y_offset);
            z = std::max(z, scratch.prev_flag[d_hi] + l.v_out_y_offset);
        }

        const BoundaryIndex s_lo = std::max<BoundaryIndex>(lo, l.s_lo);
        const BoundaryIndex s_hi = std::min<BoundaryIndex>(hi, l.s_hi);
        if (s_lo <= s_hi && scratch.next_good[s_lo] <= s_hi) {
            const BoundaryIndex entry = scratch.next_good[s_lo] + l.s_to_w_in;
            const BoundaryIndex exit = scratch.prev_good[s_hi] + l.s_to_w_in;
            a = std::min(a, wm.first(entry) + l.w_out_offset);
            z = std::max(z, wm.last(exit) + l.w_out_offset);
        }

        if (a != kNone) y.maps.set_interval(i + l.v_in_offset, a, z);
    }

    for (int k = 0; k < wm.input_size(); ++k) {
        if (l.w_in_shared(k, w.block.cols) || !wm.defined(k)) continue;
        y.maps.set_interval(l.w_in_to_y(k, v.block.rows), wm.first(k) + l.w_out_offset,
                            wm.last(k) + l.w_out_offset);
    }

    for (int k = l.v_only_lo; k <= l.v_only_hi; ++k) {
        y.maps.set_flag(k, vm.flag(k - l.v_out_y_offset));
    }

    const int w_cols = w.block.cols;
    detail::sweep_output_flags(
        wm, scratch.queued,
        [&](int i) { return !l.w_in_shared(i, w_cols) || vm.flag(i - l.s_to_w_in); },
        [&](int j, bool reachable) { y.maps.set_flag(j + l.w_out_offset, reachable); });

    y.maps.rebuild_lists();
}

inline BlockReach merge_phi(const BlockReach& v, const BlockReach& w, Orientation orientation) {
    BlockReach y;
    MergeScratch scratch;
    merge_phi_into(v, w, orientation, y, scratch);
    return y;
}

/// Drops the horizontal parts of both boundaries. Each left-column input keeps its
/// first output if that lies on the right column, and its last output is clamped to
/// the last right-column entry it reaches.
inline void restrict_to_vertical_into(const BlockReach& phi, VerticalBlockReach& out, MergeScratch& scratch) {
    const int rows = phi.block.rows;
    const int cols = phi.block.cols;
    const IntervalMaps& pm = phi.maps;
    out.block = phi.block;
    out.maps.reset(rows, rows);

    scratch.marks.assign(rows, 0);
    for (int k = 0; k < rows; ++k) scratch.marks[k] = pm.flag(k) ? 1 : 0;
    detail::fill_prev_next(scratch.marks, scratch.next_flag, scratch.prev_flag);

    scratch.cover.assign(rows + 1, 0);
    for (int k = 0; k < rows; ++k) {
        const int i = cols - 1 + k;
        if (!pm.defined(i) || pm.first(i) > rows - 1) continue;
        const BoundaryIndex a = pm.first(i);
        const BoundaryIndex z = scratch.prev_flag[std::min<BoundaryIndex>(pm.last(i), rows - 1)];
        out.maps.set_interval(k, a, z);
        ++scratch.cover[a];
        --scratch.cover[z + 1];
    }
    int open = 0;
    for (int j = 0; j < rows; ++j) {
        open += scratch.cover[j];
        out.maps.set_flag(j, open > 0 && pm.flag(j));
    }
    out.maps.rebuild_lists();
}

inline VerticalBlockReach restrict_to_vertical(const BlockReach& phi) {
    VerticalBlockReach out;
    MergeScratch scratch;
    restrict_to_vertical_into(phi, out, scratch);
    return out;
}

/// Vertical-only counterpart of merge_phi for blocks spanning the same rows; the
/// shared column is v's output column and w's input column.
inline void merge_phi_bar_into(const VerticalBlockReach& v, const VerticalBlockReach& w,
                               VerticalBlockReach& y, MergeScratch& scratch) {
    if (v.block.row0 != w.block.row0 || v.block.rows != w.block.rows ||
        w.block.col0 != v.block.last_col()) {
        throw IncompatibleBlocks("vertical-summary merge needs equal row ranges and one shared column");
    }
    const int rows = v.block.rows;
    const IntervalMaps& vm = v.maps;
    const IntervalMaps& wm = w.maps;
    y.block = Block{v.block.row0, v.block.col0, rows, v.block.cols + w.block.cols - 1};
    y.maps.reset(rows, rows);

    scratch.marks.assign(rows, 0);
    for (int k = 0; k < rows; ++k) scratch.marks[k] = (vm.flag(k) && wm.defined(k)) ? 1 : 0;
    detail::fill_prev_next(scratch.marks, scratch.next_good, scratch.prev_good);

    for (int i = 0; i < rows; ++i) {
        if (!vm.defined(i)) continue;
        const BoundaryIndex entry = scratch.next_good[vm.first(i)];
        if (entry > vm.last(i)) continue;
        const BoundaryIndex exit = scratch.prev_good[vm.last(i)];
        y.maps.set_interval(i, wm.first(entry), wm.last(exit));
    }

    detail::sweep_output_flags(
        wm, scratch.queued, [&](int i) { return vm.flag(i); },
        [&](int j, bool reachable) { y.maps.set_flag(j, reachable); });

    y.maps.rebuild_lists();
}

inline VerticalBlockReach merge_phi_bar(const VerticalBlockReach& v, const VerticalBlockReach& w) {
    VerticalBlockReach y;
    MergeScratch scratch;
    merge_phi_bar_into(v, w, y, scratch);
    return y;
}

/// Interval endpoints are nondecreasing over the defined inputs, and first <= last.
inline bool satisfies_staircase(const IntervalMaps& maps) {
    BoundaryIndex prev_a = kUndefined;
    BoundaryIndex prev_z = kUndefined;
    for (int i = 0; i < maps.input_size(); ++i) {
        if (!maps.defined(i)) continue;
        if (maps.first(i) > maps.last(i)) return false;
        if (maps.first(i) < prev_a || maps.last(i) < prev_z) return false;
        prev_a = maps.first(i);
        prev_z = maps.last(i);
    }
    return true;
}

/// Every defined input appears exactly once in the first-lists and once in the
/// last-lists, under the output its endpoint names.
inline bool lists_consistent(const IntervalMaps& maps) {
    std::vector<int> seen_first(maps.input_size(), 0);
    std::vector<int> seen_last(maps.input_size(), 0);
    for (int j = 0; j < maps.output_size(); ++j) {
        bool ok = true;
        maps.for_each_first(j, [&](int i) {
            ++seen_first[i];
            ok = ok && maps.first(i) == j;
        });
        maps.for_each_last(j, [&](int i) {
            ++seen_last[i];
            ok = ok && maps.last(i) == j;
        });
        if (!ok) return false;
    }
    for (int i = 0; i < maps.input_size(); ++i) {
        const int expected = maps.defined(i) ? 1 : 0;
        if (seen_first[i] != expected || seen_last[i] != expected) return false;
    }
    return true;
}

} // namespace ftrans

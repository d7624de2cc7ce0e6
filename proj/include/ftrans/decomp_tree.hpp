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

// Dynamic reachability of the top-right entry from the bottom-left entry under
// single-entry updates.
//
// BlockTree halves a block alternately by rows and by columns, children overlapping
// in one row or column, down to leaves of at most 2x2 whose summaries are computed
// exhaustively. SquareReachTree is a BlockTree over the whole matrix. RectReachTree
// covers a wide matrix with overlapping near-square tiles, each owning a BlockTree,
// and keeps vertical-boundary summaries in a balanced tree over the tiles.

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "ftrans/block_reach.hpp"
#include "ftrans/errors.hpp"
#include "ftrans/free_space.hpp"

namespace ftrans {

struct UpdateStats {
    int phi_rebuilds = 0;    ///< node summaries recomputed
    int depth_touched = 0;   ///< deepest level reached, root = 1
    std::int64_t work = 0;   ///< boundary entries processed by merges plus leaf cells

    UpdateStats& operator+=(const UpdateStats& o) {
        phi_rebuilds += o.phi_rebuilds;
        depth_touched = std::max(depth_touched, o.depth_touched);
        work += o.work;
        return *this;
    }
};

class BlockTree {
public:
    struct Node {
        Block block;
        int left = -1;
        int right = -1;
        Orientation split = Orientation::horizontal;
        int depth = 0;
        BlockReach phi;

        bool leaf() const { return left < 0; }
    };

    BlockTree() = default;
    BlockTree(const FreeSpaceMatrix& m, const Block& root) { build(m, root); }

    void build(const FreeSpaceMatrix& m, const Block& root) {
        nodes_.clear();
        nodes_.reserve(4 * static_cast<std::size_t>(root.rows) * root.cols);
        UpdateStats ignored;
        build_node(m, root, 0, ignored);
        build_work_ = ignored.work;
    }

    /// Recomputes every node whose block contains (i, j), children before parents.
    UpdateStats refresh(const FreeSpaceMatrix& m, int i, int j) {
        UpdateStats stats;
        if (!nodes_.empty() && nodes_[0].block.contains(i, j)) refresh_node(m, 0, i, j, stats);
        return stats;
    }

    const BlockReach& root() const { return nodes_.front().phi; }
    const std::vector<Node>& nodes() const { return nodes_; }
    std::int64_t build_work() const { return build_work_; }

    int height() const {
        int h = 0;
        for (const auto& n : nodes_) h = std::max(h, n.depth + 1);
        return h;
    }

    /// Number of nodes whose block contains (i, j).
    int containing(int i, int j) const {
        return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(),
                                              [&](const Node& n) { return n.block.contains(i, j); }));
    }

private:
    static bool is_leaf_block(const Block& b) { return b.rows <= 2 && b.cols <= 2; }

    int build_node(const FreeSpaceMatrix& m, const Block& b, int depth, UpdateStats& stats) {
        const int id = static_cast<int>(nodes_.size());
        nodes_.push_back(Node{b, -1, -1, Orientation::horizontal, depth, {}});
        if (is_leaf_block(b)) {
            nodes_[id].phi = build_phi_bruteforce(m, b);
            stats.work += static_cast<std::int64_t>(b.rows) * b.cols;
            return id;
        }
        // Rows at even depth, columns at odd depth, unless that side is already <= 2.
        bool split_rows = depth % 2 == 0;
        if (split_rows && b.rows <= 2) split_rows = false;
        if (!split_rows && b.cols <= 2) split_rows = true;

        Block first = b;
        Block second = b;
        if (split_rows) {
            const int mid = b.row0 + b.rows / 2;
            first.rows = mid - b.row0 + 1;
            second.row0 = mid;
            second.rows = b.last_row() - mid + 1;
        } else {
            const int mid = b.col0 + b.cols / 2;
            first.cols = mid - b.col0 + 1;
            second.col0 = mid;
            second.cols = b.last_col() - mid + 1;
        }
        const int l = build_node(m, first, depth + 1, stats);
        const int r = build_node(m, second, depth + 1, stats);
        Node& node = nodes_[id];
        node.left = l;
        node.right = r;
        node.split = split_rows ? Orientation::horizontal : Orientation::vertical;
        merge_phi_into(nodes_[l].phi, nodes_[r].phi, node.split, node.phi, scratch_);
        stats.work += node.phi.maps.input_size() + nodes_[l].phi.maps.output_size() +
                      nodes_[r].phi.maps.output_size();
        return id;
    }

    void refresh_node(const FreeSpaceMatrix& m, int id, int i, int j, UpdateStats& stats) {
        Node& node = nodes_[id];
        ++stats.phi_rebuilds;
        stats.depth_touched = std::max(stats.depth_touched, node.depth + 1);
        if (node.leaf()) {
            node.phi = build_phi_bruteforce(m, node.block);
            stats.work += static_cast<std::int64_t>(node.block.rows) * node.block.cols;
            return;
        }
        if (nodes_[node.left].block.contains(i, j)) refresh_node(m, node.left, i, j, stats);
        if (nodes_[node.right].block.contains(i, j)) refresh_node(m, node.right, i, j, stats);
        Node& again = nodes_[id];
        merge_phi_into(nodes_[again.left].phi, nodes_[again.right].phi, again.split, again.phi, scratch_);
        stats.work += again.phi.maps.input_size() + nodes_[again.left].phi.maps.output_size() +
                      nodes_[again.right].phi.maps.output_size();
    }

    std::vector<Node> nodes_;
    MergeScratch scratch_;
    std::int64_t build_work_ = 0;
};

namespace detail {

inline bool root_reaches_corner(const FreeSpaceMatrix& m, const IntervalMaps& maps, int start, int goal) {
    if (!m(0, 0) || !m(m.rows() - 1, m.cols() - 1)) return false;
    if (!maps.defined(start)) return false;
    return maps.first(start) <= goal && goal <= maps.last(start) && maps.flag(goal);
}

} // namespace detail

/// Decomposition tree over a whole matrix (intended for square matrices, but any
/// shape works).
class SquareReachTree {
public:
    SquareReachTree() = default;
    explicit SquareReachTree(FreeSpaceMatrix m) : matrix_(std::move(m)) {
        tree_.build(matrix_, Block{0, 0, matrix_.rows(), matrix_.cols()});
    }

    UpdateStats update(int i, int j, bool bit) {
        matrix_.set(i, j, bit);
        return tree_.refresh(matrix_, i, j);
    }
    UpdateStats toggle(int i, int j) { return update(i, j, !matrix_.at(i, j)); }

    bool query() const {
        const Block& b = tree_.root().block;
        return detail::root_reaches_corner(matrix_, tree_.root().maps, b.cols - 1, b.rows - 1);
    }

    const FreeSpaceMatrix& matrix() const { return matrix_; }
    const BlockTree& tree() const { return tree_; }
    const BlockReach& root() const { return tree_.root(); }

private:
    FreeSpaceMatrix matrix_;
    BlockTree tree_;
};

/// Tiled structure for m <= n (taller inputs are transposed internally; update and
/// matrix indices stay in the caller's orientation). Tiles are as wide as the matrix
/// is tall and overlap in one column; the last tile may be narrower.
class RectReachTree {
public:
    struct Node {
        int tile_lo = 0;
        int tile_hi = 0;
        int left = -1;
        int right = -1;
        int depth = 0;
        VerticalBlockReach phi;

        bool leaf() const { return left < 0; }
    };

    RectReachTree() = default;
    explicit RectReachTree(const FreeSpaceMatrix& m) {
        transposed_ = m.rows() > m.cols();
        matrix_ = transposed_ ? m.transposed() : m;
        const int rows = matrix_.rows();
        const int cols = matrix_.cols();
        const int width = std::max(rows, 2);
        for (int c0 = 0;; c0 += width - 1) {
            const int c1 = std::min(c0 + width - 1, cols - 1);
            tiles_.emplace_back(matrix_, Block{0, c0, rows, c1 - c0 + 1});
            if (c1 == cols - 1) break;
        }
        nodes_.reserve(2 * tiles_.size());
        build_node(0, static_cast<int>(tiles_.size()) - 1, 0);
    }

    UpdateStats update(int i, int j, bool bit) {
        if (transposed_) std::swap(i, j);
        matrix_.set(i, j, bit);
        UpdateStats stats;
        touched_.assign(tiles_.size(), 0);
        for (std::size_t t = 0; t < tiles_.size(); ++t) {
            const Block& b = tiles_[t].root().block;
            if (!b.contains(i, j)) continue;
            stats += tiles_[t].refresh(matrix_, i, j);
            touched_[t] = 1;
        }
        refresh_node(0, stats);
        return stats;
    }
    UpdateStats toggle(int i, int j) { return update(i, j, !bit(i, j)); }

    bool bit(int i, int j) const { return transposed_ ? matrix_.at(j, i) : matrix_.at(i, j); }

    bool query() const {
        return detail::root_reaches_corner(matrix_, nodes_.front().phi.maps, 0, matrix_.rows() - 1);
    }

    bool transposed() const { return transposed_; }
    /// Internal (possibly transposed) matrix.
    const FreeSpaceMatrix& working_matrix() const { return matrix_; }
    const std::vector<BlockTree>& tiles() const { return tiles_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const VerticalBlockReach& root() const { return nodes_.front().phi; }

    int tree_height() const {
        int h = 0;
        for (const auto& n : nodes_) h = std::max(h, n.depth + 1);
        return h;
    }

private:
    int build_node(int lo, int hi, int depth) {
        const int id = static_cast<int>(nodes_.size());
        nodes_.push_back(Node{lo, hi, -1, -1, depth, {}});
        if (lo == hi) {
            restrict_to_vertical_into(tiles_[lo].root(), nodes_[id].phi, scratch_);
            return id;
        }
        const int mid = lo + (hi - lo) / 2;
        const int l = build_node(lo, mid, depth + 1);
        const int r = build_node(mid + 1, hi, depth + 1);
        nodes_[id].left = l;
        nodes_[id].right = r;
        merge_phi_bar_into(nodes_[l].phi, nodes_[r].phi, nodes_[id].phi, scratch_);
        return id;
    }

    bool any_touched(int lo, int hi) const {
        for (int t = lo; t <= hi; ++t)
            if (touched_[t]) return true;
        return false;
    }

    void refresh_node(int id, UpdateStats& stats) {
        Node& node = nodes_[id];
        if (!any_touched(node.tile_lo, node.tile_hi)) return;
        ++stats.phi_rebuilds;
        if (node.leaf()) {
            restrict_to_vertical_into(tiles_[node.tile_lo].root(), node.phi, scratch_);
            stats.work += 2 * static_cast<std::int64_t>(node.phi.maps.input_size());
            return;
        }
        const int l = node.left;
        const int r = node.right;
        refresh_node(l, stats);
        refresh_node(r, stats);
        merge_phi_bar_into(nodes_[l].phi, nodes_[r].phi, nodes_[id].phi, scratch_);
        stats.work += 3 * static_cast<std::int64_t>(nodes_[id].phi.maps.input_size());
    }

    bool transposed_ = false;
    FreeSpaceMatrix matrix_;
    std::vector<BlockTree> tiles_;
    std::vector<Node> nodes_;
    std::vector<std::uint8_t> touched_;
    MergeScratch scratch_;
};

} // namespace ftrans

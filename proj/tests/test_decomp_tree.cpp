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

#include "ftrans/decomp_tree.hpp"
#include "support/grid_oracles.hpp"

namespace ftrans {
namespace {

using testing::Rng;

Block whole(const FreeSpaceMatrix& m) { return Block{0, 0, m.rows(), m.cols()}; }

void expect_tree_consistent(const BlockTree& t, const FreeSpaceMatrix& m) {
    for (const auto& n : t.nodes()) {
        if (n.leaf()) {
            EXPECT_LE(n.block.rows, 2);
            EXPECT_LE(n.block.cols, 2);
            EXPECT_EQ(n.phi, build_phi_bruteforce(m, n.block));
            continue;
        }
        const auto& l = t.nodes()[n.left];
        const auto& r = t.nodes()[n.right];
        EXPECT_EQ(n.phi, merge_phi(l.phi, r.phi, n.split));
        if (n.split == Orientation::horizontal) {
            EXPECT_EQ(r.block.row0, l.block.last_row());
        } else {
            EXPECT_EQ(r.block.col0, l.block.last_col());
        }
    }
}

TEST(SquareReachTree, SingleLeaf) {
    const auto m = FreeSpaceMatrix::from_rows({{1, 0}, {1, 1}});
    SquareReachTree g(m);
    EXPECT_EQ(g.tree().nodes().size(), 1u);
    EXPECT_EQ(g.root(), build_phi_bruteforce(m, whole(m)));
    EXPECT_TRUE(g.query());
}

TEST(SquareReachTree, AllOnesFourByFour) {
    SquareReachTree g(FreeSpaceMatrix(4, 4, true));
    const auto& maps = g.root().maps;
    EXPECT_EQ(maps.first(3), 0);
    EXPECT_EQ(maps.last(3), maps.output_size() - 1);
    EXPECT_TRUE(g.query());
}

TEST(SquareReachTree, StartBlockedIsFalse) {
    auto m = FreeSpaceMatrix(4, 4, true);
    m.set(0, 0, false);
    EXPECT_FALSE(SquareReachTree(m).query());
}

TEST(SquareReachTree, RandomRootMatchesBruteForce) {
    Rng rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = testing::random_matrix(rng, 8, 8, 0.7);
        SquareReachTree g(m);
        ASSERT_EQ(g.root(), build_phi_bruteforce(m, whole(m)));
        ASSERT_EQ(g.query(), stationary_decide(m));
    }
}

TEST(SquareReachTree, NodesAreConsistent) {
    Rng rng(22);
    for (int size : {3, 5, 6, 9}) {
        const auto m = testing::random_matrix(rng, size, size, 0.7);
        SquareReachTree g(m);
        expect_tree_consistent(g.tree(), m);
    }
}

TEST(SquareReachTree, ToggleTwiceRestoresRoot) {
    Rng rng(23);
    const auto m = testing::random_matrix(rng, 7, 7, 0.7);
    SquareReachTree g(m);
    const BlockReach before = g.root();
    g.toggle(3, 4);
    g.toggle(3, 4);
    EXPECT_EQ(g.root(), before);
}

TEST(SquareReachTree, RandomTogglesMatchFreshBuild) {
    Rng rng(24);
    SquareReachTree g(testing::random_matrix(rng, 16, 16, 0.7));
    for (int step = 0; step < 500; ++step) {
        const int i = testing::uniform_int(rng, 0, 15);
        const int j = testing::uniform_int(rng, 0, 15);
        const auto stats = g.toggle(i, j);
        ASSERT_EQ(stats.phi_rebuilds, g.tree().containing(i, j));
        ASSERT_EQ(g.query(), stationary_decide(g.matrix()));
        if (step % 50 == 0) { ASSERT_EQ(g.root(), SquareReachTree(g.matrix()).root()); }
    }
    EXPECT_EQ(g.root(), SquareReachTree(g.matrix()).root());
}

TEST(SquareReachTree, EntryOffSharedLinesTouchesOnePath) {
    SquareReachTree g(FreeSpaceMatrix(16, 16, true));
    // Column 0 is never shared between column-split siblings, and row 0 only lies in
    // the lower child of every row split, so exactly one node per level contains it.
    const auto stats = g.toggle(0, 0);
    EXPECT_EQ(stats.phi_rebuilds, g.tree().height());
    EXPECT_LE(stats.phi_rebuilds, 2 * (4 + 1));
}

TEST(SquareReachTree, SharedEntryRebuildsEveryContainingNode) {
    SquareReachTree g(FreeSpaceMatrix(16, 16, true));
    const auto stats = g.toggle(8, 8);
    EXPECT_EQ(stats.phi_rebuilds, g.tree().containing(8, 8));
    EXPECT_GT(stats.phi_rebuilds, g.tree().height());
}

TEST(SquareReachTree, OutOfRangeThrows) {
    SquareReachTree g(FreeSpaceMatrix(3, 3, true));
    EXPECT_THROW(g.toggle(3, 0), IndexOutOfRange);
    EXPECT_THROW(g.toggle(0, -1), IndexOutOfRange);
}

TEST(SquareReachTree, ExhaustiveThreeByThree) {
    for (int bits = 0; bits < 512; ++bits) {
        FreeSpaceMatrix m(3, 3);
        for (int k = 0; k < 9; ++k) m.set(k / 3, k % 3, (bits >> k) & 1);
        SquareReachTree g(m);
        ASSERT_EQ(g.query(), testing::corner_reachable(m)) << bits;
    }
}

TEST(RectReachTree, SquareIsOneTile) {
    Rng rng(25);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m = testing::random_matrix(rng, 6, 6, 0.7);
        RectReachTree gb(m);
        ASSERT_EQ(gb.tiles().size(), 1u);
        ASSERT_EQ(gb.query(), SquareReachTree(m).query());
    }
}

TEST(RectReachTree, AllOnesTwoByFive) {
    RectReachTree gb(FreeSpaceMatrix(2, 5, true));
    EXPECT_TRUE(gb.query());
    EXPECT_EQ(gb.tiles().size(), 4u);
}

TEST(RectReachTree, AllZeros) { EXPECT_FALSE(RectReachTree(FreeSpaceMatrix(3, 10, false)).query()); }

TEST(RectReachTree, DegenerateShapes) {
    EXPECT_TRUE(RectReachTree(FreeSpaceMatrix(1, 1, true)).query());
    EXPECT_FALSE(RectReachTree(FreeSpaceMatrix(1, 1, false)).query());
    EXPECT_TRUE(RectReachTree(FreeSpaceMatrix(1, 6, true)).query());
    EXPECT_TRUE(RectReachTree(FreeSpaceMatrix(6, 1, true)).query());
    auto row = FreeSpaceMatrix(1, 6, true);
    row.set(0, 3, false);
    EXPECT_FALSE(RectReachTree(row).query());
}

TEST(RectReachTree, RootMatchesVerticalBruteForce) {
    Rng rng(26);
    for (int trial = 0; trial < 100; ++trial) {
        const auto m = testing::random_matrix(rng, 4, 16, 0.75);
        RectReachTree gb(m);
        ASSERT_EQ(gb.root(), build_phi_bar_bruteforce(m, whole(m)));
        for (const auto& n : gb.nodes()) {
            if (n.leaf()) {
                ASSERT_EQ(n.phi, restrict_to_vertical(gb.tiles()[n.tile_lo].root()));
            } else {
                ASSERT_EQ(n.phi, merge_phi_bar(gb.nodes()[n.left].phi, gb.nodes()[n.right].phi));
            }
        }
    }
}

TEST(RectReachTree, RandomInstancesMatchDp) {
    Rng rng(27);
    for (int trial = 0; trial < 500; ++trial) {
        const int m = testing::uniform_int(rng, 1, 6);
        const int n = testing::uniform_int(rng, m, 20);
        const auto mat = testing::random_matrix(rng, m, n, 0.75);
        ASSERT_EQ(RectReachTree(mat).query(), stationary_decide(mat));
    }
}

TEST(RectReachTree, TallInputIsTransposed) {
    Rng rng(28);
    for (int trial = 0; trial < 100; ++trial) {
        const auto mat = testing::random_matrix(rng, 12, 3, 0.75);
        RectReachTree gb(mat);
        ASSERT_TRUE(gb.transposed());
        ASSERT_EQ(gb.query(), stationary_decide(mat));
        for (int k = 0; k < 5; ++k) {
            const int i = testing::uniform_int(rng, 0, 11);
            const int j = testing::uniform_int(rng, 0, 2);
            gb.toggle(i, j);
            ASSERT_EQ(gb.bit(i, j), !mat.at(i, j));
            gb.toggle(i, j);
        }
    }
}

TEST(RectReachTree, TogglesMatchDp) {
    Rng rng(29);
    RectReachTree gb(testing::random_matrix(rng, 8, 64, 0.8));
    FreeSpaceMatrix shadow = gb.working_matrix();
    for (int step = 0; step < 500; ++step) {
        const int i = testing::uniform_int(rng, 0, 7);
        const int j = testing::uniform_int(rng, 0, 63);
        gb.toggle(i, j);
        shadow.toggle(i, j);
        ASSERT_EQ(gb.query(), stationary_decide(shadow));
    }
    EXPECT_EQ(gb.root(), RectReachTree(shadow).root());
}

TEST(RectReachTree, ToggleTwiceRestoresRoot) {
    Rng rng(30);
    RectReachTree gb(testing::random_matrix(rng, 5, 23, 0.7));
    const auto before = gb.root();
    gb.toggle(2, 4);  // column 4 is shared by the first two tiles
    gb.toggle(2, 4);
    EXPECT_EQ(gb.root(), before);
}

TEST(RectReachTree, SharedColumnUpdatesBothTiles) {
    RectReachTree gb(FreeSpaceMatrix(5, 17, true));
    const auto stats = gb.toggle(1, 4);
    int expected = gb.tiles()[0].containing(1, 4) + gb.tiles()[1].containing(1, 4);
    for (const auto& n : gb.nodes())
        if (n.tile_lo <= 1) ++expected;
    EXPECT_EQ(stats.phi_rebuilds, expected);
}

TEST(RectReachTree, OutOfRangeThrows) {
    RectReachTree gb(FreeSpaceMatrix(3, 7, true));
    EXPECT_THROW(gb.toggle(3, 0), IndexOutOfRange);
    EXPECT_THROW(gb.toggle(0, 7), IndexOutOfRange);
}

} // namespace
} // namespace ftrans

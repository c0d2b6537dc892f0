// Copyright 2026 The surflc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "surflc/builders.h"
#include "surflc/complex_ops.h"
#include "surflc/errors.h"
#include "surflc/gf2_topology.h"
#include "surflc/metric.h"
#include "test_util.h"

using namespace surflc;

namespace {

BitVec bits_of(uint64_t mask, size_t n) {
    BitVec b(n);
    for (size_t k = 0; k < n; k++) {
        b.set(k, (mask >> k) & 1);
    }
    return b;
}

}  // namespace

TEST(Gf2Matrix, RankSolveKernel) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; trial++) {
        size_t rows = 1 + rng() % 40, cols = 1 + rng() % 90;
        Gf2Matrix m(rows, cols);
        for (size_t r = 0; r < rows; r++) {
            m.row(r) = testutil::random_bits(cols, rng, 0.3);
        }
        size_t rank = m.rank();
        EXPECT_LE(rank, std::min(rows, cols));
        EXPECT_EQ(rank, m.transposed().rank());
        auto kernel = m.kernel_basis();
        EXPECT_EQ(kernel.size(), cols - rank);
        for (const auto &k : kernel) {
            EXPECT_TRUE(m.apply(k).none());
        }
        BitVec x = testutil::random_bits(cols, rng);
        BitVec b = m.apply(x);
        auto sol = m.solve(b);
        ASSERT_TRUE(sol.has_value());
        EXPECT_EQ(m.apply(*sol), b);
        // Row permutation does not change the rank.
        Gf2Matrix p(0, cols);
        for (size_t r = rows; r-- > 0;) {
            p.append_row(m.row(r));
        }
        EXPECT_EQ(p.rank(), rank);
    }
}

TEST(Gf2Matrix, InconsistentSystem) {
    Gf2Matrix m(2, 1);
    m.set(0, 0);
    m.set(1, 0);
    BitVec b(2);
    b.set(0);
    EXPECT_FALSE(m.solve(b).has_value());
}

TEST(Boundary, ChainLawAndRanks) {
    for (const auto &label : testutil::fixture_labels()) {
        auto g = testutil::load_fixture(label);
        auto m = boundary_matrices(g);
        EXPECT_EQ(m.d1.num_rows(), g.num_vertices());
        EXPECT_EQ(m.d1.num_cols(), g.num_edges());
        EXPECT_EQ(m.d2.num_rows(), g.num_edges());
        EXPECT_EQ(m.d2.num_cols(), g.num_faces());
        EXPECT_TRUE((m.d1 * m.d2).is_zero()) << label;
        EXPECT_TRUE((m.d2.transposed() * m.d1.transposed()).is_zero()) << label;
    }
    EXPECT_EQ(boundary_matrices(build_cube(1)).d2.rank(), 5u);
    EXPECT_EQ(boundary_matrices(build_torus(3)).d1.rank(), 8u);
}

TEST(Homology, Fixtures) {
    for (const auto &label : testutil::fixture_labels()) {
        auto g = testutil::load_fixture(label);
        auto h = homology(g);
        EXPECT_EQ(h.h0, 1u) << label;
        EXPECT_EQ(h.h2, 1u) << label;
        EXPECT_EQ(h.h1, h.ch1) << label;
        EXPECT_EQ(h.euler, int64_t(h.h0) - int64_t(h.h1) + int64_t(h.h2)) << label;
        EXPECT_EQ(h.euler, g.euler_characteristic());
        EXPECT_EQ(h.h1, label.rfind("torus", 0) == 0 ? 2u : 0u) << label;
    }
    auto t = homology(build_tetrahedron());
    EXPECT_EQ(t.h0, 1u);
    EXPECT_EQ(t.h1, 0u);
    EXPECT_EQ(t.h2, 1u);
    EXPECT_EQ(t.euler, 2);
}

TEST(Homology, ForestHasNoCycles) {
    auto g = PolygonalComplex::build(4, {{0, 1}, {1, 2}, {1, 3}}, {});
    auto h = homology(g);
    EXPECT_EQ(h.h0, 1u);
    EXPECT_EQ(h.h1, 0u);
}

TEST(SameClass, Examples) {
    auto g = build_cube(1);
    Chain a = Chain::edges(EdgeSet::of(12, {0, 1}));
    auto w = same_class(g, a, a);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(w->none());
    // The two halves of a face boundary join the same endpoints.
    const auto &face = g.face_edges(0);
    Chain left = Chain::edges(EdgeSet::of(12, {face[0], face[1]}));
    Chain right = Chain::edges(EdgeSet::of(12, {face[2], face[3]}));
    EXPECT_TRUE(same_class(g, left, right).has_value());
    // Torus: a closed row loop is not a boundary.
    auto t = build_torus(3);
    auto kernel = boundary_matrices(t).d1.kernel_basis();
    ClassSolver solver(t);
    bool found_nontrivial = false;
    for (const auto &k : kernel) {
        if (!solver.same_class(Chain{1, k}, Chain{1, BitVec(t.num_edges())})) {
            found_nontrivial = true;
        }
    }
    EXPECT_TRUE(found_nontrivial);
}

TEST(CosetEnumeration, MatchesBruteForce) {
    std::mt19937_64 rng(2);
    for (const char *label : {"tetrahedron", "cube-1"}) {
        auto g = testutil::load_fixture(label);
        ClassSolver solver(g);
        size_t rank = boundary_matrices(g).d2.rank();
        for (int k = 0; k < 30; k++) {
            BitVec gamma = testutil::random_bits(g.num_edges(), rng);
            auto mine = solver.enumerate_class(Chain{1, gamma});
            std::set<BitVec> distinct(mine.begin(), mine.end());
            auto brute = testutil::brute_class(g, gamma);
            EXPECT_EQ(mine.size(), size_t{1} << rank);
            EXPECT_EQ(distinct, std::set<BitVec>(brute.begin(), brute.end()));
            for (const auto &c : mine) {
                EXPECT_TRUE(solver.same_class(Chain{1, gamma}, Chain{1, c}).has_value());
            }
        }
    }
}

TEST(Separation, TetrahedronExhaustive) {
    auto g = build_tetrahedron();
    ClassSolver solver(g);
    for (uint64_t gm = 0; gm < 64; gm++) {
        Chain gamma{1, bits_of(gm, 6)};
        auto coset = testutil::brute_class(g, gamma.coeffs);
        for (uint64_t xm = 0; xm < 64; xm++) {
            BitVec x = bits_of(xm, 6);
            bool brute = testutil::brute_separates(coset, x);
            auto member = class_member_avoiding(g, gamma, EdgeSet(x));
            ASSERT_EQ(!member.has_value(), brute) << gm << " " << xm;
            if (member) {
                EXPECT_FALSE(member->chain.coeffs.intersects(x));
                EXPECT_TRUE(solver.same_class(gamma, member->chain).has_value());
            }
            ASSERT_EQ(is_gamma_separating(g, gamma, EdgeSet(x)), brute);
        }
    }
}

TEST(Separation, EmptySetNeverSeparates) {
    auto g = build_cube(2);
    std::mt19937_64 rng(1);
    for (int k = 0; k < 20; k++) {
        auto path = testutil::random_path(g, rng);
        Chain gamma = Chain::from_path(g.num_edges(), path);
        EXPECT_TRUE(class_member_avoiding(g, gamma, g.no_edges()).has_value());
    }
}

TEST(Separation, CubeSeamBall) {
    auto g = build_cube(1);
    DistanceTable dt(g, Metric::Copath);
    for (uint32_t x0 = 0; x0 < 12; x0++) {
        EdgeSet x = dt.ball(x0, 1);
        for (uint32_t e = 0; e < 12; e++) {
            for (uint32_t f = 0; f < 12; f++) {
                if (x.contains(e) || x.contains(f)) {
                    continue;
                }
                Chain gamma = Chain::from_path(12, shortest_path(g, e, f));
                bool brute = testutil::brute_separates(g, gamma.coeffs, x.mask());
                EXPECT_EQ(is_gamma_separating(g, gamma, x), brute);
            }
        }
    }
}

TEST(Separation, ObstructionsCertify) {
    std::mt19937_64 rng(8);
    for (const char *label : {"tetrahedron", "cube-1", "cube-2", "torus-3"}) {
        auto g = testutil::load_fixture(label);
        ClassSolver solver(g);
        for (int k = 0; k < 100; k++) {
            EdgeSet x(testutil::random_bits(g.num_edges(), rng, 0.4));
            Chain gamma{1, testutil::random_bits(g.num_edges(), rng, 0.3)};
            auto obs = solver.obstructions(x);
            bool odd = std::any_of(obs.begin(), obs.end(), [&](const BitVec &y) {
                return y.dot(gamma.coeffs);
            });
            EXPECT_EQ(odd, solver.separates(gamma, x)) << label;
            for (const auto &y : obs) {
                EXPECT_TRUE(y.is_subset_of(x.mask()));
                EXPECT_TRUE(boundary_matrices(g).d2.transposed().apply(y).none());
            }
        }
    }
}

TEST(Within, Examples) {
    auto g = build_cube(2);
    std::mt19937_64 rng(4);
    for (int k = 0; k < 20; k++) {
        Chain gamma = Chain::from_path(g.num_edges(), testutil::random_path(g, rng));
        auto all = class_member_within(g, gamma, g.all_edges());
        ASSERT_TRUE(all.has_value());
        EXPECT_EQ(all->chain, gamma);
        auto own = class_member_within(g, gamma, gamma.support());
        ASSERT_TRUE(own.has_value());
        EXPECT_EQ(own->chain, gamma);
    }
}

TEST(Within, TetrahedronSmallSetsMatchBruteForce) {
    auto g = build_tetrahedron();
    for (uint64_t gm = 0; gm < 64; gm++) {
        Chain gamma{1, bits_of(gm, 6)};
        auto coset = testutil::brute_class(g, gamma.coeffs);
        for (uint64_t bm = 0; bm < 64; bm++) {
            if (std::popcount(bm) > 4) {
                continue;
            }
            BitVec b = bits_of(bm, 6);
            bool brute = std::any_of(coset.begin(), coset.end(), [&](const BitVec &c) {
                return c.is_subset_of(b);
            });
            auto m = class_member_within(g, gamma, EdgeSet(b));
            ASSERT_EQ(m.has_value(), brute);
            if (m) {
                EXPECT_TRUE(m->chain.coeffs.is_subset_of(b));
            }
        }
    }
}

TEST(Separation, MonotoneOnTetrahedron) {
    auto g = build_tetrahedron();
    for (uint64_t gm = 0; gm < 64; gm++) {
        Chain gamma{1, bits_of(gm, 6)};
        for (uint64_t xm = 0; xm < 64; xm++) {
            if (!is_gamma_separating(g, gamma, EdgeSet(bits_of(xm, 6)))) {
                continue;
            }
            for (uint64_t ym = xm; ym < 64; ym = (ym + 1) | xm) {
                ASSERT_TRUE(is_gamma_separating(g, gamma, EdgeSet(bits_of(ym, 6))));
            }
        }
    }
}

namespace {

// Edges at vertex v.
BitVec star(const PolygonalComplex &g, uint32_t v) {
    BitVec s(g.num_edges());
    for (uint32_t e : g.vertex_edges(v)) {
        s.set(e);
    }
    return s;
}

bool copath_apart(const PolygonalComplex &g, const BitVec &x, const BitVec &y) {
    for (uint32_t f = 0; f < g.num_faces(); f++) {
        bool hx = false, hy = false;
        for (uint32_t e : g.face_edges(f)) {
            hx = hx || x[e];
            hy = hy || y[e];
        }
        if (hx && hy) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(Separation, SplitSeparators) {
    // Two copath-apart sets whose union separates: for every class member,
    // one of the two sets meets both gamma and that member.
    size_t cases = 0;
    auto check = [&](const PolygonalComplex &g, const BitVec &x, const BitVec &y, const BitVec &gamma) {
        if (!copath_apart(g, x, y) || !testutil::brute_separates(g, gamma, x | y)) {
            return;
        }
        for (const auto &c : testutil::brute_class(g, gamma)) {
            bool via_x = x.intersects(gamma) && x.intersects(c);
            bool via_y = y.intersects(gamma) && y.intersects(c);
            EXPECT_TRUE(via_x || via_y);
            cases++;
        }
    };
    auto t = build_tetrahedron();
    for (uint64_t gm = 1; gm < 64; gm++) {
        for (uint64_t xm = 1; xm < 64; xm++) {
            for (uint64_t ym = 1; ym < 64; ym++) {
                if (!(xm & ym)) {
                    check(t, bits_of(xm, 6), bits_of(ym, 6), bits_of(gm, 6));
                }
            }
        }
    }
    auto g = build_cube(1);
    std::mt19937_64 rng(12);
    for (uint32_t v = 0; v < g.num_vertices(); v++) {
        for (uint32_t w = v + 1; w < g.num_vertices(); w++) {
            for (int k = 0; k < 200; k++) {
                check(g, star(g, v), star(g, w), testutil::random_bits(12, rng));
            }
        }
    }
    EXPECT_GT(cases, 0u);
}

TEST(ConnectedSeparator, Examples) {
    auto g = build_cube(2);
    std::mt19937_64 rng(9);
    auto d1 = boundary_matrices(g).d1;
    size_t checked = 0;
    for (int k = 0; k < 100; k++) {
        auto path = testutil::random_path(g, rng);
        Chain gamma = Chain::from_path(g.num_edges(), path);
        BitVec ends = d1.apply(gamma.coeffs);
        if (ends.none()) {
            continue;
        }
        // The star of an end vertex separates; add scattered clutter.
        BitVec x = star(g, uint32_t(ends.first_set()));
        BitVec clutter = testutil::random_bits(g.num_edges(), rng, 0.05);
        clutter.and_not(gamma.coeffs);
        x |= clutter;
        ASSERT_TRUE(is_gamma_separating(g, gamma, EdgeSet(x)));
        EdgeSet r = reduce_to_connected_separator(g, gamma, EdgeSet(x));
        EXPECT_EQ(copath_components(g, r).size(), 1u);
        EXPECT_TRUE(is_gamma_separating(g, gamma, r));
        EXPECT_TRUE(r.mask().is_subset_of(x));
        checked++;
    }
    EXPECT_GT(checked, 50u);
    Chain gamma = Chain::from_path(g.num_edges(), {0});
    EXPECT_THROW(reduce_to_connected_separator(g, gamma, g.no_edges()), PreconditionError);
}

TEST(ConnectedSeparator, TetrahedronPicksTheSeparatingPart) {
    auto g = build_tetrahedron();
    DistanceTable dt(g, Metric::Copath);
    for (uint64_t gm = 1; gm < 64; gm++) {
        Chain gamma{1, bits_of(gm, 6)};
        for (uint64_t xm = 1; xm < 64; xm++) {
            EdgeSet x(bits_of(xm, 6));
            if (!is_gamma_separating(g, gamma, x)) {
                continue;
            }
            EdgeSet r = reduce_to_connected_separator(g, gamma, x);
            ASSERT_EQ(copath_components(g, r).size(), 1u);
            ASSERT_TRUE(testutil::brute_separates(g, gamma.coeffs, r.mask()));
            if (copath_components(g, x).size() == 1) {
                EXPECT_EQ(r, x);
            }
        }
    }
}

TEST(SimplyConnected, Examples) {
    for (size_t n = 3; n <= 5; n++) {
        auto t = build_torus(n);
        EXPECT_FALSE(r_simply_connected(t, uint32_t(n)).holds) << n;
    }
    EXPECT_TRUE(r_simply_connected(build_cube(4), 1).holds);
    // Radius 0 selects no faces anywhere.
    EXPECT_TRUE(r_simply_connected(build_torus(3), 0).holds);
    auto sc = r_simply_connected(build_torus(4), 3);
    EXPECT_FALSE(sc.holds);
    ASSERT_TRUE(sc.witness.has_value());
    EXPECT_GT(sc.witness_report.h1 + sc.witness_report.ch1, 0u);
}

TEST(Detour, CubeThreeRadiusOne) {
    auto g = build_cube(3);
    DistanceTable dt(g, Metric::Copath);
    auto far = testutil::floyd_distances(g, false);
    size_t found = 0;
    for (uint32_t x0 = 0; x0 < g.num_edges(); x0 += 5) {
        // Endpoints as far apart as possible.
        uint32_t e = 0, f = 0;
        for (uint32_t a = 0; a < g.num_edges(); a++) {
            for (uint32_t b = 0; b < g.num_edges(); b++) {
                if (dt(x0, a) >= 3 && dt(x0, b) >= 3 && far[a][b] > far[e][f]) {
                    e = a;
                    f = b;
                }
            }
        }
        auto res = detour_path(g, shortest_path(g, e, f), x0, 1);
        ASSERT_TRUE(res.member.has_value());
        EXPECT_FALSE(res.member->chain.support().intersects(res.blocked));
        found++;
    }
    EXPECT_GT(found, 0u);
}

TEST(Detour, TorusSmallRadius) {
    auto g = build_torus(5);
    std::mt19937_64 rng(6);
    DistanceTable dt(g, Metric::Copath);
    size_t found = 0;
    for (int k = 0; k < 200; k++) {
        auto path = testutil::random_path(g, rng);
        uint32_t x0 = uint32_t(rng() % g.num_edges());
        if (dt(x0, path.front()) < 2 || dt(x0, path.back()) < 2) {
            continue;
        }
        auto res = detour_path(g, path, x0, 0);
        ASSERT_TRUE(res.member.has_value());
        found++;
    }
    EXPECT_GT(found, 0u);
}

TEST(Detour, Preconditions) {
    auto g = build_cube(3);
    auto path = shortest_path(g, 0, 50);
    EXPECT_THROW(detour_path(g, path, path.front(), 1), PreconditionError);
    EXPECT_THROW(detour_path(g, {}, 0, 1), PreconditionError);
    EXPECT_THROW(detour_path(g, {0, 999}, 0, 1), PreconditionError);
    // A torus ball large enough to wrap around is not simply connected.
    auto t = build_torus(4);
    EXPECT_THROW(detour_path(t, shortest_path(t, 0, 1), 20, 2), PreconditionError);
}

TEST(Detour, EndpointsJustOutsideBallCanBeBlocked) {
    // With endpoints only required to sit outside the ball, a big ball on
    // cube-3 can cut the surface and block every detour.
    auto g = build_cube(3);
    DistanceTable dt(g, Metric::Copath);
    const uint32_t r = 6;
    const uint32_t n = uint32_t(g.num_edges());
    bool blocked = false;
    for (uint32_t x0 = 0; x0 < n && !blocked; x0++) {
        if (!locally_simply_connected(g, x0, r + 1)) {
            continue;
        }
        for (uint32_t e = 0; e < n && !blocked; e++) {
            if (dt(x0, e) != r + 1) {
                continue;
            }
            for (uint32_t f = 0; f < n && !blocked; f++) {
                if (dt(x0, f) <= r) {
                    continue;
                }
                auto path = shortest_path(g, e, f);
                auto res = detour_path(g, path, x0, r, KEdgeRule::FaceEdges, DetourEndpoints::OutsideBall);
                if (!res.member) {
                    blocked = true;
                    EXPECT_THROW(detour_path(g, path, x0, r), PreconditionError);
                }
            }
        }
    }
    EXPECT_TRUE(blocked);
}

TEST(ConnectedBoundary, Examples) {
    auto g = build_cube(2);
    for (uint32_t e = 0; e < g.num_edges(); e++) {
        for (uint32_t r = 0; r <= 2; r++) {
            auto c = connected_boundary_check(g, e, r);
            EXPECT_EQ(c.status, CheckStatus::Holds) << e << " " << r;
            if (r == 0) {
                EXPECT_TRUE(c.boundary.empty());
            }
        }
    }
    // The whole torus has H1 != 0.
    auto t = build_torus(4);
    auto c = connected_boundary_check(t, 0, diameter(t, Metric::Copath));
    EXPECT_EQ(c.status, CheckStatus::PreconditionFailed);
}

TEST(ConnectedBoundary, BoundaryIsParityOfFaces) {
    auto g = build_cube(3);
    for (uint32_t e = 0; e < g.num_edges(); e += 11) {
        for (uint32_t r = 1; r <= 4; r++) {
            auto k = subcomplex_K(g, e, r);
            auto c = connected_boundary_check(g, e, r);
            if (c.status == CheckStatus::PreconditionFailed) {
                continue;
            }
            EXPECT_EQ(c.boundary.mask(), boundary_matrices(g).d2.apply(k.parent_faces));
            if (c.status == CheckStatus::Holds && !c.boundary.empty()) {
                EXPECT_EQ(path_components(g, c.boundary).size(), 1u);
            }
        }
    }
}

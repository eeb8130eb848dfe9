// Copyright 2026 The hyperwit Authors
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


#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "core/error.hpp"
#include "core/locc.hpp"
#include "core/random_hypergraph.hpp"

namespace hyperwit {
namespace {

TEST(Rules, ZMeasureMatchesProjection) {
    std::mt19937_64 rng(23);
    RandomHypergraphOptions opts;
    opts.allow_singletons = true;
    for (int t = 0; t < 60; ++t) {
        int n = 3 + t % 6;
        auto h = random_connected_hypergraph(rng, n, opts);
        for (int v = 1; v <= n; ++v) {
            for (int outcome : {0, 1}) {
                auto g = z_measure(h, v, outcome);
                auto projected = project_qubit(build_state(h), v, outcome);
                auto ex = extract_hypergraph(projected);
                EXPECT_EQ(g, ex.graph) << h.str() << " v=" << v << " m=" << outcome;
            }
        }
    }
}

TEST(Rules, ZMeasureKeepsLabels) {
    auto h = Hypergraph::parse("n=4; edges=[[1,2],[2,3,4]]");
    EXPECT_EQ(z_measure_keep(h, 2, 0).str(), "n=4; edges=[]");
    EXPECT_EQ(z_measure_keep(h, 2, 1).str(), "n=4; edges=[[1],[3,4]]");
    EXPECT_EQ(z_measure(h, 2, 1).str(), "n=3; edges=[[1],[2,3]]");
}

TEST(Rules, PauliXMatchesGate) {
    std::mt19937_64 rng(29);
    RandomHypergraphOptions opts;
    opts.allow_singletons = true;
    for (int t = 0; t < 60; ++t) {
        int n = 2 + t % 6;
        auto h = random_connected_hypergraph(rng, n, opts);
        for (int i = 1; i <= n; ++i) {
            auto r = pauli_x_toggle(h, i);
            auto ex = extract_hypergraph(apply_x(build_state(h), i));
            EXPECT_EQ(r.graph, ex.graph) << h.str() << " X" << i;
            EXPECT_EQ(r.phase, ex.global_phase) << h.str() << " X" << i;
        }
    }
}

TEST(Rules, PauliZAndNonCrossing) {
    auto h = Hypergraph::parse("n=4; edges=[[1,2],[2,3],[3,4]]");
    EXPECT_EQ(pauli_z(h, 4).str(), "n=4; edges=[[1,2],[2,3],[3,4],[4]]");
    auto bp = Bipartition::from_vertices(4, {1, 2});
    EXPECT_EQ(remove_non_crossing(h, bp).str(), "n=4; edges=[[2,3]]");
    EXPECT_EQ(remove_non_crossing(h, bp, mask_of({1, 2}, 4)).str(), "n=4; edges=[[1,2],[2,3]]");
}

TEST(Reduce, FiveQubitWorkedExample) {
    auto h = Hypergraph::parse("n=5; edges=[[1,2],[3,4],[3,4,5],[2,3,4,5]]");
    auto cert = reduce(h, Bipartition::from_vertices(5, {1, 2, 3}));
    EXPECT_TRUE(cert.validated);
    EXPECT_EQ(cert.kappa, 4);
    EXPECT_EQ(cert.first_edge, mask_of({2, 3, 4, 5}, 5));
    EXPECT_EQ(cert.bound, Rational(1, 4));
    EXPECT_EQ(cert.leaf_count, 4u);
    ASSERT_TRUE(cert.measured_EAB.has_value());
    EXPECT_GE(*cert.measured_EAB, 0.25 - 1e-9);
    // Outcome 0 on qubit 2 leaves the 2-edge {3,4}; outcome 1 leaves {3,4,5}.
    ASSERT_EQ(cert.branches.size(), 4u);
    std::vector<VertexMask> leaves;
    for (const auto &b : cert.branches) {
        EXPECT_EQ(popcount(b.final_edge), b.kappa_prime);
        leaves.push_back(b.final_edge);
    }
    VertexMask e34 = mask_of({3, 4}, 5), e345 = mask_of({3, 4, 5}, 5);
    EXPECT_EQ(leaves, (std::vector<VertexMask>{e34, e345, e34, e345}));
    EXPECT_EQ(cert.kappa_prime_worst, 3);
    // The first branch starts by measuring the vertex outside the edge.
    const auto &first = cert.branches.front().steps;
    ASSERT_GE(first.size(), 2u);
    EXPECT_EQ(first[0].kind, StepKind::SelectEdge);
    EXPECT_EQ(first[1].kind, StepKind::ZMeasure);
    EXPECT_EQ(first[1].qubit, 1);
}

TEST(Reduce, AlternativeReadingGivesOneEighth) {
    auto h = Hypergraph::parse("n=5; edges=[[3,4],[1,2,4,5]]");
    auto cert = reduce(h, Bipartition::from_vertices(5, {1, 2, 3}));
    EXPECT_TRUE(cert.validated);
    EXPECT_EQ(cert.bound, Rational(1, 8));
}

TEST(Reduce, RandomCertificatesValidate) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 40; ++t) {
        int n = 3 + t % 4;
        auto h = random_connected_hypergraph(rng, n);
        for (const auto &bp : all_bipartitions(n)) {
            auto cert = reduce(h, bp);
            EXPECT_TRUE(cert.validated) << h.str() << " " << bp.str();
            EXPECT_TRUE(cert.bound_holds) << h.str() << " " << bp.str();
            EXPECT_GE(cert.kappa_prime_worst, 2);
            EXPECT_LE(cert.kappa_prime_worst, h.k_max());
            EXPECT_GE(cert.bound, Rational(1, pow2(h.k_max() - 1)));
        }
    }
}

TEST(Reduce, WorstBranchOnlyAboveTreeCap) {
    auto h = build_family(Family::AllGeNminus1, 6);
    ReductionOptions opts;
    opts.tree_cap = 5;
    auto cert = reduce(h, Bipartition::from_vertices(6, {1, 2, 3}), opts);
    EXPECT_FALSE(cert.full_tree);
    EXPECT_EQ(cert.branches.size(), 1u);
    EXPECT_TRUE(cert.validated);
}

TEST(Reduce, RejectsDisconnected) {
    auto h = Hypergraph::parse("n=4; edges=[[1,2],[3,4]]");
    EXPECT_THROW(reduce(h, Bipartition::from_vertices(4, {1, 3})), PreconditionFailed);
}

}  // namespace
}  // namespace hyperwit

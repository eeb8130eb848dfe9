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


#include <gtest/gtest.h>

#include "core/error.hpp"
#include "core/hypergraph.hpp"

namespace hyperwit {
namespace {

TEST(Hypergraph, ParseCanonicalizesOrderAndDuplicates) {
    auto h = Hypergraph::parse("n=4; edges=[[4,3],[2,1],[1,2,3],[2,1]]");
    EXPECT_EQ(h.str(), "n=4; edges=[[1,2,3],[3,4]]");
    EXPECT_EQ(h.num_edges(), 2u);
    EXPECT_EQ(h.k_max(), 3);
}

TEST(Hypergraph, RoundTripThroughText) {
    auto h = Hypergraph::canonicalize({{2, 5}, {1}, {1, 3, 4}}, 5);
    EXPECT_EQ(Hypergraph::parse(h.str()), h);
}

TEST(Hypergraph, LexicographicOrder) {
    auto h = Hypergraph::canonicalize({{2, 3}, {1, 3}, {1, 2, 3}, {1, 2}}, 3);
    EXPECT_EQ(h.str(), "n=3; edges=[[1,2],[1,2,3],[1,3],[2,3]]");
    EXPECT_TRUE(lex_less(mask_of({1, 2}, 3), mask_of({1, 2, 3}, 3)));
    EXPECT_FALSE(lex_less(mask_of({2}, 3), mask_of({1, 3}, 3)));
}

TEST(Hypergraph, RejectsBadInput) {
    EXPECT_THROW(Hypergraph::parse("n=3; edges=[[1,4]]"), InvalidArgument);
    EXPECT_THROW(Hypergraph::parse("n=3; edges=[[]]"), InvalidArgument);
    EXPECT_THROW(Hypergraph::parse("edges=[[1,2]]"), InvalidArgument);
    EXPECT_THROW(Hypergraph::parse("n=3; edges=[[1,"), InvalidArgument);
    EXPECT_THROW(Hypergraph(0), InvalidArgument);
    EXPECT_THROW(Hypergraph(kMaxVertices + 1), InvalidArgument);
}

TEST(Hypergraph, ToggleIsAnInvolution) {
    auto h = build_family(Family::SingleMaxEdge, 3);
    VertexMask e = mask_of({1, 2}, 3);
    auto once = h.toggled(e);
    EXPECT_TRUE(once.has_edge(e));
    EXPECT_EQ(once.toggled(e), h);
}

TEST(Hypergraph, Connectivity) {
    EXPECT_TRUE(Hypergraph::parse("n=4; edges=[[1,2],[2,3,4]]").is_connected());
    EXPECT_FALSE(Hypergraph::parse("n=4; edges=[[1,2],[3,4]]").is_connected());
    // Singletons do not connect anything.
    EXPECT_FALSE(Hypergraph::parse("n=2; edges=[[1],[2]]").is_connected());
}

TEST(Hypergraph, Relabel) {
    auto h = Hypergraph::parse("n=3; edges=[[1,2]]");
    EXPECT_EQ(h.relabeled({3, 2, 1}).str(), "n=3; edges=[[2,3]]");
    EXPECT_THROW(h.relabeled({1, 1, 2}), InvalidArgument);
}

TEST(Hypergraph, Families) {
    EXPECT_EQ(build_family(Family::SingleMaxEdge, 3).str(), "n=3; edges=[[1,2,3]]");
    EXPECT_EQ(build_family(Family::AllNminus1, 3).str(), "n=3; edges=[[1,2],[1,3],[2,3]]");
    EXPECT_EQ(build_family(Family::AllGeNminus1, 3).str(),
              "n=3; edges=[[1,2],[1,2,3],[1,3],[2,3]]");
    EXPECT_EQ(build_family(Family::AllNminus1, 6).num_edges(), 6u);
    EXPECT_THROW(build_family(Family::AllNminus1, 2), InvalidArgument);
    EXPECT_EQ(parse_family("all-ge-n-1"), Family::AllGeNminus1);
    EXPECT_THROW(parse_family("ghz"), InvalidArgument);
}

TEST(Bipartition, CanonicalAndEnumerated) {
    Bipartition b(4, mask_of({3, 4}, 4));
    EXPECT_EQ(b.str(), "1,2|3,4");
    EXPECT_EQ(b, Bipartition::from_vertices(4, {1, 2}));
    EXPECT_TRUE(b.crosses(mask_of({2, 3}, 4)));
    EXPECT_FALSE(b.crosses(mask_of({1, 2}, 4)));
    EXPECT_THROW(Bipartition(3, 0b111), InvalidArgument);

    for (int n = 2; n <= 8; ++n) {
        auto all = all_bipartitions(n);
        ASSERT_EQ(all.size(), (std::size_t{1} << (n - 1)) - 1);
        for (std::size_t i = 1; i < all.size(); ++i) {
            EXPECT_TRUE(all[i - 1] < all[i]);
        }
    }
    EXPECT_EQ(all_bipartitions(3).front().str(), "1|2,3");
}

TEST(Hypergraph, CrossingAndIncident) {
    auto h = Hypergraph::parse("n=4; edges=[[1,2],[2,3,4],[3,4]]");
    auto bp = Bipartition::from_vertices(4, {1, 2});
    EXPECT_EQ(h.crossing_edges(bp), std::vector<VertexMask>{mask_of({2, 3, 4}, 4)});
    EXPECT_EQ(h.incident_edges(2).size(), 2u);
}

}  // namespace
}  // namespace hyperwit

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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hyperwit {

/// Set of vertices as a bitmask: bit (i - 1) is vertex i.
using VertexMask = std::uint64_t;

/// Largest vertex count a Hypergraph can hold.
inline constexpr int kMaxVertices = 62;

int popcount(VertexMask m);
std::vector<int> vertices_of(VertexMask m);
/// Validates indices against 1..n and rejects empty lists.
VertexMask mask_of(const std::vector<int> &vertices, int n);
/// Lexicographic order of the sorted vertex lists.
bool lex_less(VertexMask a, VertexMask b);

enum class Family { SingleMaxEdge, AllNminus1, AllGeNminus1 };

/// "single-max", "all-n-1", "all-ge-n-1".
std::string family_name(Family f);
Family parse_family(std::string_view name);
/// Smallest n for which build_family accepts the family.
int family_min_n(Family f);

/// Unordered split AB of {1..n}, stored with vertex 1 in part A.
class Bipartition {
   public:
    /// Canonicalizes: if vertex 1 is not in `part_a`, the complement is stored.
    Bipartition(int n, VertexMask part_a);
    static Bipartition from_vertices(int n, const std::vector<int> &part_a);

    int num_vertices() const noexcept {
        return n_;
    }
    VertexMask part_a() const noexcept {
        return a_;
    }
    VertexMask part_b() const noexcept {
        return full() & ~a_;
    }
    std::vector<int> a_vertices() const {
        return vertices_of(a_);
    }
    std::vector<int> b_vertices() const {
        return vertices_of(part_b());
    }
    bool crosses(VertexMask edge) const noexcept {
        return (edge & a_) != 0 && (edge & part_b()) != 0;
    }
    /// "1,2|3,4"
    std::string str() const;

    friend bool operator==(const Bipartition &, const Bipartition &) = default;
    friend bool operator<(const Bipartition &l, const Bipartition &r) {
        return lex_less(l.a_, r.a_);
    }

   private:
    VertexMask full() const noexcept {
        return n_ >= 64 ? ~VertexMask{0} : ((VertexMask{1} << n_) - 1);
    }
    int n_;
    VertexMask a_;
};

/// All 2^(n-1) - 1 inequivalent bipartitions, ordered lexicographically by part A.
std::vector<Bipartition> all_bipartitions(int n);

/// Hypergraph H = (V, E) on vertices 1..n in canonical form.
///
/// Edges are sets; adding an edge that is already present removes it, because
/// the controlled-Z gate it stands for squares to the identity. Cardinality-1
/// edges are allowed (single-qubit Z phases), empty edges are not.
class Hypergraph {
   public:
    explicit Hypergraph(int n = 1);

    /// Builds the canonical form of `raw_edges` with XOR semantics.
    static Hypergraph canonicalize(const std::vector<std::vector<int>> &raw_edges, int n);
    static Hypergraph from_masks(int n, const std::vector<VertexMask> &masks);
    /// Parses `n=<int>; edges=[[i,j,...],...]`.
    static Hypergraph parse(std::string_view text);

    int num_vertices() const noexcept {
        return n_;
    }
    std::size_t num_edges() const noexcept {
        return edges_.size();
    }
    /// Canonical order: lexicographic on the sorted vertex lists.
    const std::vector<VertexMask> &edge_masks() const noexcept {
        return edges_;
    }
    std::vector<std::vector<int>> edges() const;
    bool has_edge(VertexMask e) const;

    /// Returns a copy with `e` added if absent and removed if present.
    Hypergraph toggled(VertexMask e) const;
    Hypergraph without_edge(VertexMask e) const;
    /// Relabels vertex i as perm[i - 1] (perm is a permutation of 1..n).
    Hypergraph relabeled(const std::vector<int> &perm) const;

    /// Largest edge cardinality, 0 without edges.
    int k_max() const;
    /// Vertices linked by edges of cardinality >= 2 form one component.
    bool is_connected() const;
    std::vector<VertexMask> crossing_edges(const Bipartition &bp) const;
    /// Edges containing vertex v.
    std::vector<VertexMask> incident_edges(int v) const;

    /// `n=<int>; edges=[[...],...]`
    std::string str() const;

    friend bool operator==(const Hypergraph &, const Hypergraph &) = default;

   private:
    void toggle_in_place(VertexMask e);
    void sort_edges();

    int n_;
    std::vector<VertexMask> edges_;
};

/// G_n, H_n^{n-1} and H_n^{n-1,n}.
Hypergraph build_family(Family family, int n);

}  // namespace hyperwit

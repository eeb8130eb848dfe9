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

#include "core/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "core/error.hpp"

namespace hyperwit {

int popcount(VertexMask m) {
    return std::popcount(m);
}

std::vector<int> vertices_of(VertexMask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

VertexMask mask_of(const std::vector<int> &vertices, int n) {
    if (vertices.empty()) {
        throw InvalidArgument("empty hyperedge");
    }
    VertexMask m = 0;
    for (int v : vertices) {
        if (v < 1 || v > n) {
            throw InvalidArgument("vertex index " + std::to_string(v) + " outside 1.." +
                                  std::to_string(n));
        }
        m |= VertexMask{1} << (v - 1);
    }
    return m;
}

bool lex_less(VertexMask a, VertexMask b) {
    // Walk both sorted vertex lists in step.
    while (a && b) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb) {
            return va < vb;
        }
        a &= a - 1;
        b &= b - 1;
    }
    return b != 0;
}

std::string family_name(Family f) {
    switch (f) {
        case Family::SingleMaxEdge:
            return "single-max";
        case Family::AllNminus1:
            return "all-n-1";
        case Family::AllGeNminus1:
            return "all-ge-n-1";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    if (name == "single-max") return Family::SingleMaxEdge;
    if (name == "all-n-1") return Family::AllNminus1;
    if (name == "all-ge-n-1") return Family::AllGeNminus1;
    throw InvalidArgument("unknown family '" + std::string(name) +
                          "' (expected single-max, all-n-1 or all-ge-n-1)");
}

int family_min_n(Family f) {
    return f == Family::SingleMaxEdge ? 2 : 3;
}

Bipartition::Bipartition(int n, VertexMask part_a) : n_(n), a_(part_a) {
    if (n < 2 || n > kMaxVertices) {
        throw InvalidArgument("bipartition needs 2 <= n <= " + std::to_string(kMaxVertices));
    }
    if ((a_ & ~full()) != 0) {
        throw InvalidArgument("bipartition part outside 1..n");
    }
    if ((a_ & 1) == 0) {
        a_ = full() & ~a_;
    }
    if (a_ == full() || a_ == 0) {
        throw InvalidArgument("bipartition parts must both be nonempty");
    }
}

Bipartition Bipartition::from_vertices(int n, const std::vector<int> &part_a) {
    return Bipartition(n, mask_of(part_a, n));
}

std::string Bipartition::str() const {
    std::ostringstream os;
    auto put = [&os](const std::vector<int> &vs) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
            os << (i ? "," : "") << vs[i];
        }
    };
    put(a_vertices());
    os << "|";
    put(b_vertices());
    return os.str();
}

std::vector<Bipartition> all_bipartitions(int n) {
    std::vector<Bipartition> out;
    if (n < 2) {
        return out;
    }
    VertexMask rest_count = VertexMask{1} << (n - 1);
    out.reserve(rest_count - 1);
    for (VertexMask m = 0; m + 1 < rest_count; ++m) {
        out.emplace_back(n, 1 | (m << 1));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Hypergraph::Hypergraph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices) {
        throw InvalidArgument("vertex count must be in 1.." + std::to_string(kMaxVertices) +
                              ", got " + std::to_string(n));
    }
}

Hypergraph Hypergraph::canonicalize(const std::vector<std::vector<int>> &raw_edges, int n) {
    Hypergraph h(n);
    for (const auto &e : raw_edges) {
        h.toggle_in_place(mask_of(e, n));
    }
    h.sort_edges();
    return h;
}

Hypergraph Hypergraph::from_masks(int n, const std::vector<VertexMask> &masks) {
    Hypergraph h(n);
    VertexMask full = (VertexMask{1} << n) - 1;
    for (VertexMask m : masks) {
        if (m == 0 || (m & ~full) != 0) {
            throw InvalidArgument("edge mask empty or outside 1..n");
        }
        h.toggle_in_place(m);
    }
    h.sort_edges();
    return h;
}

Hypergraph Hypergraph::parse(std::string_view text) {
    std::string s(text);
    auto n_pos = s.find("n=");
    auto e_pos = s.find("edges=");
    if (n_pos == std::string::npos || e_pos == std::string::npos) {
        throw InvalidArgument("expected 'n=<int>; edges=[[...],...]', got '" + s + "'");
    }
    int n = 0;
    try {
        n = std::stoi(s.substr(n_pos + 2));
    } catch (const std::exception &) {
        throw InvalidArgument("cannot parse vertex count in '" + s + "'");
    }
    std::vector<std::vector<int>> raw;
    try {
        raw = nlohmann::json::parse(s.substr(e_pos + 6)).get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception &ex) {
        throw InvalidArgument(std::string("cannot parse edge list: ") + ex.what());
    }
    return canonicalize(raw, n);
}

std::vector<std::vector<int>> Hypergraph::edges() const {
    std::vector<std::vector<int>> out;
    out.reserve(edges_.size());
    for (VertexMask m : edges_) {
        out.push_back(vertices_of(m));
    }
    return out;
}

bool Hypergraph::has_edge(VertexMask e) const {
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

Hypergraph Hypergraph::toggled(VertexMask e) const {
    VertexMask full = (VertexMask{1} << n_) - 1;
    if (e == 0 || (e & ~full) != 0) {
        throw InvalidArgument("edge mask empty or outside 1..n");
    }
    Hypergraph h = *this;
    h.toggle_in_place(e);
    h.sort_edges();
    return h;
}

Hypergraph Hypergraph::without_edge(VertexMask e) const {
    Hypergraph h = *this;
    h.edges_.erase(std::remove(h.edges_.begin(), h.edges_.end(), e), h.edges_.end());
    return h;
}

Hypergraph Hypergraph::relabeled(const std::vector<int> &perm) const {
    if (static_cast<int>(perm.size()) != n_) {
        throw InvalidArgument("permutation length does not match vertex count");
    }
    std::vector<int> check(perm);
    std::sort(check.begin(), check.end());
    for (int i = 0; i < n_; ++i) {
        if (check[i] != i + 1) {
            throw InvalidArgument("not a permutation of 1..n");
        }
    }
    std::vector<VertexMask> out;
    out.reserve(edges_.size());
    for (VertexMask m : edges_) {
        VertexMask r = 0;
        for (int v : vertices_of(m)) {
            r |= VertexMask{1} << (perm[v - 1] - 1);
        }
        out.push_back(r);
    }
    return from_masks(n_, out);
}

int Hypergraph::k_max() const {
    int k = 0;
    for (VertexMask m : edges_) {
        k = std::max(k, popcount(m));
    }
    return k;
}

bool Hypergraph::is_connected() const {
    // Union-find over vertices 0..n-1.
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };
    for (VertexMask m : edges_) {
        if (popcount(m) < 2) {
            continue;
        }
        int root = find(std::countr_zero(m));
        for (VertexMask rest = m & (m - 1); rest; rest &= rest - 1) {
            parent[find(std::countr_zero(rest))] = root;
        }
    }
    int r0 = find(0);
    for (int v = 1; v < n_; ++v) {
        if (find(v) != r0) {
            return false;
        }
    }
    return true;
}

std::vector<VertexMask> Hypergraph::crossing_edges(const Bipartition &bp) const {
    if (bp.num_vertices() != n_) {
        throw InvalidArgument("bipartition vertex count does not match hypergraph");
    }
    std::vector<VertexMask> out;
    for (VertexMask m : edges_) {
        if (bp.crosses(m)) {
            out.push_back(m);
        }
    }
    return out;
}

std::vector<VertexMask> Hypergraph::incident_edges(int v) const {
    std::vector<VertexMask> out;
    VertexMask bit = VertexMask{1} << (v - 1);
    for (VertexMask m : edges_) {
        if (m & bit) {
            out.push_back(m);
        }
    }
    return out;
}

std::string Hypergraph::str() const {
    std::ostringstream os;
    os << "n=" << n_ << "; edges=[";
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        os << (i ? "," : "") << "[";
        auto vs = vertices_of(edges_[i]);
        for (std::size_t j = 0; j < vs.size(); ++j) {
            os << (j ? "," : "") << vs[j];
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

void Hypergraph::toggle_in_place(VertexMask e) {
    auto it = std::find(edges_.begin(), edges_.end(), e);
    if (it == edges_.end()) {
        edges_.push_back(e);
    } else {
        edges_.erase(it);
    }
}

void Hypergraph::sort_edges() {
    std::sort(edges_.begin(), edges_.end(), lex_less);
}

Hypergraph build_family(Family family, int n) {
    if (n < family_min_n(family)) {
        throw InvalidArgument(family_name(family) + " needs n >= " +
                              std::to_string(family_min_n(family)) + ", got " + std::to_string(n));
    }
    if (n > kMaxVertices) {
        throw InvalidArgument("n too large for a hypergraph");
    }
    VertexMask full = (VertexMask{1} << n) - 1;
    std::vector<VertexMask> edges;
    if (family != Family::SingleMaxEdge) {
        for (int v = 0; v < n; ++v) {
            edges.push_back(full & ~(VertexMask{1} << v));
        }
    }
    if (family != Family::AllNminus1) {
        edges.push_back(full);
    }
    return Hypergraph::from_masks(n, edges);
}

}  // namespace hyperwit

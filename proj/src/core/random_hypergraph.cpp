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

#include "core/random_hypergraph.hpp"

#include "core/error.hpp"

namespace hyperwit {

Hypergraph random_connected_hypergraph(std::mt19937_64 &rng, int n,
                                       const RandomHypergraphOptions &options) {
    if (n < 2 || n > kMaxVertices) {
        throw InvalidArgument("random hypergraphs need 2 <= n <= " + std::to_string(kMaxVertices));
    }
    int max_edges = options.max_edges > 0 ? options.max_edges : 2 * n;
    if (options.min_edges < 1 || options.min_edges > max_edges) {
        throw InvalidArgument("bad edge count range");
    }
    int min_size = options.allow_singletons ? 1 : 2;
    std::uniform_int_distribution<int> count(options.min_edges, max_edges);
    std::uniform_int_distribution<int> size(min_size, n);
    // Up to a few thousand retries is plenty: 2n random edges connect n
    // vertices with high probability.
    for (int attempt = 0; attempt < 10000; ++attempt) {
        int m = count(rng);
        std::vector<VertexMask> edges;
        for (int j = 0; j < m; ++j) {
            int k = size(rng);
            // Partial Fisher-Yates over the vertex list picks k distinct vertices.
            std::vector<int> pool(n);
            for (int v = 0; v < n; ++v) {
                pool[v] = v;
            }
            VertexMask e = 0;
            for (int t = 0; t < k; ++t) {
                std::uniform_int_distribution<int> pick(t, n - 1);
                std::swap(pool[t], pool[pick(rng)]);
                e |= VertexMask{1} << pool[t];
            }
            edges.push_back(e);
        }
        Hypergraph h = Hypergraph::from_masks(n, edges);
        if (h.is_connected()) {
            return h;
        }
    }
    throw Error("could not sample a connected hypergraph");
}

}  // namespace hyperwit

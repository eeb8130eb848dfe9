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
#include <random>

#include "core/hypergraph.hpp"

namespace hyperwit {

struct RandomHypergraphOptions {
    int min_edges = 1;
    int max_edges = 0;        // 0 = 2n
    bool allow_singletons = false;
};

// Samples edge sets until the hypergraph is connected. The draw sequence is a
// pure function of the engine state, so a fixed seed fixes the output.
Hypergraph random_connected_hypergraph(std::mt19937_64 &rng, int n,
                                       const RandomHypergraphOptions &options = {});

}  // namespace hyperwit

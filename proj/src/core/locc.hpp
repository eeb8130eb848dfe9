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


// Hypergraph rewrite rules for Z measurements, Pauli corrections and
// bipartition-local gates, and the reduction that turns a connected
// hypergraph into single-edge leaves across a chosen cut.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/entanglement.hpp"
#include "core/exact.hpp"
#include "core/hypergraph.hpp"

namespace hyperwit {

// Rules are checked against the sign-state simulation up to this size.
inline constexpr int kOracleMaxQubits = 10;

enum class StepKind { ZMeasure, PauliX, PauliZ, RemoveNonCrossing, SelectEdge };

std::string step_op_name(StepKind kind);  // "Mz", "X", "Z", ...

struct ReductionStep {
    StepKind kind;
    int qubit = 0;       // ZMeasure, PauliX, PauliZ
    int outcome = -1;    // ZMeasure only
    VertexMask edge = 0; // RemoveNonCrossing, SelectEdge
    Hypergraph after;
};

// Z measurement with the measured vertex kept as an isolated label.
Hypergraph z_measure_keep(const Hypergraph &h, int v, int outcome);

// Z measurement on the remaining n-1 vertices (labels above v shift down).
// Checked against the state simulation for n <= kOracleMaxQubits.
Hypergraph z_measure(const Hypergraph &h, int v, int outcome);

struct PauliXResult {
    Hypergraph graph;
    std::vector<VertexMask> toggled;  // e \ {i} for every e containing i
    int phase = 1;                    // -1 when {i} itself was an edge
};

PauliXResult pauli_x_toggle(const Hypergraph &h, int i);
Hypergraph pauli_z(const Hypergraph &h, int i);

// Drops every edge lying on one side of the cut, except `keep`.
Hypergraph remove_non_crossing(const Hypergraph &h, const Bipartition &bp, VertexMask keep = 0);

struct ReductionBranch {
    std::vector<ReductionStep> steps;
    VertexMask final_edge = 0;
    int kappa_prime = 0;
};

struct ReductionOptions {
    int oracle_cap = kOracleMaxQubits;  // validate every step up to this n
    int tree_cap = 10;                  // keep every branch up to this n
    bool numeric_check = true;          // compare against E^{AB} by SVD
};

struct ReductionCertificate {
    Bipartition bipartition{2, 1};
    VertexMask first_edge = 0;
    int kappa = 0;
    std::vector<ReductionBranch> branches;  // all leaves, or only the worst
    bool full_tree = true;
    std::uint64_t leaf_count = 0;
    std::uint64_t total_steps = 0;
    int kappa_prime_worst = 0;
    Rational bound;  // 1 / 2^{kappa' - 1}
    bool validated = false;
    std::optional<double> measured_EAB;
    bool bound_holds = true;
    std::vector<std::string> warnings;
};

ReductionCertificate reduce(const Hypergraph &h, const Bipartition &bp,
                            const ReductionOptions &options = {});

}  // namespace hyperwit

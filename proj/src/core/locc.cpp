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

#include "core/locc.hpp"

#include <algorithm>
#include <bit>

#include "core/error.hpp"
#include "core/sign_state.hpp"

namespace hyperwit {

namespace {

VertexMask bit_of(int v) {
    return VertexMask{1} << (v - 1);
}

void check_vertex(const Hypergraph &h, int v) {
    if (v < 1 || v > h.num_vertices()) {
        throw InvalidArgument("vertex " + std::to_string(v) + " outside 1.." +
                              std::to_string(h.num_vertices()));
    }
}

// Largest cardinality first, lexicographically smallest among equals.
VertexMask pick_largest(const std::vector<VertexMask> &edges) {
    VertexMask best = edges.front();
    for (VertexMask e : edges) {
        int pe = popcount(e), pb = popcount(best);
        if (pe > pb || (pe == pb && lex_less(e, best))) {
            best = e;
        }
    }
    return best;
}

VertexMask support_of(const Hypergraph &h) {
    VertexMask s = 0;
    for (VertexMask e : h.edge_masks()) {
        s |= e;
    }
    return s;
}

class Walker {
   public:
    Walker(const Hypergraph &h, const Bipartition &bp, const ReductionOptions &opt,
           ReductionCertificate &cert)
        : bp_(bp), n_(h.num_vertices()), cert_(cert) {
        oracle_ = n_ <= opt.oracle_cap && n_ <= kMaxStateQubits;
        keep_all_ = n_ <= opt.tree_cap;
        budget_ = 10ull * static_cast<std::uint64_t>(n_) * (std::uint64_t{1} << std::min(n_, 40));
    }

    struct Path {
        Hypergraph g;
        std::optional<SignState> state;
        std::vector<ReductionStep> steps;
    };

    Path root(const Hypergraph &h) const {
        Path p{h, std::nullopt, {}};
        if (oracle_) {
            p.state = build_state(h);
        }
        return p;
    }

    bool oracle() const {
        return oracle_;
    }

    void run(Path p) {
        auto crossing = p.g.crossing_edges(bp_);
        if (crossing.empty()) {
            throw ValidationError("reduction branch lost every crossing edge: " + p.g.str());
        }
        VertexMask e = pick_largest(crossing);
        record(p, StepKind::SelectEdge, 0, -1, e);
        measure_outside(std::move(p), e);
    }

   private:
    void measure_outside(Path p, VertexMask e) {
        VertexMask live = support_of(p.g) & ~e;
        if (live == 0) {
            clean(std::move(p), e);
            return;
        }
        int v = std::countr_zero(live) + 1;
        for (int outcome = 0; outcome < 2; ++outcome) {
            Path child = p;
            measure(child, v, outcome);
            measure_outside(std::move(child), e);
        }
    }

    void measure(Path &p, int v, int outcome) {
        p.g = z_measure_keep(p.g, v, outcome);
        if (p.state) {
            p.state = insert_plus_qubit(project_qubit(*p.state, v, outcome), v);
        }
        record(p, StepKind::ZMeasure, v, outcome, 0);
    }

    void clean(Path p, VertexMask e) {
        int kappa = popcount(e);
        for (VertexMask f : p.g.edge_masks()) {
            if ((f & ~e) != 0) {
                throw ValidationError("edge outside the selected edge survived measurement: " +
                                      p.g.str());
            }
        }
        // Internal (kappa-1)-edges e \ {v} go away under X on v.
        for (;;) {
            auto edges = p.g.edge_masks();
            auto it = std::find_if(edges.begin(), edges.end(),
                                   [&](VertexMask f) { return popcount(f) == kappa - 1; });
            if (it == edges.end() || kappa < 2) {
                break;
            }
            int v = std::countr_zero(e & ~*it) + 1;
            p.g = pauli_x_toggle(p.g, v).graph;
            if (p.state) {
                p.state = apply_x(*p.state, v);
            }
            record(p, StepKind::PauliX, v, -1, 0);
        }
        const std::vector<VertexMask> singles = p.g.edge_masks();
        for (VertexMask f : singles) {
            if (popcount(f) == 1 && f != e) {
                int v = std::countr_zero(f) + 1;
                p.g = pauli_z(p.g, v);
                if (p.state) {
                    p.state = apply_z(*p.state, v);
                }
                record(p, StepKind::PauliZ, v, -1, 0);
            }
        }
        const std::vector<VertexMask> remaining = p.g.edge_masks();
        for (VertexMask f : remaining) {
            if (f != e && !bp_.crosses(f)) {
                p.g = p.g.without_edge(f);
                if (p.state) {
                    p.state = apply_ck(*p.state, f);
                }
                record(p, StepKind::RemoveNonCrossing, 0, -1, f);
            }
        }
        std::vector<VertexMask> others;
        for (VertexMask f : p.g.crossing_edges(bp_)) {
            if (f != e) {
                others.push_back(f);
            }
        }
        if (others.empty()) {
            leaf(std::move(p), e);
            return;
        }
        VertexMask f = pick_largest(others);
        record(p, StepKind::SelectEdge, 0, -1, f);
        int u = std::countr_zero(e & ~f) + 1;
        for (int outcome = 0; outcome < 2; ++outcome) {
            Path child = p;
            measure(child, u, outcome);
            run(std::move(child));
        }
    }

    void leaf(Path p, VertexMask e) {
        if (p.g.num_edges() != 1 || p.g.edge_masks().front() != e) {
            throw ValidationError("reduction leaf is not a single crossing edge: " + p.g.str());
        }
        ReductionBranch b{std::move(p.steps), e, popcount(e)};
        ++cert_.leaf_count;
        if (b.kappa_prime > cert_.kappa_prime_worst) {
            cert_.kappa_prime_worst = b.kappa_prime;
            if (!keep_all_) {
                cert_.branches.assign(1, std::move(b));
                return;
            }
        }
        if (keep_all_) {
            cert_.branches.push_back(std::move(b));
        }
    }

    void record(Path &p, StepKind kind, int qubit, int outcome, VertexMask edge) {
        if (++cert_.total_steps > budget_) {
            throw LimitExceeded("reduction step", static_cast<std::int64_t>(budget_),
                                static_cast<std::int64_t>(cert_.total_steps));
        }
        if (p.state && kind != StepKind::SelectEdge) {
            auto ex = extract_hypergraph(*p.state);
            if (ex.graph != p.g) {
                throw ValidationError("rewrite rule " + step_op_name(kind) +
                                      " disagrees with the state simulation: rule gives " +
                                      p.g.str() + ", state gives " + ex.graph.str());
            }
        }
        p.steps.push_back({kind, qubit, outcome, edge, p.g});
    }

    const Bipartition &bp_;
    int n_;
    ReductionCertificate &cert_;
    bool oracle_ = false;
    bool keep_all_ = true;
    std::uint64_t budget_ = 0;
};

}  // namespace

std::string step_op_name(StepKind kind) {
    switch (kind) {
        case StepKind::ZMeasure:
            return "Mz";
        case StepKind::PauliX:
            return "X";
        case StepKind::PauliZ:
            return "Z";
        case StepKind::RemoveNonCrossing:
            return "RemoveNonCrossing";
        case StepKind::SelectEdge:
            return "SelectEdge";
    }
    return "?";
}

Hypergraph z_measure_keep(const Hypergraph &h, int v, int outcome) {
    check_vertex(h, v);
    if (outcome != 0 && outcome != 1) {
        throw InvalidArgument("measurement outcome must be 0 or 1");
    }
    VertexMask b = bit_of(v);
    std::vector<VertexMask> out;
    for (VertexMask e : h.edge_masks()) {
        if ((e & b) == 0) {
            out.push_back(e);
        } else if (outcome == 1 && e != b) {
            out.push_back(e & ~b);  // merged by XOR; {v} itself leaves a global sign
        }
    }
    return Hypergraph::from_masks(h.num_vertices(), out);
}

Hypergraph z_measure(const Hypergraph &h, int v, int outcome) {
    int n = h.num_vertices();
    if (n < 2) {
        throw InvalidArgument("cannot measure the only vertex");
    }
    Hypergraph kept = z_measure_keep(h, v, outcome);
    VertexMask low = bit_of(v) - 1;
    std::vector<VertexMask> shifted;
    for (VertexMask e : kept.edge_masks()) {
        shifted.push_back((e & low) | ((e >> 1) & ~low));
    }
    Hypergraph out = Hypergraph::from_masks(n - 1, shifted);
    if (n <= kOracleMaxQubits) {
        auto ex = extract_hypergraph(project_qubit(build_state(h), v, outcome));
        if (ex.graph != out) {
            throw ValidationError("Z measurement rule disagrees with the state simulation: rule "
                                  "gives " + out.str() + ", state gives " + ex.graph.str());
        }
    }
    return out;
}

PauliXResult pauli_x_toggle(const Hypergraph &h, int i) {
    check_vertex(h, i);
    VertexMask b = bit_of(i);
    PauliXResult r{h, {}, 1};
    std::vector<VertexMask> masks = h.edge_masks();
    for (VertexMask e : h.edge_masks()) {
        if (e & b) {
            VertexMask rest = e & ~b;
            r.toggled.push_back(rest);
            if (rest == 0) {
                r.phase = -r.phase;
            } else {
                masks.push_back(rest);
            }
        }
    }
    r.graph = Hypergraph::from_masks(h.num_vertices(), masks);
    return r;
}

Hypergraph pauli_z(const Hypergraph &h, int i) {
    check_vertex(h, i);
    return h.toggled(bit_of(i));
}

Hypergraph remove_non_crossing(const Hypergraph &h, const Bipartition &bp, VertexMask keep) {
    if (bp.num_vertices() != h.num_vertices()) {
        throw InvalidArgument("bipartition vertex count does not match hypergraph");
    }
    std::vector<VertexMask> out;
    for (VertexMask e : h.edge_masks()) {
        if (e == keep || bp.crosses(e)) {
            out.push_back(e);
        }
    }
    return Hypergraph::from_masks(h.num_vertices(), out);
}

ReductionCertificate reduce(const Hypergraph &h, const Bipartition &bp,
                            const ReductionOptions &options) {
    if (bp.num_vertices() != h.num_vertices()) {
        throw InvalidArgument("bipartition vertex count does not match hypergraph");
    }
    if (!h.is_connected()) {
        throw PreconditionFailed("reduction needs a connected hypergraph: " + h.str());
    }
    auto crossing = h.crossing_edges(bp);
    if (crossing.empty()) {
        throw PreconditionFailed("no hyperedge crosses " + bp.str());
    }
    ReductionCertificate cert;
    cert.bipartition = bp;
    cert.first_edge = pick_largest(crossing);
    cert.kappa = popcount(cert.first_edge);

    Walker walker(h, bp, options, cert);
    walker.run(walker.root(h));

    cert.full_tree = h.num_vertices() <= options.tree_cap;
    cert.validated = walker.oracle();
    if (!cert.validated) {
        cert.warnings.push_back("rewrite steps not checked against the state simulation above " +
                                std::to_string(options.oracle_cap) + " qubits");
    }
    cert.bound = Rational(1, pow2(cert.kappa_prime_worst - 1));
    if (options.numeric_check && h.num_vertices() <= 20) {
        cert.measured_EAB = 1.0 - schmidt(build_state(h), bp).alpha();
        cert.bound_holds = *cert.measured_EAB >= to_double(cert.bound) - kSpectralTol;
    }
    return cert;
}

}  // namespace hyperwit

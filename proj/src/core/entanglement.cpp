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

#include "core/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "core/error.hpp"
#include "core/parallel.hpp"

namespace hyperwit {

namespace {

// Splits every label x into (row, col) indices: row enumerates the qubits in
// `rows` (first listed = top bit), col the remaining qubits in ascending order.
struct IndexSplit {
    std::vector<std::uint32_t> row;
    std::vector<std::uint32_t> col;
    std::size_t row_dim = 0;
    std::size_t col_dim = 0;
};

IndexSplit split_index(int n, const std::vector<int> &rows) {
    std::vector<bool> in_rows(n + 1, false);
    for (int q : rows) {
        if (q < 1 || q > n) {
            throw InvalidArgument("qubit " + std::to_string(q) + " outside 1.." + std::to_string(n));
        }
        if (in_rows[q]) {
            throw InvalidArgument("duplicate qubit in subsystem");
        }
        in_rows[q] = true;
    }
    std::vector<int> cols;
    for (int q = 1; q <= n; ++q) {
        if (!in_rows[q]) {
            cols.push_back(q);
        }
    }
    IndexSplit s;
    Label dim = Label{1} << n;
    s.row.resize(dim);
    s.col.resize(dim);
    s.row_dim = std::size_t{1} << rows.size();
    s.col_dim = std::size_t{1} << cols.size();
    for (Label x = 0; x < dim; ++x) {
        std::uint32_t r = 0;
        for (int q : rows) {
            r = (r << 1) | ((x >> (n - q)) & 1);
        }
        std::uint32_t c = 0;
        for (int q : cols) {
            c = (c << 1) | ((x >> (n - q)) & 1);
        }
        s.row[x] = r;
        s.col[x] = c;
    }
    return s;
}

void check_sweep(int n, const Limits &limits) {
    if (n > limits.sweep_cap) {
        throw LimitExceeded("sweep", limits.sweep_cap, n);
    }
}

Rational row_norm(const IntMatrix &m, Eigen::Index row, std::int64_t scale) {
    std::int64_t s = 0;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        s += std::abs(m(row, c));
    }
    return Rational(s, scale);
}

}  // namespace

SchmidtSpectrum schmidt(const SignState &state, const Bipartition &bp) {
    int n = state.num_qubits();
    if (bp.num_vertices() != n) {
        throw InvalidArgument("bipartition vertex count does not match state");
    }
    IndexSplit split = split_index(n, bp.a_vertices());
    double amp = 1.0 / std::sqrt(static_cast<double>(state.dimension()));
    Eigen::MatrixXd psi(split.row_dim, split.col_dim);
    for (Label x = 0; x < state.dimension(); ++x) {
        psi(split.row[x], split.col[x]) = state.global_phase() * state.sign(x) * amp;
    }
    // Keep the short side as rows; singular values are unchanged.
    if (psi.rows() > psi.cols()) {
        psi.transposeInPlace();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(psi);
    SchmidtSpectrum out{bp, {}, 0};
    const auto &sv = svd.singularValues();
    out.coefficients.assign(sv.data(), sv.data() + sv.size());
    out.rank = static_cast<int>(std::count_if(out.coefficients.begin(), out.coefficients.end(),
                                              [](double s) { return s > kSpectralTol; }));
    return out;
}

ReducedDensityMatrix reduced_density_matrix(const SignState &state, const std::vector<int> &kept) {
    int n = state.num_qubits();
    std::vector<int> sorted = kept;
    std::sort(sorted.begin(), sorted.end());
    IndexSplit split = split_index(n, sorted);
    // Group labels by traced-out index, then accumulate outer products.
    std::vector<std::vector<std::pair<std::uint32_t, double>>> by_env(split.col_dim);
    double amp = 1.0 / std::sqrt(static_cast<double>(state.dimension()));
    for (Label x = 0; x < state.dimension(); ++x) {
        by_env[split.col[x]].emplace_back(split.row[x], state.sign(x) * amp);
    }
    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(split.row_dim, split.row_dim);
    for (const auto &block : by_env) {
        for (const auto &[a, va] : block) {
            for (const auto &[b, vb] : block) {
                rho(a, b) += va * vb;
            }
        }
    }
    return {sorted, rho};
}

IntMatrix reduced_density_scaled(const SignState &state, const std::vector<int> &kept) {
    int n = state.num_qubits();
    std::vector<int> sorted = kept;
    std::sort(sorted.begin(), sorted.end());
    IndexSplit split = split_index(n, sorted);
    IntMatrix m(split.row_dim, split.col_dim);
    for (Label x = 0; x < state.dimension(); ++x) {
        m(split.row[x], split.col[x]) = state.sign(x);
    }
    return m * m.transpose();
}

double infinity_norm(const Eigen::MatrixXd &m) {
    if (m.rows() != m.cols()) {
        throw InvalidArgument("infinity norm needs a square matrix");
    }
    if (m.size() == 0) {
        return 0.0;
    }
    return m.cwiseAbs().rowwise().sum().maxCoeff();
}

double lambda_max(const Eigen::MatrixXd &m) {
    if (m.rows() != m.cols()) {
        throw InvalidArgument("eigenvalues need a square matrix");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().maxCoeff();
}

EntanglementReport alpha_multipartite(const SignState &state, const Limits &limits) {
    int n = state.num_qubits();
    if (n < 2) {
        throw InvalidArgument("multipartite entanglement needs at least 2 qubits");
    }
    check_sweep(n, limits);
    auto bps = all_bipartitions(n);
    std::vector<double> alphas(bps.size());
    parallel_for(bps.size(), limits.threads,
                 [&](std::size_t i) { alphas[i] = schmidt(state, bps[i]).alpha(); });

    EntanglementReport r;
    r.per_bipartition.reserve(bps.size());
    std::size_t best = 0;
    for (std::size_t i = 0; i < bps.size(); ++i) {
        r.per_bipartition.push_back({bps[i], alphas[i]});
        if (alphas[i] > alphas[best]) {
            best = i;
        }
    }
    r.alpha = alphas[best];
    r.E = 1.0 - r.alpha;
    r.argmax_bipartition = bps[best];
    return r;
}

bool is_permutation_invariant(const SignState &state) {
    int n = state.num_qubits();
    std::vector<int> by_weight(n + 1, 0);
    for (Label x = 0; x < state.dimension(); ++x) {
        int w = weight(x);
        int s = state.sign(x);
        if (by_weight[w] == 0) {
            by_weight[w] = s;
        } else if (by_weight[w] != s) {
            return false;
        }
    }
    return true;
}

ProcedureResult procedure_alpha(const Hypergraph &h, const Limits &limits, bool fallback) {
    int n = h.num_vertices();
    if (n < 2) {
        throw InvalidArgument("procedure needs at least 2 qubits");
    }
    check_sweep(n, limits);
    SignState psi = build_state(h);
    if (!is_permutation_invariant(psi)) {
        throw PreconditionFailed("state is not invariant under qubit permutations: " + h.str());
    }
    ProcedureResult r;
    VertexMask first = (VertexMask{1} << (n - 1)) - 1;
    r.s_max_squared = schmidt(psi, Bipartition(n, first)).alpha();
    r.certified = true;
    double best = r.s_max_squared;
    for (int k = 2; 2 * k <= n; ++k) {
        std::vector<int> kept;
        for (int q = 1; q <= n - k; ++q) {
            kept.push_back(q);
        }
        auto rho = reduced_density_matrix(psi, kept);
        ProcedureStep step{k, infinity_norm(rho.entries), false, std::nullopt};
        step.bounded = step.infinity_norm <= r.s_max_squared + kSpectralTol;
        if (!step.bounded) {
            r.certified = false;
            if (fallback) {
                step.lambda_max = lambda_max(rho.entries);
                best = std::max(best, *step.lambda_max);
            }
        }
        r.steps.push_back(step);
    }
    if (r.certified) {
        r.alpha = r.s_max_squared;
        r.method = "infinity-norm";
    } else if (fallback) {
        r.alpha = best;
        r.method = "eigenvalue-fallback";
    } else {
        r.method = "inconclusive";
    }
    return r;
}

Exact closed_form_alpha(Family family, int n) {
    if (n < family_min_n(family) || n > 62) {
        throw InvalidArgument("closed form for " + family_name(family) + " not defined at n = " +
                              std::to_string(n));
    }
    std::int64_t half = pow2(n - 1);
    bool even = n % 2 == 0;
    switch (family) {
        case Family::SingleMaxEdge:
            return Rational(half - 1, half);
        case Family::AllNminus1:
            if (n == 4) {
                return Exact(Rational(3, 8), Rational(1, 8));
            }
            return Rational(even ? half - n : half - n + 1, half);
        case Family::AllGeNminus1:
            if (n == 3) {
                return Rational(3, 4);
            }
            return Rational(even ? half - n + 1 : half - n, half);
    }
    throw InvalidArgument("unknown family");
}

Exact closed_form_E(Family family, int n) {
    return Exact(1) - closed_form_alpha(family, n);
}

LowerBoundCheck lower_bound_check(const Hypergraph &h, const Limits &limits) {
    if (h.num_vertices() < 2) {
        throw PreconditionFailed("lower bound needs at least 2 vertices");
    }
    if (!h.is_connected()) {
        throw PreconditionFailed("lower bound needs a connected hypergraph: " + h.str());
    }
    LowerBoundCheck c;
    c.k_max = h.k_max();
    c.bound = Rational(1, pow2(c.k_max - 1));
    c.measured_E = alpha_multipartite(build_state(h), limits).E;
    c.holds = c.measured_E >= to_double(c.bound) - kSpectralTol;
    return c;
}

StructureCheck reduced_structure_check(Family family, int n, int k) {
    if (n < 4 || k < 2 || 2 * k > n || n > 16) {
        throw InvalidArgument("structure check covers 4 <= n <= 16 and 2 <= k <= n/2, got n = " +
                              std::to_string(n) + ", k = " + std::to_string(k));
    }
    int m = n - k;
    const std::int64_t scale = pow2(n);
    const auto dim = static_cast<Eigen::Index>(pow2(m));

    std::vector<int> kept;
    for (int q = 1; q <= m; ++q) {
        kept.push_back(q);
    }
    IntMatrix measured = reduced_density_scaled(build_state(build_family(family, n)), kept);

    StructureCheck c;
    c.family = family;
    c.n = n;
    c.k = k;

    IntMatrix predicted(dim, dim);
    Eigen::Index second_row;
    if (family == Family::SingleMaxEdge) {
        // 2^{n-1} rho = 2^{k-1} everywhere, 2^{k-1} - 1 on the last row and
        // column except the corner.
        std::int64_t base = pow2(k - 1);
        for (Eigen::Index i = 0; i < dim; ++i) {
            for (Eigen::Index j = 0; j < dim; ++j) {
                bool edge = (i == dim - 1) != (j == dim - 1);
                predicted(i, j) = 2 * (edge ? base - 1 : base);
            }
        }
        second_row = dim - 1;
        std::int64_t half = pow2(n - 1);
        c.predicted_first_row_norm = Rational(half - 1, half);
        c.predicted_second_row_norm = Rational(half - pow2(m) + 1, half);
    } else {
        // 2^n rho = (2^k - k - 1) J + k g g^T + r r^T, where g are the signs of
        // G_m and r those of the m-qubit state with all (m-1)-edges whose sign
        // at |1...1> matches the full state's.
        int corner_sign = (family == Family::AllNminus1) == (n % 2 == 0) ? 1 : -1;
        SignState g = build_state(build_family(Family::SingleMaxEdge, m));
        std::vector<VertexMask> rest_edges;
        VertexMask full = (VertexMask{1} << m) - 1;
        for (int v = 0; v < m; ++v) {
            rest_edges.push_back(full & ~(VertexMask{1} << v));
        }
        SignState r = build_state(Hypergraph::from_masks(m, rest_edges));
        if (r.sign(dim - 1) != corner_sign) {
            r = apply_ck(r, full);
        }
        std::int64_t ones = pow2(k) - k - 1;
        for (Eigen::Index i = 0; i < dim; ++i) {
            for (Eigen::Index j = 0; j < dim; ++j) {
                predicted(i, j) = ones + k * g.sign(i) * g.sign(j) + r.sign(i) * r.sign(j);
            }
        }
        std::int64_t pk = pow2(k);
        std::array<std::int64_t, 4> v{pk, pk - 2, pk - 2 * k, pk - 2 * k - 2};
        if (corner_sign < 0) {
            std::swap(v[2], v[3]);
        }
        c.v = v;
        second_row = dim - 2;  // weight m-1, not the last row

        std::int64_t half = pow2(n - 1);
        std::int64_t pm = pow2(m);
        if (corner_sign > 0) {
            c.predicted_first_row_norm = Rational(half - n, half);
            c.predicted_second_row_norm =
                k == 2 ? c.predicted_first_row_norm - Rational(pow2(n - 2) - 2 * n + 2, half)
                       : c.predicted_first_row_norm - Rational(pm - 2 * m, half);
        } else {
            c.predicted_first_row_norm =
                k == 2 ? Rational(half - n + 1, half) : Rational(half - n - 1, half);
            c.predicted_second_row_norm =
                k == 2 ? c.predicted_first_row_norm - Rational(pow2(n - 3) - n + 2, pow2(n - 2))
                       : c.predicted_first_row_norm - Rational(pm - 2 * m - 2, half);
        }
    }

    std::int64_t worst = (measured - predicted).cwiseAbs().maxCoeff();
    c.max_abs_deviation = Rational(worst, scale);
    std::set<std::int64_t> distinct(measured.data(), measured.data() + measured.size());
    c.scaled_entries.assign(distinct.begin(), distinct.end());
    c.first_row_norm = row_norm(measured, 0, scale);
    c.second_row_norm = row_norm(measured, second_row, scale);
    Rational inf(0);
    for (Eigen::Index i = 0; i < dim; ++i) {
        inf = std::max(inf, row_norm(measured, i, scale));
    }
    c.infinity_norm = inf;
    return c;
}

}  // namespace hyperwit

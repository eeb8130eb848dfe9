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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "core/exact.hpp"
#include "core/hypergraph.hpp"
#include "core/sign_state.hpp"

namespace hyperwit {

/// Size caps shared by the numerical and symbolic routines.
struct Limits {
    int sweep_cap = 12;     // exhaustive bipartition sweeps
    int dense_cap = 8;      // dense 2^n x 2^n matrices
    int symbolic_cap = 10;  // Pauli expansions of stabilizer products
    int threads = 1;        // 0 = one per hardware thread
};

/// Tolerance for every spectral comparison.
inline constexpr double kSpectralTol = 1e-9;

struct SchmidtSpectrum {
    Bipartition bipartition;
    std::vector<double> coefficients;  // descending
    int rank = 0;                      // coefficients above kSpectralTol

    /// Largest squared Schmidt coefficient, alpha^{AB}.
    double alpha() const {
        return coefficients.empty() ? 0.0 : coefficients.front() * coefficients.front();
    }
};

/// Singular values of the 2^{|A|} x 2^{|B|} reshaping of the amplitudes.
SchmidtSpectrum schmidt(const SignState &state, const Bipartition &bp);

struct ReducedDensityMatrix {
    std::vector<int> kept_qubits;  // ascending; the first kept qubit is the top bit
    Eigen::MatrixXd entries;
};

/// Partial trace over every qubit not in `kept`, by explicit summation.
ReducedDensityMatrix reduced_density_matrix(const SignState &state, const std::vector<int> &kept);

/// 2^n * rho as an exact integer matrix (entries are sums of +-1).
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
IntMatrix reduced_density_scaled(const SignState &state, const std::vector<int> &kept);

/// Maximum absolute row sum. Throws InvalidArgument for non-square input.
double infinity_norm(const Eigen::MatrixXd &m);
/// Largest eigenvalue of a symmetric matrix.
double lambda_max(const Eigen::MatrixXd &m);

struct BipartitionAlpha {
    Bipartition bipartition;
    double alpha;
};

struct EntanglementReport {
    std::vector<BipartitionAlpha> per_bipartition;  // lexicographic by part A
    double alpha = 0.0;
    double E = 1.0;
    Bipartition argmax_bipartition{2, 1};
};

/// Exhaustive sweep over all 2^{n-1} - 1 bipartitions. Ties at the maximum go
/// to the lexicographically smallest part A.
EntanglementReport alpha_multipartite(const SignState &state, const Limits &limits = {});

/// True when sign(x) depends only on the Hamming weight of x.
bool is_permutation_invariant(const SignState &state);

struct ProcedureStep {
    int k;                               // qubits traced out (the last k)
    double infinity_norm;                // ||rho^{(1..n-k)}||_inf
    bool bounded;                        // infinity_norm <= s_max^2
    std::optional<double> lambda_max;    // exact eigenvalue when not bounded
};

struct ProcedureResult {
    double s_max_squared = 0.0;  // split {1..n-1} | {n}
    std::vector<ProcedureStep> steps;
    /// The infinity-norm bound settles every k.
    bool certified = false;
    /// Set when certified, or when the eigenvalue fallback resolved the
    /// remaining splits.
    std::optional<double> alpha;
    std::string method;  // "infinity-norm" or "eigenvalue-fallback"
};

/// Norm-comparison procedure for permutation-invariant hypergraph states.
/// Throws PreconditionFailed for non-symmetric states.
ProcedureResult procedure_alpha(const Hypergraph &h, const Limits &limits = {}, bool fallback = true);

/// Closed forms of alpha for the three families; n must be in range.
Exact closed_form_alpha(Family family, int n);
Exact closed_form_E(Family family, int n);

struct LowerBoundCheck {
    int k_max = 0;
    Rational bound;        // 1 / 2^{k_max - 1}
    double measured_E = 0.0;
    bool holds = false;    // measured_E >= bound - kSpectralTol
};

/// Compares the brute-force E against 1/2^{k_max-1}. Requires a connected H.
LowerBoundCheck lower_bound_check(const Hypergraph &h, const Limits &limits = {});

/// Exact comparison of rho^{(1..n-k)} against its predicted block structure.
struct StructureCheck {
    Family family;
    int n = 0;
    int k = 0;
    Rational max_abs_deviation;                  // |rho - predicted|, entrywise max
    std::vector<std::int64_t> scaled_entries;    // distinct entries of 2^n rho
    std::optional<std::array<std::int64_t, 4>> v;  // v1..v4 (not for single-max)
    Rational infinity_norm;
    Rational first_row_norm;    // measured first kind of row
    Rational second_row_norm;   // measured second kind of row
    Rational predicted_first_row_norm;
    Rational predicted_second_row_norm;
};

/// Valid for n >= 4 and 2 <= k <= n/2.
StructureCheck reduced_structure_check(Family family, int n, int k);

}  // namespace hyperwit

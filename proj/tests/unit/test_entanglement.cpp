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


#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "core/entanglement.hpp"
#include "core/error.hpp"
#include "core/random_hypergraph.hpp"

namespace hyperwit {
namespace {

// alpha^{AB} from the spectrum of rho_A, built by the explicit partial trace.
double alpha_from_rho(const SignState &s, const Bipartition &bp) {
    auto rho = reduced_density_matrix(s, bp.a_vertices());
    return lambda_max(rho.entries);
}

TEST(Schmidt, KnownStates) {
    // Controlled-Z on two qubits is maximally entangled.
    auto cz = schmidt(build_state(Hypergraph::parse("n=2; edges=[[1,2]]")), Bipartition(2, 1));
    EXPECT_EQ(cz.rank, 2);
    EXPECT_NEAR(cz.alpha(), 0.5, 1e-12);
    // No edges: product state.
    auto plus = schmidt(SignState(3), Bipartition(3, 1));
    EXPECT_EQ(plus.rank, 1);
    EXPECT_NEAR(plus.alpha(), 1.0, 1e-12);
}

TEST(Schmidt, SvdAgreesWithPartialTrace) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        auto h = random_connected_hypergraph(rng, 3 + t % 5);
        auto s = build_state(h);
        for (const auto &bp : all_bipartitions(h.num_vertices())) {
            auto sp = schmidt(s, bp);
            double norm = 0;
            for (double c : sp.coefficients) norm += c * c;
            EXPECT_NEAR(norm, 1.0, 1e-12);
            EXPECT_NEAR(sp.alpha(), alpha_from_rho(s, bp), 1e-10) << h.str() << " " << bp.str();
        }
    }
}

TEST(ReducedDensity, ScaledIsExactAndTraceOne) {
    auto s = build_state(build_family(Family::AllNminus1, 5));
    auto m = reduced_density_scaled(s, {1, 2, 3});
    auto rho = reduced_density_matrix(s, {1, 2, 3});
    EXPECT_EQ(m.trace(), 32);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            EXPECT_DOUBLE_EQ(rho.entries(i, j), m(i, j) / 32.0);
            EXPECT_EQ(m(i, j), m(j, i));
        }
    }
}

TEST(Norms, InfinityAndLambda) {
    Eigen::MatrixXd m(2, 2);
    m << 0.5, -0.25, -0.25, 0.5;
    EXPECT_DOUBLE_EQ(infinity_norm(m), 0.75);
    EXPECT_NEAR(lambda_max(m), 0.75, 1e-12);
    EXPECT_THROW(infinity_norm(Eigen::MatrixXd(2, 3)), InvalidArgument);
}

TEST(Multipartite, MaximumOverBipartitionsWithTieBreak) {
    auto s = build_state(Hypergraph::parse("n=4; edges=[[1,2],[3,4]]"));
    auto r = alpha_multipartite(s);
    EXPECT_EQ(r.per_bipartition.size(), 7u);
    EXPECT_NEAR(r.alpha, 1.0, 1e-12);
    EXPECT_NEAR(r.E, 0.0, 1e-12);
    EXPECT_EQ(r.argmax_bipartition.str(), "1,2|3,4");
    double best = 0;
    for (const auto &b : r.per_bipartition) best = std::max(best, alpha_from_rho(s, b.bipartition));
    EXPECT_NEAR(best, r.alpha, 1e-10);
}

TEST(Multipartite, ThreadCountDoesNotChangeResult) {
    auto s = build_state(build_family(Family::AllGeNminus1, 8));
    Limits one, four;
    four.threads = 4;
    auto a = alpha_multipartite(s, one);
    auto b = alpha_multipartite(s, four);
    ASSERT_EQ(a.per_bipartition.size(), b.per_bipartition.size());
    for (std::size_t i = 0; i < a.per_bipartition.size(); ++i) {
        EXPECT_EQ(a.per_bipartition[i].alpha, b.per_bipartition[i].alpha);
    }
    EXPECT_EQ(a.argmax_bipartition, b.argmax_bipartition);
}

TEST(Multipartite, SweepCap) {
    Limits lim;
    lim.sweep_cap = 6;
    EXPECT_THROW(alpha_multipartite(build_state(build_family(Family::SingleMaxEdge, 7)), lim),
                 LimitExceeded);
}

TEST(ClosedForm, MatchesBruteForce) {
    for (Family f : {Family::SingleMaxEdge, Family::AllNminus1, Family::AllGeNminus1}) {
        for (int n = family_min_n(f); n <= 9; ++n) {
            double brute = alpha_multipartite(build_state(build_family(f, n))).alpha;
            EXPECT_NEAR(closed_form_alpha(f, n).to_double(), brute, 1e-9)
                << family_name(f) << " n=" << n;
            EXPECT_EQ(closed_form_E(f, n), Exact(1) - closed_form_alpha(f, n));
        }
    }
    EXPECT_EQ(closed_form_alpha(Family::AllNminus1, 4), Exact(Rational(3, 8), Rational(1, 8)));
    EXPECT_THROW(closed_form_alpha(Family::AllNminus1, 2), InvalidArgument);
}

TEST(Procedure, CertifiesOrFallsBack) {
    for (Family f : {Family::SingleMaxEdge, Family::AllNminus1, Family::AllGeNminus1}) {
        for (int n = std::max(3, family_min_n(f)); n <= 9; ++n) {
            auto h = build_family(f, n);
            auto r = procedure_alpha(h);
            ASSERT_TRUE(r.alpha.has_value()) << family_name(f) << " n=" << n;
            EXPECT_NEAR(*r.alpha, closed_form_alpha(f, n).to_double(), 1e-9);
        }
    }
    auto h43 = procedure_alpha(build_family(Family::AllNminus1, 4));
    EXPECT_FALSE(h43.certified);
    EXPECT_EQ(h43.method, "eigenvalue-fallback");
    ASSERT_EQ(h43.steps.size(), 1u);
    EXPECT_NEAR(h43.steps[0].infinity_norm, 0.75, 1e-12);
    EXPECT_TRUE(procedure_alpha(build_family(Family::SingleMaxEdge, 6)).certified);
}

TEST(Procedure, RejectsNonSymmetricStates) {
    auto h = Hypergraph::parse("n=3; edges=[[1,2]]");
    EXPECT_FALSE(is_permutation_invariant(build_state(h)));
    EXPECT_THROW(procedure_alpha(h), PreconditionFailed);
}

TEST(LowerBound, HoldsAndNeedsConnectivity) {
    auto lb = lower_bound_check(Hypergraph::parse("n=4; edges=[[1,2,3],[3,4]]"));
    EXPECT_EQ(lb.k_max, 3);
    EXPECT_EQ(lb.bound, Rational(1, 4));
    EXPECT_TRUE(lb.holds);
    EXPECT_THROW(lower_bound_check(Hypergraph::parse("n=4; edges=[[1,2],[3,4]]")),
                 PreconditionFailed);
}

TEST(Structure, ExactForAllFamilies) {
    for (Family f : {Family::SingleMaxEdge, Family::AllNminus1, Family::AllGeNminus1}) {
        for (int n = 4; n <= 9; ++n) {
            for (int k = 2; k <= n / 2; ++k) {
                auto s = reduced_structure_check(f, n, k);
                EXPECT_EQ(s.max_abs_deviation, Rational(0)) << family_name(f) << n << k;
                EXPECT_EQ(s.first_row_norm, s.predicted_first_row_norm);
                EXPECT_EQ(s.second_row_norm, s.predicted_second_row_norm);
            }
        }
    }
    EXPECT_THROW(reduced_structure_check(Family::SingleMaxEdge, 6, 4), InvalidArgument);
}

TEST(Structure, SmallestAllNminus1Example) {
    // rho^(12) of H_4^3 times 16. Only weight-3 labels carry a minus sign, so
    // the rows of 01 and 10 coincide.
    auto m = reduced_density_scaled(build_state(build_family(Family::AllNminus1, 4)), {1, 2});
    IntMatrix expected(4, 4);
    expected << 4, 2, 2, 0, 2, 4, 4, -2, 2, 4, 4, -2, 0, -2, -2, 4;
    EXPECT_EQ(m, expected);
}

}  // namespace
}  // namespace hyperwit

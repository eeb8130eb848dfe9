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


// Projector and stabilizer witnesses for hypergraph states under white noise.
// Values that follow from an exact alpha are kept exact; alpha obtained
// numerically carries through as a double only.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/entanglement.hpp"
#include "core/exact.hpp"
#include "core/hypergraph.hpp"

namespace hyperwit {

enum class WitnessKind { Projector, Stabilizer };
enum class AlphaSource { ClosedForm, KmaxBound, Measured, Procedure };

std::string witness_kind_name(WitnessKind kind);  // "projector" | "stabilizer"
WitnessKind parse_witness_kind(std::string_view name);
std::string alpha_source_name(AlphaSource source);
AlphaSource parse_alpha_source(std::string_view name);

// Family whose builder produces exactly `h`, if any.
std::optional<Family> detect_family(const Hypergraph &h);

struct AlphaValue {
    std::optional<Exact> exact;
    double value = 0.0;
    AlphaSource source = AlphaSource::KmaxBound;
};

// Closed form for recognised families, the k_max bound otherwise, unless a
// source is forced.
AlphaValue witness_alpha(const Hypergraph &h, std::optional<AlphaSource> source = std::nullopt,
                         const Limits &limits = {});

struct WitnessSpec {
    WitnessKind kind = WitnessKind::Projector;
    Hypergraph graph{1};
    AlphaSource source = AlphaSource::KmaxBound;
    double alpha = 0.0;
    double beta = 0.0;        // stabilizer only
    double C = 0.0;           // stabilizer only
    double robustness = 0.0;  // p^L or tilde p^L
    std::optional<Exact> alpha_exact, beta_exact, C_exact, robustness_exact;
};

WitnessSpec projector_witness(const Hypergraph &h, const AlphaValue &alpha);
WitnessSpec stabilizer_witness(const Hypergraph &h, const AlphaValue &alpha);

struct FeasibilityReport {
    bool feasible = false;
    std::vector<double> margins;  // per weight class w = 0..n
    std::vector<int> tight;       // classes with zero margin
    bool listed_form_agrees = true;  // the inequality list by parity gives the same verdict
};

// Checks tilde W - C W >= 0 on the joint eigenbasis.
FeasibilityReport feasibility_check(int n, const Exact &alpha, const Exact &beta, const Exact &C);
FeasibilityReport feasibility_check(int n, double alpha, double beta, double C);

double expectation(const WitnessSpec &w, double p);
std::optional<Exact> expectation_exact(const WitnessSpec &w, const Rational &p);

// Tr[W R_p] from dense matrices; n <= dense_cap.
double expectation_dense(const WitnessSpec &w, double p, int dense_cap = 8);

struct RobustnessRow {
    int n;
    Exact projector;   // p^L
    Exact stabilizer;  // tilde p^L
};

std::vector<RobustnessRow> robustness_table(Family family, int n_min, int n_max);

struct BiseparableSampling {
    std::uint64_t samples = 0;
    double min_value = 0.0;  // smallest Tr[W rho] seen
    bool passed = false;     // min_value >= -kSpectralTol
};

// Falsification run: random pure product states across random cuts.
BiseparableSampling sample_biseparable(const WitnessSpec &w, std::uint64_t samples,
                                       std::uint64_t seed);

}  // namespace hyperwit

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


// Machine-readable reports (JSON and CSV) for every front-end command. The
// CLI only forwards these strings, so every number it prints is produced here.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "core/entanglement.hpp"
#include "core/hypergraph.hpp"
#include "core/measurement.hpp"
#include "core/witness.hpp"

namespace hyperwit::report {

enum class Format { Json, Csv };

Format parse_format(std::string_view name);

struct Output {
    std::string text;
    bool passed = true;  // false when a check inside the report failed
};

Output state(const Hypergraph &h);
Output state_dump(int n, std::string_view hex);

// what: "stabilizers", "basis", "projector" or "structure" (family only).
Output verify(const Hypergraph &h, std::string_view what, const Limits &limits);
Output verify_structure(Family family, int n, std::optional<int> k);

// mode: "brute", "procedure" or "closed-form".
Output entanglement(const Hypergraph &h, std::string_view mode, bool cross_check,
                    const Limits &limits, Format format);

// An empty part_a reduces across every bipartition.
Output reduce(const Hypergraph &h, std::string_view part_a, const Limits &limits, Format format);

struct WitnessRequest {
    WitnessKind kind = WitnessKind::Projector;
    std::optional<AlphaSource> source;
};

Output witness(const Hypergraph &h, const WitnessRequest &req, const Limits &limits);
// p is "num/den", an integer, or a decimal.
Output witness_eval(const Hypergraph &h, const WitnessRequest &req, std::string_view p,
                    const Limits &limits);
Output robustness_table(Family family, int n_min, int n_max, Format format);

Output settings(const Hypergraph &h, const WitnessRequest &req, SettingMode mode, bool list,
                const Limits &limits);

struct CampaignRequest {
    std::uint64_t seed = 1;
    int count = 200;
    int n_min = 3;
    int n_max = 8;
    int reduce_max_n = 7;  // certificates on every bipartition up to this size
};

Output lower_bound_campaign(const CampaignRequest &req, const Limits &limits, Format format);

}  // namespace hyperwit::report

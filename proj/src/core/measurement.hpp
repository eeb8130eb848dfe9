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


// Pauli expansions of stabilizer products and their grouping into local
// measurement settings.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/exact.hpp"
#include "core/hypergraph.hpp"
#include "core/sign_state.hpp"
#include "core/witness.hpp"

namespace hyperwit {

// Letters packed as two label masks (qubit q at bit n - q): X = x only,
// Z = z only, Y = both, I = neither.
struct PauliString {
    int n = 0;
    Label x = 0;
    Label z = 0;
    Rational coefficient{1};

    int y_count() const;
    bool is_identity() const {
        return x == 0 && z == 0;
    }
    std::string letters() const;  // q1..qn, e.g. "XZI"
    friend bool operator==(const PauliString &, const PauliString &) = default;
};

struct MeasurementSetting {
    int n = 0;
    Label x = 0;  // every qubit is X, Y or Z
    Label z = 0;

    std::string letters() const;
    bool covers(const PauliString &p) const;
    friend bool operator==(const MeasurementSetting &, const MeasurementSetting &) = default;
    friend bool operator<(const MeasurementSetting &a, const MeasurementSetting &b) {
        return a.letters() < b.letters();
    }
};

struct Decomposition {
    std::vector<PauliString> strings;  // nonzero terms, sorted by letters
    std::uint64_t cancelled_odd_y = 0; // odd-Y positions, all with zero weight
    bool hermitian = true;             // no surviving odd-Y term
};

// Expands prod_{i in T} K_i over the Pauli basis with exact dyadic weights.
Decomposition decompose_stabilizer_product(const Hypergraph &h, VertexMask subset);

// Rebuilds the operator from the strings and compares it with the product of
// the stabilizers applied to every basis vector; exact, n <= dense_cap.
bool validate_decomposition(const Hypergraph &h, VertexMask subset, const Decomposition &d,
                            int dense_cap = 6);

// I -> Z completion of every non-identity string, deduplicated and sorted.
std::vector<MeasurementSetting> canonical_settings(const std::vector<PauliString> &strings);

// First-fit merge of the canonical classes; never more than canonical.
std::vector<MeasurementSetting> greedy_min_settings(const std::vector<PauliString> &strings);

// Smallest cover by exhaustive branch and bound; n <= 4.
std::vector<MeasurementSetting> exact_min_settings(const std::vector<PauliString> &strings);

enum class SettingMode { Canonical, Greedy, Exact };
std::string setting_mode_name(SettingMode mode);
SettingMode parse_setting_mode(std::string_view name);

// Non-identity Pauli strings a witness needs measured: every product over
// a nonempty subset for the projector witness, the single stabilizers for the
// stabilizer witness.
std::vector<PauliString> witness_strings(const WitnessSpec &w, int symbolic_cap = 10);

std::vector<MeasurementSetting> witness_settings(const WitnessSpec &w, SettingMode mode,
                                                 int symbolic_cap = 10);
std::uint64_t witness_setting_count(const WitnessSpec &w, SettingMode mode,
                                    int symbolic_cap = 10);

}  // namespace hyperwit

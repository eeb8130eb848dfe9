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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/exact.hpp"
#include "core/hypergraph.hpp"

namespace hyperwit {

/// Basis label of an n-qubit computational basis state. Qubit 1 is the most
/// significant bit, so |x> reads q1..qn left to right.
using Label = std::uint64_t;

/// Largest qubit count a SignState may hold (2^26 packed bits = 8 MiB).
inline constexpr int kMaxStateQubits = 26;

/// Bit of qubit `q` (1-based) inside an n-qubit label.
inline Label qubit_bit(int q, int n) {
    return Label{1} << (n - q);
}
/// Converts a vertex set into the label mask of those qubits.
Label label_mask(VertexMask vertices, int n);
/// Hamming weight w(x).
int weight(Label x);

/// Equal-magnitude state: amplitude(x) = global_phase * sign(x) / sqrt(2^n).
///
/// Signs are packed one bit per basis label (set bit = -1). Every gate in this
/// module maps the family to itself, so all identities hold exactly.
class SignState {
   public:
    /// |+>^n.
    explicit SignState(int n);
    static SignState from_signs(int n, std::span<const int> signs);
    /// Inverse of to_hex().
    static SignState from_hex(int n, std::string_view hex);

    int num_qubits() const noexcept {
        return n_;
    }
    Label dimension() const noexcept {
        return Label{1} << n_;
    }
    bool is_negative(Label x) const noexcept {
        return (bits_[x >> 6] >> (x & 63)) & 1;
    }
    int sign(Label x) const noexcept {
        return is_negative(x) ? -1 : 1;
    }
    void flip(Label x) noexcept {
        bits_[x >> 6] ^= std::uint64_t{1} << (x & 63);
    }
    int global_phase() const noexcept {
        return phase_;
    }
    void set_global_phase(int phase);
    /// Number of labels with sign -1.
    std::uint64_t negative_count() const;

    double amplitude(Label x) const;
    std::vector<double> amplitudes() const;

    /// Sign bitmap as lowercase hex, most significant nibble first; bit x is
    /// set when sign(x) = -1. The global phase is not part of the bitmap.
    std::string to_hex() const;

    const std::vector<std::uint64_t> &words() const noexcept {
        return bits_;
    }

    friend bool operator==(const SignState &, const SignState &) = default;

   private:
    int n_;
    int phase_ = 1;
    std::vector<std::uint64_t> bits_;
};

/// |H>: sign(x) = (-1)^{#{e in E : e subset of support(x)}}.
SignState build_state(const Hypergraph &h);

/// Multi-controlled Z on the vertices of `edge`.
SignState apply_ck(const SignState &state, VertexMask edge);
SignState apply_x(const SignState &state, int qubit);
SignState apply_z(const SignState &state, int qubit);

/// Precomputed action of the generalized stabilizers K_i(H).
///
/// K_i |y> = d_i(y) |y xor bit(i)>, where d_i(y) = (-1)^{#{e in E : i in e,
/// e \ {i} subset of support(y)}} does not depend on bit i. Every K_i is
/// therefore a signed permutation matrix.
class StabilizerAction {
   public:
    explicit StabilizerAction(const Hypergraph &h);

    int num_qubits() const noexcept {
        return n_;
    }
    /// d_i(y) in {+1, -1}.
    int diagonal_sign(int i, Label y) const;
    /// K_i |y> = sign * |target>.
    struct Image {
        Label target;
        int sign;
    };
    Image apply(int i, Label y) const {
        return {y ^ qubit_bit(i, n_), diagonal_sign(i, y)};
    }
    /// In-place K_i on a dense integer vector.
    std::vector<std::int64_t> apply_dense(int i, std::span<const std::int64_t> v) const;

   private:
    int n_;
    // For each qubit: label masks of e \ {i} over the edges containing i.
    std::vector<std::vector<Label>> controls_;
};

SignState apply_stabilizer(const SignState &state, const Hypergraph &h, int i);

/// |phi_s> = sigma_z^s |H>; s uses the label convention (s_1 is the top bit).
SignState basis_state(const Hypergraph &h, Label s);
/// Same with s given as a string of '0'/'1' of length n, s_1 first.
SignState basis_state(const Hypergraph &h, std::string_view s);

/// <a|b>, exact.
Rational overlap(const SignState &a, const SignState &b);

struct ExtractedHypergraph {
    Hypergraph graph;
    int global_phase;
};

/// Recovers (H, phase) with phase * build_state(H) equal to the input.
ExtractedHypergraph extract_hypergraph(const SignState &state);

/// Projects qubit `q` onto |outcome> and drops it (n - 1 qubits remain).
/// Amplitudes keep equal magnitude; renormalization is implicit.
SignState project_qubit(const SignState &state, int q, int outcome);
/// Inserts a |+> qubit at position `q` of an (n - 1)-qubit state.
SignState insert_plus_qubit(const SignState &state, int q);

/// Result of the two-sided check of |H><H| = prod (I + K_i)/2 = 2^-n sum Sigma_n.
struct ProjectorCheck {
    Rational max_deviation_product;
    Rational max_deviation_group;
    std::uint64_t group_elements;
    std::uint64_t distinct_group_elements;
    bool passed() const {
        return max_deviation_product == 0 && max_deviation_group == 0;
    }
};

/// Dense exact comparison; throws LimitExceeded when n > dense_cap.
ProjectorCheck projector_identity_check(const Hypergraph &h, int dense_cap = 8);

struct StabilizerCheck {
    bool stabilized;       // K_i |H> = |H> for all i
    bool eigen_relation;   // K_i |phi_s> = (-1)^{s_i} |phi_s>
    bool orthonormal;      // <phi_s|phi_t> = delta_{s,t}
    bool anticommutation;  // K_i Z_i = -Z_i K_i on basis states
    bool passed() const {
        return stabilized && eigen_relation && orthonormal && anticommutation;
    }
};

/// Stabilizer and hypergraph-basis identities, all exact.
StabilizerCheck verify_stabilizer_formalism(const Hypergraph &h, int dense_cap = 8);

}  // namespace hyperwit

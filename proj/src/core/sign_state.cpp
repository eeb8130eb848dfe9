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

#include "core/sign_state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "core/error.hpp"

namespace hyperwit {

namespace {

void check_qubit(int q, int n) {
    if (q < 1 || q > n) {
        throw InvalidArgument("qubit " + std::to_string(q) + " outside 1.." + std::to_string(n));
    }
}

std::size_t word_count(int n) {
    return n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
}

// In-place GF(2) Moebius transform over the subset lattice; an involution.
void moebius(std::vector<std::uint8_t> &f, int n) {
    for (int b = 0; b < n; ++b) {
        Label bit = Label{1} << b;
        for (Label x = 0; x < f.size(); ++x) {
            if (x & bit) {
                f[x] ^= f[x ^ bit];
            }
        }
    }
}

SignState from_bits(int n, const std::vector<std::uint8_t> &negative) {
    SignState s(n);
    for (Label x = 0; x < negative.size(); ++x) {
        if (negative[x]) {
            s.flip(x);
        }
    }
    return s;
}

}  // namespace

Label label_mask(VertexMask vertices, int n) {
    Label m = 0;
    for (int v : vertices_of(vertices)) {
        check_qubit(v, n);
        m |= qubit_bit(v, n);
    }
    return m;
}

int weight(Label x) {
    return std::popcount(x);
}

SignState::SignState(int n) : n_(n) {
    if (n < 1 || n > kMaxStateQubits) {
        throw LimitExceeded("state-qubits", kMaxStateQubits, n);
    }
    bits_.assign(word_count(n), 0);
}

SignState SignState::from_signs(int n, std::span<const int> signs) {
    SignState s(n);
    if (signs.size() != s.dimension()) {
        throw InvalidArgument("sign table length " + std::to_string(signs.size()) +
                              " does not match 2^" + std::to_string(n));
    }
    for (Label x = 0; x < signs.size(); ++x) {
        if (signs[x] == -1) {
            s.flip(x);
        } else if (signs[x] != 1) {
            throw InvalidArgument("sign table entries must be +1 or -1");
        }
    }
    return s;
}

SignState SignState::from_hex(int n, std::string_view hex) {
    SignState s(n);
    std::size_t digits = std::max<std::size_t>(1, s.dimension() / 4);
    if (hex.size() != digits) {
        throw InvalidArgument("hex bitmap must have " + std::to_string(digits) + " digits");
    }
    for (std::size_t d = 0; d < digits; ++d) {
        char c = hex[digits - 1 - d];
        int v;
        if (c >= '0' && c <= '9') {
            v = c - '0';
        } else if (c >= 'a' && c <= 'f') {
            v = c - 'a' + 10;
        } else if (c >= 'A' && c <= 'F') {
            v = c - 'A' + 10;
        } else {
            throw InvalidArgument(std::string("bad hex digit '") + c + "'");
        }
        for (int b = 0; b < 4; ++b) {
            Label x = 4 * d + b;
            if ((v >> b) & 1) {
                if (x >= s.dimension()) {
                    throw InvalidArgument("hex bitmap sets bits beyond 2^n");
                }
                s.flip(x);
            }
        }
    }
    return s;
}

void SignState::set_global_phase(int phase) {
    if (phase != 1 && phase != -1) {
        throw InvalidArgument("global phase must be +1 or -1");
    }
    phase_ = phase;
}

std::uint64_t SignState::negative_count() const {
    std::uint64_t c = 0;
    for (auto w : bits_) {
        c += std::popcount(w);
    }
    return c;
}

double SignState::amplitude(Label x) const {
    return phase_ * sign(x) / std::sqrt(static_cast<double>(dimension()));
}

std::vector<double> SignState::amplitudes() const {
    std::vector<double> out(dimension());
    double norm = 1.0 / std::sqrt(static_cast<double>(dimension()));
    for (Label x = 0; x < dimension(); ++x) {
        out[x] = phase_ * sign(x) * norm;
    }
    return out;
}

std::string SignState::to_hex() const {
    static const char *kDigits = "0123456789abcdef";
    std::size_t digits = std::max<std::size_t>(1, dimension() / 4);
    std::string out(digits, '0');
    for (std::size_t d = 0; d < digits; ++d) {
        int v = 0;
        for (int b = 0; b < 4; ++b) {
            Label x = 4 * d + b;
            if (x < dimension() && is_negative(x)) {
                v |= 1 << b;
            }
        }
        out[digits - 1 - d] = kDigits[v];
    }
    return out;
}

SignState build_state(const Hypergraph &h) {
    int n = h.num_vertices();
    SignState probe(n);  // validates the qubit cap before allocating
    std::vector<std::uint8_t> f(probe.dimension(), 0);
    for (VertexMask e : h.edge_masks()) {
        f[label_mask(e, n)] ^= 1;
    }
    moebius(f, n);
    return from_bits(n, f);
}

SignState apply_ck(const SignState &state, VertexMask edge) {
    int n = state.num_qubits();
    if (edge == 0) {
        throw InvalidArgument("controlled-Z needs a nonempty vertex set");
    }
    Label m = label_mask(edge, n);
    SignState out = state;
    for (Label x = 0; x < state.dimension(); ++x) {
        if ((x & m) == m) {
            out.flip(x);
        }
    }
    return out;
}

SignState apply_x(const SignState &state, int qubit) {
    int n = state.num_qubits();
    check_qubit(qubit, n);
    Label b = qubit_bit(qubit, n);
    SignState out(n);
    out.set_global_phase(state.global_phase());
    for (Label x = 0; x < state.dimension(); ++x) {
        if (state.is_negative(x ^ b)) {
            out.flip(x);
        }
    }
    return out;
}

SignState apply_z(const SignState &state, int qubit) {
    int n = state.num_qubits();
    check_qubit(qubit, n);
    Label b = qubit_bit(qubit, n);
    SignState out = state;
    for (Label x = 0; x < state.dimension(); ++x) {
        if (x & b) {
            out.flip(x);
        }
    }
    return out;
}

StabilizerAction::StabilizerAction(const Hypergraph &h) : n_(h.num_vertices()), controls_(n_) {
    for (int i = 1; i <= n_; ++i) {
        VertexMask bit = VertexMask{1} << (i - 1);
        for (VertexMask e : h.incident_edges(i)) {
            controls_[i - 1].push_back(label_mask(e & ~bit, n_));
        }
    }
}

int StabilizerAction::diagonal_sign(int i, Label y) const {
    int parity = 0;
    for (Label c : controls_[i - 1]) {
        parity ^= ((y & c) == c);
    }
    return parity ? -1 : 1;
}

std::vector<std::int64_t> StabilizerAction::apply_dense(int i,
                                                        std::span<const std::int64_t> v) const {
    std::vector<std::int64_t> out(v.size(), 0);
    for (Label y = 0; y < v.size(); ++y) {
        if (v[y] != 0) {
            Image img = apply(i, y);
            out[img.target] += img.sign * v[y];
        }
    }
    return out;
}

SignState apply_stabilizer(const SignState &state, const Hypergraph &h, int i) {
    int n = state.num_qubits();
    if (h.num_vertices() != n) {
        throw InvalidArgument("hypergraph and state have different qubit counts");
    }
    check_qubit(i, n);
    // (K_i psi)(x) = d_i(x) psi(x xor bit(i)), since d_i ignores bit i.
    StabilizerAction action(h);
    SignState out = apply_x(state, i);
    for (Label x = 0; x < state.dimension(); ++x) {
        if (action.diagonal_sign(i, x) < 0) {
            out.flip(x);
        }
    }
    return out;
}

SignState basis_state(const Hypergraph &h, Label s) {
    SignState out = build_state(h);
    if (s >= out.dimension()) {
        throw InvalidArgument("basis index s has more than n bits");
    }
    for (Label x = 0; x < out.dimension(); ++x) {
        if (std::popcount(x & s) & 1) {
            out.flip(x);
        }
    }
    return out;
}

SignState basis_state(const Hypergraph &h, std::string_view s) {
    int n = h.num_vertices();
    if (static_cast<int>(s.size()) != n) {
        throw InvalidArgument("bit string length " + std::to_string(s.size()) +
                              " does not match n = " + std::to_string(n));
    }
    Label label = 0;
    for (int q = 1; q <= n; ++q) {
        char c = s[q - 1];
        if (c == '1') {
            label |= qubit_bit(q, n);
        } else if (c != '0') {
            throw InvalidArgument("bit string must contain only '0' and '1'");
        }
    }
    return basis_state(h, label);
}

Rational overlap(const SignState &a, const SignState &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw InvalidArgument("overlap of states with different qubit counts");
    }
    std::int64_t differing = 0;
    const auto &wa = a.words();
    const auto &wb = b.words();
    std::uint64_t used = a.dimension() >= 64 ? ~std::uint64_t{0}
                                             : ((std::uint64_t{1} << a.dimension()) - 1);
    for (std::size_t k = 0; k < wa.size(); ++k) {
        differing += std::popcount((wa[k] ^ wb[k]) & used);
    }
    auto dim = static_cast<std::int64_t>(a.dimension());
    return Rational(a.global_phase() * b.global_phase() * (dim - 2 * differing), dim);
}

ExtractedHypergraph extract_hypergraph(const SignState &state) {
    int n = state.num_qubits();
    int phase = state.global_phase() * state.sign(0);
    std::vector<std::uint8_t> f(state.dimension());
    bool flip_all = state.is_negative(0);
    for (Label x = 0; x < state.dimension(); ++x) {
        f[x] = state.is_negative(x) ^ flip_all;
    }
    moebius(f, n);
    std::vector<VertexMask> edges;
    for (Label x = 1; x < f.size(); ++x) {
        if (f[x]) {
            VertexMask e = 0;
            for (int q = 1; q <= n; ++q) {
                if (x & qubit_bit(q, n)) {
                    e |= VertexMask{1} << (q - 1);
                }
            }
            edges.push_back(e);
        }
    }
    return {Hypergraph::from_masks(n, edges), phase};
}

SignState project_qubit(const SignState &state, int q, int outcome) {
    int n = state.num_qubits();
    check_qubit(q, n);
    if (n < 2) {
        throw InvalidArgument("cannot project the only qubit of a state");
    }
    if (outcome != 0 && outcome != 1) {
        throw InvalidArgument("measurement outcome must be 0 or 1");
    }
    int pos = n - q;  // bit position of q
    SignState out(n - 1);
    out.set_global_phase(state.global_phase());
    Label low = (Label{1} << pos) - 1;
    for (Label y = 0; y < out.dimension(); ++y) {
        Label x = ((y & ~low) << 1) | (Label(outcome) << pos) | (y & low);
        if (state.is_negative(x)) {
            out.flip(y);
        }
    }
    return out;
}

SignState insert_plus_qubit(const SignState &state, int q) {
    int n = state.num_qubits() + 1;
    check_qubit(q, n);
    int pos = n - q;
    SignState out(n);
    out.set_global_phase(state.global_phase());
    Label low = (Label{1} << pos) - 1;
    for (Label x = 0; x < out.dimension(); ++x) {
        Label y = ((x >> 1) & ~low) | (x & low);
        if (state.is_negative(y)) {
            out.flip(x);
        }
    }
    return out;
}

ProjectorCheck projector_identity_check(const Hypergraph &h, int dense_cap) {
    int n = h.num_vertices();
    if (n > dense_cap) {
        throw LimitExceeded("dense", dense_cap, n);
    }
    SignState psi = build_state(h);
    StabilizerAction action(h);
    const Label dim = psi.dimension();
    const auto scale = static_cast<std::int64_t>(dim);

    ProjectorCheck check{Rational(0), Rational(0), dim, 0};
    std::int64_t worst_product = 0;
    std::int64_t worst_group = 0;
    // Each group element is a signed permutation; record its action on all
    // basis vectors to count distinct elements.
    std::set<std::vector<std::int64_t>> elements;
    std::vector<std::vector<std::int64_t>> element_action(dim, std::vector<std::int64_t>(dim));

    for (Label y = 0; y < dim; ++y) {
        // 2^n |H><H| e_y has entries sign(x) sign(y).
        std::vector<std::int64_t> expected(dim);
        for (Label x = 0; x < dim; ++x) {
            expected[x] = psi.sign(x) * psi.sign(y);
        }

        // prod_i (I + K_i) e_y.
        std::vector<std::int64_t> v(dim, 0);
        v[y] = 1;
        for (int i = 1; i <= n; ++i) {
            auto kv = action.apply_dense(i, v);
            for (Label x = 0; x < dim; ++x) {
                v[x] += kv[x];
            }
        }

        // sum over subsets T of prod_{i in T} K_i e_y.
        std::vector<std::int64_t> g(dim, 0);
        for (Label t = 0; t < dim; ++t) {
            Label target = y;
            int sign = 1;
            for (int i = n; i >= 1; --i) {
                if (t & qubit_bit(i, n)) {
                    auto img = action.apply(i, target);
                    target = img.target;
                    sign *= img.sign;
                }
            }
            g[target] += sign;
            element_action[t][y] = sign * static_cast<std::int64_t>(target + 1);
        }

        for (Label x = 0; x < dim; ++x) {
            worst_product = std::max(worst_product, std::abs(v[x] - expected[x]));
            worst_group = std::max(worst_group, std::abs(g[x] - expected[x]));
        }
    }
    for (auto &a : element_action) {
        elements.insert(std::move(a));
    }
    check.max_deviation_product = Rational(worst_product, scale);
    check.max_deviation_group = Rational(worst_group, scale);
    check.distinct_group_elements = elements.size();
    return check;
}

StabilizerCheck verify_stabilizer_formalism(const Hypergraph &h, int dense_cap) {
    int n = h.num_vertices();
    if (n > dense_cap) {
        throw LimitExceeded("dense", dense_cap, n);
    }
    StabilizerCheck c{true, true, true, true};
    SignState psi = build_state(h);
    StabilizerAction action(h);
    for (int i = 1; i <= n; ++i) {
        if (!(apply_stabilizer(psi, h, i) == psi)) {
            c.stabilized = false;
        }
    }
    std::vector<SignState> basis;
    basis.reserve(psi.dimension());
    for (Label s = 0; s < psi.dimension(); ++s) {
        basis.push_back(basis_state(h, s));
    }
    for (Label s = 0; s < psi.dimension(); ++s) {
        for (int i = 1; i <= n; ++i) {
            SignState k = apply_stabilizer(basis[s], h, i);
            SignState expected = basis[s];
            if (s & qubit_bit(i, n)) {
                expected.set_global_phase(-expected.global_phase());
            }
            // Compare as vectors: the sign convention may sit in either place.
            if (overlap(k, expected) != 1) {
                c.eigen_relation = false;
            }
        }
        for (Label t = 0; t < psi.dimension(); ++t) {
            if (overlap(basis[s], basis[t]) != (s == t ? 1 : 0)) {
                c.orthonormal = false;
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        Label b = qubit_bit(i, n);
        for (Label y = 0; y < psi.dimension(); ++y) {
            int zy = (y & b) ? -1 : 1;
            auto img = action.apply(i, y);
            int kz = zy * img.sign;                           // K_i Z_i |y>
            int zk = img.sign * ((img.target & b) ? -1 : 1);  // Z_i K_i |y>
            if (kz != -zk) {
                c.anticommutation = false;
            }
        }
    }
    return c;
}

}  // namespace hyperwit

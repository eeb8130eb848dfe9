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

#include "core/measurement.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include <Eigen/Dense>

#include "core/error.hpp"

namespace hyperwit {

namespace {

using IntMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

char letter_at(Label x, Label z, Label bit) {
    bool bx = x & bit, bz = z & bit;
    if (bx && bz) return 'Y';
    if (bx) return 'X';
    if (bz) return 'Z';
    return 'I';
}

std::string letters_of(int n, Label x, Label z) {
    std::string s(n, 'I');
    for (int q = 1; q <= n; ++q) {
        s[q - 1] = letter_at(x, z, qubit_bit(q, n));
    }
    return s;
}

// In-place Walsh-Hadamard transform: out[S] = sum_y (-1)^{|S & y|} in[y].
void walsh_hadamard(std::vector<std::int64_t> &v) {
    for (std::size_t len = 1; len < v.size(); len <<= 1) {
        for (std::size_t i = 0; i < v.size(); i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                std::int64_t a = v[j], b = v[j + len];
                v[j] = a + b;
                v[j + len] = a - b;
            }
        }
    }
}

MeasurementSetting completion(const PauliString &p) {
    Label full = (Label{1} << p.n) - 1;
    return {p.n, p.x, p.z | (full & ~(p.x | p.z))};
}

// Letters pinned by a group of strings; free positions are open.
struct Partial {
    Label pinned = 0;
    Label x = 0;
    Label z = 0;

    bool compatible(const Partial &o) const {
        Label both = pinned & o.pinned;
        return ((x ^ o.x) & both) == 0 && ((z ^ o.z) & both) == 0;
    }
    void merge(const Partial &o) {
        x |= o.x & ~pinned;
        z |= o.z & ~pinned;
        pinned |= o.pinned;
    }
    std::string key(int n) const {
        std::string s = letters_of(n, x, z);
        for (int q = 1; q <= n; ++q) {
            if (!(pinned & qubit_bit(q, n))) {
                s[q - 1] = '-';
            }
        }
        return s;
    }
};

Partial partial_of(const PauliString &p) {
    return {p.x | p.z, p.x, p.z};
}

MeasurementSetting close_partial(int n, const Partial &g) {
    Label full = (Label{1} << n) - 1;
    return {n, g.x, g.z | (full & ~g.pinned)};
}

std::vector<MeasurementSetting> sorted_settings(std::vector<MeasurementSetting> v) {
    std::sort(v.begin(), v.end());
    return v;
}

int check_strings(const std::vector<PauliString> &strings) {
    int n = strings.empty() ? 0 : strings.front().n;
    for (const auto &p : strings) {
        if (p.n != n) {
            throw InvalidArgument("Pauli strings of different lengths");
        }
    }
    return n;
}

// Class partials keyed by canonical setting.
using ClassMap = std::map<std::pair<Label, Label>, Partial>;

void add_to_classes(ClassMap &classes, const PauliString &p) {
    if (p.is_identity()) {
        return;
    }
    MeasurementSetting c = completion(p);
    auto [it, inserted] = classes.try_emplace({c.x, c.z}, partial_of(p));
    if (!inserted) {
        it->second.merge(partial_of(p));
    }
}

std::vector<MeasurementSetting> greedy_from_classes(int n, const ClassMap &classes) {
    std::vector<Partial> parts;
    for (const auto &[key, part] : classes) {
        parts.push_back(part);
    }
    std::sort(parts.begin(), parts.end(),
              [n](const Partial &a, const Partial &b) { return a.key(n) < b.key(n); });
    std::vector<Partial> groups;
    for (const auto &p : parts) {
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const Partial &g) { return g.compatible(p); });
        if (it == groups.end()) {
            groups.push_back(p);
        } else {
            it->merge(p);
        }
    }
    std::vector<MeasurementSetting> out;
    for (const auto &g : groups) {
        out.push_back(close_partial(n, g));
    }
    return sorted_settings(std::move(out));
}

std::vector<MeasurementSetting> canonical_from_classes(int n, const ClassMap &classes) {
    std::vector<MeasurementSetting> out;
    for (const auto &[key, part] : classes) {
        out.push_back({n, key.first, key.second});
    }
    return sorted_settings(std::move(out));
}

template <class Fn>
void for_each_witness_string(const WitnessSpec &w, int symbolic_cap, Fn &&fn) {
    const Hypergraph &h = w.graph;
    int n = h.num_vertices();
    if (w.kind == WitnessKind::Projector) {
        if (n > symbolic_cap) {
            throw LimitExceeded("symbolic", symbolic_cap, n);
        }
        VertexMask full = (VertexMask{1} << n) - 1;
        for (VertexMask t = 1; t <= full; ++t) {
            for (const auto &p : decompose_stabilizer_product(h, t).strings) {
                fn(p);
            }
        }
    } else {
        if (n > kMaxStateQubits) {
            throw LimitExceeded("symbolic", kMaxStateQubits, n);
        }
        for (int i = 1; i <= n; ++i) {
            for (const auto &p : decompose_stabilizer_product(h, VertexMask{1} << (i - 1)).strings) {
                fn(p);
            }
        }
    }
}

}  // namespace

int PauliString::y_count() const {
    return std::popcount(x & z);
}

std::string PauliString::letters() const {
    return letters_of(n, x, z);
}

std::string MeasurementSetting::letters() const {
    return letters_of(n, x, z);
}

bool MeasurementSetting::covers(const PauliString &p) const {
    Label used = p.x | p.z;
    return ((p.x ^ x) & used) == 0 && ((p.z ^ z) & used) == 0;
}

Decomposition decompose_stabilizer_product(const Hypergraph &h, VertexMask subset) {
    int n = h.num_vertices();
    VertexMask full = (VertexMask{1} << n) - 1;
    if (subset == 0 || (subset & ~full) != 0) {
        throw InvalidArgument("stabilizer subset empty or outside 1..n");
    }
    if (n > kMaxStateQubits) {
        throw LimitExceeded("qubit", kMaxStateQubits, n);
    }
    StabilizerAction k(h);
    auto members = vertices_of(subset);
    Label t = label_mask(subset, n);
    Label dim = Label{1} << n;

    // The product maps |y> to d(y) |y ^ T>, i.e. it is X^T D with D diagonal.
    // The K_i commute, so the order of the chain does not matter.
    std::vector<std::int64_t> diag(dim);
    for (Label y = 0; y < dim; ++y) {
        Label cur = y;
        int sign = 1;
        for (int i : members) {
            auto img = k.apply(i, cur);
            sign *= img.sign;
            cur = img.target;
        }
        diag[y] = sign;
    }
    walsh_hadamard(diag);

    Decomposition out;
    for (Label s = 0; s < dim; ++s) {
        int overlap = std::popcount(s & t);
        if (overlap % 2 == 1) {
            ++out.cancelled_odd_y;
            if (diag[s] != 0) {
                out.hermitian = false;
            }
            continue;
        }
        if (diag[s] == 0) {
            continue;
        }
        std::int64_t sign = (overlap / 2) % 2 == 0 ? 1 : -1;
        out.strings.push_back({n, t, s, Rational(sign * diag[s], static_cast<std::int64_t>(dim))});
    }
    std::sort(out.strings.begin(), out.strings.end(),
              [](const PauliString &a, const PauliString &b) { return a.letters() < b.letters(); });
    return out;
}

bool validate_decomposition(const Hypergraph &h, VertexMask subset, const Decomposition &d,
                            int dense_cap) {
    int n = h.num_vertices();
    if (n > dense_cap) {
        throw LimitExceeded("dense", dense_cap, n);
    }
    auto dim = static_cast<Eigen::Index>(Label{1} << n);

    // Each K_i as a dense integer matrix: C_{e \ i} phases, then X on i.
    IntMat product = IntMat::Identity(dim, dim);
    for (int i : vertices_of(subset)) {
        IntMat ki = IntMat::Zero(dim, dim);
        Label flip = qubit_bit(i, n);
        for (Eigen::Index y = 0; y < dim; ++y) {
            std::int64_t sign = 1;
            for (VertexMask e : h.incident_edges(i)) {
                Label rest = label_mask(e & ~(VertexMask{1} << (i - 1)), n);
                if ((static_cast<Label>(y) & rest) == rest) {
                    sign = -sign;
                }
            }
            ki(static_cast<Eigen::Index>(static_cast<Label>(y) ^ flip), y) = sign;
        }
        product = ki * product;
    }
    product *= dim;

    // Sum of strings, scaled by 2^n: P|y> = i^{#Y} (-1)^{|y & z|} |y ^ x>.
    IntMat rebuilt = IntMat::Zero(dim, dim);
    for (const auto &p : d.strings) {
        int ny = p.y_count();
        if (ny % 2 != 0 || p.coefficient.denominator() > dim ||
            dim % p.coefficient.denominator() != 0) {
            return false;
        }
        std::int64_t c = p.coefficient.numerator() * (dim / p.coefficient.denominator());
        if ((ny / 2) % 2 == 1) {
            c = -c;
        }
        for (Eigen::Index y = 0; y < dim; ++y) {
            Label ly = static_cast<Label>(y);
            std::int64_t s = std::popcount(ly & p.z) % 2 == 0 ? c : -c;
            rebuilt(static_cast<Eigen::Index>(ly ^ p.x), y) += s;
        }
    }
    return rebuilt == product;
}

std::vector<MeasurementSetting> canonical_settings(const std::vector<PauliString> &strings) {
    int n = check_strings(strings);
    ClassMap classes;
    for (const auto &p : strings) {
        add_to_classes(classes, p);
    }
    return canonical_from_classes(n, classes);
}

std::vector<MeasurementSetting> greedy_min_settings(const std::vector<PauliString> &strings) {
    int n = check_strings(strings);
    ClassMap classes;
    for (const auto &p : strings) {
        add_to_classes(classes, p);
    }
    return greedy_from_classes(n, classes);
}

std::vector<MeasurementSetting> exact_min_settings(const std::vector<PauliString> &strings) {
    int n = check_strings(strings);
    if (n > 4) {
        throw LimitExceeded("exhaustive setting search", 4, n);
    }
    std::vector<Partial> reqs;
    for (const auto &p : strings) {
        if (p.is_identity()) {
            continue;
        }
        Partial r = partial_of(p);
        bool seen = std::any_of(reqs.begin(), reqs.end(), [&](const Partial &o) {
            return o.pinned == r.pinned && o.x == r.x && o.z == r.z;
        });
        if (!seen) {
            reqs.push_back(r);
        }
    }
    // Fully pinned requirements first: they have a single candidate.
    std::sort(reqs.begin(), reqs.end(), [n](const Partial &a, const Partial &b) {
        int pa = std::popcount(a.pinned), pb = std::popcount(b.pinned);
        return pa != pb ? pa > pb : a.key(n) < b.key(n);
    });

    std::vector<MeasurementSetting> best = greedy_min_settings(strings);
    std::vector<MeasurementSetting> chosen;
    std::vector<int> cover_count(reqs.size(), 0);
    std::uint64_t nodes = 0;
    const std::uint64_t node_cap = 20'000'000;

    auto lower_bound = [&]() {
        // Pairwise incompatible uncovered requirements need distinct settings.
        std::vector<const Partial *> picked;
        for (std::size_t i = 0; i < reqs.size(); ++i) {
            if (cover_count[i] > 0) continue;
            bool clash_all = std::all_of(picked.begin(), picked.end(),
                                         [&](const Partial *q) { return !q->compatible(reqs[i]); });
            if (clash_all) picked.push_back(&reqs[i]);
        }
        return picked.size();
    };

    std::function<void()> search = [&]() {
        if (++nodes > node_cap) {
            throw LimitExceeded("exhaustive search node", static_cast<std::int64_t>(node_cap),
                                static_cast<std::int64_t>(nodes));
        }
        std::size_t first = reqs.size();
        for (std::size_t i = 0; i < reqs.size(); ++i) {
            if (cover_count[i] == 0) {
                first = i;
                break;
            }
        }
        if (first == reqs.size()) {
            if (chosen.size() < best.size()) {
                best = chosen;
            }
            return;
        }
        if (chosen.size() + lower_bound() >= best.size()) {
            return;
        }
        const Partial &r = reqs[first];
        std::vector<int> free_qubits;
        for (int q = 1; q <= n; ++q) {
            if (!(r.pinned & qubit_bit(q, n))) {
                free_qubits.push_back(q);
            }
        }
        std::uint64_t combos = 1;
        for (std::size_t j = 0; j < free_qubits.size(); ++j) {
            combos *= 3;
        }
        for (std::uint64_t c = 0; c < combos; ++c) {
            MeasurementSetting s{n, r.x, r.z};
            std::uint64_t rest = c;
            for (int q : free_qubits) {
                Label b = qubit_bit(q, n);
                switch (rest % 3) {
                    case 0: s.x |= b; break;
                    case 1: s.x |= b; s.z |= b; break;
                    default: s.z |= b; break;
                }
                rest /= 3;
            }
            std::vector<std::size_t> hit;
            for (std::size_t i = 0; i < reqs.size(); ++i) {
                PauliString probe{n, reqs[i].x, reqs[i].z, Rational(1)};
                if (s.covers(probe)) {
                    hit.push_back(i);
                    ++cover_count[i];
                }
            }
            chosen.push_back(s);
            search();
            chosen.pop_back();
            for (std::size_t i : hit) {
                --cover_count[i];
            }
        }
    };
    search();
    return sorted_settings(best);
}

std::string setting_mode_name(SettingMode mode) {
    switch (mode) {
        case SettingMode::Canonical:
            return "canonical";
        case SettingMode::Greedy:
            return "greedy";
        case SettingMode::Exact:
            return "exact";
    }
    return "?";
}

SettingMode parse_setting_mode(std::string_view name) {
    if (name == "canonical") return SettingMode::Canonical;
    if (name == "greedy") return SettingMode::Greedy;
    if (name == "exact") return SettingMode::Exact;
    throw InvalidArgument("unknown setting mode '" + std::string(name) +
                          "' (expected canonical, greedy or exact)");
}

std::vector<PauliString> witness_strings(const WitnessSpec &w, int symbolic_cap) {
    std::vector<PauliString> out;
    for_each_witness_string(w, symbolic_cap, [&](const PauliString &p) { out.push_back(p); });
    return out;
}

std::vector<MeasurementSetting> witness_settings(const WitnessSpec &w, SettingMode mode,
                                                 int symbolic_cap) {
    int n = w.graph.num_vertices();
    if (mode == SettingMode::Exact) {
        return exact_min_settings(witness_strings(w, symbolic_cap));
    }
    // Strings stream straight into their classes.
    ClassMap classes;
    for_each_witness_string(w, symbolic_cap,
                            [&](const PauliString &p) { add_to_classes(classes, p); });
    return mode == SettingMode::Canonical ? canonical_from_classes(n, classes)
                                          : greedy_from_classes(n, classes);
}

std::uint64_t witness_setting_count(const WitnessSpec &w, SettingMode mode, int symbolic_cap) {
    return witness_settings(w, mode, symbolic_cap).size();
}

}  // namespace hyperwit

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

#include "core/witness.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "core/error.hpp"
#include "core/sign_state.hpp"

namespace hyperwit {

namespace {

constexpr double kRobustTol = 1e-12;

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw InvalidArgument("alpha must lie strictly between 0 and 1, got " +
                              std::to_string(alpha));
    }
}

void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidArgument("noise fraction p must lie in [0, 1], got " + std::to_string(p));
    }
}

struct ExactOps {
    static bool nonneg(const Exact &v) {
        return v.sign() >= 0;
    }
    static bool zero(const Exact &v) {
        return v.sign() == 0;
    }
    static bool negative(const Exact &v) {
        return v.sign() < 0;
    }
    static double to_d(const Exact &v) {
        return v.to_double();
    }
};

struct DoubleOps {
    static bool nonneg(double v) {
        return v >= -kRobustTol;
    }
    static bool zero(double v) {
        return std::abs(v) <= kRobustTol;
    }
    static bool negative(double v) {
        return v < -kRobustTol;
    }
    static double to_d(double v) {
        return v;
    }
};

template <class T, class Ops>
FeasibilityReport feasibility_impl(int n, const T &alpha, const T &beta, const T &C) {
    if (n < 1) {
        throw InvalidArgument("feasibility needs n >= 1");
    }
    FeasibilityReport r;
    // Eigenvalues on phi_s depend only on w = |s|.
    bool psd = true;
    for (int w = 0; w <= n; ++w) {
        T tilde = beta - T(n - 2 * w);
        T proj = w == 0 ? alpha - T(1) : alpha;
        T margin = tilde - C * proj;
        r.margins.push_back(Ops::to_d(margin));
        if (Ops::zero(margin)) {
            r.tight.push_back(w);
        }
        psd = psd && Ops::nonneg(margin);
    }
    bool positive_c = !Ops::nonneg(T(0) - C);
    bool below_n = Ops::negative(beta - T(n));
    r.feasible = psd && positive_c && below_n;

    // The same region written as the inequality list: the first line, then
    // beta +- (n - 2m) >= C alpha, ending at beta >= C alpha (n even) or
    // beta +- 1 >= C alpha (n odd).
    bool listed = below_n && Ops::nonneg(beta - T(n) - C * (alpha - T(1))) && positive_c;
    listed = listed && Ops::nonneg(beta + T(n) - C * alpha);
    for (int m = 1; 2 * m < n; ++m) {
        listed = listed && Ops::nonneg(beta + T(n - 2 * m) - C * alpha);
        listed = listed && Ops::nonneg(beta - T(n - 2 * m) - C * alpha);
    }
    if (n % 2 == 0) {
        listed = listed && Ops::nonneg(beta - C * alpha);
    }
    r.listed_form_agrees = listed == r.feasible;
    return r;
}

Eigen::MatrixXd dense_witness(const WitnessSpec &w) {
    const Hypergraph &h = w.graph;
    int n = h.num_vertices();
    auto dim = static_cast<Eigen::Index>(Label{1} << n);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    if (w.kind == WitnessKind::Projector) {
        SignState psi = build_state(h);
        Eigen::VectorXd v(dim);
        for (Eigen::Index x = 0; x < dim; ++x) {
            v(x) = psi.amplitude(static_cast<Label>(x));
        }
        m = w.alpha * Eigen::MatrixXd::Identity(dim, dim) - v * v.transpose();
    } else {
        StabilizerAction k(h);
        m = w.beta * Eigen::MatrixXd::Identity(dim, dim);
        for (int i = 1; i <= n; ++i) {
            for (Eigen::Index y = 0; y < dim; ++y) {
                auto img = k.apply(i, static_cast<Label>(y));
                m(static_cast<Eigen::Index>(img.target), y) -= img.sign;
            }
        }
    }
    return m;
}

}  // namespace

std::string witness_kind_name(WitnessKind kind) {
    return kind == WitnessKind::Projector ? "projector" : "stabilizer";
}

WitnessKind parse_witness_kind(std::string_view name) {
    if (name == "projector") return WitnessKind::Projector;
    if (name == "stabilizer") return WitnessKind::Stabilizer;
    throw InvalidArgument("unknown witness kind '" + std::string(name) +
                          "' (expected projector or stabilizer)");
}

std::string alpha_source_name(AlphaSource source) {
    switch (source) {
        case AlphaSource::ClosedForm:
            return "closed-form";
        case AlphaSource::KmaxBound:
            return "kmax-bound";
        case AlphaSource::Measured:
            return "measured";
        case AlphaSource::Procedure:
            return "procedure";
    }
    return "?";
}

AlphaSource parse_alpha_source(std::string_view name) {
    if (name == "closed-form") return AlphaSource::ClosedForm;
    if (name == "kmax-bound") return AlphaSource::KmaxBound;
    if (name == "measured") return AlphaSource::Measured;
    if (name == "procedure") return AlphaSource::Procedure;
    throw InvalidArgument("unknown alpha source '" + std::string(name) +
                          "' (expected closed-form, kmax-bound, measured or procedure)");
}

std::optional<Family> detect_family(const Hypergraph &h) {
    for (Family f : {Family::SingleMaxEdge, Family::AllNminus1, Family::AllGeNminus1}) {
        if (h.num_vertices() >= family_min_n(f) && build_family(f, h.num_vertices()) == h) {
            return f;
        }
    }
    return std::nullopt;
}

AlphaValue witness_alpha(const Hypergraph &h, std::optional<AlphaSource> source,
                         const Limits &limits) {
    auto family = detect_family(h);
    AlphaSource s = source.value_or(family ? AlphaSource::ClosedForm : AlphaSource::KmaxBound);
    AlphaValue a;
    a.source = s;
    switch (s) {
        case AlphaSource::ClosedForm:
            if (!family) {
                throw InvalidArgument("no closed form for " + h.str() +
                                      "; use the kmax-bound, measured or procedure source");
            }
            a.exact = closed_form_alpha(*family, h.num_vertices());
            break;
        case AlphaSource::KmaxBound: {
            int k = h.k_max();
            if (k < 2) {
                throw PreconditionFailed("k_max bound needs an edge of cardinality >= 2");
            }
            a.exact = Exact(Rational(pow2(k - 1) - 1, pow2(k - 1)));
            break;
        }
        case AlphaSource::Measured:
            a.value = alpha_multipartite(build_state(h), limits).alpha;
            return a;
        case AlphaSource::Procedure: {
            auto r = procedure_alpha(h, limits);
            if (!r.alpha) {
                throw PreconditionFailed("procedure did not produce alpha for " + h.str());
            }
            a.value = *r.alpha;
            return a;
        }
    }
    a.value = a.exact->to_double();
    return a;
}

WitnessSpec projector_witness(const Hypergraph &h, const AlphaValue &alpha) {
    check_alpha(alpha.value);
    WitnessSpec w;
    w.kind = WitnessKind::Projector;
    w.graph = h;
    w.source = alpha.source;
    w.alpha = alpha.value;
    int n = h.num_vertices();
    double dim = std::ldexp(1.0, n);
    w.robustness = (1.0 - w.alpha) / (1.0 - 1.0 / dim);
    if (alpha.exact) {
        w.alpha_exact = *alpha.exact;
        Rational noise_weight(pow2(n) - 1, pow2(n));
        w.robustness_exact = (Exact(1) - *alpha.exact) / Exact(noise_weight);
        w.robustness = w.robustness_exact->to_double();
    }
    return w;
}

WitnessSpec stabilizer_witness(const Hypergraph &h, const AlphaValue &alpha) {
    check_alpha(alpha.value);
    WitnessSpec w;
    w.kind = WitnessKind::Stabilizer;
    w.graph = h;
    w.source = alpha.source;
    w.alpha = alpha.value;
    int n = h.num_vertices();
    w.C = 2.0;
    w.beta = n - 2.0 * (1.0 - w.alpha);
    w.robustness = (n - w.beta) / n;
    if (alpha.exact) {
        w.alpha_exact = *alpha.exact;
        w.C_exact = Exact(2);
        w.beta_exact = Exact(n) - Exact(2) * (Exact(1) - *alpha.exact);
        w.robustness_exact = (Exact(n) - *w.beta_exact) / Exact(n);
        w.beta = w.beta_exact->to_double();
        w.robustness = w.robustness_exact->to_double();
    }
    return w;
}

FeasibilityReport feasibility_check(int n, const Exact &alpha, const Exact &beta, const Exact &C) {
    return feasibility_impl<Exact, ExactOps>(n, alpha, beta, C);
}

FeasibilityReport feasibility_check(int n, double alpha, double beta, double C) {
    return feasibility_impl<double, DoubleOps>(n, alpha, beta, C);
}

double expectation(const WitnessSpec &w, double p) {
    check_p(p);
    int n = w.graph.num_vertices();
    if (w.kind == WitnessKind::Projector) {
        return (w.alpha - 1.0) + p * (1.0 - std::ldexp(1.0, -n));
    }
    // Stabilizers are traceless, and each has expectation 1 on |H>.
    return w.beta - (1.0 - p) * n;
}

std::optional<Exact> expectation_exact(const WitnessSpec &w, const Rational &p) {
    if (p < 0 || p > 1) {
        throw InvalidArgument("noise fraction p must lie in [0, 1], got " + to_string(p));
    }
    int n = w.graph.num_vertices();
    if (w.kind == WitnessKind::Projector) {
        if (!w.alpha_exact) {
            return std::nullopt;
        }
        return (*w.alpha_exact - Exact(1)) + Exact(p * Rational(pow2(n) - 1, pow2(n)));
    }
    if (!w.beta_exact) {
        return std::nullopt;
    }
    return *w.beta_exact - Exact((Rational(1) - p) * Rational(n));
}

double expectation_dense(const WitnessSpec &w, double p, int dense_cap) {
    check_p(p);
    int n = w.graph.num_vertices();
    if (n > dense_cap) {
        throw LimitExceeded("dense", dense_cap, n);
    }
    Eigen::MatrixXd m = dense_witness(w);
    auto dim = m.rows();
    SignState psi = build_state(w.graph);
    Eigen::VectorXd v(dim);
    for (Eigen::Index x = 0; x < dim; ++x) {
        v(x) = psi.amplitude(static_cast<Label>(x));
    }
    Eigen::MatrixXd rho = (1.0 - p) * v * v.transpose();
    rho.diagonal().array() += p / static_cast<double>(dim);
    return (m * rho).trace();
}

std::vector<RobustnessRow> robustness_table(Family family, int n_min, int n_max) {
    if (n_min < family_min_n(family) || n_max < n_min || n_max > 62) {
        throw InvalidArgument("n range " + std::to_string(n_min) + ".." + std::to_string(n_max) +
                              " outside the validity of " + family_name(family));
    }
    std::vector<RobustnessRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        Hypergraph h = build_family(family, n);
        AlphaValue a{closed_form_alpha(family, n), 0.0, AlphaSource::ClosedForm};
        a.value = a.exact->to_double();
        rows.push_back({n, *projector_witness(h, a).robustness_exact,
                        *stabilizer_witness(h, a).robustness_exact});
    }
    return rows;
}

BiseparableSampling sample_biseparable(const WitnessSpec &w, std::uint64_t samples,
                                       std::uint64_t seed) {
    using cd = std::complex<double>;
    const Hypergraph &h = w.graph;
    int n = h.num_vertices();
    if (n < 2 || n > 12) {
        throw InvalidArgument("biseparable sampling covers 2 <= n <= 12");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_vector = [&](std::size_t dim) {
        std::vector<cd> v(dim);
        double norm = 0.0;
        for (auto &c : v) {
            c = cd(gauss(rng), gauss(rng));
            norm += std::norm(c);
        }
        for (auto &c : v) {
            c /= std::sqrt(norm);
        }
        return v;
    };

    auto cuts = all_bipartitions(n);
    std::uniform_int_distribution<std::size_t> pick(0, cuts.size() - 1);
    SignState psi = build_state(h);
    StabilizerAction k(h);
    Label dim = Label{1} << n;

    BiseparableSampling out;
    out.min_value = std::numeric_limits<double>::infinity();
    for (std::uint64_t t = 0; t < samples; ++t) {
        const Bipartition &bp = cuts[pick(rng)];
        auto a_qubits = bp.a_vertices();
        auto b_qubits = bp.b_vertices();
        auto va = random_vector(std::size_t{1} << a_qubits.size());
        auto vb = random_vector(std::size_t{1} << b_qubits.size());
        std::vector<cd> phi(dim);
        for (Label x = 0; x < dim; ++x) {
            std::size_t ia = 0, ib = 0;
            for (int q : a_qubits) {
                ia = (ia << 1) | ((x >> (n - q)) & 1);
            }
            for (int q : b_qubits) {
                ib = (ib << 1) | ((x >> (n - q)) & 1);
            }
            phi[x] = va[ia] * vb[ib];
        }
        double value;
        if (w.kind == WitnessKind::Projector) {
            cd ov = 0.0;
            for (Label x = 0; x < dim; ++x) {
                ov += psi.amplitude(x) * phi[x];
            }
            value = w.alpha - std::norm(ov);
        } else {
            double sum = 0.0;
            for (int i = 1; i <= n; ++i) {
                cd e = 0.0;
                for (Label y = 0; y < dim; ++y) {
                    auto img = k.apply(i, y);
                    e += std::conj(phi[img.target]) * double(img.sign) * phi[y];
                }
                sum += e.real();
            }
            value = w.beta - sum;
        }
        out.min_value = std::min(out.min_value, value);
        ++out.samples;
    }
    out.passed = out.min_value >= -kSpectralTol;
    return out;
}

}  // namespace hyperwit

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

#include "core/report.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <json.hpp>

#include "core/error.hpp"
#include "core/locc.hpp"
#include "core/random_hypergraph.hpp"
#include "core/sign_state.hpp"

namespace hyperwit::report {

namespace {

using json = nlohmann::ordered_json;

json value(const Rational &r) {
    return {{"num", r.numerator()}, {"den", r.denominator()}, {"float", to_double(r)}};
}

json value(const Exact &e) {
    if (e.is_rational()) {
        return value(e.rational());
    }
    return {{"irrational", true}, {"float", e.to_double()}};
}

json vertex_list(VertexMask m) {
    return vertices_of(m);
}

std::string joined(const std::vector<int> &vs, char sep) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(vs[i]);
    }
    return s;
}

// Shortest round-trip representation, as used by the JSON output.
std::string num(double v) {
    return json(v).dump();
}

std::string rational_cells(const std::optional<Exact> &e) {
    if (e && e->is_rational()) {
        return std::to_string(e->rational().numerator()) + "," +
               std::to_string(e->rational().denominator());
    }
    return ",";
}

std::string dump(const json &j) {
    return j.dump(2) + "\n";
}

Rational parse_fraction(std::string_view text) {
    std::string s(text);
    auto bad = [&]() { return InvalidArgument("cannot parse '" + s + "' as a number in [0, 1]"); };
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            std::size_t used = 0;
            std::int64_t a = std::stoll(s.substr(0, slash), &used);
            if (used != slash) throw bad();
            std::string rest = s.substr(slash + 1);
            std::int64_t b = std::stoll(rest, &used);
            if (used != rest.size() || b == 0) throw bad();
            return Rational(a, b);
        }
        auto dot = s.find('.');
        std::string digits = s;
        std::int64_t den = 1;
        if (dot != std::string::npos) {
            std::string frac = s.substr(dot + 1);
            if (frac.size() > 15) throw bad();
            digits = s.substr(0, dot) + frac;
            den = static_cast<std::int64_t>(std::pow(10, frac.size()));
        }
        std::size_t used = 0;
        std::int64_t a = std::stoll(digits, &used);
        if (used != digits.size()) throw bad();
        return Rational(a, den);
    } catch (const std::logic_error &) {
        throw bad();
    }
}

json certificate_json(const ReductionCertificate &c) {
    json branches = json::array();
    for (const auto &b : c.branches) {
        json steps = json::array();
        for (const auto &s : b.steps) {
            json j{{"op", step_op_name(s.kind)}};
            switch (s.kind) {
                case StepKind::ZMeasure:
                    j["qubit"] = s.qubit;
                    j["outcome"] = s.outcome;
                    break;
                case StepKind::PauliX:
                case StepKind::PauliZ:
                    j["qubit"] = s.qubit;
                    break;
                case StepKind::RemoveNonCrossing:
                case StepKind::SelectEdge:
                    j["edge"] = vertex_list(s.edge);
                    break;
            }
            j["after"] = s.after.str();
            steps.push_back(std::move(j));
        }
        branches.push_back(
            {{"kappa_prime", b.kappa_prime}, {"final_edge", vertex_list(b.final_edge)},
             {"steps", std::move(steps)}});
    }
    json j{{"bipartition", c.bipartition.str()},
           {"partA", c.bipartition.a_vertices()},
           {"first_edge", vertex_list(c.first_edge)},
           {"kappa", c.kappa},
           {"kappa_prime_worst", c.kappa_prime_worst},
           {"bound", value(c.bound)},
           {"validated", c.validated},
           {"measured_EAB", c.measured_EAB ? json(*c.measured_EAB) : json(nullptr)},
           {"bound_holds", c.bound_holds},
           {"full_tree", c.full_tree},
           {"leaf_count", c.leaf_count},
           {"total_steps", c.total_steps},
           {"branches", std::move(branches)}};
    if (!c.warnings.empty()) {
        j["warnings"] = c.warnings;
    }
    return j;
}

json witness_json(const WitnessSpec &w) {
    json j{{"kind", witness_kind_name(w.kind)},
           {"hypergraph", w.graph.str()},
           {"alpha_source", alpha_source_name(w.source)}};
    j["alpha"] = w.alpha_exact ? value(*w.alpha_exact) : json(w.alpha);
    if (w.kind == WitnessKind::Stabilizer) {
        j["beta"] = w.beta_exact ? value(*w.beta_exact) : json(w.beta);
        j["C"] = w.C_exact ? value(*w.C_exact) : json(w.C);
    }
    j["robustness"] = w.robustness_exact ? value(*w.robustness_exact) : json(w.robustness);
    if (w.robustness_exact && w.robustness_exact->is_rational()) {
        j["robustness_num"] = w.robustness_exact->rational().numerator();
        j["robustness_den"] = w.robustness_exact->rational().denominator();
    } else {
        j["robustness_float"] = w.robustness;
    }
    return j;
}

WitnessSpec make_witness(const Hypergraph &h, const WitnessRequest &req, const Limits &limits) {
    AlphaValue a = witness_alpha(h, req.source, limits);
    return req.kind == WitnessKind::Projector ? projector_witness(h, a) : stabilizer_witness(h, a);
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw InvalidArgument("unknown format '" + std::string(name) + "' (expected json or csv)");
}

Output state(const Hypergraph &h) {
    SignState psi = build_state(h);
    json j{{"n", h.num_vertices()},
           {"hypergraph", h.str()},
           {"edges", h.edges()},
           {"negative_count", psi.negative_count()},
           {"hex", psi.to_hex()}};
    return {dump(j), true};
}

Output state_dump(int n, std::string_view hex) {
    SignState psi = SignState::from_hex(n, hex);
    auto ex = extract_hypergraph(psi);
    json j{{"n", n},
           {"hex", psi.to_hex()},
           {"hypergraph", ex.graph.str()},
           {"edges", ex.graph.edges()},
           {"global_phase", ex.global_phase},
           {"negative_count", psi.negative_count()}};
    return {dump(j), true};
}

Output verify(const Hypergraph &h, std::string_view what, const Limits &limits) {
    json j{{"check", what}, {"hypergraph", h.str()}};
    bool ok = true;
    if (what == "stabilizers" || what == "basis") {
        StabilizerCheck c = verify_stabilizer_formalism(h, limits.dense_cap);
        if (what == "stabilizers") {
            j["stabilized"] = c.stabilized;
            j["eigen_relation"] = c.eigen_relation;
            j["anticommutation"] = c.anticommutation;
            ok = c.stabilized && c.eigen_relation && c.anticommutation;
        } else {
            j["orthonormal"] = c.orthonormal;
            j["eigen_relation"] = c.eigen_relation;
            ok = c.orthonormal && c.eigen_relation;
        }
    } else if (what == "projector") {
        ProjectorCheck c = projector_identity_check(h, limits.dense_cap);
        j["max_deviation_product"] = value(c.max_deviation_product);
        j["max_deviation_group"] = value(c.max_deviation_group);
        j["group_elements"] = c.group_elements;
        j["distinct_group_elements"] = c.distinct_group_elements;
        ok = c.passed();
    } else {
        throw InvalidArgument("unknown check '" + std::string(what) +
                              "' (expected stabilizers, basis or projector)");
    }
    j["passed"] = ok;
    return {dump(j), ok};
}

Output verify_structure(Family family, int n, std::optional<int> k) {
    json rows = json::array();
    bool ok = true;
    int k_lo = k ? *k : 2;
    int k_hi = k ? *k : n / 2;
    for (int kk = k_lo; kk <= k_hi; ++kk) {
        StructureCheck c = reduced_structure_check(family, n, kk);
        bool row_ok = c.max_abs_deviation == 0 &&
                      c.first_row_norm == c.predicted_first_row_norm &&
                      c.second_row_norm == c.predicted_second_row_norm;
        json r{{"k", kk},
               {"max_abs_deviation", value(c.max_abs_deviation)},
               {"scaled_entries", c.scaled_entries},
               {"infinity_norm", value(c.infinity_norm)},
               {"first_row_norm", value(c.first_row_norm)},
               {"predicted_first_row_norm", value(c.predicted_first_row_norm)},
               {"second_row_norm", value(c.second_row_norm)},
               {"predicted_second_row_norm", value(c.predicted_second_row_norm)}};
        if (c.v) {
            r["v"] = *c.v;
        }
        r["passed"] = row_ok;
        ok = ok && row_ok;
        rows.push_back(std::move(r));
    }
    json j{{"check", "structure"},
           {"family", family_name(family)},
           {"n", n},
           {"scale", pow2(n)},
           {"rows", std::move(rows)},
           {"passed", ok}};
    return {dump(j), ok};
}

Output entanglement(const Hypergraph &h, std::string_view mode, bool cross_check,
                    const Limits &limits, Format format) {
    if (mode != "brute" && mode != "procedure" && mode != "closed-form") {
        throw InvalidArgument("unknown entanglement mode '" + std::string(mode) +
                              "' (expected brute, procedure or closed-form)");
    }
    int n = h.num_vertices();
    auto family = detect_family(h);
    json j{{"mode", mode}, {"hypergraph", h.str()}, {"n", n}};
    if (family) {
        j["family"] = family_name(*family);
    }

    std::optional<EntanglementReport> brute;
    std::optional<ProcedureResult> proc;
    std::optional<Exact> closed;
    auto need_brute = [&]() {
        if (!brute) brute = alpha_multipartite(build_state(h), limits);
    };
    auto need_closed = [&]() {
        if (!closed && family) closed = closed_form_alpha(*family, n);
    };

    if (mode == "brute") {
        need_brute();
        if (format == Format::Csv) {
            std::ostringstream os;
            os << "partA,partB,alpha,E\n";
            for (const auto &b : brute->per_bipartition) {
                os << joined(b.bipartition.a_vertices(), ' ') << ","
                   << joined(b.bipartition.b_vertices(), ' ') << "," << num(b.alpha) << ","
                   << num(1.0 - b.alpha) << "\n";
            }
            return {os.str(), true};
        }
        j["alpha"] = brute->alpha;
        j["E"] = brute->E;
        j["argmax_bipartition"] = brute->argmax_bipartition.str();
        json per = json::array();
        for (const auto &b : brute->per_bipartition) {
            per.push_back({{"partA", b.bipartition.a_vertices()}, {"alpha", b.alpha}});
        }
        j["per_bipartition"] = std::move(per);
    } else if (mode == "procedure") {
        proc = procedure_alpha(h, limits);
        if (format == Format::Csv) {
            std::ostringstream os;
            os << "k,infinity_norm,s_max_squared,bounded,lambda_max\n";
            for (const auto &s : proc->steps) {
                os << s.k << "," << num(s.infinity_norm) << "," << num(proc->s_max_squared) << ","
                   << (s.bounded ? "true" : "false") << ","
                   << (s.lambda_max ? num(*s.lambda_max) : "") << "\n";
            }
            return {os.str(), true};
        }
        j["alpha"] = proc->alpha ? json(*proc->alpha) : json(nullptr);
        j["E"] = proc->alpha ? json(1.0 - *proc->alpha) : json(nullptr);
        j["s_max_squared"] = proc->s_max_squared;
        j["certified"] = proc->certified;
        j["method"] = proc->method;
        json steps = json::array();
        for (const auto &s : proc->steps) {
            steps.push_back({{"k", s.k},
                             {"infinity_norm", s.infinity_norm},
                             {"bounded", s.bounded},
                             {"lambda_max", s.lambda_max ? json(*s.lambda_max) : json(nullptr)}});
        }
        j["steps"] = std::move(steps);
    } else {
        if (!family) {
            throw InvalidArgument("closed forms cover the single-max, all-n-1 and all-ge-n-1 "
                                  "families only; got " + h.str());
        }
        need_closed();
        if (format == Format::Csv) {
            std::ostringstream os;
            os << "family,n,alpha_num,alpha_den,alpha,E\n";
            os << family_name(*family) << "," << n << "," << rational_cells(closed) << ","
               << num(closed->to_double()) << "," << num(1.0 - closed->to_double()) << "\n";
            return {os.str(), true};
        }
        j["alpha"] = value(*closed);
        j["E"] = value(Exact(1) - *closed);
    }

    bool ok = true;
    if (cross_check) {
        need_brute();
        need_closed();
        if (!proc && is_permutation_invariant(build_state(h))) {
            proc = procedure_alpha(h, limits);
        }
        json cc{{"brute", brute->alpha}};
        bool match = true;
        if (closed) {
            cc["closed_form"] = value(*closed);
            match = match && std::abs(closed->to_double() - brute->alpha) <= kSpectralTol;
        } else {
            cc["closed_form"] = nullptr;
        }
        if (proc && proc->alpha) {
            cc["procedure"] = *proc->alpha;
            match = match && std::abs(*proc->alpha - brute->alpha) <= kSpectralTol;
        } else {
            cc["procedure"] = nullptr;
        }
        cc["tolerance"] = kSpectralTol;
        cc["match"] = match;
        j["cross_check"] = std::move(cc);
        j["match"] = match;
        ok = match;
    }
    return {dump(j), ok};
}

Output reduce(const Hypergraph &h, std::string_view part_a, const Limits &limits, Format format) {
    (void)limits;
    int n = h.num_vertices();
    std::vector<Bipartition> cuts;
    if (part_a.empty()) {
        cuts = all_bipartitions(n);
    } else {
        std::vector<int> vs;
        std::stringstream ss{std::string(part_a)};
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                std::size_t used = 0;
                vs.push_back(std::stoi(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::logic_error &) {
                throw InvalidArgument("cannot parse part A '" + std::string(part_a) +
                                      "' (expected e.g. 1,2,3)");
            }
        }
        cuts.push_back(Bipartition::from_vertices(n, vs));
    }
    std::vector<ReductionCertificate> certs;
    for (const auto &bp : cuts) {
        certs.push_back(hyperwit::reduce(h, bp));
    }
    bool ok = true;
    for (const auto &c : certs) {
        ok = ok && c.bound_holds && (c.validated || n > kOracleMaxQubits);
    }
    if (format == Format::Csv) {
        std::ostringstream os;
        os << "partA,partB,kappa,kappa_prime,bound_num,bound_den,bound,measured_EAB,validated,"
              "bound_holds,leaves\n";
        for (const auto &c : certs) {
            os << joined(c.bipartition.a_vertices(), ' ') << ","
               << joined(c.bipartition.b_vertices(), ' ') << "," << c.kappa << ","
               << c.kappa_prime_worst << "," << c.bound.numerator() << "," << c.bound.denominator()
               << "," << num(to_double(c.bound)) << ","
               << (c.measured_EAB ? num(*c.measured_EAB) : "") << ","
               << (c.validated ? "true" : "false") << "," << (c.bound_holds ? "true" : "false")
               << "," << c.leaf_count << "\n";
        }
        return {os.str(), ok};
    }
    json j{{"hypergraph", h.str()}};
    if (certs.size() == 1) {
        j["bound"] = to_double(certs.front().bound);
    }
    json arr = json::array();
    for (const auto &c : certs) {
        arr.push_back(certificate_json(c));
    }
    j["certificates"] = std::move(arr);
    j["passed"] = ok;
    return {dump(j), ok};
}

Output witness(const Hypergraph &h, const WitnessRequest &req, const Limits &limits) {
    WitnessSpec w = make_witness(h, req, limits);
    json j = witness_json(w);
    bool ok = true;
    if (w.kind == WitnessKind::Stabilizer) {
        FeasibilityReport f =
            w.alpha_exact ? feasibility_check(h.num_vertices(), *w.alpha_exact, *w.beta_exact,
                                              *w.C_exact)
                          : feasibility_check(h.num_vertices(), w.alpha, w.beta, w.C);
        j["feasible"] = f.feasible;
        j["tight_weights"] = f.tight;
        ok = f.feasible && f.listed_form_agrees;
    }
    j["passed"] = ok;
    return {dump(j), ok};
}

Output witness_eval(const Hypergraph &h, const WitnessRequest &req, std::string_view p_text,
                    const Limits &limits) {
    Rational p = parse_fraction(p_text);
    if (p < 0 || p > 1) {
        throw InvalidArgument("noise fraction p must lie in [0, 1], got " + to_string(p));
    }
    WitnessSpec w = make_witness(h, req, limits);
    json j = witness_json(w);
    j["p"] = value(p);
    double closed = expectation(w, to_double(p));
    auto exact = expectation_exact(w, p);
    j["expectation"] = exact ? value(*exact) : json(closed);
    bool ok = true;
    if (h.num_vertices() <= limits.dense_cap) {
        double dense = expectation_dense(w, to_double(p), limits.dense_cap);
        j["expectation_dense"] = dense;
        ok = std::abs(dense - closed) <= kSpectralTol;
        j["dense_matches"] = ok;
    }
    j["detects"] = exact ? exact->sign() < 0 : closed < 0;
    j["passed"] = ok;
    return {dump(j), ok};
}

Output robustness_table(Family family, int n_min, int n_max, Format format) {
    auto rows = robustness_table(family, n_min, n_max);
    if (format == Format::Csv) {
        std::ostringstream os;
        os << "n,pL_num,pL_den,pL,ptilde_num,ptilde_den,ptilde\n";
        for (const auto &r : rows) {
            os << r.n << "," << rational_cells(r.projector) << "," << num(r.projector.to_double())
               << "," << rational_cells(r.stabilizer) << "," << num(r.stabilizer.to_double())
               << "\n";
        }
        return {os.str(), true};
    }
    json arr = json::array();
    for (const auto &r : rows) {
        arr.push_back({{"n", r.n}, {"pL", value(r.projector)}, {"ptilde", value(r.stabilizer)}});
    }
    json j{{"family", family_name(family)}, {"rows", std::move(arr)}};
    return {dump(j), true};
}

Output settings(const Hypergraph &h, const WitnessRequest &req, SettingMode mode, bool list,
                const Limits &limits) {
    WitnessSpec w = make_witness(h, req, limits);
    auto found = witness_settings(w, mode, limits.symbolic_cap);
    json j{{"mode", setting_mode_name(mode)},
           {"kind", witness_kind_name(w.kind)},
           {"hypergraph", h.str()},
           {"count", found.size()}};
    if (list) {
        json arr = json::array();
        for (const auto &s : found) {
            arr.push_back(s.letters());
        }
        j["settings"] = std::move(arr);
    }
    return {dump(j), true};
}

Output lower_bound_campaign(const CampaignRequest &req, const Limits &limits, Format format) {
    if (req.count < 1 || req.n_min < 2 || req.n_max < req.n_min) {
        throw InvalidArgument("campaign needs count >= 1 and 2 <= n_min <= n_max");
    }
    if (req.n_max > limits.sweep_cap) {
        throw LimitExceeded("sweep", limits.sweep_cap, req.n_max);
    }
    std::mt19937_64 rng(req.seed);
    std::uniform_int_distribution<int> pick_n(req.n_min, req.n_max);

    struct Case {
        Hypergraph h;
        LowerBoundCheck check;
        int certificates = 0;
        int validated = 0;
        int certificate_holds = 0;
    };
    std::vector<Case> cases;
    bool ok = true;
    for (int t = 0; t < req.count; ++t) {
        int n = pick_n(rng);
        Hypergraph h = random_connected_hypergraph(rng, n);
        Case c{h, lower_bound_check(h, limits)};
        if (n <= req.reduce_max_n) {
            for (const auto &bp : all_bipartitions(n)) {
                auto cert = hyperwit::reduce(h, bp);
                ++c.certificates;
                c.validated += cert.validated;
                c.certificate_holds += cert.bound_holds;
            }
        }
        ok = ok && c.check.holds && c.validated == c.certificates &&
             c.certificate_holds == c.certificates;
        cases.push_back(std::move(c));
    }

    if (format == Format::Csv) {
        std::ostringstream os;
        os << "index,n,hypergraph,k_max,bound_num,bound_den,measured_E,holds,certificates,"
              "validated\n";
        for (std::size_t i = 0; i < cases.size(); ++i) {
            const auto &c = cases[i];
            os << i << "," << c.h.num_vertices() << ",\"" << c.h.str() << "\"," << c.check.k_max
               << "," << c.check.bound.numerator() << "," << c.check.bound.denominator() << ","
               << num(c.check.measured_E) << "," << (c.check.holds ? "true" : "false") << ","
               << c.certificates << "," << c.validated << "\n";
        }
        return {os.str(), ok};
    }
    json arr = json::array();
    int total_certs = 0, total_valid = 0;
    for (const auto &c : cases) {
        total_certs += c.certificates;
        total_valid += c.validated;
        arr.push_back({{"hypergraph", c.h.str()},
                       {"n", c.h.num_vertices()},
                       {"k_max", c.check.k_max},
                       {"bound", value(c.check.bound)},
                       {"measured_E", c.check.measured_E},
                       {"holds", c.check.holds},
                       {"certificates", c.certificates},
                       {"certificates_validated", c.validated}});
    }
    json j{{"seed", req.seed},
           {"count", req.count},
           {"n_min", req.n_min},
           {"n_max", req.n_max},
           {"reduce_max_n", req.reduce_max_n},
           {"certificates", total_certs},
           {"certificates_validated", total_valid},
           {"cases", std::move(arr)},
           {"passed", ok}};
    return {dump(j), ok};
}

}  // namespace hyperwit::report

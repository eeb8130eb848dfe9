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

#include "hyperwit/hyperwit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <random>
#include <string>

#include "core/entanglement.hpp"
#include "core/error.hpp"
#include "core/hypergraph.hpp"
#include "core/random_hypergraph.hpp"
#include "core/report.hpp"
#include "core/sign_state.hpp"

struct hw_hypergraph {
    hyperwit::Hypergraph graph;
};

struct hw_state {
    hyperwit::SignState state;
};

namespace {

thread_local std::string g_last_error;

hw_status fail(hw_status status, const char *message) {
    g_last_error = message;
    return status;
}

// Runs `fn`, translating exceptions into status codes.
template <class Fn>
hw_status guarded(Fn &&fn) {
    try {
        g_last_error.clear();
        fn();
        return HW_OK;
    } catch (const hyperwit::LimitExceeded &e) {
        return fail(HW_ERR_LIMIT, e.what());
    } catch (const hyperwit::InvalidArgument &e) {
        return fail(HW_ERR_INVALID_ARGUMENT, e.what());
    } catch (const hyperwit::PreconditionFailed &e) {
        return fail(HW_ERR_PRECONDITION, e.what());
    } catch (const hyperwit::ValidationError &e) {
        return fail(HW_ERR_VALIDATION, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(HW_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range &e) {
        return fail(HW_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(HW_ERR_LIMIT, "out of memory");
    } catch (const std::exception &e) {
        return fail(HW_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(HW_ERR_INTERNAL, "unknown error");
    }
}

void require(const void *p, const char *what) {
    if (p == nullptr) {
        throw hyperwit::InvalidArgument(std::string("null ") + what);
    }
}

char *copy_out(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hyperwit::Limits to_limits(const hw_limits *l) {
    hyperwit::Limits out;
    if (l != nullptr) {
        out.sweep_cap = l->sweep_cap;
        out.dense_cap = l->dense_cap;
        out.symbolic_cap = l->symbolic_cap;
        out.threads = l->threads;
    }
    return out;
}

hyperwit::Family to_family(hw_family f) {
    switch (f) {
        case HW_FAMILY_SINGLE_MAX:
            return hyperwit::Family::SingleMaxEdge;
        case HW_FAMILY_ALL_N_MINUS_1:
            return hyperwit::Family::AllNminus1;
        case HW_FAMILY_ALL_GE_N_MINUS_1:
            return hyperwit::Family::AllGeNminus1;
    }
    throw hyperwit::InvalidArgument("unknown family code");
}

hyperwit::report::Format to_format(hw_format f) {
    return f == HW_FORMAT_CSV ? hyperwit::report::Format::Csv : hyperwit::report::Format::Json;
}

hyperwit::report::WitnessRequest to_request(const char *kind, const char *source) {
    require(kind, "witness kind");
    hyperwit::report::WitnessRequest req;
    req.kind = hyperwit::parse_witness_kind(kind);
    if (source != nullptr && *source != '\0') {
        req.source = hyperwit::parse_alpha_source(source);
    }
    return req;
}

void emit(const hyperwit::report::Output &o, char **out, int *passed) {
    require(out, "output pointer");
    *out = copy_out(o.text);
    if (passed != nullptr) {
        *passed = o.passed ? 1 : 0;
    }
}

}  // namespace

extern "C" {

const char *hw_version(void) {
    return "0.1.0";
}

const char *hw_status_name(hw_status status) {
    switch (status) {
        case HW_OK:
            return "ok";
        case HW_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case HW_ERR_PRECONDITION:
            return "precondition failed";
        case HW_ERR_LIMIT:
            return "limit exceeded";
        case HW_ERR_VALIDATION:
            return "validation failed";
        case HW_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *hw_last_error_message(void) {
    return g_last_error.c_str();
}

void hw_string_free(char *s) {
    std::free(s);
}

void hw_limits_default(hw_limits *limits) {
    if (limits == nullptr) {
        return;
    }
    hyperwit::Limits d;
    limits->sweep_cap = d.sweep_cap;
    limits->dense_cap = d.dense_cap;
    limits->symbolic_cap = d.symbolic_cap;
    limits->threads = d.threads;
}

hw_status hw_family_parse(const char *name, hw_family *out) {
    return guarded([&] {
        require(name, "family name");
        require(out, "output pointer");
        switch (hyperwit::parse_family(name)) {
            case hyperwit::Family::SingleMaxEdge:
                *out = HW_FAMILY_SINGLE_MAX;
                break;
            case hyperwit::Family::AllNminus1:
                *out = HW_FAMILY_ALL_N_MINUS_1;
                break;
            case hyperwit::Family::AllGeNminus1:
                *out = HW_FAMILY_ALL_GE_N_MINUS_1;
                break;
        }
    });
}

hw_status hw_hypergraph_parse(const char *text, hw_hypergraph **out) {
    return guarded([&] {
        require(text, "text");
        require(out, "output pointer");
        *out = new hw_hypergraph{hyperwit::Hypergraph::parse(text)};
    });
}

hw_status hw_hypergraph_from_edges_json(int n, const char *edges_json, hw_hypergraph **out) {
    return guarded([&] {
        require(edges_json, "edge list");
        require(out, "output pointer");
        std::string text = "n=" + std::to_string(n) + "; edges=" + edges_json;
        *out = new hw_hypergraph{hyperwit::Hypergraph::parse(text)};
    });
}

hw_status hw_hypergraph_family(hw_family family, int n, hw_hypergraph **out) {
    return guarded([&] {
        require(out, "output pointer");
        *out = new hw_hypergraph{hyperwit::build_family(to_family(family), n)};
    });
}

hw_status hw_hypergraph_random_connected(uint64_t seed, int n, hw_hypergraph **out) {
    return guarded([&] {
        require(out, "output pointer");
        std::mt19937_64 rng(seed);
        *out = new hw_hypergraph{hyperwit::random_connected_hypergraph(rng, n)};
    });
}

void hw_hypergraph_free(hw_hypergraph *h) {
    delete h;
}

hw_status hw_hypergraph_num_vertices(const hw_hypergraph *h, int *out) {
    return guarded([&] {
        require(h, "hypergraph");
        require(out, "output pointer");
        *out = h->graph.num_vertices();
    });
}

hw_status hw_hypergraph_num_edges(const hw_hypergraph *h, size_t *out) {
    return guarded([&] {
        require(h, "hypergraph");
        require(out, "output pointer");
        *out = h->graph.num_edges();
    });
}

hw_status hw_hypergraph_k_max(const hw_hypergraph *h, int *out) {
    return guarded([&] {
        require(h, "hypergraph");
        require(out, "output pointer");
        *out = h->graph.k_max();
    });
}

hw_status hw_hypergraph_is_connected(const hw_hypergraph *h, int *out) {
    return guarded([&] {
        require(h, "hypergraph");
        require(out, "output pointer");
        *out = h->graph.is_connected() ? 1 : 0;
    });
}

hw_status hw_hypergraph_to_string(const hw_hypergraph *h, char **out) {
    return guarded([&] {
        require(h, "hypergraph");
        require(out, "output pointer");
        *out = copy_out(h->graph.str());
    });
}

hw_status hw_state_build(const hw_hypergraph *h, hw_state **out) {
    return guarded([&] {
        require(h, "hypergraph");
        require(out, "output pointer");
        *out = new hw_state{hyperwit::build_state(h->graph)};
    });
}

hw_status hw_state_from_hex(int n, const char *hex, hw_state **out) {
    return guarded([&] {
        require(hex, "hex string");
        require(out, "output pointer");
        *out = new hw_state{hyperwit::SignState::from_hex(n, hex)};
    });
}

void hw_state_free(hw_state *s) {
    delete s;
}

hw_status hw_state_num_qubits(const hw_state *s, int *out) {
    return guarded([&] {
        require(s, "state");
        require(out, "output pointer");
        *out = s->state.num_qubits();
    });
}

hw_status hw_state_sign(const hw_state *s, uint64_t label, int *out) {
    return guarded([&] {
        require(s, "state");
        require(out, "output pointer");
        if (label >= s->state.dimension()) {
            throw hyperwit::InvalidArgument("basis label outside the state");
        }
        *out = s->state.global_phase() * s->state.sign(label);
    });
}

hw_status hw_state_to_hex(const hw_state *s, char **out) {
    return guarded([&] {
        require(s, "state");
        require(out, "output pointer");
        *out = copy_out(s->state.to_hex());
    });
}

hw_status hw_state_extract(const hw_state *s, hw_hypergraph **graph, int *global_phase) {
    return guarded([&] {
        require(s, "state");
        require(graph, "output pointer");
        auto ex = hyperwit::extract_hypergraph(s->state);
        *graph = new hw_hypergraph{ex.graph};
        if (global_phase != nullptr) {
            *global_phase = ex.global_phase;
        }
    });
}

hw_status hw_alpha_brute(const hw_state *s, const hw_limits *limits, double *alpha) {
    return guarded([&] {
        require(s, "state");
        require(alpha, "output pointer");
        *alpha = hyperwit::alpha_multipartite(s->state, to_limits(limits)).alpha;
    });
}

hw_status hw_alpha_closed_form(hw_family family, int n, double *alpha) {
    return guarded([&] {
        require(alpha, "output pointer");
        *alpha = hyperwit::closed_form_alpha(to_family(family), n).to_double();
    });
}

hw_status hw_lower_bound(const hw_hypergraph *h, const hw_limits *limits, double *bound,
                         double *measured_e, int *holds) {
    return guarded([&] {
        require(h, "hypergraph");
        auto c = hyperwit::lower_bound_check(h->graph, to_limits(limits));
        if (bound) *bound = hyperwit::to_double(c.bound);
        if (measured_e) *measured_e = c.measured_E;
        if (holds) *holds = c.holds ? 1 : 0;
    });
}

hw_status hw_report_state(const hw_hypergraph *h, char **out) {
    return guarded([&] {
        require(h, "hypergraph");
        emit(hyperwit::report::state(h->graph), out, nullptr);
    });
}

hw_status hw_report_state_dump(int n, const char *hex, char **out) {
    return guarded([&] {
        require(hex, "hex string");
        emit(hyperwit::report::state_dump(n, hex), out, nullptr);
    });
}

hw_status hw_report_verify(const hw_hypergraph *h, const char *what, const hw_limits *limits,
                           char **out, int *passed) {
    return guarded([&] {
        require(h, "hypergraph");
        require(what, "check name");
        emit(hyperwit::report::verify(h->graph, what, to_limits(limits)), out, passed);
    });
}

hw_status hw_report_structure(hw_family family, int n, int k, char **out, int *passed) {
    return guarded([&] {
        std::optional<int> kk;
        if (k > 0) kk = k;
        emit(hyperwit::report::verify_structure(to_family(family), n, kk), out, passed);
    });
}

hw_status hw_report_entanglement(const hw_hypergraph *h, const char *mode, int cross_check,
                                 const hw_limits *limits, hw_format format, char **out,
                                 int *passed) {
    return guarded([&] {
        require(h, "hypergraph");
        require(mode, "mode");
        emit(hyperwit::report::entanglement(h->graph, mode, cross_check != 0, to_limits(limits),
                                            to_format(format)),
             out, passed);
    });
}

hw_status hw_report_reduce(const hw_hypergraph *h, const char *part_a, const hw_limits *limits,
                           hw_format format, char **out, int *passed) {
    return guarded([&] {
        require(h, "hypergraph");
        emit(hyperwit::report::reduce(h->graph, part_a ? part_a : "", to_limits(limits),
                                      to_format(format)),
             out, passed);
    });
}

hw_status hw_report_witness(const hw_hypergraph *h, const char *kind, const char *alpha_source,
                            const hw_limits *limits, char **out, int *passed) {
    return guarded([&] {
        require(h, "hypergraph");
        emit(hyperwit::report::witness(h->graph, to_request(kind, alpha_source),
                                       to_limits(limits)),
             out, passed);
    });
}

hw_status hw_report_witness_eval(const hw_hypergraph *h, const char *kind,
                                 const char *alpha_source, const char *p,
                                 const hw_limits *limits, char **out, int *passed) {
    return guarded([&] {
        require(h, "hypergraph");
        require(p, "noise fraction");
        emit(hyperwit::report::witness_eval(h->graph, to_request(kind, alpha_source), p,
                                            to_limits(limits)),
             out, passed);
    });
}

hw_status hw_report_robustness_table(hw_family family, int n_min, int n_max, hw_format format,
                                     char **out) {
    return guarded([&] {
        emit(hyperwit::report::robustness_table(to_family(family), n_min, n_max,
                                                to_format(format)),
             out, nullptr);
    });
}

hw_status hw_report_settings(const hw_hypergraph *h, const char *kind, const char *alpha_source,
                             const char *mode, int list, const hw_limits *limits, char **out) {
    return guarded([&] {
        require(h, "hypergraph");
        require(mode, "mode");
        emit(hyperwit::report::settings(h->graph, to_request(kind, alpha_source),
                                        hyperwit::parse_setting_mode(mode), list != 0,
                                        to_limits(limits)),
             out, nullptr);
    });
}

hw_status hw_report_lower_bound_campaign(uint64_t seed, int count, int n_min, int n_max,
                                         int reduce_max_n, const hw_limits *limits,
                                         hw_format format, char **out, int *passed) {
    return guarded([&] {
        hyperwit::report::CampaignRequest req{seed, count, n_min, n_max, reduce_max_n};
        emit(hyperwit::report::lower_bound_campaign(req, to_limits(limits), to_format(format)),
             out, passed);
    });
}

}  // extern "C"

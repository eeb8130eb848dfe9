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

// Command-line front end. Everything numeric comes from the C API; this file
// only parses flags, picks the report and writes it out.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "hyperwit/hyperwit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Carries a status out of the command handlers.
struct Failure {
    hw_status status;
    std::string message;
};

void check(hw_status s) {
    if (s != HW_OK) {
        throw Failure{s, hw_last_error_message()};
    }
}

struct Owned {
    char *p = nullptr;
    ~Owned() {
        hw_string_free(p);
    }
};

struct GraphHandle {
    hw_hypergraph *h = nullptr;
    ~GraphHandle() {
        hw_hypergraph_free(h);
    }
};

std::pair<int, int> parse_range(const std::string &text) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::logic_error &) {
        throw Failure{HW_ERR_INVALID_ARGUMENT, "cannot parse --n '" + text + "' (expected 5 or 2..8)"};
    }
}

int parse_single_n(const std::string &text) {
    auto [lo, hi] = parse_range(text);
    if (lo != hi) {
        throw Failure{HW_ERR_INVALID_ARGUMENT, "this command takes a single --n, got " + text};
    }
    return lo;
}

hw_family parse_family(const std::string &name) {
    hw_family f;
    check(hw_family_parse(name.c_str(), &f));
    return f;
}

struct Options {
    // graph selection
    std::string family;
    std::string n;
    std::string edges;
    std::string graph;
    // shared
    std::string out;
    std::string format = "json";
    int threads = -1;
    hw_limits limits{};
    std::uint64_t seed = 1;
    // command specific
    std::string mode;
    bool cross_check = false;
    std::string part_a;
    std::string kind = "projector";
    std::string alpha_source;
    std::string p;
    std::string hex;
    int k = 0;
    int count = 200;
    int reduce_max_n = 7;
};

void add_graph_options(CLI::App *cmd, Options &o) {
    cmd->add_option("--family", o.family, "single-max, all-n-1 or all-ge-n-1");
    cmd->add_option("--n", o.n, "Number of qubits");
    cmd->add_option("--edges", o.edges, "Hyperedges as JSON, e.g. [[1,2],[2,3,4]]");
    cmd->add_option("--graph", o.graph, "Full hypergraph text, e.g. \"n=3; edges=[[1,2,3]]\"");
}

void add_witness_options(CLI::App *cmd, Options &o) {
    cmd->add_option("--kind", o.kind, "projector or stabilizer")->capture_default_str();
    cmd->add_option("--alpha-source", o.alpha_source,
                    "closed-form, kmax-bound, measured or procedure (default: closed form for "
                    "the families, k_max bound otherwise)");
}

GraphHandle load_graph(const Options &o) {
    GraphHandle g;
    if (!o.graph.empty()) {
        check(hw_hypergraph_parse(o.graph.c_str(), &g.h));
    } else if (!o.family.empty()) {
        if (o.n.empty()) throw Failure{HW_ERR_INVALID_ARGUMENT, "--family needs --n"};
        check(hw_hypergraph_family(parse_family(o.family), parse_single_n(o.n), &g.h));
    } else if (!o.edges.empty()) {
        if (o.n.empty()) throw Failure{HW_ERR_INVALID_ARGUMENT, "--edges needs --n"};
        check(hw_hypergraph_from_edges_json(parse_single_n(o.n), o.edges.c_str(), &g.h));
    } else {
        throw Failure{HW_ERR_INVALID_ARGUMENT, "choose a hypergraph with --family, --edges or --graph"};
    }
    return g;
}

hw_format format_of(const Options &o) {
    if (o.format == "json") return HW_FORMAT_JSON;
    if (o.format == "csv") return HW_FORMAT_CSV;
    throw Failure{HW_ERR_INVALID_ARGUMENT, "unknown --format '" + o.format + "' (json or csv)"};
}

const char *opt_cstr(const std::string &s) {
    return s.empty() ? nullptr : s.c_str();
}

void write_output(const Options &o, const char *text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        throw Failure{HW_ERR_INVALID_ARGUMENT, "cannot write " + o.out};
    }
    f << text;
}

int resolve_threads(int flag) {
    if (flag >= 0) return flag;
    if (const char *env = std::getenv("HYPERWIT_THREADS")) {
        try {
            return std::stoi(env);
        } catch (const std::logic_error &) {
            throw Failure{HW_ERR_INVALID_ARGUMENT,
                          std::string("cannot parse HYPERWIT_THREADS '") + env + "'"};
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char **argv) {
    Options o;
    hw_limits_default(&o.limits);

    CLI::App app{"Hypergraph state entanglement, LOCC bounds and witnesses"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", hw_version());
    app.add_option("--out", o.out, "Write the report to this file instead of stdout");
    app.add_option("--format", o.format, "json or csv")->capture_default_str();
    app.add_option("--threads", o.threads, "Worker threads (0 = all cores; env HYPERWIT_THREADS)");
    app.add_option("--seed", o.seed, "Seed for randomized runs")->capture_default_str();
    app.add_option("--cap-sweep", o.limits.sweep_cap, "Largest n for bipartition sweeps")
        ->capture_default_str();
    app.add_option("--cap-dense", o.limits.dense_cap, "Largest n for dense matrices")
        ->capture_default_str();
    app.add_option("--cap-symbolic", o.limits.symbolic_cap, "Largest n for Pauli expansions")
        ->capture_default_str();

    // Each handler returns the report text and whether its checks passed.
    std::function<std::pair<std::string, bool>()> run;
    auto set = [&run](auto fn) { return [&run, fn]() { run = fn; }; };
    // `passed` is read through a pointer so it is only inspected after the
    // report call has filled it in.
    auto finish = [](hw_status s, Owned &text, const int *passed) {
        check(s);
        return std::pair<std::string, bool>{text.p, passed == nullptr || *passed != 0};
    };

    auto *state = app.add_subcommand("state", "Build or decode sign states");
    state->require_subcommand(1);
    auto *state_build = state->add_subcommand("build", "Sign table of |H>");
    add_graph_options(state_build, o);
    state_build->callback(set([&] {
        GraphHandle g = load_graph(o);
        Owned t;
        return finish(hw_report_state(g.h, &t.p), t, nullptr);
    }));
    auto *state_dump = state->add_subcommand("dump", "Recover the hypergraph of a hex sign table");
    state_dump->add_option("--n", o.n, "Number of qubits")->required();
    state_dump->add_option("--hex", o.hex, "Sign bitmap, bit x set means sign -1")->required();
    state_dump->callback(set([&] {
        Owned t;
        return finish(hw_report_state_dump(parse_single_n(o.n), o.hex.c_str(), &t.p), t, nullptr);
    }));

    auto *verify = app.add_subcommand("verify", "Exact checks of the stabilizer formalism");
    verify->require_subcommand(1);
    for (const char *what : {"stabilizers", "basis", "projector"}) {
        auto *cmd = verify->add_subcommand(what, std::string("Check ") + what);
        add_graph_options(cmd, o);
        cmd->callback(set([&o, what, finish] {
            GraphHandle g = load_graph(o);
            Owned t;
            int passed = 0;
            return finish(hw_report_verify(g.h, what, &o.limits, &t.p, &passed), t, &passed);
        }));
    }
    auto *structure = verify->add_subcommand("structure", "Reduced density matrix block structure");
    structure->add_option("--family", o.family, "single-max, all-n-1 or all-ge-n-1")->required();
    structure->add_option("--n", o.n, "Number of qubits")->required();
    structure->add_option("--k", o.k, "Traced-out qubits (default: every k up to n/2)");
    structure->callback(set([&] {
        Owned t;
        int passed = 0;
        return finish(hw_report_structure(parse_family(o.family), parse_single_n(o.n), o.k, &t.p,
                                          &passed),
                      t, &passed);
    }));

    auto *ent = app.add_subcommand("entanglement", "Geometric entanglement alpha and E");
    add_graph_options(ent, o);
    o.mode = "brute";
    ent->add_option("--mode", o.mode, "brute, procedure or closed-form")->capture_default_str();
    ent->add_flag("--cross-check", o.cross_check, "Compare every applicable method");
    ent->callback(set([&] {
        GraphHandle g = load_graph(o);
        Owned t;
        int passed = 0;
        return finish(hw_report_entanglement(g.h, o.mode.c_str(), o.cross_check, &o.limits,
                                             format_of(o), &t.p, &passed),
                      t, &passed);
    }));

    auto *red = app.add_subcommand("reduce", "LOCC reduction certificate");
    add_graph_options(red, o);
    red->add_option("--partA", o.part_a, "Part A, e.g. 1,2,3 (default: every bipartition)");
    red->callback(set([&] {
        GraphHandle g = load_graph(o);
        Owned t;
        int passed = 0;
        return finish(
            hw_report_reduce(g.h, o.part_a.c_str(), &o.limits, format_of(o), &t.p, &passed), t,
            &passed);
    }));

    auto *wit = app.add_subcommand("witness", "Entanglement witnesses");
    wit->require_subcommand(1);
    auto *wit_build = wit->add_subcommand("build", "Witness parameters and robustness");
    add_graph_options(wit_build, o);
    add_witness_options(wit_build, o);
    wit_build->callback(set([&] {
        GraphHandle g = load_graph(o);
        Owned t;
        int passed = 0;
        return finish(hw_report_witness(g.h, o.kind.c_str(), opt_cstr(o.alpha_source), &o.limits,
                                        &t.p, &passed),
                      t, &passed);
    }));
    auto *wit_eval = wit->add_subcommand("eval", "Tr[W R_p] under white noise");
    add_graph_options(wit_eval, o);
    add_witness_options(wit_eval, o);
    wit_eval->add_option("--p", o.p, "Noise fraction, e.g. 2/7 or 0.25")->required();
    wit_eval->callback(set([&] {
        GraphHandle g = load_graph(o);
        Owned t;
        int passed = 0;
        return finish(hw_report_witness_eval(g.h, o.kind.c_str(), opt_cstr(o.alpha_source),
                                             o.p.c_str(), &o.limits, &t.p, &passed),
                      t, &passed);
    }));
    auto *wit_table = wit->add_subcommand("table", "Robustness of both witnesses over n");
    wit_table->add_option("--family", o.family, "single-max, all-n-1 or all-ge-n-1")->required();
    wit_table->add_option("--n", o.n, "Range, e.g. 2..8")->required();
    wit_table->callback(set([&] {
        auto [lo, hi] = parse_range(o.n);
        Owned t;
        return finish(
            hw_report_robustness_table(parse_family(o.family), lo, hi, format_of(o), &t.p), t,
            nullptr);
    }));

    auto *set_cmd = app.add_subcommand("settings", "Local measurement settings of a witness");
    set_cmd->require_subcommand(1);
    std::string setting_mode = "canonical";
    for (const char *which : {"count", "list"}) {
        auto *cmd = set_cmd->add_subcommand(which, std::string("Settings ") + which);
        add_graph_options(cmd, o);
        add_witness_options(cmd, o);
        cmd->add_option("--mode", setting_mode, "canonical, greedy or exact")
            ->capture_default_str();
        bool list = std::string(which) == "list";
        cmd->callback(set([&o, &setting_mode, list, finish] {
            GraphHandle g = load_graph(o);
            Owned t;
            return finish(hw_report_settings(g.h, o.kind.c_str(), opt_cstr(o.alpha_source),
                                             setting_mode.c_str(), list, &o.limits, &t.p),
                          t, nullptr);
        }));
    }

    auto *campaign = app.add_subcommand("campaign", "Randomized audits");
    campaign->require_subcommand(1);
    auto *lb = campaign->add_subcommand("lower-bound", "E >= 1/2^(k_max-1) on random hypergraphs");
    lb->add_option("--count", o.count, "Number of hypergraphs")->capture_default_str();
    lb->add_option("--n", o.n, "Range of qubit counts (default 3..8)");
    lb->add_option("--reduce-max-n", o.reduce_max_n,
                   "Certify every bipartition up to this size")
        ->capture_default_str();
    lb->callback(set([&] {
        auto [lo, hi] = parse_range(o.n.empty() ? "3..8" : o.n);
        Owned t;
        int passed = 0;
        return finish(hw_report_lower_bound_campaign(o.seed, o.count, lo, hi, o.reduce_max_n,
                                                     &o.limits, format_of(o), &t.p, &passed),
                      t, &passed);
    }));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    } catch (const Failure &f) {
        std::cerr << "error: " << f.message << "\n";
        return kExitUsage;
    }

    try {
        o.limits.threads = resolve_threads(o.threads);
        if (!run) {
            std::cerr << app.help();
            return kExitUsage;
        }
        auto [text, passed] = run();
        write_output(o, text.c_str());
        if (!passed) {
            std::cerr << "check failed\n";
            return kExitCheckFailed;
        }
        return kExitOk;
    } catch (const Failure &f) {
        std::cerr << "error (" << hw_status_name(f.status) << "): " << f.message << "\n";
        return f.status == HW_ERR_VALIDATION || f.status == HW_ERR_INTERNAL ? kExitCheckFailed
                                                                            : kExitUsage;
    }
}

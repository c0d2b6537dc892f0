// Copyright 2026 The surflc Authors
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

// surflc: command-line front end. Reports are JSON on stdout (or --out),
// a one-line summary goes to stderr.
//
// Exit codes: 0 success, 1 internal error, 2 bad input, 3 precondition
// failure, 4 verification violation.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "surflc/builders.h"
#include "surflc/circuit.h"
#include "surflc/complex_io.h"
#include "surflc/complex_ops.h"
#include "surflc/dense.h"
#include "surflc/errors.h"
#include "surflc/gf2_topology.h"
#include "surflc/lemmas.h"
#include "surflc/light_cone.h"
#include "surflc/metric.h"
#include "surflc/suite.h"
#include "surflc/surface_code.h"
#include "surflc/tableau.h"

using namespace surflc;
using nlohmann::ordered_json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitViolation = 4;

struct Args {
    std::string fixture;
    size_t n = 0;
    std::string file;
    std::string circuit;
    std::vector<uint32_t> gamma;
    std::vector<uint32_t> x;
    std::optional<uint32_t> x0;
    std::optional<uint32_t> edge;
    std::optional<uint32_t> radius;
    std::string metric = "copath";
    std::string k_rule = "face";
    std::string endpoints = "shell";
    std::string direction = "down";
    std::string pin = "x";
    uint64_t seed = SuiteOptions{}.seed;
    size_t jobs = 1;
    size_t depth = 2;
    std::string out;
    std::string emit;
    bool strict = false;
    bool timings = false;
    bool brief = false;
};

// Thrown once the report has been written, to pick the exit status.
struct ExitStatus {
    int code;
};

struct Loaded {
    PolygonalComplex g;
    std::string label;
    std::string text;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Loaded load_input(const Args &a) {
    Loaded l;
    if (!a.file.empty()) {
        l.text = read_file(a.file);
        l.g = parse_complex(l.text);
        l.label = a.file;
        return l;
    }
    if (a.fixture.empty()) {
        throw std::invalid_argument("give --fixture (with --n) or --file");
    }
    FixtureRef ref = a.fixture.find('-') != std::string::npos || a.fixture == "tetrahedron"
                         ? FixtureRef::parse(a.fixture)
                         : FixtureRef{a.fixture, a.n};
    if (ref.name != "tetrahedron" && ref.n == 0) {
        throw std::invalid_argument("--fixture " + ref.name + " needs --n");
    }
    l.g = ref.build();
    l.label = ref.label();
    l.text = format_complex(l.g);
    return l;
}

KEdgeRule k_rule(const Args &a) {
    if (a.k_rule == "face") {
        return KEdgeRule::FaceEdges;
    }
    if (a.k_rule == "incident") {
        return KEdgeRule::IncidentToFaceVertices;
    }
    throw std::invalid_argument("--k-rule must be face or incident");
}

LogicalPin pin(const Args &a) {
    if (a.pin == "x") {
        return LogicalPin::XCocycles;
    }
    if (a.pin == "z") {
        return LogicalPin::ZCycles;
    }
    throw std::invalid_argument("--pin must be x or z");
}

// The circuit from --circuit, or the synthesized encoder of the code.
Circuit circuit_for(const Args &a, const PolygonalComplex &g, std::string &source) {
    if (!a.circuit.empty()) {
        source = a.circuit;
        Circuit u = parse_circuit(read_file(a.circuit));
        if (u.qubit_count != g.num_edges()) {
            throw std::invalid_argument("circuit has " + std::to_string(u.qubit_count) + " qubits, complex has " +
                                        std::to_string(g.num_edges()) + " edges");
        }
        return u;
    }
    source = "encoder";
    return synthesize_encoder(pinned_surface_spec(g, pin(a)));
}

void check_edges(const std::vector<uint32_t> &edges, const PolygonalComplex &g, const char *flag) {
    for (uint32_t e : edges) {
        if (e >= g.num_edges()) {
            throw std::invalid_argument(std::string(flag) + ": edge " + std::to_string(e) + " out of range");
        }
    }
}

// The --gamma edge sequence, or a random shortest path drawn from --seed.
std::vector<uint32_t> gamma_path(const Args &a, const PolygonalComplex &g) {
    if (!a.gamma.empty()) {
        check_edges(a.gamma, g, "--gamma");
        return a.gamma;
    }
    auto rng = instance_rng(a.seed, 0, 0);
    uint32_t e = uint32_t(rng() % g.num_edges());
    uint32_t f = uint32_t(rng() % g.num_edges());
    return random_shortest_path(g, e, f, Metric::Path, rng);
}

uint64_t fnv1a(const std::string &s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct Report {
    std::string command;
    ordered_json inputs = ordered_json::object();
    std::string digest_material;
    ordered_json results = ordered_json::array();
    size_t passed = 0;
    size_t failed = 0;
    std::string summary;
    // Set when a lemma check found a counterexample.
    bool violation = false;
    // Set for informational negatives that --strict escalates.
    bool soft_violation = false;

    void add(ordered_json r, bool ok) {
        results.push_back(std::move(r));
        (ok ? passed : failed)++;
    }
};

int emit(const Args &a, Report &rep, std::chrono::steady_clock::time_point start) {
    std::ostringstream hex;
    hex << std::hex << fnv1a(rep.command + "\n" + rep.inputs.dump() + "\n" + rep.digest_material);
    ordered_json j;
    j["command"] = rep.command;
    j["inputs"] = rep.inputs;
    j["inputs"]["digest"] = hex.str();
    j["results"] = rep.results;
    j["passed"] = rep.passed;
    j["failed"] = rep.failed;
    if (a.timings) {
        j["wall_time_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    std::string text = j.dump(2) + "\n";
    if (a.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(a.out);
        if (!out) {
            throw std::runtime_error("cannot write " + a.out);
        }
        out << text;
    }
    std::cerr << rep.command << ": " << (rep.summary.empty() ? "done" : rep.summary) << "\n";
    if (rep.violation || (a.strict && (rep.soft_violation || rep.failed > 0))) {
        return kExitViolation;
    }
    return 0;
}

ordered_json edges_json(const EdgeSet &s) {
    return s.members();
}

void base_inputs(Report &rep, const Loaded &l) {
    rep.inputs["complex"] = l.label;
    rep.digest_material += l.text;
}

// --- complex -------------------------------------------------------------

void cmd_complex_build(const Args &a) {
    Loaded l = load_input(a);
    if (a.out.empty()) {
        std::cout << l.text;
    } else {
        save_complex(l.g, a.out);
    }
    std::cerr << "complex build: " << l.label << " V=" << l.g.num_vertices() << " E=" << l.g.num_edges()
              << " F=" << l.g.num_faces() << "\n";
}

Report cmd_complex_validate(const Args &a) {
    Loaded l = load_input(a);
    Report rep{"complex validate"};
    base_inputs(rep, l);
    auto cert = validate_csc(l.g);
    auto h = homology(l.g);
    ordered_json r{{"is_csc", cert.is_csc},
                   {"connected", l.g.is_connected()},
                   {"h1", h.h1},
                   {"simply_connected_csc", cert.is_csc && h.h1 == 0}};
    if (cert.failure) {
        r["failure"] = {{"vertex", cert.failure->vertex}, {"reason", cert.failure->reason}};
    }
    rep.add(r, cert.is_csc);
    rep.soft_violation = !cert.is_csc;
    rep.summary = cert.is_csc ? "closed surface complex" : "not a closed surface complex";
    return rep;
}

Report cmd_complex_stats(const Args &a) {
    Loaded l = load_input(a);
    const auto &g = l.g;
    Report rep{"complex stats"};
    base_inputs(rep, l);
    auto deg = degrees(g);
    ordered_json r{{"vertices", g.num_vertices()},
                   {"edges", g.num_edges()},
                   {"faces", g.num_faces()},
                   {"euler", g.euler_characteristic()},
                   {"vertex_degree", deg.vertex_degree},
                   {"face_degree", deg.face_degree},
                   {"connected", g.is_connected()}};
    if (g.is_connected() && g.num_edges() > 0) {
        r["diameter"] = {{"path", diameter(g, Metric::Path)}, {"copath", diameter(g, Metric::Copath)}};
    }
    if (a.edge) {
        check_edges({*a.edge}, g, "--edge");
        Metric m = parse_metric(a.metric);
        uint32_t rad = a.radius.value_or(1);
        EdgeSet b = ball(g, *a.edge, rad, m);
        rep.inputs["edge"] = *a.edge;
        rep.inputs["radius"] = rad;
        rep.inputs["metric"] = metric_name(m);
        r["ball"] = {{"size", b.size()}, {"edges", edges_json(b)}};
    }
    rep.add(r, true);
    rep.summary = "V=" + std::to_string(g.num_vertices()) + " E=" + std::to_string(g.num_edges()) +
                  " F=" + std::to_string(g.num_faces());
    return rep;
}

// --- topology ------------------------------------------------------------

Report cmd_homology(const Args &a) {
    Loaded l = load_input(a);
    Report rep{"homology"};
    base_inputs(rep, l);
    auto h = homology(l.g);
    rep.add({{"h0", h.h0},
             {"h1", h.h1},
             {"h2", h.h2},
             {"cohomology", {{"h0", h.ch0}, {"h1", h.ch1}, {"h2", h.ch2}}},
             {"euler", h.euler},
             {"rank_d1", h.rank_d1},
             {"rank_d2", h.rank_d2}},
            true);
    rep.summary = "dim H1 = " + std::to_string(h.h1);
    return rep;
}

Report cmd_code(const Args &a) {
    Loaded l = load_input(a);
    const auto &g = l.g;
    Report rep{"code"};
    base_inputs(rep, l);
    auto spec = surface_generators(g);
    ordered_json r{{"qubits", spec.num_qubits},
                   {"generators", spec.generators.size()},
                   {"rank", spec.rank},
                   {"logical_count", spec.logical_count},
                   {"code_dimension_log2", spec.logical_count}};
    if (!a.emit.empty() || !a.brief) {
        rep.inputs["pin"] = a.pin;
        Circuit u = synthesize_encoder(pinned_surface_spec(g, pin(a)));
        StabilizerTableau psi = run_circuit(u);
        bool stabilized = true;
        for (const auto &gen : spec.generators) {
            stabilized = stabilized && psi.stabilizes(gen);
        }
        r["encoder"] = {{"gates", u.gate_count()},
                        {"depth", u.depth()},
                        {"locality", u.locality()},
                        {"geometric_copath_1", is_geometric(u, g, 1)},
                        {"stabilized_by_all_generators", stabilized}};
        if (!a.emit.empty()) {
            save_circuit(u, a.emit);
        }
    }
    rep.add(r, true);
    rep.summary = "logical count " + std::to_string(spec.logical_count);
    return rep;
}

Report cmd_lightcone(const Args &a) {
    Loaded l = load_input(a);
    Report rep{"lightcone"};
    base_inputs(rep, l);
    std::string source;
    Circuit u = circuit_for(a, l.g, source);
    rep.inputs["circuit"] = source;
    rep.digest_material += format_circuit(u);
    check_edges(a.gamma, l.g, "--gamma");
    EdgeSet s = EdgeSet::of(l.g.num_edges(), a.gamma);
    Direction d;
    if (a.direction == "up") {
        d = Direction::Up;
    } else if (a.direction == "down") {
        d = Direction::Down;
    } else {
        throw std::invalid_argument("--direction must be up or down");
    }
    rep.inputs["source"] = edges_json(s);
    rep.inputs["direction"] = a.direction;
    EdgeSet cone = light_cone(u, s, d);
    rep.add({{"size", cone.size()},
             {"edges", edges_json(cone)},
             {"depth", u.depth()},
             {"locality", u.locality()}},
            true);
    rep.summary = "light cone of size " + std::to_string(cone.size());
    return rep;
}

Report cmd_supports(const Args &a) {
    Loaded l = load_input(a);
    Report rep{"supports"};
    base_inputs(rep, l);
    std::string source;
    Circuit u = circuit_for(a, l.g, source);
    rep.inputs["circuit"] = source;
    rep.digest_material += format_circuit(u);
    auto path = gamma_path(a, l.g);
    rep.inputs["gamma"] = path;
    rep.inputs["seed"] = a.seed;
    Chain gamma = Chain::from_path(l.g.num_edges(), path);
    ClassSolver solver(l.g);
    EdgeSet A = effective_support_A(solver, u, gamma);
    EdgeSet B = light_cone(u, A, Direction::Up);
    rep.add({{"a", edges_json(A)},
             {"b", edges_json(B)},
             {"size_a", A.size()},
             {"size_b", B.size()},
             {"endpoints_in_a", A.contains(path.front()) && A.contains(path.back())},
             {"depth", u.depth()},
             {"locality", u.locality()}},
            true);
    rep.summary = "|A| = " + std::to_string(A.size()) + ", |B| = " + std::to_string(B.size());
    return rep;
}

Report cmd_separation(const Args &a) {
    Loaded l = load_input(a);
    const auto &g = l.g;
    Report rep{"separation"};
    base_inputs(rep, l);
    auto path = gamma_path(a, g);
    rep.inputs["gamma"] = path;
    Chain gamma = Chain::from_path(g.num_edges(), path);
    if (a.x0) {
        // Detour search around a copath ball.
        check_edges({*a.x0}, g, "--x0");
        uint32_t r = a.radius.value_or(1);
        DetourEndpoints ends;
        if (a.endpoints == "shell") {
            ends = DetourEndpoints::OutsideNextShell;
        } else if (a.endpoints == "ball") {
            ends = DetourEndpoints::OutsideBall;
        } else {
            throw std::invalid_argument("--endpoints must be shell or ball");
        }
        rep.inputs["x0"] = *a.x0;
        rep.inputs["radius"] = r;
        rep.inputs["k_rule"] = a.k_rule;
        rep.inputs["endpoints"] = a.endpoints;
        auto res = detour_path(g, path, *a.x0, r, k_rule(a), ends);
        ordered_json out{{"blocked", edges_json(res.blocked)}, {"detour_found", res.member.has_value()}};
        if (res.member) {
            out["member"] = edges_json(res.member->chain.support());
            out["faces"] = res.member->faces.indices();
        }
        rep.add(out, res.member.has_value());
        rep.violation = !res.member.has_value() && ends == DetourEndpoints::OutsideNextShell;
        rep.soft_violation = !res.member.has_value();
        rep.summary = res.member ? "detour found" : "no detour: counterexample recorded";
        return rep;
    }
    check_edges(a.x, g, "--x");
    EdgeSet x = EdgeSet::of(g.num_edges(), a.x);
    rep.inputs["x"] = edges_json(x);
    ClassSolver solver(g);
    auto member = solver.avoiding(gamma, x);
    ordered_json out{{"separating", !member.has_value()}};
    if (member) {
        out["member"] = edges_json(member->chain.support());
        out["faces"] = member->faces.indices();
    } else {
        auto obs = solver.obstructions(x);
        for (const auto &y : obs) {
            if (y.dot(gamma.coeffs)) {
                out["certificate"] = y.indices();
                break;
            }
        }
        EdgeSet reduced = reduce_to_connected_separator(g, gamma, x);
        out["connected_separator"] = edges_json(reduced);
    }
    rep.add(out, true);
    rep.summary = member ? "not separating" : "separating";
    return rep;
}

Report cmd_rsimple(const Args &a) {
    Loaded l = load_input(a);
    const auto &g = l.g;
    Report rep{"rsimple"};
    base_inputs(rep, l);
    rep.inputs["k_rule"] = a.k_rule;
    std::vector<uint32_t> radii;
    if (a.radius) {
        radii.push_back(*a.radius);
    } else {
        for (uint32_t r = 0; r <= diameter(g, Metric::Copath); r++) {
            radii.push_back(r);
        }
    }
    bool all = true;
    for (uint32_t r : radii) {
        auto sc = r_simply_connected(g, r, k_rule(a));
        ordered_json out{{"radius", r}, {"r_simply_connected", sc.holds}};
        if (sc.witness) {
            out["witness_edge"] = *sc.witness;
            out["witness_h1"] = sc.witness_report.h1;
            out["witness_cohomology_h1"] = sc.witness_report.ch1;
        }
        all = all && sc.holds;
        rep.add(out, sc.holds);
    }
    rep.soft_violation = !all;
    rep.summary = std::to_string(rep.passed) + "/" + std::to_string(radii.size()) + " radii r-simply connected";
    return rep;
}

// --- verification ---------------------------------------------------------

Report cmd_verify(const Args &a, const std::string &which) {
    Report rep{"verify " + which};
    SuiteOptions opt;
    opt.seed = a.seed;
    opt.jobs = a.jobs;
    opt.k_rule = k_rule(a);
    opt.records = !a.brief;
    rep.inputs["seed"] = a.seed;
    rep.inputs["k_rule"] = a.k_rule;
    if (!a.fixture.empty() || !a.file.empty()) {
        if (!a.file.empty()) {
            throw std::invalid_argument("verify runs on built-in fixtures; use --fixture");
        }
        Loaded l = load_input(a);
        opt.fixtures = {FixtureRef::parse(l.label)};
        rep.inputs["complex"] = l.label;
    }
    std::vector<const CriterionEntry *> todo;
    if (which == "all") {
        for (const auto &c : acceptance_matrix()) {
            todo.push_back(&c);
        }
    } else {
        const CriterionEntry *c = find_criterion(which);
        if (!c) {
            std::string names;
            for (const auto &e : acceptance_matrix()) {
                names += " " + e.key;
            }
            throw std::invalid_argument("unknown lemma '" + which + "'; choose all or one of:" + names);
        }
        todo.push_back(c);
    }
    for (const auto *c : todo) {
        auto res = c->run(opt);
        rep.add(res.to_json(), res.pass);
        std::cerr << "  [" << (res.pass ? "PASS" : "FAIL") << "] " << res.id << " " << res.key << ": "
                  << res.summary << "\n";
    }
    rep.violation = rep.failed > 0;
    rep.summary = std::to_string(rep.passed) + "/" + std::to_string(todo.size()) + " criteria pass";
    return rep;
}

Report cmd_appendix(const Args &a, const std::string &which) {
    Report rep{"appendix " + which};
    rep.inputs["seed"] = a.seed;
    if (which == "a") {
        Circuit u;
        if (!a.circuit.empty()) {
            u = parse_circuit(read_file(a.circuit));
            rep.inputs["circuit"] = a.circuit;
        } else {
            auto rng = instance_rng(a.seed, 10, 0);
            size_t n = a.n ? a.n : 8;
            u = random_clifford_circuit(n, a.depth, rng);
            rep.inputs["qubits"] = n;
            rep.inputs["depth"] = a.depth;
        }
        rep.digest_material += format_circuit(u);
        auto r = appendix_a_hamiltonian(u);
        ordered_json terms = ordered_json::array();
        for (const auto &t : r.terms) {
            terms.push_back(t.str());
        }
        rep.add({{"terms", terms},
                 {"commuting", r.commuting},
                 {"max_support", r.max_support},
                 {"support_bound", r.support_bound},
                 {"ground_energy", r.ground_energy},
                 {"unique_ground_state", r.unique_ground_state},
                 {"gap", r.gap}},
                r.all_pass());
        rep.violation = !r.all_pass();
        rep.summary = r.all_pass() ? "all checks pass" : "check failed";
    } else if (which == "b") {
        std::vector<size_t> ns;
        if (a.n) {
            ns.push_back(a.n);
        } else {
            for (size_t n = 2; n <= 6; n++) {
                ns.push_back(n);
            }
        }
        for (size_t n : ns) {
            if (n < 2 || n + clock_qubits(n) > kMaxDenseQubits) {
                throw PreconditionError("appendix b needs 2 <= n and n + clock qubits <= 14");
            }
            DenseState hist = history_state(n);
            double got = std::abs(overlap(hist, extended_cat_state(n)));
            double want = std::sqrt(double(n * n - n)) / double(n);
            bool ok = std::abs(got - want) <= 1e-10;
            rep.add({{"n", n},
                     {"clock_qubits", clock_qubits(n)},
                     {"overlap", got},
                     {"expected", want},
                     {"correlation_first_pair", correlation_check(hist, 0, 1)}},
                    ok);
            rep.violation = rep.violation || !ok;
        }
        rep.summary = std::to_string(rep.passed) + "/" + std::to_string(ns.size()) + " overlaps match";
    } else if (which == "c") {
        auto rng = instance_rng(a.seed, 12, 0);
        size_t n = a.n ? a.n : 6;
        if (n > 10) {
            throw PreconditionError("appendix c is limited to 10 qubits");
        }
        auto h = random_local_hamiltonian(n, 2 * n, std::min<size_t>(3, n), rng);
        auto rho = density_matrix(random_state(n, rng));
        double lhs = energy_from_rdms(h, rho);
        double rhs = energy_direct(h, rho);
        bool ok = std::abs(lhs - rhs) <= 1e-10;
        rep.inputs["qubits"] = n;
        rep.add({{"terms", h.terms.size()}, {"energy_from_rdms", lhs}, {"energy", rhs}}, ok);
        rep.violation = !ok;
        rep.summary = ok ? "energies agree" : "energies differ";
    } else {
        throw std::invalid_argument("appendix must be a, b or c");
    }
    return rep;
}

void add_input_flags(CLI::App *c, Args &a) {
    c->add_option("--fixture", a.fixture, "tetrahedron, cube or torus (or a label like cube-2)");
    c->add_option("--n", a.n, "fixture size");
    c->add_option("--file", a.file, "complex JSON file");
}

void add_output_flags(CLI::App *c, Args &a) {
    c->add_option("--out", a.out, "write the report here instead of stdout");
    c->add_flag("--strict", a.strict, "exit 4 on any negative result");
    c->add_flag("--timings", a.timings, "include wall time (breaks byte-identical reports)");
}

}  // namespace

int main(int argc, char **argv) {
    auto start = std::chrono::steady_clock::now();
    Args a;
    CLI::App app{"Surface-code complexes, homology, light cones and lemma verification"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "surflc 1.0.0");

    auto *complex = app.add_subcommand("complex", "build, validate or describe a complex");
    complex->require_subcommand(1);
    auto *c_build = complex->add_subcommand("build", "print a fixture in the complex file format");
    auto *c_validate = complex->add_subcommand("validate", "check the closed-surface conditions");
    auto *c_stats = complex->add_subcommand("stats", "counts, degrees, diameters and balls");
    for (auto *c : {c_build, c_validate, c_stats}) {
        add_input_flags(c, a);
    }
    c_build->add_option("--out", a.out, "write the complex here instead of stdout");
    for (auto *c : {c_validate, c_stats}) {
        add_output_flags(c, a);
    }
    c_stats->add_option("--edge", a.edge, "center of a ball query");
    c_stats->add_option("--radius", a.radius, "ball radius");
    c_stats->add_option("--metric", a.metric, "path or copath")->check(CLI::IsMember({"path", "copath"}));

    auto *homology_cmd = app.add_subcommand("homology", "GF(2) homology and cohomology");
    auto *code_cmd = app.add_subcommand("code", "surface code parameters and encoder");
    auto *lightcone_cmd = app.add_subcommand("lightcone", "light cone of an edge set");
    auto *supports_cmd = app.add_subcommand("supports", "effective supports A and B");
    auto *separation_cmd = app.add_subcommand("separation", "separation and detour queries");
    auto *rsimple_cmd = app.add_subcommand("rsimple", "r-simple connectedness");
    for (auto *c : {homology_cmd, code_cmd, lightcone_cmd, supports_cmd, separation_cmd, rsimple_cmd}) {
        add_input_flags(c, a);
        add_output_flags(c, a);
    }
    code_cmd->add_option("--pin", a.pin, "logical operators fixed by the encoder: x or z");
    code_cmd->add_option("--emit-encoder", a.emit, "save the encoder circuit here");
    code_cmd->add_flag("--brief", a.brief, "skip encoder synthesis");
    for (auto *c : {lightcone_cmd, supports_cmd}) {
        c->add_option("--circuit", a.circuit, "circuit JSON file (default: the code's encoder)");
        c->add_option("--pin", a.pin, "encoder logical pinning: x or z");
    }
    lightcone_cmd->add_option("--gamma", a.gamma, "source edges")->delimiter(',');
    lightcone_cmd->add_option("--direction", a.direction, "up or down");
    for (auto *c : {supports_cmd, separation_cmd}) {
        c->add_option("--gamma", a.gamma, "edge sequence of the path (default: random from --seed)")
            ->delimiter(',');
        c->add_option("--seed", a.seed, "seed for the random path");
    }
    separation_cmd->add_option("--x", a.x, "candidate separating edges")->delimiter(',');
    separation_cmd->add_option("--x0", a.x0, "detour mode: center of the blocked ball");
    separation_cmd->add_option("--radius", a.radius, "detour mode: ball radius");
    separation_cmd->add_option("--endpoints", a.endpoints, "detour endpoint rule: shell or ball");
    for (auto *c : {separation_cmd, rsimple_cmd}) {
        c->add_option("--k-rule", a.k_rule, "local subcomplex edges: face or incident");
    }
    rsimple_cmd->add_option("--radius", a.radius, "single radius (default: 0..diameter)");

    std::string lemma;
    auto *verify_cmd = app.add_subcommand("verify", "run acceptance criteria");
    verify_cmd->add_option("lemma", lemma, "criterion key or all")->required();
    add_input_flags(verify_cmd, a);
    add_output_flags(verify_cmd, a);
    verify_cmd->add_option("--seed", a.seed, "seed for every random instance");
    verify_cmd->add_option("--jobs", a.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--k-rule", a.k_rule, "local subcomplex edges: face or incident");
    verify_cmd->add_flag("--brief", a.brief, "omit per-instance records");

    std::string part;
    auto *appendix_cmd = app.add_subcommand("appendix", "appendix constructions a, b or c");
    appendix_cmd->add_option("part", part, "a, b or c")->required();
    add_output_flags(appendix_cmd, a);
    appendix_cmd->add_option("--n", a.n, "qubits (a, c) or CAT size (b)");
    appendix_cmd->add_option("--depth", a.depth, "random circuit depth (a)");
    appendix_cmd->add_option("--circuit", a.circuit, "circuit JSON file (a)");
    appendix_cmd->add_option("--seed", a.seed, "seed for random instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        Report rep;
        if (c_build->parsed()) {
            cmd_complex_build(a);
            return 0;
        } else if (c_validate->parsed()) {
            rep = cmd_complex_validate(a);
        } else if (c_stats->parsed()) {
            rep = cmd_complex_stats(a);
        } else if (homology_cmd->parsed()) {
            rep = cmd_homology(a);
        } else if (code_cmd->parsed()) {
            rep = cmd_code(a);
        } else if (lightcone_cmd->parsed()) {
            rep = cmd_lightcone(a);
        } else if (supports_cmd->parsed()) {
            rep = cmd_supports(a);
        } else if (separation_cmd->parsed()) {
            rep = cmd_separation(a);
        } else if (rsimple_cmd->parsed()) {
            rep = cmd_rsimple(a);
        } else if (verify_cmd->parsed()) {
            rep = cmd_verify(a, lemma);
        } else {
            rep = cmd_appendix(a, part);
        }
        return emit(a, rep, start);
    } catch (const PreconditionError &e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const ComplexError &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

// Acceptance suite: one line per criterion, nonzero exit when any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bordered/algebras.hpp"
#include "bordered/foliation.hpp"
#include "bordered/moves.hpp"
#include "bordered/poisson.hpp"
#include "bordered/relations.hpp"
#include "support.hpp"

using namespace bordered;
using namespace testing_support;

namespace {

constexpr std::uint64_t seed = 20240601;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void absorb(const std::vector<RelationCheck>& checks) {
        for (const auto& c : checks) require(c.holds, c.name + " (" + c.detail + ")");
    }
    void note(const std::string& s) { notes.push_back(s); }
};

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
};

// G_ij on A_n with G_ji = G_ij.
LaurentElem sym(const GeneratorMatrix<LaurentElem>& g, int i, int j) { return i < j ? g(i, j) : g(j, i); }

Outcome exact_traces() {
    Outcome out;
    const FatGraph a3 = a_graph(3);
    const PathWord g12({{a3.edge("Z1"), StepKind::inversion}, {a3.edge("Z2"), StepKind::inversion}});
    const LaurentElem expected =
        mono(a3, {{"Z1", 2}, {"Z2", 2}}) + mono(a3, {{"Z1", 2}, {"Z2", -2}}) + mono(a3, {{"Z1", -2}, {"Z2", -2}});
    out.require(holonomy_trace(a3, g12) == expected, "G_12 on A3 is e^(Z1+Z2) + e^(Z1-Z2) + e^(-Z1-Z2)");

    const FatGraph ann = annulus();
    const LaurentElem p1 = mono(ann, {{"Y", -1}}) + mono(ann, {{"Y", 1}});
    const LaurentElem p2 = mono(ann, {{"Z", 2}, {"Y", 1}}) + mono(ann, {{"Z", -2}, {"Y", -1}});
    out.require(literal_trace(parse_matrix_word(ann, "Z:+:L,Y:+:L,Z:+:!")) == p1, "trace P_I = 2 cosh(Y/2)");
    out.require(literal_trace(parse_matrix_word(ann, "Z:+:L,Y:+:L,Z:+:F")) == p2, "trace P_II = 2 cosh(Z + Y/2)");
    out.require(holonomy_trace(ann, parse_path_word(ann, "Y:-:R")) == p1, "closed path around the hole");
    out.require(holonomy_trace(ann, parse_path_word(ann, "Y:-:L,Z:+:F,Z:-:L")) == p2, "closed path through the window");
    return out;
}

Outcome classical_brackets() {
    Outcome out;
    const FatGraph a3 = a_graph(3);
    const PoissonMatrix p3 = wp_matrix(a3);
    const auto g3 = classical_generators(AlgebraKind::a_series, 3);
    for (const auto& [i, j, k] : std::array<std::array<int, 3>, 3>{{{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}}) {
        const LaurentElem lhs = bracket(sym(g3, i, j), sym(g3, j, k), p3);
        const LaurentElem rhs = sym(g3, i, j) * sym(g3, j, k) - LaurentElem(2) * sym(g3, i, k);
        out.require(lhs == rhs, "{G_" + std::to_string(i) + std::to_string(j) + ",G_" + std::to_string(j) +
                                    std::to_string(k) + "} on A3");
    }
    const FatGraph a4 = a_graph(4);
    const auto g4 = classical_generators(AlgebraKind::a_series, 4);
    const LaurentElem crossing = bracket(g4(1, 3), g4(2, 4), wp_matrix(a4));
    out.require(crossing == LaurentElem(2) * (g4(1, 2) * g4(3, 4) - g4(1, 4) * g4(2, 3)), "{G_13,G_24} on A4");
    return out;
}

Outcome quantum_products() {
    Outcome out;
    out.absorb(product_expansions());
    const auto relations = a_series_relations(3, Regime::quantum);
    out.require(relations.size() == 3, "three A3 q-commutator relations");
    out.absorb(relations);
    return out;
}

Outcome quantum_d_series() {
    Outcome out;
    for (int n : {3, 4}) {
        for (const auto& c : d_series_relations(n, Regime::quantum)) {
            out.require(c.holds, "D" + std::to_string(n) + " " + c.name + " (" + c.detail + ")");
            if (c.holds && c.name.rfind("(b)", 0) == 0) out.note("D" + std::to_string(n) + " holds: " + c.name);
        }
    }
    out.require(d_series_jacobi(3).holds, "Jacobi on D3 generator triples");
    return out;
}

Outcome flip_invariance() {
    Outcome out;
    std::mt19937_64 rng(seed);
    int inner = 0;
    int pending = 0;
    int failures = 0;
    for (const auto& [g, w, label] : word_corpus(6, seed)) {
        for (EdgeId e : g.edges()) {
            FlipResult r;
            try {
                r = flip(g, e);
            } catch (const WrongMoveError&) {
                continue;
            }
            ++(r.kind == MoveKind::pending ? pending : inner);
            out.require(preserves_poisson(r), label + " flip " + g.name(e) + " preserves the pairing");
            const PathWord moved = r.transport(w);
            for (int s = 0; s < 20; ++s) {
                const Assignment at = random_assignment(g, rng);
                const double before = numeric_trace(g, w, at);
                const double after = numeric_trace(r.after, moved, r.apply(at));
                if (!close(before, after, 1e-9)) {
                    ++failures;
                    out.require(false, label + " flip " + g.name(e));
                    break;
                }
            }
        }
    }
    out.require(inner >= 10 && pending >= 10, "corpus covers inner and pending flips");
    std::uniform_real_distribution<double> u(-2, 2);
    int cases = 0;
    for (int s = 0; s < 20; ++s)
        for (const auto& id : pending_flip_identities(u(rng), u(rng), u(rng))) {
            if (id.name.find("stated") != std::string::npos) continue;
            if (s == 0) ++cases;
            out.require(id.residual < 1e-9, "pending identity " + id.name);
        }
    out.require(cases == 4, "four pending-flip matrix identities");
    out.note(std::to_string(inner + pending) + " triples (" + std::to_string(inner) + " inner, " +
             std::to_string(pending) + " pending), 20 points each, " + std::to_string(failures) + " mismatches");
    return out;
}

Outcome braid_group() {
    Outcome out;
    out.absorb(braid_relations(AlgebraKind::a_series, Regime::quantum, 3));
    out.absorb(braid_relations(AlgebraKind::a_series, Regime::quantum, 4));
    out.absorb(numeric_braid_relations(5, {seed, 20, 1e-9}));
    out.absorb(braid_relations(AlgebraKind::d_series, Regime::quantum, 3));
    const auto witness = chain_power_counterexample(AlgebraKind::d_series, 3, seed, 20, 1e-9);
    out.require(witness.has_value(), "D3 chain power witness");
    if (witness)
        out.note("D3 chain^3 moves G_" + std::to_string(witness->i) + std::to_string(witness->j) + " from " +
                 std::to_string(witness->before) + " to " + std::to_string(witness->after));
    return out;
}

Outcome invariants() {
    Outcome out;
    out.absorb(invariant_relations(4, Regime::classical));
    for (Regime r : {Regime::classical, Regime::quantum}) {
        int central = 0;
        for (const auto& c : d_series_relations(2, r))
            if (c.name.rfind("central", 0) == 0) {
                ++central;
                out.require(c.holds, c.name);
            }
        out.require(central == 2, "two D2 central elements");
    }
    return out;
}

FatGraph torus_with_window() {
    return FatGraph::parse("edge Z u 0 v 0\nedge C u 1 v 1\nedge A u 2 w 0\npedge P w 1\nedge B w 2 v 2\n");
}

Outcome doubling() {
    Outcome out;
    std::vector<FatGraph> graphs{annulus(), torus_with_window()};
    for (int n = 3; n <= 7; ++n) graphs.push_back(a_graph(n));
    for (int n = 2; n <= 6; ++n) graphs.push_back(d_graph(n));
    graphs.push_back(flip_pending(d_graph(3), d_graph(3).edge("Z1")).after);
    std::set<std::pair<int, std::vector<int>>> distinct;
    for (const FatGraph& g : graphs) {
        const SurfaceSignature sig = signature(g);
        std::vector<int> delta = sig.delta;
        std::sort(delta.begin(), delta.end());
        distinct.emplace(sig.genus, std::move(delta));
        const DoubledSignature formula = double_signature(sig);
        const SurfaceSignature glued = signature(double_graph(g).graph);
        std::ostringstream label;
        label << "g=" << sig.genus << " holes=" << sig.holes() << " marked=" << sig.marked_points();
        out.require(!formula.degenerate && formula.genus == glued.genus && formula.holes == glued.holes(),
                    "doubled signature for " + label.str());
    }
    out.require(distinct.size() >= 10, "at least 10 distinct signatures");
    out.note(std::to_string(distinct.size()) + " distinct signatures compared");

    std::mt19937_64 rng(seed);
    int words = 0;
    for (const auto& [g, w, label] : word_corpus(12, seed)) {
        if (g.dot_count() == 0) continue;
        ++words;
        const DoubledGraph d = double_graph(g);
        const PathWord lifted = lift_to_double(g, d, w, 0);
        for (int s = 0; s < 10; ++s) {
            const Assignment at = random_assignment(g, rng);
            const double x = numeric_trace(g, w, at);
            const double doubled = numeric_trace(d.graph, lifted, doubled_coordinates(g, d, at));
            const double expected = w.inversion_count() % 2 == 0 ? x : x * x - 2;
            if (!close(doubled, expected, 1e-9)) {
                out.require(false, "length relation for " + label);
                break;
            }
        }
    }
    out.note(std::to_string(words) + " words lifted, 10 points each");
    return out;
}

Outcome tropical_layer() {
    Outcome out;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> weight(-6, 6);
    const std::vector<std::pair<std::string, FatGraph>> graphs{
        {"annulus", annulus()}, {"A3", a_graph(3)}, {"A4", a_graph(4)}, {"A5", a_graph(5)},
        {"D2", d_graph(2)},     {"D3", d_graph(3)}, {"D4", d_graph(4)}};
    for (const auto& [name, start] : graphs) {
        FatGraph g = start;
        FreewayMeasure m{std::vector<mpq_class>(g.edge_count())};
        for (auto& x : m.long_branch) x = weight(rng);
        FoliationShear s = shear_from_measure(m, g);
        out.require(face_conditions_hold(g, s), name + " initial face conditions");
        int done = 0;
        int broken = 0;
        std::uniform_int_distribution<std::size_t> pick(0, g.edge_count() - 1);
        while (done < 1000) {
            TropicalFlip t;
            try {
                t = tropical_flip(g, s, edge_id(pick(rng)));
            } catch (const WrongMoveError&) {
                continue;
            }
            if (!face_conditions_hold(t.move.after, t.shear)) ++broken;
            g = std::move(t.move.after);
            s = std::move(t.shear);
            ++done;
        }
        out.require(broken == 0, name + ": " + std::to_string(broken) + " of 1000 flips break the face conditions");
    }
    const std::array<double, 3> lambdas{10, 100, 1000};
    for (double x : {-1.0, -0.25, 0.0, 0.25, 1.0}) {
        const LimitReport r = tropical_limit_check(x, lambdas);
        out.require(r.ok(), "limit at x=" + std::to_string(x));
    }
    const LimitReport at_zero = tropical_limit_check(0, lambdas);
    std::ostringstream dev;
    dev << "deviation at x=0:";
    for (const auto& s : at_zero.samples) dev << ' ' << s.deviation << " (bound " << s.bound << ')';
    out.note(dev.str());
    return out;
}

bool positive_q_coefficients(const TorusElem& t) {
    for (const auto& [v, c] : t.terms())
        for (const auto& [p, k] : c.terms())
            if (k <= 0) return false;
    return true;
}

Outcome positivity() {
    Outcome out;
    const auto corpus = word_corpus(40, seed);
    out.require(corpus.size() >= 50, "corpus of at least 50 words");
    int quantum = 0;
    for (const auto& [g, w, label] : corpus) {
        out.require(holonomy_trace(g, w).has_positive_coefficients(), "classical coefficients of " + label);
        if (is_graph_simple(g, w)) {
            ++quantum;
            out.require(positive_q_coefficients(quantum_trace(g, w, torus_context(g))),
                        "quantum coefficients of " + label);
        }
    }
    out.note(std::to_string(corpus.size()) + " words, " + std::to_string(quantum) + " also checked quantum");
    return out;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "exact geodesic functions", 1, exact_traces},
        {2, "classical bracket relations", 5, classical_brackets},
        {3, "quantum products and A3 commutators", 5, quantum_products},
        {4, "quantum D_n relation families and Jacobi", 60, quantum_d_series},
        {5, "flip invariance", 30, flip_invariance},
        {6, "braid relations", 120, braid_group},
        {7, "invariants", 60, invariants},
        {8, "doubling", 10, doubling},
        {9, "tropical layer", 10, tropical_layer},
        {10, "Laurent positivity", 10, positivity},
    };
    std::printf("seed %llu\n", static_cast<unsigned long long>(seed));
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        o.require(secs <= c.limit_seconds, "time limit");
        if (!o.pass) ++failed;
        std::printf("CRITERION %d %s %s (%.2fs, limit %.0fs)\n", c.number, o.pass ? "PASS" : "FAIL", c.title.c_str(),
                    secs, c.limit_seconds);
        for (const auto& n : o.notes) std::printf("  %s\n", n.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}

#pragma once

// Shared fixtures and independent oracles for the unit and acceptance tests.

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "bordered/algebras.hpp"
#include "bordered/fatgraph.hpp"
#include "bordered/geodesic.hpp"

namespace testing_support {

using namespace bordered;

inline FatGraph annulus() { return standard_graph(StandardKind::annulus_one_marked); }
inline FatGraph a_graph(int n) { return standard_graph(StandardKind::a_series, n); }
inline FatGraph d_graph(int n) { return standard_graph(StandardKind::d_series, n); }

inline LaurentElem mono(const FatGraph& g, std::vector<std::pair<std::string, int>> halves, long c = 1) {
    std::vector<ExpVector::Entry> entries;
    for (const auto& [name, h] : halves) entries.emplace_back(g.edge(name), HalfInt::from_units(h));
    return LaurentElem::monomial(ExpVector::from_entries(std::move(entries)), c);
}

inline Assignment random_assignment(const FatGraph& g, std::mt19937_64& rng, double spread = 1.0) {
    std::uniform_real_distribution<double> dist(-spread, spread);
    Assignment a(g.edge_count());
    for (EdgeId e : g.edges()) a.set(e, dist(rng));
    return a;
}

inline bool close(double a, double b, double tol = 1e-9) {
    return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// Plain 2x2 products written out independently of the library.
struct M2 {
    double a, b, c, d;
};
inline M2 mul(const M2& x, const M2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}
inline M2 shear_matrix(double z) { return {0, -std::exp(z / 2), std::exp(-z / 2), 0}; }
inline const M2 left_turn{0, 1, -1, -1};
inline const M2 right_turn{1, 1, -1, 0};
inline const M2 flip_matrix{0, 1, -1, 0};

// Oracle trace of a path word: each step contributes X, then the turn towards the next step.
inline double oracle_trace(const FatGraph& g, const PathWord& w, const Assignment& at) {
    const auto steps = w.steps();
    M2 p{1, 0, 0, 1};
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Step s = steps[i];
        const Step next = steps[(i + 1) % steps.size()];
        const double z = at.at(s.edge);
        if (s.kind == StepKind::inversion) {
            p = mul(shear_matrix(z), p);
            p = mul(flip_matrix, p);
        }
        p = mul(shear_matrix(z), p);
        const HalfEdge arr = arriving(s);
        const HalfEdge dep = leaving(next);
        p = mul(dep == g.next_at_vertex(arr) ? right_turn : left_turn, p);
    }
    return std::abs(p.a + p.d);
}

// Random closed non-backtracking walk; empty when no return happens within the cap.
inline PathWord random_closed_walk(const FatGraph& g, std::mt19937_64& rng, std::size_t cap = 24) {
    const auto edges = g.edges();
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    std::bernoulli_distribution coin(0.5);
    const auto step_from = [&](HalfEdge h) -> Step {
        const EdgeId e = edge_of(h);
        if (g.is_pending(e)) return {e, StepKind::inversion};
        return {e, end_of(h) == 0 ? StepKind::forward : StepKind::backward};
    };
    const EdgeId e0 = edges[pick(rng)];
    const Step first = step_from(half_edge(e0, g.is_pending(e0) ? 0 : (coin(rng) ? 0 : 1)));
    std::vector<Step> steps{first};
    while (steps.size() < cap) {
        const HalfEdge arr = arriving(steps.back());
        const HalfEdge dep = coin(rng) ? g.next_at_vertex(arr) : g.prev_at_vertex(arr);
        const Step s = step_from(dep);
        if (s == first) {
            PathWord w(steps);
            // Closing must also respect the turn into the first step, which it does by construction.
            return w;
        }
        steps.push_back(s);
    }
    return {};
}

// Closed words on standard graphs: generators, their squares, and random closed walks.
struct CorpusWord {
    FatGraph graph;
    PathWord word;
    std::string label;
};

inline std::vector<CorpusWord> word_corpus(std::size_t random_count, std::uint64_t seed) {
    std::vector<CorpusWord> out;
    for (int n = 3; n <= 5; ++n) {
        const FatGraph g = a_graph(n);
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                out.push_back({g, generator_word(AlgebraKind::a_series, n, i, j),
                               "A" + std::to_string(n) + " G" + std::to_string(i) + std::to_string(j)});
    }
    for (int n = 2; n <= 4; ++n) {
        const FatGraph g = d_graph(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                out.push_back({g, generator_word(AlgebraKind::d_series, n, i, j),
                               "D" + std::to_string(n) + " G" + std::to_string(i) + std::to_string(j)});
    }
    std::mt19937_64 rng(seed);
    const std::vector<FatGraph> graphs{annulus(), a_graph(3), a_graph(4), a_graph(5), d_graph(2), d_graph(3)};
    std::size_t made = 0;
    while (made < random_count) {
        const FatGraph& g = graphs[made % graphs.size()];
        PathWord w = random_closed_walk(g, rng);
        if (w.empty() || is_dot_loop(g, w)) continue;
        out.push_back({g, w, "walk " + format_word(g, w)});
        ++made;
    }
    return out;
}

}  // namespace testing_support

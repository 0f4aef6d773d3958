#include <doctest.h>

#include <random>

#include "bordered/poisson.hpp"
#include "support.hpp"

using namespace bordered;
using namespace testing_support;

TEST_CASE("pairing on standard graphs") {
    const FatGraph d4 = d_graph(4);
    const PoissonMatrix pm = wp_matrix(d4);
    const auto y = [&](int i) { return d4.edge("Y" + std::to_string((i + 3) % 4 + 1)); };
    const auto z = [&](int i) { return d4.edge("Z" + std::to_string(i)); };
    for (int i = 1; i <= 4; ++i) {
        CHECK(pm.at(y(i), y(i - 1)) == 1);
        CHECK(pm.at(z(i), y(i)) == 1);
        CHECK(pm.at(z(i), y(i - 1)) == -1);
        CHECK(pm.at(z(i), z(i % 4 + 1)) == 0);
        CHECK(pm.at(y(i), y(i + 2)) == 0);
    }

    const FatGraph ann = annulus();
    CHECK(wp_matrix(ann).at(ann.edge("Z"), ann.edge("Y")) == 0);

    const FatGraph a3 = a_graph(3);
    const PoissonMatrix p3 = wp_matrix(a3);
    CHECK(p3.at(a3.edge("Z1"), a3.edge("Z2")) == 1);
    CHECK(p3.at(a3.edge("Z2"), a3.edge("Z3")) == 1);
    CHECK(p3.at(a3.edge("Z3"), a3.edge("Z1")) == 1);
}

TEST_CASE("pairing is antisymmetric with small entries") {
    for (const FatGraph& g : {annulus(), a_graph(5), d_graph(5)}) {
        const PoissonMatrix pm = wp_matrix(g);
        for (EdgeId a : g.edges())
            for (EdgeId b : g.edges()) {
                CHECK(pm.at(a, b) == -pm.at(b, a));
                CHECK(std::abs(pm.at(a, b)) <= 2);
            }
    }
}

TEST_CASE("geodesic brackets") {
    const FatGraph a3 = a_graph(3);
    const PoissonMatrix p3 = wp_matrix(a3);
    const auto g3 = classical_generators(AlgebraKind::a_series, 3);
    CHECK(bracket(g3(1, 2), g3(2, 3), p3) == g3(1, 2) * g3(2, 3) - LaurentElem(2) * g3(1, 3));
    CHECK(bracket(g3(1, 2), g3(1, 2), p3).is_zero());

    const FatGraph a4 = a_graph(4);
    const auto g4 = classical_generators(AlgebraKind::a_series, 4);
    CHECK(bracket(g4(1, 3), g4(2, 4), wp_matrix(a4)) ==
          LaurentElem(2) * g4(1, 2) * g4(3, 4) - LaurentElem(2) * g4(1, 4) * g4(2, 3));
}

TEST_CASE("bracket is a derivation satisfying Jacobi") {
    const FatGraph g = d_graph(3);
    const PoissonMatrix pm = wp_matrix(g);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> half(-2, 2);
    const auto random_mono = [&] {
        std::vector<std::pair<std::string, int>> e;
        for (EdgeId id : g.edges()) e.emplace_back(g.name(id), 2 * half(rng));
        return mono(g, e);
    };
    for (int t = 0; t < 100; ++t) {
        const LaurentElem a = random_mono() + random_mono();
        const LaurentElem b = random_mono();
        const LaurentElem c = random_mono() - random_mono();
        CHECK(bracket(a, b, pm) == -bracket(b, a, pm));
        CHECK(bracket(a, b * c, pm) == bracket(a, b, pm) * c + b * bracket(a, c, pm));
        CHECK((bracket(a, bracket(b, c, pm), pm) + bracket(b, bracket(c, a, pm), pm) +
               bracket(c, bracket(a, b, pm), pm))
                  .is_zero());
    }
}

TEST_CASE("Casimirs and corank") {
    for (int n = 3; n <= 6; ++n) {
        const CasimirReport r = casimir_check(a_graph(n));
        CHECK(r.ok());
        CHECK(r.corank == 1);
    }
    for (int n = 2; n <= 5; ++n) {
        const CasimirReport r = casimir_check(d_graph(n));
        CHECK(r.ok());
        CHECK(r.corank == 2);
    }
    const CasimirReport ann = casimir_check(annulus());
    CHECK(ann.ok());
    CHECK(ann.rank == 0);
    CHECK(ann.corank == 2);
}

TEST_CASE("boundary-parallel curves are central among D_n generators") {
    for (int n = 2; n <= 4; ++n) {
        const FatGraph g = d_graph(n);
        const PoissonMatrix pm = wp_matrix(g);
        const auto gens = classical_generators(AlgebraKind::d_series, n);
        // Inner boundary: the ring of Y edges. Outer boundary with windows: the ring passing each dot.
        std::vector<Step> inner, outer;
        for (int i = 1; i <= n; ++i) inner.push_back({g.edge("Y" + std::to_string(i)), StepKind::forward});
        for (int i = n; i >= 1; --i) {
            outer.push_back({g.edge("Y" + std::to_string(i)), StepKind::backward});
            outer.push_back({g.edge("Z" + std::to_string(i)), StepKind::inversion});
        }
        const LaurentElem c1 = holonomy_trace(g, PathWord(inner));
        const LaurentElem c2 = holonomy_trace(g, PathWord(outer));
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                CHECK(bracket(c1, gens(i, j), pm).is_zero());
                CHECK(bracket(c2, gens(i, j), pm).is_zero());
            }
    }
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "bordered/moves.hpp"
#include "bordered/poisson.hpp"
#include "support.hpp"

using namespace bordered;
using namespace testing_support;

namespace {

const double log2v = std::log(2.0);

// Two-vertex graph with inner edge Z whose neighbours are all pending.
FatGraph h_graph() {
    return FatGraph::parse("edge Z u 0 v 0\npedge A u 2\npedge B u 1\npedge C v 2\npedge D v 1\n");
}

}  // namespace

TEST_CASE("phi") {
    CHECK(phi(0) == doctest::Approx(log2v));
    CHECK(phi(800) == doctest::Approx(800));
    CHECK(phi(-800) == doctest::Approx(0));
    CHECK(phi(1.5) - phi(-1.5) == doctest::Approx(1.5));
}

TEST_CASE("inner flip coordinates") {
    const FatGraph g = h_graph();
    const FlipResult r = flip_inner(g, g.edge("Z"));
    Assignment zero(g.edge_count());
    for (EdgeId e : g.edges()) zero.set(e, 0);
    const Assignment out = r.apply(zero);
    CHECK(out.at(g.edge("A")) == doctest::Approx(log2v));
    CHECK(out.at(g.edge("B")) == doctest::Approx(-log2v));
    CHECK(out.at(g.edge("C")) == doctest::Approx(log2v));
    CHECK(out.at(g.edge("D")) == doctest::Approx(-log2v));
    CHECK(out.at(g.edge("Z")) == doctest::Approx(0));

    std::mt19937_64 rng(2);
    for (int t = 0; t < 10; ++t) {
        const Assignment at = random_assignment(g, rng, 3.0);
        const FlipResult back = flip_inner(r.after, g.edge("Z"));
        const Assignment twice = back.apply(r.apply(at));
        for (EdgeId e : g.edges()) CHECK(std::abs(twice.at(e) - at.at(e)) < 1e-12);
    }
    CHECK_THROWS_AS(flip_inner(g, g.edge("A")), WrongMoveError);
}

TEST_CASE("inner flip with coinciding neighbours") {
    // On the one-holed torus the two edges preceding Z are the same edge A.
    const FatGraph g = FatGraph::parse("edge Z u 0 v 0\nedge C u 1 v 1\nedge A u 2 v 2\n");
    const FlipResult r = flip_inner(g, g.edge("Z"));
    Assignment at(g.edge_count());
    at.set(g.edge("A"), 1);
    at.set(g.edge("C"), 1);
    at.set(g.edge("Z"), 1);
    const Assignment out = r.apply(at);
    CHECK(out.at(g.edge("A")) == doctest::Approx(1 + 2 * std::log(1 + std::exp(1.0))));
    CHECK(out.at(g.edge("C")) == doctest::Approx(1 - 2 * std::log(1 + std::exp(-1.0))));
    CHECK(preserves_poisson(r));
}

TEST_CASE("pending flip coordinates") {
    const FatGraph g = a_graph(4);
    const FlipResult r = flip_pending(g, g.edge("Z2"));
    // Z2 sits in slot 1 at v2: Y2 follows it, Z1 precedes it.
    Assignment at(g.edge_count());
    for (EdgeId e : g.edges()) at.set(e, 0.25);
    at.set(g.edge("Y2"), 0);
    at.set(g.edge("Z2"), 0);
    const Assignment out = r.apply(at);
    CHECK(out.at(g.edge("Y2")) == doctest::Approx(-log2v));
    CHECK(out.at(g.edge("Z1")) == doctest::Approx(0.25 + log2v));
    CHECK(out.at(g.edge("Z2")) == 0);
    CHECK_THROWS_AS(flip_pending(g, g.edge("Y2")), WrongMoveError);
}

TEST_CASE("pending flip on A3 reproduces the braid of the first two strands") {
    const FatGraph g = a_graph(3);
    const FlipResult r = flip_pending(g, g.edge("Z1"));
    std::mt19937_64 rng(6);
    for (int t = 0; t < 10; ++t) {
        const Assignment at = random_assignment(g, rng);
        const Assignment moved = r.apply(at);
        const double z1 = at.at(g.edge("Z1"));
        const double z2 = at.at(g.edge("Z2"));
        const double z3 = at.at(g.edge("Z3"));
        // After exchanging the names of Z1 and Z2.
        CHECK(std::exp(moved.at(g.edge("Z2"))) == doctest::Approx(std::exp(z2) / (1 + std::exp(-2 * z1))));
        CHECK(std::exp(moved.at(g.edge("Z1"))) == doctest::Approx(std::exp(-z1)));
        CHECK(std::exp(moved.at(g.edge("Z3"))) == doctest::Approx(std::exp(z3) * (1 + std::exp(2 * z1))));
    }
}

TEST_CASE("pending flip matrix identities") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int t = 0; t < 10; ++t) {
        const auto ids = pending_flip_identities(u(rng), u(rng), u(rng));
        REQUIRE(ids.size() == 5);
        for (const auto& id : ids) {
            INFO(id.name);
            if (id.name.find("stated") != std::string::npos)
                CHECK(id.residual > 1e-6);
            else
                CHECK(id.residual < 1e-9);
        }
    }
}

TEST_CASE("flip descriptors") {
    const FatGraph g = a_graph(3);
    const auto lines = flip_pending(g, g.edge("Z1")).describe();
    CHECK(lines == std::vector<std::string>{"Z1' = -Z1", "Z2' = Z2 - phi(-2*Z1)", "Z3' = Z3 + phi(2*Z1)"});
}

TEST_CASE("trace invariance and Poisson preservation over all flips") {
    std::mt19937_64 rng(44);
    int inner = 0;
    int pending = 0;
    for (const auto& [g, w, label] : word_corpus(30, 9)) {
        for (EdgeId e : g.edges()) {
            FlipResult r;
            try {
                r = flip(g, e);
            } catch (const WrongMoveError&) {
                continue;
            }
            INFO(label << " flipping " << g.name(e));
            ++(g.is_pending(e) ? pending : inner);
            CHECK(preserves_poisson(r));
            const PathWord moved = r.transport(w);
            CHECK(holonomy_trace(r.after, moved).has_positive_coefficients());
            for (int s = 0; s < 3; ++s) {
                const Assignment at = random_assignment(g, rng);
                CHECK(close(numeric_trace(g, w, at), numeric_trace(r.after, moved, r.apply(at))));
            }
            // Flipping back returns a word with the same trace.
            const FlipResult back = flip(r.after, e);
            const Assignment at = random_assignment(g, rng);
            CHECK(close(numeric_trace(g, w, at), numeric_trace(back.after, back.transport(moved), back.apply(r.apply(at)))));
        }
    }
    CHECK(inner > 20);
    CHECK(pending > 20);
}

TEST_CASE("annulus word through the pending flip") {
    const FatGraph g = annulus();
    const FlipResult r = flip_pending(g, g.edge("Z"));
    std::mt19937_64 rng(1);
    for (const char* text : {"Y:-:R", "Y:-:L,Z:+:F,Z:-:L"}) {
        const PathWord w = parse_path_word(g, text);
        const PathWord moved = r.transport(w);
        for (int t = 0; t < 10; ++t) {
            const Assignment at = random_assignment(g, rng);
            CHECK(close(numeric_trace(g, w, at), numeric_trace(r.after, moved, r.apply(at))));
        }
    }
}

#include <doctest.h>

#include <algorithm>

#include "bordered/fatgraph.hpp"
#include "support.hpp"

using namespace bordered;
using namespace testing_support;

namespace {

std::vector<ExpVector> sorted_face_sums(const FatGraph& g) {
    std::vector<ExpVector> out;
    for (const Face& f : trace_faces(g)) out.push_back(face_sum(f));
    std::sort(out.begin(), out.end());
    return out;
}

ExpVector sum_of(const FatGraph& g, std::vector<std::pair<std::string, int>> whole) {
    std::vector<ExpVector::Entry> e;
    for (const auto& [name, k] : whole) e.emplace_back(g.edge(name), HalfInt(k));
    return ExpVector::from_entries(std::move(e));
}

}  // namespace

TEST_CASE("parsing") {
    const FatGraph g = FatGraph::parse("# annulus\npedge Z v1 0\nedge Y v1 1 v1 2\n");
    CHECK(g.edge_count() == 2);
    CHECK(trace_faces(g).size() == 2);
    CHECK(FatGraph::parse(g.to_text()).to_text() == g.to_text());

    SUBCASE("duplicate slot names the line") {
        try {
            FatGraph::parse("pedge Z v1 0\npedge W v1 0\n");
            FAIL("expected a graph error");
        } catch (const GraphError& e) {
            CHECK(e.line() == 2);
        }
    }
    SUBCASE("malformed input") {
        CHECK_THROWS_AS(FatGraph::parse("edge Y v1 1\n"), GraphError);
        CHECK_THROWS_AS(FatGraph::parse("pedge Z v1 3\n"), GraphError);
        CHECK_THROWS_AS(FatGraph::parse("pedge Z v1 0\npedge Z v2 0\n"), GraphError);
        CHECK_THROWS_AS(FatGraph::parse("frob Z v1 0\n"), GraphError);
        // valence two at v1
        CHECK_THROWS_AS(FatGraph::parse("pedge Z v1 0\npedge W v1 1\n"), GraphError);
        // two components
        CHECK_THROWS_AS(FatGraph::parse("pedge A v1 0\npedge B v1 1\npedge C v1 2\n"
                                        "pedge D v2 0\npedge E v2 1\npedge F v2 2\n"),
                        GraphError);
    }
}

TEST_CASE("faces and Casimir sums") {
    const FatGraph ann = annulus();
    CHECK(sorted_face_sums(ann) ==
          std::vector<ExpVector>{std::min(sum_of(ann, {{"Y", 1}}), sum_of(ann, {{"Z", 2}, {"Y", 1}})),
                                 std::max(sum_of(ann, {{"Y", 1}}), sum_of(ann, {{"Z", 2}, {"Y", 1}}))});

    const FatGraph d4 = d_graph(4);
    auto expected = std::vector<ExpVector>{sum_of(d4, {{"Y1", 1}, {"Y2", 1}, {"Y3", 1}, {"Y4", 1}}),
                                           sum_of(d4, {{"Y1", 1}, {"Y2", 1}, {"Y3", 1}, {"Y4", 1}, {"Z1", 2},
                                                       {"Z2", 2}, {"Z3", 2}, {"Z4", 2}})};
    std::sort(expected.begin(), expected.end());
    CHECK(sorted_face_sums(d4) == expected);

    const FatGraph a3 = a_graph(3);
    CHECK(sorted_face_sums(a3) == std::vector<ExpVector>{sum_of(a3, {{"Z1", 2}, {"Z2", 2}, {"Z3", 2}})});
}

TEST_CASE("standard graphs") {
    const FatGraph a3 = a_graph(3);
    CHECK(a3.vertex_count() == 1);
    CHECK(a3.dot_count() == 3);
    for (int n = 3; n <= 7; ++n) {
        const FatGraph g = a_graph(n);
        CHECK(g.edge_count() == static_cast<std::size_t>(2 * n - 3));
        CHECK(g.vertex_count() == static_cast<std::size_t>(n - 2));
        const SurfaceSignature sig = signature(g);
        CHECK(sig.genus == 0);
        CHECK(sig.delta == std::vector<int>{n});
        CHECK(static_cast<int>(g.edge_count()) == sig.expected_edge_count());
    }
    for (int n = 2; n <= 6; ++n) {
        const FatGraph g = d_graph(n);
        CHECK(g.edge_count() == static_cast<std::size_t>(2 * n));
        const SurfaceSignature sig = signature(g);
        CHECK(sig.genus == 0);
        CHECK(sig.holes() == 2);
        CHECK(sig.marked_points() == n);
        CHECK(static_cast<int>(g.edge_count()) == sig.expected_edge_count());
    }
    const FatGraph ann = annulus();
    CHECK(ann.edge_count() == 2);
    CHECK(signature(ann).expected_edge_count() == 2);
    CHECK_THROWS_AS(a_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(d_graph(1), std::invalid_argument);
}

TEST_CASE("Euler characteristic") {
    const std::vector<FatGraph> graphs{annulus(), a_graph(3), a_graph(6), d_graph(2), d_graph(5)};
    for (const FatGraph& g : graphs) {
        const SurfaceSignature sig = signature(g);
        const int v = static_cast<int>(g.vertex_count() + g.dot_count());
        const int f = static_cast<int>(trace_faces(g).size());
        CHECK(v - static_cast<int>(g.edge_count()) + f == 2 - 2 * sig.genus);
        CHECK(f == sig.holes());
        CHECK(sig.is_hyperbolic());
    }
    // One-holed torus: theta graph with matching cyclic orders.
    const FatGraph torus = FatGraph::parse("edge A u 0 v 0\nedge B u 1 v 1\nedge C u 2 v 2\n");
    CHECK(signature(torus).genus == 1);
    CHECK(signature(torus).holes() == 1);
}

TEST_CASE("doubled signature") {
    const DoubledSignature a = double_signature({0, {1, 0}});
    CHECK(a.genus == 0);
    CHECK(a.holes == 3);
    const DoubledSignature b = double_signature({0, {3}});
    CHECK(b.genus == 1);
    CHECK(b.holes == 1);
    CHECK(double_signature({1, {0}}).degenerate);
}

TEST_CASE("doubled graph matches the doubling formula") {
    const DoubledGraph da = double_graph(annulus());
    CHECK(trace_faces(da.graph).size() == 3);
    CHECK(signature(da.graph).genus == 0);
    CHECK(da.graph.dot_count() == 0);

    const DoubledGraph d3 = double_graph(a_graph(3));
    CHECK(trace_faces(d3.graph).size() == 1);
    CHECK(signature(d3.graph).genus == 1);

    for (const FatGraph& g : {a_graph(4), a_graph(5), d_graph(2), d_graph(3), d_graph(4)}) {
        const DoubledSignature expected = double_signature(signature(g));
        const SurfaceSignature got = signature(double_graph(g).graph);
        CHECK(got.genus == expected.genus);
        CHECK(got.holes() == expected.holes);
    }

    const FatGraph closed = FatGraph::parse("edge A u 0 v 0\nedge B u 1 v 1\nedge C u 2 v 2\n");
    CHECK_THROWS_AS(double_graph(closed), GraphError);
}

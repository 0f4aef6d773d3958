#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "bordered/foliation.hpp"
#include "support.hpp"

using namespace bordered;
using namespace testing_support;

namespace {

FoliationShear shear_of(const FatGraph& g, std::vector<std::pair<std::string, long>> values) {
    FoliationShear s{std::vector<mpq_class>(g.edge_count(), 0)};
    for (const auto& [name, v] : values) s.zeta[index(g.edge(name))] = v;
    return s;
}

FreewayMeasure random_measure(const FatGraph& g, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-6, 6);
    FreewayMeasure m{std::vector<mpq_class>(g.edge_count())};
    for (auto& x : m.long_branch) x = d(rng);
    return m;
}

FatGraph h_graph() {
    return FatGraph::parse("edge Z u 0 v 0\npedge A u 2\npedge B u 1\npedge C v 2\npedge D v 1\n");
}

}  // namespace

TEST_CASE("shear from measure") {
    const FatGraph g = h_graph();
    CHECK(shear_from_measure(FreewayMeasure{std::vector<mpq_class>(5, 0)}, g) ==
          FoliationShear{std::vector<mpq_class>(5, 0)});

    // A curve through A and C only.
    FreewayMeasure m{std::vector<mpq_class>(5, 0)};
    m.long_branch[index(g.edge("A"))] = 1;
    m.long_branch[index(g.edge("C"))] = 1;
    CHECK(shear_from_measure(m, g).at(g.edge("Z")) == 1);

    // Two parallel copies of the arc closing through the window of Z2 on A3.
    const FatGraph a3 = a_graph(3);
    const FoliationShear s = shear_from_measure(measure_of(a3, generator_word(AlgebraKind::a_series, 3, 1, 2), 2), a3);
    CHECK(s.at(a3.edge("Z2")) == 2);
    CHECK(face_conditions_hold(a3, s));
}

TEST_CASE("short branches solve the coupling equations") {
    const FatGraph g = d_graph(3);
    std::mt19937_64 rng(1);
    const FreewayMeasure m = random_measure(g, rng);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (int s = 0; s < 3; ++s) {
            const VertexId id = static_cast<VertexId>(v);
            const mpq_class& mu = m.long_branch[index(edge_of(g.at(id, s)))];
            CHECK(m.short_branch(g, id, s) + m.short_branch(g, id, (s + 2) % 3) == mu);
        }
}

TEST_CASE("half-integrality and collar independence") {
    std::mt19937_64 rng(2);
    for (const FatGraph& g : {annulus(), a_graph(4), d_graph(3), d_graph(4)}) {
        const auto faces = trace_faces(g);
        for (int t = 0; t < 50; ++t) {
            const FreewayMeasure m = random_measure(g, rng);
            const FoliationShear s = shear_from_measure(m, g);
            CHECK(face_conditions_hold(g, s));
            for (EdgeId e : g.edges()) {
                CHECK(s.at(e).get_den() <= 2);
                // Inner coordinates of traversal measures of closed curves are integral.
            }
            for (const Face& f : faces) CHECK(shear_from_measure(with_collar_weight(g, m, f, 5), g) == s);
        }
    }
    const FatGraph d3 = d_graph(3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            const FoliationShear s =
                shear_from_measure(measure_of(d3, generator_word(AlgebraKind::d_series, 3, i, j)), d3);
            for (EdgeId e : d3.edges())
                if (!d3.is_pending(e)) CHECK(s.at(e).get_den() == 1);
        }
}

TEST_CASE("tropical inner flip") {
    const FatGraph g = h_graph();
    const EdgeId z = g.edge("Z");
    const TropicalFlip up = tropical_flip_inner(g, shear_of(g, {{"Z", 3}}), z);
    CHECK(up.shear.at(g.edge("A")) == 3);
    CHECK(up.shear.at(g.edge("C")) == 3);
    CHECK(up.shear.at(g.edge("B")) == 0);
    CHECK(up.shear.at(z) == -3);

    const TropicalFlip down = tropical_flip_inner(g, shear_of(g, {{"Z", -2}, {"A", 1}, {"B", 1}}), z);
    CHECK(down.shear.at(g.edge("B")) == -1);
    CHECK(down.shear.at(g.edge("A")) == 1);

    CHECK(tropical_flip_inner(up.move.after, up.shear, z).shear == shear_of(g, {{"Z", 3}}));
    CHECK_THROWS_AS(tropical_flip_inner(g, shear_of(g, {}), g.edge("A")), WrongMoveError);
}

TEST_CASE("tropical pending flip") {
    const FatGraph g = a_graph(3);
    // At the vertex, Z1 follows Z3 and Z2 precedes it: Y1 = Z1, Y2 = Z2 for the flip of Z3.
    const EdgeId z = g.edge("Z3");
    CHECK(tropical_flip_pending(g, shear_of(g, {{"Z3", -1}}), z).shear == shear_of(g, {{"Z1", -2}, {"Z3", 1}}));
    CHECK(tropical_flip_pending(g, shear_of(g, {{"Z3", 1}}), z).shear == shear_of(g, {{"Z2", 2}, {"Z3", -1}}));
    CHECK(tropical_flip_pending(g, shear_of(g, {{"Z1", 4}}), z).shear == shear_of(g, {{"Z1", 4}}));
    CHECK_THROWS_AS(tropical_flip_pending(d_graph(3), shear_of(d_graph(3), {}), d_graph(3).edge("Y1")),
                    WrongMoveError);
}

TEST_CASE("random tropical flips preserve the face conditions and are involutions") {
    std::mt19937_64 rng(77);
    for (const FatGraph& start : {annulus(), a_graph(4), a_graph(5), d_graph(3), d_graph(4)}) {
        FatGraph g = start;
        FoliationShear s = shear_from_measure(random_measure(g, rng), g);
        int done = 0;
        while (done < 200) {
            const EdgeId e = edge_id(std::uniform_int_distribution<std::size_t>(0, g.edge_count() - 1)(rng));
            TropicalFlip t;
            try {
                t = tropical_flip(g, s, e);
            } catch (const WrongMoveError&) {
                continue;
            }
            CHECK(face_conditions_hold(t.move.after, t.shear));
            CHECK(tropical_flip(t.move.after, t.shear, e).shear == s);
            g = t.move.after;
            s = t.shear;
            ++done;
        }
    }
}

TEST_CASE("naturality: flipping commutes with transporting the curve") {
    for (int n = 2; n <= 4; ++n) {
        const FatGraph g = d_graph(n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                for (EdgeId e : g.edges()) CHECK(natural_under_flip(g, generator_word(AlgebraKind::d_series, n, i, j), e));
    }
    const FatGraph g = annulus();
    CHECK(natural_under_flip(g, parse_path_word(g, "Y:-:L,Z:+:F,Z:-:L"), g.edge("Z")));
}

TEST_CASE("tropical limit") {
    const std::array<double, 3> lambdas{10, 100, 1000};
    const LimitReport zero = tropical_limit_check(0, lambdas);
    CHECK(zero.ok());
    for (const auto& s : zero.samples) CHECK(s.deviation == doctest::Approx(std::log(2.0) / s.lambda));

    const std::array<double, 1> hundred{100};
    CHECK(tropical_limit_check(1, hundred).samples[0].deviation < 1e-40);
    CHECK(tropical_limit_check(-1, hundred).samples[0].deviation < 1e-40);
    CHECK(tropical_limit_check(0.3, lambdas).ok());

    const std::array<double, 2> wrong{100, 10};
    CHECK_THROWS_AS(tropical_limit_check(1, wrong), std::invalid_argument);
}

TEST_CASE("shear files") {
    const FatGraph g = a_graph(3);
    const FoliationShear s = parse_shear(g, "# test\nZ1 = -3/2\nZ2=1\n\n");
    CHECK(s.at(g.edge("Z1")) == mpq_class(-3, 2));
    CHECK(s.at(g.edge("Z3")) == 0);
    CHECK(format_shear(g, s) == "Z1=-3/2\nZ2=1\nZ3=0\n");
    CHECK_THROWS_AS(parse_shear(g, "Q=1\n"), GraphError);
    CHECK_THROWS_AS(parse_shear(g, "Z1=1\nZ1=2\n"), GraphError);
    CHECK_THROWS_AS(parse_shear(g, "Z1=x\n"), GraphError);
}

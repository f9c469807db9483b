#include <doctest.h>

#include <cmath>
#include <set>

#include "fractalpile/builders.hpp"
#include "fractalpile/graph_ops.hpp"

using namespace fractalpile;

namespace {

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<FamilySpec> zoo() {
    std::vector<FamilySpec> specs;
    for (int n = 1; n <= 4; ++n) specs.push_back({Family::SG, n, Boundary::CORNER_SINKS});
    for (int n = 0; n <= 4; ++n) specs.push_back({Family::SGC, n, Boundary::CORNER_SINKS});
    for (int n = 1; n <= 2; ++n) {
        specs.push_back({Family::HG, n, Boundary::CORNER_SINKS});
        specs.push_back({Family::PG, n, Boundary::CORNER_SINKS});
        specs.push_back({Family::MG, n, Boundary::CORNER_SINKS});
    }
    for (int t = 1; t <= 5; ++t) specs.push_back({Family::TRIANGLE_CHAIN, t, Boundary::CORNER_SINKS});
    return specs;
}

} // namespace

TEST_CASE("SG level 1: three mutually adjacent midpoints, two sink edges each") {
    SinkedGraph g = build({Family::SG, 1, Boundary::CORNER_SINKS});
    REQUIRE(g.vertex_count() == 3);
    for (VertexId v = 0; v < 3; ++v) {
        CHECK(g.degree(v) == 4);
        CHECK(g.sink_multiplicity(v) == 2);
        CHECK(g.neighbors(v).size() == 2);
    }
    auto edges = g.edges();
    std::set<std::pair<VertexId, VertexId>> e(edges.begin(), edges.end());
    CHECK(e == std::set<std::pair<VertexId, VertexId>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("SGC level 1: triangle of cells, one sink edge each") {
    SinkedGraph g = build({Family::SGC, 1, Boundary::CORNER_SINKS});
    REQUIRE(g.vertex_count() == 3);
    for (VertexId v = 0; v < 3; ++v) {
        CHECK(g.degree(v) == 3);
        CHECK(g.sink_multiplicity(v) == 1);
    }
    CHECK(g.edge_count() == 3);
}

TEST_CASE("degenerate levels") {
    CHECK(build({Family::SG, 0, Boundary::CORNER_SINKS}).vertex_count() == 0);
    SinkedGraph c0 = build({Family::SGC, 0, Boundary::CORNER_SINKS});
    REQUIRE(c0.vertex_count() == 1);
    CHECK(c0.sink_multiplicity(0) == 3);
    CHECK_THROWS_AS(build({Family::SG, -1, Boundary::CORNER_SINKS}), ConfigurationError);
    CHECK_THROWS_AS((void)triangle_chain(0), ConfigurationError);
}

TEST_CASE("vertex counts follow the subdivision laws") {
    for (int n = 0; n <= 6; ++n) {
        CHECK(build({Family::SG, n, Boundary::CORNER_SINKS}).vertex_count() ==
              3 * (ipow(3, n) + 1) / 2 - 3);
        CHECK(build({Family::SGC, n, Boundary::CORNER_SINKS}).vertex_count() == ipow(3, n));
    }
    // junction + free corner classes per subdivision:
    // HG 6+18, PG 5+10, MG 7+0 (all its slots glue)
    for (int n = 1; n <= 3; ++n) {
        CHECK(build({Family::HG, n, Boundary::CORNER_SINKS}).vertex_count() ==
              24 * (ipow(6, n) - 1) / 5);
        CHECK(build({Family::PG, n, Boundary::CORNER_SINKS}).vertex_count() ==
              15 * (ipow(5, n) - 1) / 4);
        CHECK(build({Family::MG, n, Boundary::CORNER_SINKS}).vertex_count() ==
              7 * (ipow(6, n) - 1) / 5);
    }
}

TEST_CASE("every SG vertex has degree four") {
    for (int n = 1; n <= 5; ++n) {
        SinkedGraph g = build({Family::SG, n, Boundary::CORNER_SINKS});
        for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == 4);
    }
}

TEST_CASE("builders are deterministic id-for-id") {
    for (const auto& spec : zoo()) {
        SinkedGraph a = build(spec), b = build(spec);
        CHECK(a.structurally_equal(b));
    }
}

TEST_CASE("collapsed sink differs only in corner metadata") {
    for (Family f : {Family::SG, Family::SGC, Family::HG}) {
        SinkedGraph a = build({f, 2, Boundary::CORNER_SINKS});
        SinkedGraph b = build({f, 2, Boundary::COLLAPSED_SINK});
        REQUIRE(a.vertex_count() == b.vertex_count());
        CHECK(a.edges() == b.edges());
        for (VertexId v = 0; v < a.vertex_count(); ++v)
            CHECK(a.sink_multiplicity(v) == b.sink_multiplicity(v));
        CHECK(b.corners().size() == 1);
        CHECK(a.corners().size() > 1);
    }
}

TEST_CASE("triangle chain rings") {
    SUBCASE("t=1 closes with a doubled inner edge") {
        SinkedGraph g = triangle_chain(1);
        REQUIRE(g.vertex_count() == 3);
        CHECK(g.sink_multiplicity(1) == 1);  // outer
        CHECK(g.sink_multiplicity(0) == 0);
        CHECK(g.degree(0) == 3);
        CHECK(g.degree(1) == 3);
        // inner pair 0-2 carries two parallel edges
        int mult = 0;
        for (VertexId u : g.neighbors(0))
            if (u == 2) ++mult;
        CHECK(mult == 2);
    }
    SUBCASE("t=2 is simple") {
        SinkedGraph g = triangle_chain(2);
        REQUIRE(g.vertex_count() == 6);
        for (VertexId v = 0; v < 6; ++v) CHECK(g.degree(v) == 3);
        auto e = g.edges();
        CHECK(std::set<std::pair<VertexId, VertexId>>(e.begin(), e.end()).size() == e.size());
    }
    SUBCASE("general size") {
        for (int t = 3; t <= 6; ++t) CHECK(triangle_chain(t).vertex_count() == 3u * t);
    }
}

TEST_CASE("graph validation rejects broken inputs") {
    CHECK_THROWS_AS(SinkedGraph({}, {{1}, {}}, {0, 1}, {{}, {}}, {}, std::nullopt),
                    ConfigurationError);  // asymmetric
    CHECK_THROWS_AS(SinkedGraph({}, {{0}}, {1}, {{}}, {}, std::nullopt),
                    ConfigurationError);  // self-loop
    CHECK_THROWS_AS(SinkedGraph({}, {{1}, {0}}, {0, 0}, {{}, {}}, {}, std::nullopt),
                    ConfigurationError);  // no sink anywhere
}

TEST_CASE("distance map") {
    SinkedGraph g = build({Family::SG, 3, Boundary::CORNER_SINKS});
    VertexId v0 = bottom_center_vertex(g);
    auto d = distance_map(g, v0);
    CHECK(d[v0] == 0);
    std::uint32_t ones = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (d[v] == 1) ++ones;
    CHECK(ones == 4);
    CHECK_THROWS_AS(distance_map(g, static_cast<VertexId>(g.vertex_count())), ConfigurationError);
}

TEST_CASE("ball and edge counts around the bottom center") {
    SinkedGraph g = build({Family::SG, 6, Boundary::CORNER_SINKS});
    VertexId v0 = bottom_center_vertex(g);
    auto d = distance_map(g, v0);
    for (int k = 1; k <= 4; ++k) {
        std::uint32_t r = 1u << k;
        std::uint64_t ball = 0, edges = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (d[v] <= r) ++ball;
            for (VertexId u : g.neighbors(v))
                if (v < u && d[v] <= r && d[u] <= r) ++edges;
        }
        CHECK(ball == 3 * ipow(3, k) + 2);
        CHECK(edges == 6 * ipow(3, k));
    }
}

TEST_CASE("bottom center vertex") {
    SinkedGraph g = build({Family::SG, 3, Boundary::CORNER_SINKS});
    VertexId v0 = bottom_center_vertex(g);
    CHECK(g.coord(v0).x == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(g.coord(v0).y == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(g.degree(v0) == 4);
    CHECK_THROWS_AS(bottom_center_vertex(build({Family::SGC, 2, Boundary::CORNER_SINKS})),
                    ConfigurationError);
    CHECK_THROWS_AS(bottom_center_vertex(build({Family::SG, 0, Boundary::CORNER_SINKS})),
                    ConfigurationError);
}

TEST_CASE("designated centers") {
    CHECK(build({Family::MG, 2, Boundary::CORNER_SINKS}).center().has_value());
    SinkedGraph mg = build({Family::MG, 2, Boundary::CORNER_SINKS});
    CHECK(mg.degree(*mg.center()) == 6);  // three cells meet at the centroid
    CHECK(build({Family::HG, 2, Boundary::CORNER_SINKS}).center().has_value());
    CHECK(!build({Family::SGC, 2, Boundary::CORNER_SINKS}).center().has_value());
}

TEST_CASE("junction cuts: bowtie around the SG bottom center") {
    SinkedGraph g = build({Family::SG, 4, Boundary::CORNER_SINKS});
    VertexId v0 = bottom_center_vertex(g);
    CutSystem cs = junction_cuts(g, v0);
    REQUIRE(cs.cuts.size() == 2);  // level - 2 usable cuts
    CHECK(cs.cuts[0].separator.size() == 4);
    CHECK(cs.cuts[0].interior.size() == 7);  // two size-1 cells glued at v0, corners removed
    CHECK(cs.cuts[1].separator.size() == 4);
    CHECK(cs.cuts[1].interior.size() == 25);

    auto d = distance_map(g, v0);
    for (std::size_t n = 0; n < cs.cuts.size(); ++n) {
        const auto& cut = cs.cuts[n];
        // the separator sits at distance 2^n
        for (VertexId b : cut.separator) CHECK(d[b] == (1u << (n + 1)));
        // removing the separator really disconnects the interior
        std::set<VertexId> inside(cut.interior.begin(), cut.interior.end());
        std::set<VertexId> sep(cut.separator.begin(), cut.separator.end());
        for (VertexId v : cut.interior)
            for (VertexId u : g.neighbors(v)) CHECK((inside.count(u) || sep.count(u)));
        CHECK(inside.count(v0) == 1);
    }
    // nesting
    std::set<VertexId> f1(cs.cuts[0].interior.begin(), cs.cuts[0].interior.end());
    for (VertexId v : cs.cuts[0].interior) (void)v;
    std::set<VertexId> f2(cs.cuts[1].interior.begin(), cs.cuts[1].interior.end());
    for (VertexId v : f1) CHECK(f2.count(v) == 1);
}

TEST_CASE("junction cuts: pinwheel around the MG centroid") {
    SinkedGraph g = build({Family::MG, 3, Boundary::CORNER_SINKS});
    CutSystem cs = junction_cuts(g, *g.center());
    REQUIRE(cs.cuts.size() == 2);
    CHECK(cs.cuts[0].separator.size() == 6);
    std::set<VertexId> inside(cs.cuts[0].interior.begin(), cs.cuts[0].interior.end());
    std::set<VertexId> sep(cs.cuts[0].separator.begin(), cs.cuts[0].separator.end());
    for (VertexId v : cs.cuts[0].interior)
        for (VertexId u : g.neighbors(v)) CHECK((inside.count(u) || sep.count(u)));
}

TEST_CASE("junction cuts reject unsupported centers") {
    SinkedGraph g = build({Family::SGC, 3, Boundary::CORNER_SINKS});
    CHECK_THROWS_WITH_AS(junction_cuts(g, 0), doctest::Contains("bottom-center"),
                         ConfigurationError);
    SinkedGraph sg = build({Family::SG, 4, Boundary::CORNER_SINKS});
    CHECK_THROWS_AS(junction_cuts(sg, 0), ConfigurationError);
}

TEST_CASE("reduced Laplacians") {
    using algebra::IntegerMatrix;
    IntegerMatrix sg1 = reduced_laplacian(build({Family::SG, 1, Boundary::CORNER_SINKS}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(sg1.at(i, j) == (i == j ? 4 : -1));
    IntegerMatrix sgc1 = reduced_laplacian(build({Family::SGC, 1, Boundary::CORNER_SINKS}));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(sgc1.at(i, j) == (i == j ? 3 : -1));
    CHECK_THROWS_AS(reduced_laplacian(build({Family::SG, 0, Boundary::CORNER_SINKS})),
                    ConfigurationError);

    // row sums equal the sink multiplicities; parallel edges count twice
    for (const auto& spec : zoo()) {
        SinkedGraph g = build(spec);
        if (g.vertex_count() == 0) continue;
        IntegerMatrix m = reduced_laplacian(g);
        for (std::size_t i = 0; i < m.size(); ++i) {
            algebra::BigInt s = 0;
            for (std::size_t j = 0; j < m.size(); ++j) s += m.at(i, j);
            CHECK(s == g.sink_multiplicity(static_cast<VertexId>(i)));
        }
    }
}

TEST_CASE("family exponent constants") {
    CHECK(growth_exponent(Family::SG) == doctest::Approx(std::log(3.0) / std::log(2.0)));
    CHECK(growth_exponent(Family::HG) == doctest::Approx(std::log(6.0) / std::log(3.0)));
    // PG's growth exponent is the resistance-adjusted one, below the quoted
    // Euclidean dimension
    CHECK(growth_exponent(Family::PG) ==
          doctest::Approx(std::log(5.0) / std::log(1.0 + std::sqrt(3.0))));
    CHECK(growth_exponent(Family::PG) < quoted_dimension(Family::PG));
    CHECK(quoted_dimension(Family::MG) == doctest::Approx(std::log(6.0) / std::log(2.0)));
    CHECK_THROWS_AS(growth_exponent(Family::TRIANGLE_CHAIN), ConfigurationError);
}

TEST_CASE("zoo invariants: symmetry, degrees, sink reachability") {
    for (const auto& spec : zoo()) {
        SinkedGraph g = build(spec);  // the constructor validates
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            CHECK(g.degree(v) == g.neighbors(v).size() + g.sink_multiplicity(v));
        CHECK(g.sink_reachable());
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrangement_laws.hpp"

using namespace plstrat;
using namespace testing_support;

namespace {

Point2 pt(long x, long y) { return {Rational(x), Rational(y)}; }
Point P(long x, long y) { return {Rational(x), Rational(y)}; }

}  // namespace

TEST_CASE("two crossing segments") {
    const auto r = refine_planar({}, {{pt(0, 0), pt(2, 2), 0}, {pt(0, 2), pt(2, 0), 1}});
    const auto& a = r.arrangement;
    CHECK(a.vertices().size() == 5);
    CHECK(a.edges().size() == 4);
    CHECK(a.faces().size() == 1);
    const auto c = a.find_vertex(pt(1, 1));
    REQUIRE(c);
    CHECK(a.is_crossing(*c));
    CHECK(r.vertex_multiplicity[*c] == 2);
    CHECK(a.euler_ok());
}

TEST_CASE("strict mode rejects degenerate contacts") {
    // Three segments through one point.
    CHECK_THROWS_AS(PlanarArrangement::build(
                        {}, {{pt(-1, 0), pt(1, 0), 0}, {pt(0, -1), pt(0, 1), 1}, {pt(-1, -1), pt(1, 1), 2}}, true),
                    Error);
    // Overlap and T-junction.
    CHECK_THROWS_AS(PlanarArrangement::build({}, {{pt(0, 0), pt(2, 0), 0}, {pt(1, 0), pt(3, 0), 1}}, true), Error);
    CHECK_THROWS_AS(PlanarArrangement::build({}, {{pt(0, 0), pt(2, 0), 0}, {pt(1, 0), pt(1, 3), 1}}, true), Error);
    // Permissive mode splits instead.
    const auto t = PlanarArrangement::build({}, {{pt(0, 0), pt(2, 0), 0}, {pt(1, 0), pt(1, 3), 1}}, false);
    CHECK(t.vertices().size() == 4);
    CHECK(t.edges().size() == 3);
}

TEST_CASE("tetrahedron image") {
    const auto f = golden_map("tetrahedron");
    const auto j = jacobi_set(f, Notion::H);
    const auto r = refine_image(f, j);
    CHECK(r.arrangement.vertices().size() == 4);
    CHECK(r.arrangement.edges().size() == 4);
    CHECK(containment_violations(r).empty());
    const auto s = build_codomain_stratification(r);
    CHECK(s.space.poset.size() == 10);
    CHECK(s.space.poset.validate());
    CHECK(s.space.is_continuous());
    CHECK(verify_closure_pairs(s));

    const auto& p = s.space.poset;
    CHECK(p.label(locate(s, P(0, 0))).front() == 'v');
    CHECK(p.label(locate(s, P(2, 0))).front() == 'e');
    const Point centroid{Rational(10, 4), Rational(7, 4)};
    CHECK(p.label(locate(s, centroid)) != "f_inf");
    CHECK(s.space.cells[s.locate_cell(centroid)].dim == 2);
    CHECK(p.label(locate(s, P(1000, -1000))) == "f_inf");
}

TEST_CASE("torus critical values") {
    const auto f = golden_map("torus");
    const auto r = refine_image(f, jacobi_set(f, Notion::H));
    CHECK(r.k == 1);
    CHECK(r.points.size() == 4);
    const auto s = build_codomain_stratification(r);
    CHECK(s.space.poset.size() == 9);
    for (std::size_t i = 0; i < 4; ++i) {
        const auto y = s.space.poset.at("y" + std::to_string(i));
        CHECK(s.space.poset.upper_covers(y).size() == 2);
        CHECK(s.space.poset.less(y, s.space.poset.at("I" + std::to_string(i))));
        CHECK(s.space.poset.less(y, s.space.poset.at("I" + std::to_string(i + 1))));
    }
    CHECK(s.space.poset.label(s.locate({r.points[1]})) == "y1");
    CHECK(verify_closure_pairs(s));
}

TEST_CASE("empty image") {
    CHECK(line_stratification({}).space.poset.size() == 1);
    const auto s = planar_stratification(PlanarArrangement::build({}, {}, true));
    CHECK(s.space.poset.size() == 1);
    CHECK(s.space.poset.label(locate(s, P(3, 4))) == "f_inf");
}

TEST_CASE("nested faces and holes") {
    // A square with a disjoint triangle inside it.
    std::vector<InputSegment> segs{{pt(0, 0), pt(10, 0), 0},  {pt(10, 0), pt(10, 10), 1}, {pt(10, 10), pt(0, 10), 2},
                                   {pt(0, 10), pt(0, 0), 3},  {pt(2, 2), pt(4, 2), 4},    {pt(4, 2), pt(3, 4), 5},
                                   {pt(3, 4), pt(2, 2), 6}};
    const auto a = PlanarArrangement::build({pt(7, 7)}, segs, true);
    CHECK(a.faces().size() == 3);
    CHECK(a.connected_components() == 3);
    CHECK(a.euler_ok());
    const auto ring = a.locate(pt(6, 6));
    const auto inner = a.locate({Rational(3), Rational(3)});
    CHECK(ring.dim == 2);
    CHECK(inner.dim == 2);
    CHECK_FALSE(ring == inner);
    CHECK(a.faces()[ring.index].cycles.size() == 2);
    CHECK(a.faces()[ring.index].isolated_vertices.size() == 1);
    CHECK(a.locate(pt(7, 7)).dim == 0);
    const auto s = planar_stratification(a);
    CHECK(verify_closure_pairs(s));
    for (auto c : s.top_cells())
        for (const auto& sample : s.samples(c, 5)) {
            REQUIRE(sample);
            CHECK(s.locate_cell(*sample) == c);
        }
}

TEST_CASE("20 random segment arrangements") {
    auto g = rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto segs = random_connected_segments(g);
        const auto check = check_arrangement(segs, g);
        INFO("trial " << trial << " segments " << segs.size());
        CHECK(check.problems.empty());
        for (const auto& p : check.problems) MESSAGE(p);
    }
}

TEST_CASE("refine_image rejects coincident Jacobi vertices") {
    const auto k = SimplicialComplex::from_facets({{0, 1}, {2, 3}});
    const PLMap f(k, 2, {P(0, 0), P(1, 0), P(0, 0), P(0, 1)});
    JacobiSet j;
    j.complex = k;
    CHECK_THROWS_AS(refine_image(f, j), Error);
}

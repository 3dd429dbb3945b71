#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plstrat/errors.hpp"
#include "support.hpp"

using namespace plstrat;
using namespace testing_support;

namespace {

// Octahedron labels: m a b c d w.
constexpr Vertex m = 0, a = 1, b = 2, c = 3, d = 4, w = 5;

std::set<Simplex> as_set(const std::vector<Simplex>& v) { return {v.begin(), v.end()}; }

/// Brute-force star: scan every simplex.
std::set<Simplex> star_oracle(const SimplicialComplex& k, const Simplex& s) {
    std::set<Simplex> out;
    for (const auto& t : k.simplices())
        if (std::includes(t.begin(), t.end(), s.begin(), s.end())) out.insert(t);
    return out;
}

}  // namespace

TEST_CASE("simplex invariants") {
    CHECK_THROWS_AS(Simplex({2, 1}), Error);
    CHECK_THROWS_AS(Simplex({1, 1}), Error);
    CHECK(Simplex::from_unsorted({3, 1, 2}) == Simplex{1, 2, 3});
    CHECK(Simplex{4}.dim() == 0);
    CHECK(Simplex{1, 2}.is_face_of(Simplex{1, 2, 3}));
}

TEST_CASE("star") {
    const auto o = octahedron();
    const auto s = as_set(star(o, {m}));
    CHECK(s.size() == 9);
    CHECK(s == star_oracle(o, {m}));
    CHECK(as_set(star(o, {m, a})) == std::set<Simplex>{{m, a}, {m, a, b}, {m, a, d}});
    CHECK(as_set(star(o, {m, a, b})) == std::set<Simplex>{{m, a, b}});
    CHECK_THROWS_AS(star(o, {m, w}), Error);
}

TEST_CASE("link") {
    const auto o = octahedron();
    CHECK(link(o, {m, a}) == SimplicialComplex::from_facets({{b}, {d}}));
    CHECK(link(o, {m}) == SimplicialComplex::from_facets({{a, b}, {b, c}, {c, d}, {a, d}}));
    CHECK(link(o, {m, a, b}).empty());
    CHECK_THROWS_AS(link(o, {m, w}), Error);
    for (const auto& s : o.simplices()) {
        const auto l = link(o, s);
        for (const auto& t : l.simplices()) {
            CHECK(t.disjoint_from(s));
            for (const auto& f : t.facets()) CHECK(l.contains(f));
        }
    }
}

TEST_CASE("join") {
    const auto s0 = SimplicialComplex::from_facets({{0}, {1}});
    const auto s0b = SimplicialComplex::from_facets({{2}, {3}});
    const auto circle = join(s0, s0b);
    CHECK(circle.f_vector() == std::vector<std::size_t>{4, 4});
    CHECK(manifold_check(circle).is_weak_pseudomanifold);

    const auto pt = SimplicialComplex::from_facets({{9}});
    const auto cone = join(pt, circle);
    CHECK(cone.dimension() == circle.dimension() + 1);
    CHECK(join(SimplicialComplex{}, circle) == circle);
    CHECK_THROWS_AS(join(s0, s0), Error);

    const auto c3 = SimplicialComplex::from_facets({{5, 6}});
    CHECK(join(join(s0, s0b), c3) == join(s0, join(s0b, c3)));
}

TEST_CASE("native stratification and skeletal filtration") {
    const auto edge = SimplicialComplex::from_facets({{0, 1}});
    const auto nat = native_stratification(edge);
    CHECK(nat.poset.size() == 3);
    const auto b0 = nat.poset.at("[0]"), b1 = nat.poset.at("[1]"), e = nat.poset.at("[0,1]");
    CHECK(nat.poset.less(b0, e));
    CHECK(nat.poset.less(b1, e));
    CHECK_FALSE(nat.poset.comparable(b0, b1));
    CHECK(nat.is_continuous());
    CHECK(skeletal_filtration(edge) == std::vector<int>{0, 0, 1});

    CHECK(native_stratification(SimplicialComplex::from_facets({{7}})).poset.size() == 1);
    CHECK_THROWS_AS(native_stratification(SimplicialComplex{}), Error);

    const auto o = octahedron();
    const auto no = native_stratification(o);
    CHECK(no.poset.size() == 26);
    CHECK(no.poset.validate());
    std::map<int, std::size_t> fibers;
    for (auto dim : skeletal_filtration(o)) ++fibers[dim];
    CHECK(fibers == std::map<int, std::size_t>{{0, 6}, {1, 12}, {2, 8}});
    // Order is exactly inclusion.
    for (std::size_t i = 0; i < o.size(); ++i)
        for (std::size_t j = 0; j < o.size(); ++j)
            CHECK(no.poset.leq(i, j) == o.simplex(i).is_face_of(o.simplex(j)));
}

TEST_CASE("skeletal filtration is monotone on random complexes") {
    auto g = rng(1);
    for (int trial = 0; trial < 10; ++trial) {
        const auto k = random_complex(g);
        if (k.empty()) continue;
        const auto nat = native_stratification(k);
        const auto dims = skeletal_filtration(k);
        for (auto [lo, hi] : nat.poset.covers()) CHECK(dims[lo] <= dims[hi]);
        std::set<int> image(dims.begin(), dims.end());
        CHECK(static_cast<int>(image.size()) == k.dimension() + 1);
    }
}

TEST_CASE("manifold check") {
    const auto report = manifold_check(octahedron());
    CHECK(report.is_weak_pseudomanifold);
    for (const auto& lc : report.link_checks)
        if (lc.simplex.dim() == 0) CHECK(lc.verdict == LinkVerdict::Sphere);

    const auto glued = SimplicialComplex::from_facets({{0, 1, 2}, {1, 2, 3}, {3, 4}});
    const auto bad = manifold_check(glued);
    CHECK_FALSE(bad.is_weak_pseudomanifold);

    const auto sphere = manifold_check(simplex_boundary(3));
    CHECK(sphere.is_weak_pseudomanifold);
    CHECK(classify_low_dimensional(simplex_boundary(3)) == LinkVerdict::Sphere);
    CHECK(simplex_boundary(3).euler_characteristic() == 2);

    // Links of dimension 3 are never given a sphere verdict.
    const auto s4 = manifold_check(simplex_boundary(5));
    for (const auto& lc : s4.link_checks)
        if (lc.link_dim > 2) CHECK(lc.verdict == LinkVerdict::Undecided);
}

TEST_CASE("edge subdivision of the octahedron") {
    const auto o = octahedron();
    const Vertex mid = 6;
    const auto sub = subdivide_edge(o, {m, a}, mid);
    // link(mid) = join(boundary of the edge, link of the edge).
    const auto expected = join(SimplicialComplex::from_facets({{m}, {a}}), link(o, {m, a}));
    CHECK(link(sub, {mid}) == expected);
    CHECK(manifold_check(sub).is_weak_pseudomanifold);
    CHECK(sub.euler_characteristic() == 2);
}

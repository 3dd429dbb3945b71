#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plstrat/errors.hpp"
#include "poset_laws.hpp"

using namespace plstrat;
using namespace testing_support;

TEST_CASE("validate_poset") {
    CHECK(validate_poset(3, {{0, 1}, {1, 2}}));
    CHECK_FALSE(validate_poset(2, {{0, 1}, {1, 0}}));
    CHECK(native_stratification(octahedron()).poset.validate());
    CHECK_THROWS_AS(Poset::from_relations({"a", "b"}, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(Poset::from_relations({"a", "a"}, {}), Error);
}

TEST_CASE("up sets and open sets") {
    // R stratified over {- > 0 < +}.
    const auto r = Poset::from_label_relations({"-", "0", "+"}, {{"0", "-"}, {"0", "+"}});
    CHECK(up_set(r, r.at("0")) == ElementSet{0, 1, 2});
    CHECK(up_set(r, r.at("+")) == ElementSet{r.at("+")});

    const auto nat = native_stratification(SimplicialComplex::from_facets({{0, 1}})).poset;
    const auto b0 = nat.at("[0]"), a = nat.at("[0,1]");
    CHECK(up_set(nat, b0) == ElementSet{b0, a});
    CHECK(is_open(nat, {0, 1, 2}));
    CHECK_FALSE(is_open(nat, {b0}));
    CHECK(is_open(nat, {a}));
}

TEST_CASE("products") {
    const auto diamond = product(Poset::chain(1), Poset::chain(1));
    CHECK(diamond.size() == 4);
    CHECK(diamond.covers().size() == 4);
    CHECK(linear_subposets(diamond).size() == 2);
    for (const auto& c : linear_subposets(diamond)) CHECK(c.size() == 3);

    const auto p = Poset::from_label_relations({"x", "y", "z"}, {{"x", "y"}});
    CHECK(are_isomorphic(product(p, Poset::chain(0)), p));
    CHECK(product(Poset::chain(2), Poset::chain(3)).size() == 12);
}

TEST_CASE("cones") {
    CHECK(left_cone(Poset{}).size() == 1);
    for (std::size_t n = 0; n < 5; ++n) {
        CHECK(are_isomorphic(left_cone(Poset::chain(n)), Poset::chain(n + 1)));
        CHECK(are_isomorphic(right_cone(Poset::chain(n)), Poset::chain(n + 1)));
    }
    const auto r = right_cone(Poset::antichain(3));
    CHECK(r.size() == 4);
    CHECK(r.covers().size() == 3);
}

TEST_CASE("wedge extension") {
    // [0,1] inside R.
    const auto nat = native_stratification(SimplicialComplex::from_facets({{0, 1}})).poset;
    const auto b0 = nat.at("[0]"), b1 = nat.at("[1]");
    const auto ext = wedge_extend(nat, {"a-", "a+"}, {{b0, 0}, {b1, 1}});
    CHECK(ext.size() == 5);
    CHECK(ext.less(b0, ext.at("a-")));
    CHECK(ext.less(b1, ext.at("a+")));
    CHECK_FALSE(ext.comparable(b0, ext.at("a+")));
    CHECK_FALSE(ext.comparable(nat.at("[0,1]"), ext.at("a-")));
    CHECK(ext.maximal_elements().size() == 3);

    CHECK(wedge_extend(nat, {}, {}) == nat);

    // The edge is in the closure of neither component, so collapsing the
    // components only refines the right cone.
    const auto cone = right_cone(nat);
    std::vector<Poset::Element> to_cone{0, 1, 2, 3, 3};
    CHECK(is_monotone(ext, cone, to_cone));
    CHECK_FALSE(are_isomorphic(collapse(ext, {ext.at("a-"), ext.at("a+")}, "top"), cone));
    const auto closed = wedge_extend(nat, {"a-", "a+"}, {{b0, 0}, {b1, 1}, {nat.at("[0,1]"), 0}});
    CHECK(are_isomorphic(collapse(closed, {closed.at("a-"), closed.at("a+")}, "top"), cone));
    CHECK_THROWS_AS(wedge_extend(nat, {"a"}, {{7, 0}}), Error);
}

TEST_CASE("stratified maps and refinement") {
    const auto nat = native_stratification(octahedron());
    std::vector<std::size_t> id(nat.cells.size());
    std::iota(id.begin(), id.end(), 0);
    const auto check = check_stratified_map(id, nat, nat);
    CHECK(check.ok);
    CHECK(check.induced->assignment == id);

    // Two incomparable strata x, y sent to one target; x < u, y < v with
    // targets that reverse order.
    StratifiedSpace s;
    s.poset = Poset::from_label_relations({"x", "y", "u", "v"}, {{"x", "u"}, {"y", "v"}});
    for (auto l : {"x", "y", "u", "v"}) s.cells.push_back({l, 0});
    s.boundary = {{}, {}, {0}, {1}};
    s.assignment = {0, 1, 2, 3};
    StratifiedSpace t;
    t.poset = Poset::chain(1);
    t.cells = {{"t0", 0}, {"t1", 0}};
    t.boundary = {{}, {}};
    t.assignment = {0, 1};
    CHECK(check_stratified_map({0, 0, 1, 1}, s, t).ok);
    CHECK_FALSE(check_stratified_map({1, 1, 0, 0}, s, t).ok);
    // A second x-cell landing in another target stratum.
    s.cells.push_back({"x'", 0});
    s.boundary.push_back({});
    s.assignment.push_back(0);
    CHECK(check_stratified_map({0, 0, 1, 1, 0}, s, t).ok);
    CHECK_FALSE(check_stratified_map({0, 0, 1, 1, 1}, s, t).ok);

    CHECK(is_refinement(nat, trivial_stratification(nat)));
    CHECK_FALSE(is_refinement(trivial_stratification(nat), nat));
}

TEST_CASE("linear subposets") {
    const auto nat = native_stratification(SimplicialComplex::from_facets({{0, 1}})).poset;
    const auto chains = linear_subposets(nat);
    CHECK(chains.size() == 2);
    for (const auto& c : chains) CHECK(c.size() == 2);
    for (const auto& c : linear_subposets(Poset::antichain(4))) CHECK(c.size() == 1);
}

TEST_CASE("poset laws on 100 random posets") {
    auto g = rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const auto violations = poset_law_violations(g);
        INFO("trial " << trial);
        CHECK(violations.empty());
        for (const auto& v : violations) MESSAGE(v);
    }
}

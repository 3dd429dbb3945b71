#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "plstrat/errors.hpp"
#include "support.hpp"

using namespace plstrat;
using namespace testing_support;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvariantBreach;
}

std::string message_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("rationals") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-6/8") == Rational(-3, 4));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(format_rational(Rational(-3, 4)) == "-3/4");
    CHECK(format_rational(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("complex and values round trip") {
    for (const auto& name : golden_maps()) {
        INFO(name);
        const auto f = golden_map(name);
        const auto k = complex_from_json(parse_json(dump(to_json(f.domain())), "k"));
        CHECK(k == f.domain());
        const auto g = map_from_json(k, parse_json(dump(values_to_json(f)), "v"));
        CHECK(g.values() == f.values());
        CHECK(g.symbolic_ties() == f.symbolic_ties());
        CHECK(dump(values_to_json(g)) == dump(values_to_json(f)));
    }
}

TEST_CASE("complex validation") {
    auto load = [](const char* text) { return [text] { (void)complex_from_json(parse_json(text, "t")); }; };
    CHECK(kind_of(load(R"({"vertices":[0,1,2],"facets":[[1,0]]})")) == ErrorKind::Parse);
    CHECK(kind_of(load(R"({"vertices":[0,1],"facets":[[0,7]]})")) == ErrorKind::Parse);
    CHECK(kind_of(load(R"({"vertices":[0,1],"facets":[[0,1],[0,1]]})")) == ErrorKind::Parse);
    CHECK(kind_of(load(R"({"vertices":[0,0],"facets":[]})")) == ErrorKind::Parse);
    CHECK(kind_of(load(R"({"facets":[]})")) == ErrorKind::Parse);
    CHECK(message_of(load(R"({"vertices":[0,1],"facets":[[0,7]]})")).find("facets[0][1]") != std::string::npos);
    // Numeric strings are accepted as labels; isolated vertices survive.
    const auto k = complex_from_json(parse_json(R"({"vertices":["0","1",5],"facets":[["0","1"]]})", "t"));
    CHECK(k.vertices() == std::vector<Vertex>{0, 1, 5});
}

TEST_CASE("values validation") {
    const auto k = SimplicialComplex::from_facets({{0, 1}});
    auto load = [&](const char* text) { return [&k, text] { (void)map_from_json(k, parse_json(text, "t")); }; };
    CHECK(kind_of(load(R"({"k":1,"values":{"0":["1"]}})")) == ErrorKind::Parse);
    CHECK(kind_of(load(R"({"k":1,"values":{"0":["1"],"1":["1","2"]}})")) == ErrorKind::Parse);
    CHECK(kind_of(load(R"({"k":1,"values":{"0":["1"],"1":["2"],"9":["3"]}})")) == ErrorKind::Parse);
    CHECK(kind_of(load(R"({"k":1,"values":{"0":["1"],"1":["a/b"]}})")) == ErrorKind::Parse);
    CHECK(kind_of(load(R"({"k":0,"values":{}})")) == ErrorKind::Parse);
    const auto f = map_from_json(k, parse_json(R"({"k":2,"values":{"0":["1/2",3],"1":["0","-1"]}})", "t"));
    CHECK(f.value(0) == Point{Rational(1, 2), Rational(3)});
}

TEST_CASE("malformed JSON reports line and column") {
    const std::string msg = message_of([] { (void)parse_json("{\n  \"a\": [1,\n  }\n", "broken.json"); });
    CHECK(msg.find("broken.json:3:") != std::string::npos);
    CHECK(kind_of([] { (void)parse_json("[", "x"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { (void)read_json("/nonexistent/file.json"); }) == ErrorKind::Parse);
}

TEST_CASE("poset and stratified space round trip") {
    const auto p = Poset::from_label_relations({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
    CHECK(poset_from_json(to_json(p)) == p);
    CHECK_THROWS_AS(poset_from_json(parse_json(R"({"elements":["a","b"],"covers":[["a","b"],["b","a"]]})", "t")),
                    Error);
    CHECK_THROWS_AS(poset_from_json(parse_json(R"({"elements":["a"],"covers":[["a","z"]]})", "t")), Error);

    for (const auto& name : golden_maps()) {
        INFO(name);
        const auto f = golden_map(name);
        const auto j = jacobi_set(f, Notion::H);
        const auto dom = domain_stratification(f, j);
        const auto back = stratified_space_from_json(parse_json(dump(to_json(dom)), "s"));
        CHECK(back.poset == dom.poset);
        CHECK(back.assignment == dom.assignment);
        CHECK(back.boundary == dom.boundary);
        CHECK(dump(to_json(back)) == dump(to_json(dom)));
        if (f.k() <= 2) {
            const auto cod = codomain_of(f, j);
            const auto s = stratified_space_from_json(to_json(cod));
            CHECK(dump(to_json(s)) == dump(to_json(cod.space)));
        }
    }
}

TEST_CASE("locus round trip") {
    for (const auto& name : golden_loci()) {
        INFO(name);
        const auto l = golden_locus(name);
        const auto back = locus_from_json(parse_json(dump(to_json(l)), "l"));
        CHECK(back.strands == l.strands);
        CHECK(back.cusps == l.cusps);
        CHECK(back.marks == l.marks);
    }
    CHECK_THROWS_AS(locus_from_json(parse_json(R"({"strands":[[["0","0","1"]]]})", "t")), Error);
}

TEST_CASE("Reeb graph round trip and DOT") {
    const auto g = reeb_graph(golden_map("torus"));
    const auto back = reeb_graph_from_json(parse_json(dump(to_json(g)), "r"));
    REQUIRE(back.nodes.size() == g.nodes.size());
    REQUIRE(back.edges.size() == g.edges.size());
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        CHECK(back.nodes[i].level == g.nodes[i].level);
        CHECK(back.nodes[i].critical_vertices == g.nodes[i].critical_vertices);
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        CHECK(back.edges[i].lower == g.edges[i].lower);
        CHECK(back.edges[i].upper == g.edges[i].upper);
    }
    CHECK(dump(to_json(back)) == dump(to_json(g)));

    const std::string dot = to_dot(g);
    CHECK(dot.rfind("graph reeb", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '\n') > 8);
    std::size_t edges = 0;
    for (std::size_t at = dot.find(" -- "); at != std::string::npos; at = dot.find(" -- ", at + 1)) ++edges;
    CHECK(edges == 4);
}

TEST_CASE("reports serialize deterministically") {
    const auto f = golden_map("tetrahedron");
    const auto j = jacobi_set(f, Notion::H);
    const auto s = codomain_of(f, j);
    const auto w = reeb_scaffold(f, s);
    const std::string a = dump(to_json(w, s)) + dump(to_json(j)) + dump(to_json(s)) + to_svg(s);
    const std::string b = dump(to_json(w, s)) + dump(to_json(j)) + dump(to_json(s)) + to_svg(s);
    CHECK(a == b);
    const auto jj = to_json(j);
    CHECK(jj["simplices"].size() == 8);
    CHECK(to_json(s)["geometry"]["faces"].size() == 2);
    CHECK(to_svg(s).find("<svg") != std::string::npos);
    CHECK_THROWS_AS(to_svg(codomain_of(golden_map("torus"), jacobi_set(golden_map("torus"), Notion::H))), Error);
}

TEST_CASE("filtration export") {
    const auto f = golden_map("tetrahedron");
    const auto s = codomain_of(f, jacobi_set(f, Notion::H)).space;
    const auto& p = s.poset;
    const auto e = p.at("e0");
    const Poset::Element v = p.lower_covers(e).front();
    const std::string text = filtration_text(s, {v, e, p.at("f0")});
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
    CHECK(text.rfind("0 " + p.label(v) + " ", 0) == 0);
    CHECK(filtration_text(s, {p.at("f0")}).rfind("0 f0 ", 0) == 0);
    CHECK_THROWS_AS(filtration_text(s, {p.at("f0"), p.at("v0")}), Error);
    CHECK_THROWS_AS(filtration_text(s, {p.at("f0"), p.at("f_inf")}), Error);
}

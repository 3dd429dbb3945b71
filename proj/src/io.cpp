#include "plstrat/io.hpp"

#include "plstrat/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace plstrat {

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& what) {
    fail(ErrorKind::Parse, "field '" + field + "': " + what);
}

const Json& member(const Json& j, const std::string& key, const std::string& where) {
    if (!j.is_object()) bad_field(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) bad_field(where.empty() ? key : where + "." + key, "missing");
    return *it;
}

const Json& array_member(const Json& j, const std::string& key, const std::string& where) {
    const Json& a = member(j, key, where);
    if (!a.is_array()) bad_field(where.empty() ? key : where + "." + key, "expected an array");
    return a;
}

std::size_t as_index(const Json& j, const std::string& field) {
    if (!j.is_number_integer() || j.get<long long>() < 0) bad_field(field, "expected a nonnegative integer");
    return j.get<std::size_t>();
}

Vertex as_vertex(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return j.get<Vertex>();
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        try {
            std::size_t used = 0;
            const long long v = std::stoll(s, &used);
            if (used == s.size()) return v;
        } catch (const std::exception&) {
        }
    }
    bad_field(field, "expected an integer vertex label");
}

Rational as_rational(const Json& j, const std::string& field) {
    try {
        if (j.is_string()) return parse_rational(j.get_ref<const std::string&>());
        if (j.is_number_integer()) return Rational(j.get<long long>());
    } catch (const Error& e) {
        bad_field(field, e.what());
    }
    bad_field(field, "expected a rational string such as \"3/4\"");
}

std::string at(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

Json to_json(const BettiVector& b) {
    Json out = Json::array();
    for (auto v : b.values) out.push_back(v);
    return out;
}

Json label_list(const Poset& p, const std::vector<Poset::Element>& elements) {
    Json out = Json::array();
    for (auto e : elements) out.push_back(p.label(e));
    return out;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        fail(ErrorKind::Parse, source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                                   ": malformed JSON (" + e.what() + ")");
    }
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Parse, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::filesystem::path& path) { return parse_json(read_text(path), path.string()); }

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::Parse, "cannot write " + path.string());
    out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json to_json(const Point& p) {
    Json out = Json::array();
    for (const auto& x : p) out.push_back(format_rational(x));
    return out;
}

Point point_from_json(const Json& j, const std::string& field) {
    if (!j.is_array()) bad_field(field, "expected an array of rationals");
    Point p;
    for (std::size_t i = 0; i < j.size(); ++i) p.push_back(as_rational(j[i], at(field, i)));
    return p;
}

SimplicialComplex complex_from_json(const Json& j) {
    const Json& vs = array_member(j, "vertices", "");
    const Json& fs = array_member(j, "facets", "");
    std::set<Vertex> declared;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (!declared.insert(as_vertex(vs[i], at("vertices", i))).second)
            bad_field(at("vertices", i), "duplicate vertex label");
    std::vector<Simplex> facets;
    std::set<std::vector<Vertex>> seen;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        const std::string field = at("facets", i);
        if (!fs[i].is_array() || fs[i].empty()) bad_field(field, "expected a nonempty vertex list");
        std::vector<Vertex> t;
        for (std::size_t r = 0; r < fs[i].size(); ++r) {
            t.push_back(as_vertex(fs[i][r], at(field, r)));
            if (!declared.count(t.back())) bad_field(at(field, r), "undeclared vertex " + std::to_string(t.back()));
            if (r > 0 && t[r - 1] >= t[r]) bad_field(field, "vertices must be strictly increasing");
        }
        if (!seen.insert(t).second) bad_field(field, "duplicate facet");
        facets.emplace_back(std::move(t));
    }
    std::vector<Simplex> all = facets;
    for (auto v : declared) all.push_back(Simplex{v});
    return SimplicialComplex::from_facets(all);
}

Json to_json(const SimplicialComplex& k) {
    Json out;
    out["vertices"] = k.vertices();
    Json facets = Json::array();
    for (const auto& s : k.facets()) facets.push_back(s.vertices());
    out["facets"] = facets;
    return out;
}

PLMap map_from_json(const SimplicialComplex& domain, const Json& j) {
    const Json& kj = member(j, "k", "");
    if (!kj.is_number_integer() || kj.get<int>() < 1) bad_field("k", "expected a positive integer");
    const int k = kj.get<int>();
    const Json& vals = member(j, "values", "");
    if (!vals.is_object()) bad_field("values", "expected an object keyed by vertex label");
    std::map<Vertex, Point> given;
    for (auto it = vals.begin(); it != vals.end(); ++it) {
        const std::string field = "values." + it.key();
        const Vertex v = as_vertex(Json(it.key()), field);
        Point p = point_from_json(it.value(), field);
        if (p.size() != static_cast<std::size_t>(k))
            bad_field(field, "expected " + std::to_string(k) + " coordinates");
        if (!given.emplace(v, std::move(p)).second) bad_field(field, "duplicate vertex");
    }
    std::vector<Point> values;
    for (auto v : domain.vertices()) {
        auto it = given.find(v);
        if (it == given.end()) bad_field("values", "no value for vertex " + std::to_string(v));
        values.push_back(it->second);
    }
    for (const auto& [v, p] : given)
        if (!std::binary_search(domain.vertices().begin(), domain.vertices().end(), v))
            bad_field("values." + std::to_string(v), "vertex is not in the complex");
    PLMap f(domain, k, std::move(values));
    if (auto it = j.find("symbolic_perturbation"); it != j.end()) {
        if (!it->is_boolean()) bad_field("symbolic_perturbation", "expected a boolean");
        if (it->get<bool>()) f.set_symbolic_ties(true);
    }
    return f;
}

Json values_to_json(const PLMap& f) {
    Json out;
    out["k"] = f.k();
    Json vals = Json::object();
    for (auto v : f.domain().vertices()) vals[std::to_string(v)] = to_json(f.value(v));
    out["values"] = vals;
    if (f.symbolic_ties()) out["symbolic_perturbation"] = true;
    return out;
}

Poset poset_from_json(const Json& j) {
    const Json& es = array_member(j, "elements", "");
    const Json& cs = array_member(j, "covers", "");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (!es[i].is_string()) bad_field(at("elements", i), "expected a label string");
        labels.push_back(es[i].get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> rel;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (!cs[i].is_array() || cs[i].size() != 2 || !cs[i][0].is_string() || !cs[i][1].is_string())
            bad_field(at("covers", i), "expected a [lower, upper] label pair");
        rel.emplace_back(cs[i][0].get<std::string>(), cs[i][1].get<std::string>());
    }
    return Poset::from_label_relations(std::move(labels), rel);
}

Json to_json(const Poset& p) {
    Json out;
    out["elements"] = p.labels();
    Json covers = Json::array();
    for (auto [a, b] : p.covers()) covers.push_back({p.label(a), p.label(b)});
    out["covers"] = covers;
    return out;
}

StratifiedSpace stratified_space_from_json(const Json& j) {
    StratifiedSpace s;
    s.poset = poset_from_json(member(j, "poset", ""));
    const Json& cells = array_member(j, "cells", "");
    std::map<std::string, std::size_t> ids;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string field = at("cells", i);
        const Json& id = member(cells[i], "id", field);
        const Json& dim = member(cells[i], "dim", field);
        if (!id.is_string()) bad_field(field + ".id", "expected a string");
        if (!dim.is_number_integer()) bad_field(field + ".dim", "expected an integer");
        if (!ids.emplace(id.get<std::string>(), i).second) bad_field(field + ".id", "duplicate cell id");
        s.cells.push_back({id.get<std::string>(), dim.get<int>()});
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string field = at("cells", i);
        std::vector<std::size_t> bd;
        const Json& b = array_member(cells[i], "boundary", field);
        for (std::size_t r = 0; r < b.size(); ++r) {
            auto it = b[r].is_string() ? ids.find(b[r].get<std::string>()) : ids.end();
            if (it == ids.end()) bad_field(at(field + ".boundary", r), "unknown cell id");
            bd.push_back(it->second);
        }
        s.boundary.push_back(std::move(bd));
        const Json& st = member(cells[i], "stratum", field);
        if (!st.is_string() || !s.poset.find(st.get<std::string>()))
            bad_field(field + ".stratum", "unknown stratum label");
        s.assignment.push_back(*s.poset.find(st.get<std::string>()));
    }
    return s;
}

Json to_json(const StratifiedSpace& s) {
    Json out;
    out["poset"] = to_json(s.poset);
    Json cells = Json::array();
    for (std::size_t c = 0; c < s.cells.size(); ++c) {
        Json bd = Json::array();
        for (auto b : s.boundary[c]) bd.push_back(s.cells[b].id);
        cells.push_back({{"id", s.cells[c].id},
                         {"dim", s.cells[c].dim},
                         {"boundary", bd},
                         {"stratum", s.poset.label(s.assignment[c])}});
    }
    out["cells"] = cells;
    return out;
}

Json to_json(const CodomainStratification& s) {
    Json out = to_json(s.space);
    Json geo;
    geo["k"] = s.k;
    if (s.k == 1) {
        Json pts = Json::array();
        for (const auto& y : s.line_points) pts.push_back(format_rational(y));
        geo["points"] = pts;
    } else {
        const auto& a = s.arrangement;
        Json vs = Json::array();
        for (const auto& v : a.vertices()) vs.push_back(to_json(to_point(v)));
        Json es = Json::array();
        for (const auto& e : a.edges()) es.push_back({e.a, e.b});
        Json fs = Json::array();
        for (const auto& f : a.faces())
            fs.push_back({{"bounded", f.bounded},
                          {"area2", format_rational(f.area2)},
                          {"cycles", f.cycles},
                          {"isolated_vertices", f.isolated_vertices}});
        geo["vertices"] = vs;
        geo["edges"] = es;
        geo["faces"] = fs;
    }
    out["geometry"] = geo;
    return out;
}

SingularLocus locus_from_json(const Json& j) {
    SingularLocus l;
    const Json& strands = array_member(j, "strands", "");
    for (std::size_t s = 0; s < strands.size(); ++s) {
        const std::string field = at("strands", s);
        if (!strands[s].is_array()) bad_field(field, "expected a list of points");
        std::vector<Point2> pts;
        for (std::size_t i = 0; i < strands[s].size(); ++i) {
            Point p = point_from_json(strands[s][i], at(field, i));
            if (p.size() != 2) bad_field(at(field, i), "expected two coordinates");
            pts.push_back(to_point2(p));
        }
        l.strands.push_back(std::move(pts));
    }
    auto marks = [&](const char* key, std::vector<std::pair<std::size_t, std::size_t>>& out) {
        auto it = j.find(key);
        if (it == j.end()) return;
        if (!it->is_array()) bad_field(key, "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const Json& m = (*it)[i];
            if (!m.is_array() || m.size() != 2) bad_field(at(key, i), "expected [strand, vertex]");
            out.emplace_back(as_index(m[0], at(key, i)), as_index(m[1], at(key, i)));
        }
    };
    marks("cusps", l.cusps);
    marks("marks", l.marks);
    return l;
}

Json to_json(const SingularLocus& l) {
    Json out;
    Json strands = Json::array();
    for (const auto& s : l.strands) {
        Json pts = Json::array();
        for (const auto& p : s) pts.push_back(to_json(to_point(p)));
        strands.push_back(pts);
    }
    out["strands"] = strands;
    out["cusps"] = l.cusps;
    out["marks"] = l.marks;
    return out;
}

Json to_json(const GenericityReport& r) {
    Json out;
    out["passed"] = r.passed;
    Json vs = Json::array();
    for (const auto& v : r.violations) vs.push_back({{"rule", v.rule}, {"witness", v.witness}});
    out["violations"] = vs;
    return out;
}

Json to_json(const ManifoldReport& r) {
    Json out;
    out["dimension"] = r.dimension;
    out["pure"] = r.is_pure;
    out["weak_pseudomanifold"] = r.is_weak_pseudomanifold;
    out["weak_pseudomanifold_with_boundary"] = r.is_weak_pseudomanifold_with_boundary;
    std::map<std::string, std::size_t> tally;
    Json bad = Json::array();
    for (const auto& c : r.link_checks) {
        ++tally[to_string(c.verdict)];
        if (c.verdict == LinkVerdict::NotManifold) bad.push_back(c.simplex.vertices());
    }
    Json t = Json::object();
    for (const auto& [k, v] : tally) t[k] = v;
    out["link_verdicts"] = t;
    out["bad_links"] = bad;
    return out;
}

Json to_json(const JacobiSet& j) {
    Json out;
    out["notion"] = to_string(j.notion);
    out["complex"] = to_json(j.complex);
    Json simplices = Json::array();
    for (const auto& s : j.complex.simplices()) simplices.push_back(s.vertices());
    out["simplices"] = simplices;
    Json table = Json::array();
    for (const auto& v : j.verdicts) {
        Json row;
        row["simplex"] = v.simplex.vertices();
        row["h_critical"] = v.h_critical;
        row["d_critical"] = v.d_critical;
        row["l_critical"] = v.l_critical ? Json(*v.l_critical) : Json("undecided");
        row["upper_betti"] = to_json(v.upper_betti);
        row["lower_betti"] = to_json(v.lower_betti);
        table.push_back(row);
    }
    out["verdicts"] = table;
    return out;
}

Json to_json(const RefinedImage& r) {
    Json out;
    out["k"] = r.k;
    if (r.k == 1) {
        Json pts = Json::array();
        for (std::size_t i = 0; i < r.points.size(); ++i)
            pts.push_back({{"value", format_rational(r.points[i])}, {"multiplicity", r.point_multiplicity[i]}});
        out["points"] = pts;
    } else {
        out["vertex_multiplicity"] = r.vertex_multiplicity;
        out["edge_multiplicity"] = r.edge_multiplicity;
    }
    return out;
}

Json to_json(const ReebGraph& g) {
    Json out;
    Json nodes = Json::array();
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& n = g.nodes[i];
        nodes.push_back({{"id", i},
                         {"level", format_rational(n.level)},
                         {"support", n.support},
                         {"critical_vertices", n.critical_vertices}});
    }
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back({e.lower, e.upper});
    out["nodes"] = nodes;
    out["edges"] = edges;
    out["components"] = g.connected_components();
    out["cycle_rank"] = g.cycle_rank();
    return out;
}

ReebGraph reeb_graph_from_json(const Json& j) {
    ReebGraph g;
    const Json& nodes = array_member(j, "nodes", "");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::string field = at("nodes", i);
        if (as_index(member(nodes[i], "id", field), field + ".id") != i) bad_field(field + ".id", "ids must be 0..n-1");
        ReebGraph::Node n;
        n.level = as_rational(member(nodes[i], "level", field), field + ".level");
        const Json& sup = array_member(nodes[i], "support", field);
        for (std::size_t r = 0; r < sup.size(); ++r) n.support.push_back(as_index(sup[r], at(field + ".support", r)));
        const Json& cv = array_member(nodes[i], "critical_vertices", field);
        for (std::size_t r = 0; r < cv.size(); ++r)
            n.critical_vertices.push_back(as_vertex(cv[r], at(field + ".critical_vertices", r)));
        g.nodes.push_back(std::move(n));
    }
    const Json& edges = array_member(j, "edges", "");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (!edges[i].is_array() || edges[i].size() != 2) bad_field(at("edges", i), "expected [lower, upper]");
        ReebGraph::Edge e{as_index(edges[i][0], at("edges", i)), as_index(edges[i][1], at("edges", i))};
        if (e.lower >= g.nodes.size() || e.upper >= g.nodes.size()) bad_field(at("edges", i), "unknown node");
        g.edges.push_back(e);
    }
    return g;
}

std::string to_dot(const ReebGraph& g) {
    std::ostringstream out;
    out << "graph reeb {\n";
    std::map<Rational, std::vector<std::size_t>> by_level;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) by_level[g.nodes[i].level].push_back(i);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& n = g.nodes[i];
        out << "  n" << i << " [label=\"" << format_rational(n.level) << "\"";
        if (!n.critical_vertices.empty()) out << ", shape=box";
        out << "];\n";
    }
    for (const auto& [level, ids] : by_level) {
        out << "  { rank=same;";
        for (auto i : ids) out << " n" << i << ";";
        out << " }\n";
    }
    for (const auto& e : g.edges) out << "  n" << e.lower << " -- n" << e.upper << ";\n";
    out << "}\n";
    return out.str();
}

Json to_json(const ReebScaffold& w, const CodomainStratification& s) {
    Json out;
    const Poset& p = s.space.poset;
    Json strata = Json::array();
    for (const auto& st : w.strata) {
        Json fiber = Json::array();
        for (const auto& c : st.fiber) fiber.push_back(c.support);
        strata.push_back({{"stratum", p.label(st.element)},
                          {"representative", to_json(st.representative)},
                          {"components", st.elements.size()},
                          {"fiber_supports", fiber},
                          {"elements", label_list(w.poset, st.elements)}});
    }
    Json elements = Json::array();
    for (std::size_t e = 0; e < w.elements.size(); ++e)
        elements.push_back({{"label", w.poset.label(e)},
                            {"stratum", p.label(w.elements[e].stratum)},
                            {"support", w.elements[e].support}});
    Json att = Json::array();
    for (const auto& a : w.attachments) att.push_back({w.poset.label(a.lower), w.poset.label(a.upper)});
    out["strata"] = strata;
    out["elements"] = elements;
    out["attachments"] = att;
    out["poset"] = to_json(w.poset);
    return out;
}

Json to_json(const SteinReport& r) {
    return {{"ok", r.ok}, {"samples", r.samples}, {"problems", r.problems}};
}

Json to_json(const AuditReport& r) {
    Json out;
    out["ok"] = r.ok;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json samples = Json::array();
        for (const auto& p : e.samples) samples.push_back(to_json(p));
        entries.push_back({{"stratum", e.stratum},
                           {"constant", e.constant},
                           {"counts", e.counts},
                           {"samples", samples},
                           {"failed_samples", e.failed_samples}});
    }
    out["entries"] = entries;
    return out;
}

std::string to_svg(const CodomainStratification& s) {
    if (s.k != 2) fail(ErrorKind::Structural, "SVG export needs a planar stratification");
    const auto& a = s.arrangement;
    const auto& p = s.space.poset;
    // Fixed palette indexed by the stratum's position in label order.
    static const char* palette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
                                    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac"};
    std::vector<std::size_t> order(p.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return p.label(x) < p.label(y); });
    std::vector<const char*> colour(p.size());
    for (std::size_t r = 0; r < order.size(); ++r) colour[order[r]] = palette[r % 10];

    double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
    if (!a.vertices().empty()) {
        lo_x = hi_x = a.vertices()[0].x.convert_to<double>();
        lo_y = hi_y = a.vertices()[0].y.convert_to<double>();
        for (const auto& v : a.vertices()) {
            lo_x = std::min(lo_x, v.x.convert_to<double>());
            hi_x = std::max(hi_x, v.x.convert_to<double>());
            lo_y = std::min(lo_y, v.y.convert_to<double>());
            hi_y = std::max(hi_y, v.y.convert_to<double>());
        }
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double scale = 400.0 / span, pad = 20.0;
    auto sx = [&](const Rational& x) { return pad + (x.convert_to<double>() - lo_x) * scale; };
    auto sy = [&](const Rational& y) { return pad + (hi_y - y.convert_to<double>()) * scale; };
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(3);
    const double w = (hi_x - lo_x) * scale + 2 * pad, h = (hi_y - lo_y) * scale + 2 * pad;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    const std::size_t nv = a.vertices().size(), ne = a.edges().size();
    out << "<rect width=\"100%\" height=\"100%\" fill=\"" << colour[s.space.assignment[nv + ne + a.unbounded_face()]]
        << "\" fill-opacity=\"0.15\"/>\n";
    for (std::size_t f = 0; f < a.faces().size(); ++f) {
        const auto& face = a.faces()[f];
        if (!face.bounded) continue;
        out << "<path fill-rule=\"evenodd\" fill=\"" << colour[s.space.assignment[nv + ne + f]]
            << "\" fill-opacity=\"0.5\" d=\"";
        for (const auto& cyc : face.cycles) {
            for (std::size_t i = 0; i < cyc.size(); ++i)
                out << (i ? " L " : "M ") << sx(a.vertices()[cyc[i]].x) << " " << sy(a.vertices()[cyc[i]].y);
            out << " Z ";
        }
        out << "\"><title>" << xml_escape(p.label(s.space.assignment[nv + ne + f])) << "</title></path>\n";
    }
    for (std::size_t e = 0; e < ne; ++e) {
        const auto& u = a.vertices()[a.edges()[e].a];
        const auto& v = a.vertices()[a.edges()[e].b];
        out << "<line x1=\"" << sx(u.x) << "\" y1=\"" << sy(u.y) << "\" x2=\"" << sx(v.x) << "\" y2=\"" << sy(v.y)
            << "\" stroke=\"" << colour[s.space.assignment[nv + e]] << "\" stroke-width=\"2\"><title>"
            << xml_escape(p.label(s.space.assignment[nv + e])) << "</title></line>\n";
    }
    for (std::size_t v = 0; v < nv; ++v)
        out << "<circle cx=\"" << sx(a.vertices()[v].x) << "\" cy=\"" << sy(a.vertices()[v].y)
            << "\" r=\"4\" fill=\"" << colour[s.space.assignment[v]] << "\"><title>"
            << xml_escape(p.label(s.space.assignment[v])) << "</title></circle>\n";
    out << "</svg>\n";
    return out.str();
}

std::string filtration_text(const StratifiedSpace& s, const ElementSet& chain) {
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (chain[i] >= s.poset.size()) fail(ErrorKind::NotAMember, "chain element out of range");
        if (i > 0 && !s.poset.less(chain[i - 1], chain[i]))
            fail(ErrorKind::NotAMember, "not a chain: " + s.poset.label(chain[i - 1]) + " is not below " +
                                            s.poset.label(chain[i]));
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        out << i << " " << s.poset.label(chain[i]);
        const auto cells = s.stratum(chain[i]);
        for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : " ") << s.cells[cells[c]].id;
        out << "\n";
    }
    return out.str();
}

}  // namespace plstrat

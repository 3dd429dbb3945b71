#include "plstrat/locus.hpp"

#include "plstrat/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace plstrat {

bool SingularLocus::is_closed(std::size_t strand) const {
    const auto& s = strands.at(strand);
    return s.size() > 2 && s.front() == s.back();
}

namespace {

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

const Point2& strand_point(const SingularLocus& l, std::pair<std::size_t, std::size_t> at, const char* what) {
    if (at.first >= l.strands.size() || at.second >= l.strands[at.first].size())
        fail(ErrorKind::NotAMember, std::string(what) + " refers to a missing strand vertex");
    return l.strands[at.first][at.second];
}

}  // namespace

LocusStratification stratify_singular_locus(const SingularLocus& l) {
    std::vector<InputSegment> segments;
    for (std::size_t s = 0; s < l.strands.size(); ++s) {
        const auto& pts = l.strands[s];
        if (pts.size() < 2) fail(ErrorKind::Structural, "strand " + std::to_string(s) + " has fewer than two points");
        if (pts.front() == pts.back() && pts.size() < 4)
            fail(ErrorKind::Structural, "closed strand " + std::to_string(s) + " needs three distinct points");
        for (std::size_t i = 1; i < pts.size(); ++i) {
            if (pts[i - 1].x == pts[i].x)
                fail(ErrorKind::Genericity, "strand " + std::to_string(s) + " has a vertical segment at vertex " +
                                                std::to_string(i - 1));
            segments.push_back({pts[i - 1], pts[i], segments.size()});
        }
    }
    const auto a = PlanarArrangement::build({}, segments, true);
    const std::size_t nv = a.vertices().size();
    const std::size_t ne = a.edges().size();

    std::map<std::size_t, std::set<std::string>> reasons;
    auto vertex_of = [&](const Point2& p) { return *a.find_vertex(p); };
    for (std::size_t v = 0; v < nv; ++v) {
        if (a.is_crossing(v)) reasons[v].insert("crossing");
        else if (a.degree(v) > 2) reasons[v].insert("junction");
    }
    for (auto c : l.cusps) reasons[vertex_of(strand_point(l, c, "cusp"))].insert("cusp");
    for (auto m : l.marks) reasons[vertex_of(strand_point(l, m, "mark"))].insert("mark");
    for (std::size_t s = 0; s < l.strands.size(); ++s) {
        const auto& pts = l.strands[s];
        const bool closed = l.is_closed(s);
        const std::size_t n = closed ? pts.size() - 1 : pts.size();
        if (!closed) {
            reasons[vertex_of(pts.front())].insert("endpoint");
            reasons[vertex_of(pts.back())].insert("endpoint");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!closed && (i == 0 || i + 1 == n)) continue;
            const Point2& prev = pts[(i + n - 1) % n];
            const Point2& next = pts[(i + 1) % n];
            if (sign(pts[i].x - prev.x) != sign(next.x - pts[i].x)) reasons[vertex_of(pts[i])].insert("tangency");
        }
    }

    LocusStratification out;
    std::vector<std::size_t> zero_of(nv, nv);
    for (auto& [v, why] : reasons) {
        zero_of[v] = out.zero_cells.size();
        out.zero_cells.push_back({v, {why.begin(), why.end()}});
    }

    std::vector<std::size_t> parent(ne);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t v = 0; v < nv; ++v) {
        if (zero_of[v] != nv) continue;
        const auto& inc = a.incident_edges(v);
        for (std::size_t i = 1; i < inc.size(); ++i) parent[root(inc[i])] = root(inc[0]);
    }
    std::vector<std::size_t> arc_of(ne, ne);
    std::map<std::size_t, std::size_t> arc_of_root;
    for (std::size_t e = 0; e < ne; ++e) {
        auto [it, fresh] = arc_of_root.emplace(root(e), out.arcs.size());
        if (fresh) out.arcs.emplace_back();
        arc_of[e] = it->second;
        out.arcs[it->second].push_back(e);
    }

    const std::size_t nz = out.zero_cells.size();
    std::vector<std::string> labels;
    for (std::size_t z = 0; z < nz; ++z) labels.push_back("p" + std::to_string(z));
    for (std::size_t c = 0; c < out.arcs.size(); ++c) labels.push_back("a" + std::to_string(c));
    std::set<std::pair<Poset::Element, Poset::Element>> rel;
    for (std::size_t e = 0; e < ne; ++e)
        for (auto v : {a.edges()[e].a, a.edges()[e].b})
            if (zero_of[v] != nv) rel.emplace(zero_of[v], nz + arc_of[e]);

    auto element_of_vertex = [&](std::size_t v) {
        return zero_of[v] != nv ? zero_of[v] : nz + arc_of[a.incident_edges(v).front()];
    };
    std::vector<std::string> face_labels;
    std::set<std::pair<Poset::Element, std::size_t>> pairs;
    for (std::size_t f = 0; f < a.faces().size(); ++f) {
        const auto& face = a.faces()[f];
        face_labels.push_back(face.bounded ? "f" + std::to_string(f) : std::string("f_inf"));
        for (auto v : face.vertices) pairs.emplace(element_of_vertex(v), f);
        for (auto e : face.edges) pairs.emplace(nz + arc_of[e], f);
    }

    out.strat = planar_stratification(a);
    auto& space = out.strat.space;
    space.poset = wedge_extend(Poset::from_relations(labels, {rel.begin(), rel.end()}), face_labels,
                               {pairs.begin(), pairs.end()});
    const std::size_t base = nz + out.arcs.size();
    for (std::size_t v = 0; v < nv; ++v) space.assignment[v] = element_of_vertex(v);
    for (std::size_t e = 0; e < ne; ++e) space.assignment[nv + e] = nz + arc_of[e];
    for (std::size_t f = 0; f < a.faces().size(); ++f) space.assignment[nv + ne + f] = base + f;
    return out;
}

bool coarseness_check(const LocusStratification& s, const SingularLocus& l) {
    const auto& a = s.strat.arrangement;
    std::set<Point2> cusp_points;
    for (auto c : l.cusps) cusp_points.insert(strand_point(l, c, "cusp"));
    for (const auto& z : s.zero_cells) {
        const std::size_t v = z.vertex;
        if (a.degree(v) != 2) continue;
        if (cusp_points.count(a.vertices()[v])) continue;
        const auto& inc = a.incident_edges(v);
        auto other = [&](std::size_t e) {
            const auto& edge = a.edges()[e];
            return a.vertices()[edge.a == v ? edge.b : edge.a];
        };
        const Rational& x = a.vertices()[v].x;
        if (sign(other(inc[0]).x - x) == sign(other(inc[1]).x - x)) continue;
        return false;
    }
    return true;
}

}  // namespace plstrat

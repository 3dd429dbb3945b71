#include "plstrat/arrangement.hpp"

#include "plstrat/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace plstrat {

namespace {

std::string point_text(const Point2& p) {
    return "(" + format_rational(p.x) + ", " + format_rational(p.y) + ")";
}

// 0 for directions in [0, pi), 1 for [pi, 2 pi).
int half_plane(const Point2& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; }

// Counterclockwise angular order of direction vectors.
bool angle_less(const Point2& d1, const Point2& d2) {
    const int h1 = half_plane(d1), h2 = half_plane(d2);
    if (h1 != h2) return h1 < h2;
    return d1.x * d2.y - d1.y * d2.x > 0;
}

Point2 midpoint(const Point2& a, const Point2& b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t root(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[root(a)] = root(b); }
};

}  // namespace

PlanarArrangement PlanarArrangement::build(const std::vector<Point2>& points,
                                           const std::vector<InputSegment>& segments, bool strict) {
    std::set<Point2> all(points.begin(), points.end());
    std::set<Point2> crossings;
    for (const auto& s : segments) {
        if (s.a == s.b) fail(ErrorKind::Structural, "degenerate segment at " + point_text(s.a));
        all.insert(s.a);
        all.insert(s.b);
    }
    for (std::size_t i = 0; i < segments.size(); ++i)
        for (std::size_t j = i + 1; j < segments.size(); ++j) {
            const auto& s = segments[i];
            const auto& t = segments[j];
            const auto hit = intersect_segments(s.a, s.b, t.a, t.b);
            switch (hit.contact) {
                case SegmentContact::None:
                case SegmentContact::SharedEndpoint:
                    break;
                case SegmentContact::Crossing:
                    all.insert(*hit.point);
                    crossings.insert(*hit.point);
                    break;
                case SegmentContact::Touching:
                    if (strict)
                        fail(ErrorKind::Genericity,
                             "segment endpoint touches another segment at " + point_text(*hit.point));
                    all.insert(*hit.point);
                    break;
                case SegmentContact::Overlap:
                    if (strict) fail(ErrorKind::Genericity, "collinear overlapping segments");
                    break;
            }
        }

    PlanarArrangement out;
    out.vertices_.assign(all.begin(), all.end());
    const std::size_t nv = out.vertices_.size();
    out.interior_sources_.assign(nv, {});
    out.crossing_.assign(nv, false);

    std::map<std::pair<std::size_t, std::size_t>, std::set<std::size_t>> pieces;
    for (std::size_t si = 0; si < segments.size(); ++si) {
        const auto& s = segments[si];
        std::vector<std::size_t> on;
        for (std::size_t v = 0; v < nv; ++v) {
            if (!on_segment(s.a, s.b, out.vertices_[v])) continue;
            on.push_back(v);
            if (!(out.vertices_[v] == s.a) && !(out.vertices_[v] == s.b)) out.interior_sources_[v].push_back(s.source);
        }
        // Vertex order is lexicographic, which is monotone along any segment.
        for (std::size_t i = 1; i < on.size(); ++i) pieces[{on[i - 1], on[i]}].insert(s.source);
    }
    std::set<Point2> inputs(points.begin(), points.end());
    for (const auto& s : segments) {
        inputs.insert(s.a);
        inputs.insert(s.b);
    }
    for (std::size_t v = 0; v < nv; ++v) {
        const Point2& p = out.vertices_[v];
        out.crossing_[v] = crossings.count(p) && !inputs.count(p);
        if (!strict) continue;
        if (inputs.count(p) && !out.interior_sources_[v].empty())
            fail(ErrorKind::Genericity, "input point lies inside a segment at " + point_text(p));
        if (out.crossing_[v] && out.interior_sources_[v].size() != 2)
            fail(ErrorKind::Genericity, "three or more segments meet at " + point_text(p));
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (auto& [key, src] : pieces) {
        pairs.push_back(key);
        out.edges_.push_back({key.first, key.second, {src.begin(), src.end()}});
    }
    out.finish(std::move(pairs));
    return out;
}

void PlanarArrangement::finish(std::vector<std::pair<std::size_t, std::size_t>> edge_pairs) {
    const std::size_t nv = vertices_.size();
    const std::size_t ne = edge_pairs.size();
    incident_.assign(nv, {});
    if (interior_sources_.size() != nv) interior_sources_.assign(nv, {});
    if (crossing_.size() != nv) crossing_.assign(nv, false);
    faces_.clear();

    // Half-edge 2e runs a -> b, 2e + 1 runs b -> a.
    auto origin = [&](std::size_t h) { return h % 2 ? edge_pairs[h / 2].second : edge_pairs[h / 2].first; };
    auto target = [&](std::size_t h) { return origin(h ^ 1); };
    std::vector<std::vector<std::size_t>> out_edges(nv);
    for (std::size_t h = 0; h < 2 * ne; ++h) out_edges[origin(h)].push_back(h);
    for (std::size_t e = 0; e < ne; ++e) {
        incident_[edge_pairs[e].first].push_back(e);
        incident_[edge_pairs[e].second].push_back(e);
    }
    std::vector<std::size_t> pos(2 * ne);
    for (std::size_t v = 0; v < nv; ++v) {
        auto& list = out_edges[v];
        auto dir = [&](std::size_t h) {
            const Point2& a = vertices_[origin(h)];
            const Point2& b = vertices_[target(h)];
            return Point2{b.x - a.x, b.y - a.y};
        };
        std::sort(list.begin(), list.end(), [&](auto x, auto y) { return angle_less(dir(x), dir(y)); });
        for (std::size_t i = 0; i < list.size(); ++i) pos[list[i]] = i;
    }
    auto next = [&](std::size_t h) {
        const std::size_t v = target(h);
        const auto& list = out_edges[v];
        return list[(pos[h ^ 1] + list.size() - 1) % list.size()];
    };

    struct Cycle {
        std::vector<std::size_t> halves;
        Rational area2;
    };
    std::vector<Cycle> cycles;
    std::vector<bool> seen(2 * ne, false);
    for (std::size_t h0 = 0; h0 < 2 * ne; ++h0) {
        if (seen[h0]) continue;
        Cycle c;
        for (std::size_t h = h0; !seen[h]; h = next(h)) {
            seen[h] = true;
            c.halves.push_back(h);
            const Point2& a = vertices_[origin(h)];
            const Point2& b = vertices_[target(h)];
            c.area2 += a.x * b.y - a.y * b.x;
        }
        cycles.push_back(std::move(c));
    }

    UnionFind uf(nv);
    for (auto [a, b] : edge_pairs) uf.unite(a, b);
    auto polygon = [&](const Cycle& c) {
        std::vector<Point2> poly;
        for (auto h : c.halves) poly.push_back(vertices_[origin(h)]);
        return poly;
    };

    std::vector<std::size_t> outer;  // cycles bounding a bounded face
    for (std::size_t c = 0; c < cycles.size(); ++c)
        if (cycles[c].area2 > 0) outer.push_back(c);
    std::vector<std::vector<Point2>> outer_poly;
    for (auto c : outer) outer_poly.push_back(polygon(cycles[c]));

    const std::size_t nf = outer.size() + 1;
    std::vector<std::vector<std::size_t>> face_cycles(nf);
    std::vector<std::vector<std::size_t>> face_isolated(nf);
    for (std::size_t i = 0; i < outer.size(); ++i) face_cycles[i].push_back(outer[i]);

    auto enclosing_face = [&](std::size_t v) {
        std::size_t best = nf - 1;
        for (std::size_t i = 0; i < outer.size(); ++i) {
            const std::size_t w = origin(cycles[outer[i]].halves.front());
            if (uf.root(w) == uf.root(v)) continue;
            if (point_in_polygon(outer_poly[i], vertices_[v]) != 1) continue;
            if (best == nf - 1 || cycles[outer[i]].area2 < cycles[outer[best]].area2) best = i;
        }
        return best;
    };
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        if (cycles[c].area2 > 0) continue;
        face_cycles[enclosing_face(origin(cycles[c].halves.front()))].push_back(c);
    }
    for (std::size_t v = 0; v < nv; ++v)
        if (out_edges[v].empty()) face_isolated[enclosing_face(v)].push_back(v);

    for (std::size_t f = 0; f < nf; ++f) {
        Face face;
        face.bounded = f + 1 < nf;
        if (face.bounded) face.area2 = cycles[outer[f]].area2;
        std::set<std::size_t> vs, es;
        for (auto c : face_cycles[f]) {
            std::vector<std::size_t> seq;
            for (auto h : cycles[c].halves) {
                seq.push_back(origin(h));
                vs.insert(origin(h));
                es.insert(h / 2);
            }
            face.cycles.push_back(std::move(seq));
        }
        for (auto v : face_isolated[f]) vs.insert(v);
        face.isolated_vertices = face_isolated[f];
        face.vertices.assign(vs.begin(), vs.end());
        face.edges.assign(es.begin(), es.end());
        faces_.push_back(std::move(face));
    }
}

std::optional<std::size_t> PlanarArrangement::find_vertex(const Point2& p) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
    if (it != vertices_.end() && *it == p) return static_cast<std::size_t>(it - vertices_.begin());
    return std::nullopt;
}

PlanarArrangement::Cell PlanarArrangement::locate(const Point2& p) const {
    if (auto v = find_vertex(p)) return {0, *v};
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (in_open_segment(vertices_[edges_[e].a], vertices_[edges_[e].b], p)) return {1, e};
    std::size_t best = unbounded_face();
    for (std::size_t f = 0; f + 1 < faces_.size(); ++f) {
        std::vector<Point2> poly;
        for (auto v : faces_[f].cycles.front()) poly.push_back(vertices_[v]);
        if (point_in_polygon(poly, p) != 1) continue;
        if (best == unbounded_face() || faces_[f].area2 < faces_[best].area2) best = f;
    }
    return {2, best};
}

std::size_t PlanarArrangement::connected_components() const {
    UnionFind uf(vertices_.size());
    for (const auto& e : edges_) uf.unite(e.a, e.b);
    std::size_t c = 0;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (uf.root(v) == v) ++c;
    return c;
}

bool PlanarArrangement::euler_ok() const {
    const long v = static_cast<long>(vertices_.size());
    const long e = static_cast<long>(edges_.size());
    const long f = static_cast<long>(faces_.size());
    return v - e + f == 1 + static_cast<long>(connected_components());
}

std::optional<Point2> PlanarArrangement::interior_point(std::size_t f, std::size_t j) const {
    const Face& face = faces_.at(f);
    const Cell want{2, f};
    std::vector<std::pair<std::size_t, std::size_t>> sides;
    for (const auto& cyc : face.cycles)
        for (std::size_t i = 0; i < cyc.size(); ++i) sides.emplace_back(cyc[i], cyc[(i + 1) % cyc.size()]);
    if (sides.empty()) {
        Point2 base{Rational(0), Rational(0)};
        if (!face.isolated_vertices.empty())
            base = vertices_[face.isolated_vertices[j % face.isolated_vertices.size()]];
        else if (vertices_.empty()) return Point2{Rational(static_cast<long>(j)), Rational(0)};
        Rational step(static_cast<long>(j + 1));
        for (int i = 0; i < 256; ++i, step /= 2) {
            Point2 cand{base.x + step, base.y};
            if (locate(cand) == want) return cand;
        }
        return std::nullopt;
    }
    const auto [u, v] = sides[j % sides.size()];
    const long round = static_cast<long>(j / sides.size());
    const Rational t(round + 1, round + 2);
    const Point2& a = vertices_[u];
    const Point2& b = vertices_[v];
    const Point2 m{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    const Point2 n{a.y - b.y, b.x - a.x};  // left normal
    Rational step(1);
    for (int i = 0; i < 256; ++i, step /= 2) {
        Point2 cand{m.x + step * n.x, m.y + step * n.y};
        if (locate(cand) == want) return cand;
    }
    return std::nullopt;
}

Point2 PlanarArrangement::representative(const Cell& c) const {
    switch (c.dim) {
        case 0: return vertices_.at(c.index);
        case 1: return midpoint(vertices_[edges_.at(c.index).a], vertices_[edges_.at(c.index).b]);
        default: {
            auto p = interior_point(c.index, 0);
            if (!p) fail(ErrorKind::Degeneracy, "no interior sample found for face " + std::to_string(c.index));
            return *p;
        }
    }
}

RefinedImage refine_planar(const std::vector<Point2>& points, const std::vector<InputSegment>& segments) {
    RefinedImage r;
    r.k = 2;
    r.arrangement = PlanarArrangement::build(points, segments, true);
    const auto& a = r.arrangement;
    r.vertex_multiplicity.assign(a.vertices().size(), 0);
    for (const auto& p : points)
        if (auto v = a.find_vertex(p)) ++r.vertex_multiplicity[*v];
    for (std::size_t v = 0; v < a.vertices().size(); ++v)
        r.vertex_multiplicity[v] += static_cast<int>(a.crossing_sources(v).size());
    for (const auto& e : a.edges()) r.edge_multiplicity.push_back(static_cast<int>(e.sources.size()));
    return r;
}

RefinedImage refine_image(const PLMap& f, const JacobiSet& j) {
    if (f.k() != 1 && f.k() != 2) fail(ErrorKind::Structural, "image refinement supports k = 1 and k = 2");
    const auto& jc = j.complex;
    if (f.k() == 1) {
        RefinedImage r;
        r.k = 1;
        std::map<Rational, int> count;
        for (auto v : jc.vertices()) ++count[f.value(v)[0]];
        for (auto& [y, c] : count) {
            r.points.push_back(y);
            r.point_multiplicity.push_back(c);
        }
        return r;
    }
    std::vector<Point2> points;
    std::set<Point2> distinct;
    for (auto v : jc.vertices()) {
        points.push_back(to_point2(f.value(v)));
        if (!distinct.insert(points.back()).second)
            fail(ErrorKind::Genericity, "two Jacobi vertices share the image " + point_text(points.back()));
    }
    std::vector<InputSegment> segments;
    for (auto i : jc.of_dimension(1)) {
        const Simplex& e = jc.simplex(i);
        segments.push_back({to_point2(f.value(e[0])), to_point2(f.value(e[1])), i});
    }
    return refine_planar(points, segments);
}

std::vector<ContainmentViolation> containment_violations(const RefinedImage& r) {
    std::vector<ContainmentViolation> out;
    if (r.k == 1) {
        for (std::size_t i = 1; i < r.points.size(); ++i)
            if (!(r.points[i - 1] < r.points[i]))
                out.push_back({"y" + std::to_string(i - 1), "y" + std::to_string(i)});
        return out;
    }
    const auto& a = r.arrangement;
    const auto& vs = a.vertices();
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (vs[i - 1] == vs[i]) out.push_back({"v" + std::to_string(i - 1), "v" + std::to_string(i)});
    const auto& es = a.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = 0; j < es.size(); ++j) {
            if (i == j) continue;
            const auto hit = intersect_segments(vs[es[i].a], vs[es[i].b], vs[es[j].a], vs[es[j].b]);
            bool bad = hit.contact == SegmentContact::Crossing || hit.contact == SegmentContact::Overlap;
            if (hit.contact == SegmentContact::Touching)
                bad = in_open_segment(vs[es[i].a], vs[es[i].b], *hit.point);
            if (bad) out.push_back({"e" + std::to_string(i), "e" + std::to_string(j)});
        }
    return out;
}

CodomainStratification line_stratification(const std::vector<Rational>& points) {
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i - 1] < points[i])) fail(ErrorKind::Structural, "line points must be sorted and distinct");
    CodomainStratification s;
    s.k = 1;
    s.line_points = points;
    const std::size_t m = points.size();
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i) {
        labels.push_back("y" + std::to_string(i));
        s.space.cells.push_back({labels.back(), 0});
        s.space.boundary.push_back({});
    }
    std::vector<std::string> intervals;
    std::vector<std::pair<Poset::Element, std::size_t>> pairs;
    for (std::size_t i = 0; i <= m; ++i) {
        intervals.push_back("I" + std::to_string(i));
        s.space.cells.push_back({intervals.back(), 1});
        std::vector<std::size_t> bd;
        if (i > 0) {
            bd.push_back(i - 1);
            pairs.emplace_back(i - 1, i);
        }
        if (i < m) {
            bd.push_back(i);
            pairs.emplace_back(i, i);
        }
        s.space.boundary.push_back(bd);
    }
    s.space.poset = wedge_extend(Poset::from_relations(labels, {}), intervals, pairs);
    s.space.assignment.resize(s.space.cells.size());
    std::iota(s.space.assignment.begin(), s.space.assignment.end(), 0);
    return s;
}

CodomainStratification planar_stratification(const PlanarArrangement& a) {
    CodomainStratification s;
    s.k = 2;
    s.arrangement = a;
    const std::size_t nv = a.vertices().size();
    const std::size_t ne = a.edges().size();
    std::vector<std::string> labels;
    Poset::Relation rel;
    for (std::size_t v = 0; v < nv; ++v) {
        labels.push_back("v" + std::to_string(v));
        s.space.cells.push_back({labels.back(), 0});
        s.space.boundary.push_back({});
    }
    for (std::size_t e = 0; e < ne; ++e) {
        labels.push_back("e" + std::to_string(e));
        s.space.cells.push_back({labels.back(), 1});
        s.space.boundary.push_back({a.edges()[e].a, a.edges()[e].b});
        rel.emplace_back(a.edges()[e].a, nv + e);
        rel.emplace_back(a.edges()[e].b, nv + e);
    }
    std::vector<std::string> face_labels;
    std::vector<std::pair<Poset::Element, std::size_t>> pairs;
    for (std::size_t f = 0; f < a.faces().size(); ++f) {
        const auto& face = a.faces()[f];
        face_labels.push_back(face.bounded ? "f" + std::to_string(f) : std::string("f_inf"));
        s.space.cells.push_back({face_labels.back(), 2});
        std::vector<std::size_t> bd;
        for (auto e : face.edges) bd.push_back(nv + e);
        for (auto v : face.isolated_vertices) bd.push_back(v);
        s.space.boundary.push_back(bd);
        for (auto v : face.vertices) pairs.emplace_back(v, f);
        for (auto e : face.edges) pairs.emplace_back(nv + e, f);
    }
    s.space.poset = wedge_extend(Poset::from_relations(labels, rel), face_labels, pairs);
    s.space.assignment.resize(s.space.cells.size());
    std::iota(s.space.assignment.begin(), s.space.assignment.end(), 0);
    return s;
}

CodomainStratification build_codomain_stratification(const RefinedImage& r) {
    return r.k == 1 ? line_stratification(r.points) : planar_stratification(r.arrangement);
}

std::size_t CodomainStratification::locate_cell(const Point& y) const {
    if (y.size() != static_cast<std::size_t>(k)) fail(ErrorKind::Structural, "query point has wrong dimension");
    if (k == 1) {
        auto it = std::lower_bound(line_points.begin(), line_points.end(), y[0]);
        const std::size_t i = static_cast<std::size_t>(it - line_points.begin());
        if (it != line_points.end() && *it == y[0]) return i;
        return line_points.size() + i;
    }
    const auto c = arrangement.locate(to_point2(y));
    const std::size_t nv = arrangement.vertices().size();
    const std::size_t ne = arrangement.edges().size();
    return c.dim == 0 ? c.index : (c.dim == 1 ? nv + c.index : nv + ne + c.index);
}

Poset::Element CodomainStratification::locate(const Point& y) const { return space.assignment.at(locate_cell(y)); }

Poset::Element locate(const CodomainStratification& s, const Point& y) { return s.locate(y); }

Point CodomainStratification::representative(std::size_t c) const {
    if (k == 1) {
        const std::size_t m = line_points.size();
        if (c < m) return {line_points[c]};
        const std::size_t i = c - m;
        if (m == 0) return {Rational(0)};
        if (i == 0) return {line_points.front() - 1};
        if (i == m) return {line_points.back() + 1};
        return {(line_points[i - 1] + line_points[i]) / 2};
    }
    const std::size_t nv = arrangement.vertices().size();
    const std::size_t ne = arrangement.edges().size();
    PlanarArrangement::Cell cell = c < nv ? PlanarArrangement::Cell{0, c}
                                   : c < nv + ne ? PlanarArrangement::Cell{1, c - nv}
                                                 : PlanarArrangement::Cell{2, c - nv - ne};
    return to_point(arrangement.representative(cell));
}

std::vector<std::size_t> CodomainStratification::top_cells() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < space.cells.size(); ++c)
        if (space.cells[c].dim == k) out.push_back(c);
    return out;
}

std::vector<std::optional<Point>> CodomainStratification::samples(std::size_t c, std::size_t count) const {
    std::vector<std::optional<Point>> out;
    if (space.cells.at(c).dim != k) fail(ErrorKind::Structural, "samples are drawn from top cells only");
    if (k == 1) {
        const std::size_t m = line_points.size();
        const std::size_t i = c - m;
        for (std::size_t j = 1; j <= count; ++j) {
            const Rational t(static_cast<long>(j));
            if (m == 0) out.push_back(Point{t});
            else if (i == 0) out.push_back(Point{line_points.front() - t});
            else if (i == m) out.push_back(Point{line_points.back() + t});
            else {
                const Rational& a = line_points[i - 1];
                const Rational& b = line_points[i];
                out.push_back(Point{a + (b - a) * t / static_cast<long>(count + 1)});
            }
        }
        return out;
    }
    const std::size_t f = c - arrangement.vertices().size() - arrangement.edges().size();
    for (std::size_t j = 0; j < count; ++j) {
        auto p = arrangement.interior_point(f, j);
        out.push_back(p ? std::optional<Point>(to_point(*p)) : std::nullopt);
    }
    return out;
}

std::vector<std::size_t> CodomainStratification::closure(std::size_t c) const {
    std::set<std::size_t> seen{c};
    std::vector<std::size_t> frontier{c};
    while (!frontier.empty()) {
        auto x = frontier.back();
        frontier.pop_back();
        for (auto b : space.boundary.at(x))
            if (seen.insert(b).second) frontier.push_back(b);
    }
    return {seen.begin(), seen.end()};
}

bool verify_closure_pairs(const CodomainStratification& s) {
    if (s.k == 1) {
        const std::size_t m = s.line_points.size();
        for (std::size_t i = 0; i <= m; ++i)
            for (auto b : s.space.boundary[m + i]) {
                const Rational& y = s.line_points[b];
                const Rational probe = b + 1 == i ? y + Rational(1, 1 << 20) : y - Rational(1, 1 << 20);
                if (s.locate_cell({probe}) != m + i) return false;
            }
        return true;
    }
    const auto& a = s.arrangement;
    auto near_face = [&](const Point2& base, const Point2& dir, std::size_t f) {
        Rational step(1);
        for (int i = 0; i < 128; ++i, step /= 2) {
            if (a.locate({base.x + step * dir.x, base.y + step * dir.y}) == PlanarArrangement::Cell{2, f}) return true;
        }
        return false;
    };
    for (std::size_t f = 0; f < a.faces().size(); ++f) {
        const auto& face = a.faces()[f];
        for (auto e : face.edges) {
            const Point2& p = a.vertices()[a.edges()[e].a];
            const Point2& q = a.vertices()[a.edges()[e].b];
            const Point2 m = midpoint(p, q);
            const Point2 n{p.y - q.y, q.x - p.x};
            if (!near_face(m, n, f) && !near_face(m, {-n.x, -n.y}, f)) return false;
        }
        for (auto v : face.vertices) {
            bool ok = false;
            for (auto e : a.incident_edges(v))
                if (std::binary_search(face.edges.begin(), face.edges.end(), e)) ok = true;
            if (!ok && std::count(face.isolated_vertices.begin(), face.isolated_vertices.end(), v))
                ok = near_face(a.vertices()[v], {Rational(1), Rational(0)}, f);
            if (!ok) return false;
        }
    }
    return true;
}

}  // namespace plstrat

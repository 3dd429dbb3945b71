#include "plstrat/reeb.hpp"

#include "plstrat/errors.hpp"
#include "plstrat/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace plstrat {

namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t root(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[root(a)] = root(b); }
};

// Membership in the relative interior of f(simplex), for k = 1 or 2.
class RelintTest {
public:
    RelintTest(const std::vector<Point>& images, int k) : k_(k) {
        if (k == 1) {
            lo_ = hi_ = images.front()[0];
            for (const auto& p : images) {
                lo_ = std::min(lo_, p[0]);
                hi_ = std::max(hi_, p[0]);
            }
            return;
        }
        std::vector<Point2> pts;
        for (const auto& p : images) pts.push_back(to_point2(p));
        hull_ = convex_hull(pts);
    }

    bool contains(const Point& y) const {
        if (k_ == 1) return lo_ == hi_ ? y[0] == lo_ : (lo_ < y[0] && y[0] < hi_);
        const Point2 q = to_point2(y);
        if (hull_.size() == 1) return hull_[0] == q;
        if (hull_.size() == 2) return in_open_segment(hull_[0], hull_[1], q);
        for (std::size_t i = 0; i < hull_.size(); ++i)
            if (orient(hull_[i], hull_[(i + 1) % hull_.size()], q) <= 0) return false;
        return true;
    }

private:
    int k_;
    Rational lo_, hi_;
    std::vector<Point2> hull_;
};

bool fiber_meets(const PLMap& f, const Simplex& s, const Point& y) {
    if (f.k() == 1) {
        bool below = false, above = false;
        for (auto v : s) {
            const Rational& x = f.value(v)[0];
            below = below || x <= y[0];
            above = above || x >= y[0];
        }
        return below && above;
    }
    return in_convex_hull(f.images(s), y);
}

std::vector<SimplicialComplex::Index> all_faces(const SimplicialComplex& k, SimplicialComplex::Index i) {
    std::set<SimplicialComplex::Index> seen{i};
    std::vector<SimplicialComplex::Index> frontier{i};
    while (!frontier.empty()) {
        auto c = frontier.back();
        frontier.pop_back();
        for (auto face : k.faces_of(c))
            if (seen.insert(face).second) frontier.push_back(face);
    }
    return {seen.begin(), seen.end()};
}

std::string point_text(const Point& p) {
    std::string out;
    for (const auto& x : p) out += (out.empty() ? "" : ", ") + format_rational(x);
    return "(" + out + ")";
}

}  // namespace

std::vector<FiberComponent> fiber_components(const PLMap& f, const Point& y) {
    const auto& dom = f.domain();
    if (y.size() != static_cast<std::size_t>(f.k())) fail(ErrorKind::Structural, "level has wrong dimension");
    const std::size_t n = dom.size();
    std::vector<char> hit(n, 0);
    parallel_for(n, [&](std::size_t i) { hit[i] = fiber_meets(f, dom.simplex(i), y); });

    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!hit[i]) continue;
        for (auto face : dom.faces_of(i))
            if (hit[face]) uf.unite(face, i);
    }
    std::vector<FiberComponent> out;
    std::map<std::size_t, std::size_t> slot;
    for (std::size_t i = 0; i < n; ++i) {
        if (!hit[i] || !dom.cofaces_of(i).empty()) continue;
        auto [it, fresh] = slot.emplace(uf.root(i), out.size());
        if (fresh) out.push_back({{}, y});
        out[it->second].support.push_back(i);
    }
    return out;
}

std::size_t ReebGraph::connected_components() const {
    UnionFind uf(nodes.size());
    for (const auto& e : edges) uf.unite(e.lower, e.upper);
    std::size_t c = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (uf.root(i) == i) ++c;
    return c;
}

long ReebGraph::cycle_rank() const {
    return static_cast<long>(edges.size()) - static_cast<long>(nodes.size()) +
           static_cast<long>(connected_components());
}

ReebGraph reeb_graph(const PLMap& f, Notion notion) {
    if (f.k() != 1) fail(ErrorKind::Structural, "Reeb graphs need k = 1");
    const auto& dom = f.domain();
    const JacobiSet j = jacobi_set(f, notion);

    std::set<Rational> distinct;
    for (const auto& v : f.values()) distinct.insert(v[0]);
    const std::vector<Rational> levels(distinct.begin(), distinct.end());
    const std::size_t m = levels.size();

    std::vector<std::vector<FiberComponent>> at(m), between(m ? m - 1 : 0);
    parallel_for(m, [&](std::size_t i) { at[i] = fiber_components(f, {levels[i]}); });
    parallel_for(between.size(), [&](std::size_t i) {
        between[i] = fiber_components(f, {(levels[i] + levels[i + 1]) / 2});
    });

    // Node ids per level; top simplex -> node at that level.
    std::vector<std::size_t> first_node(m + 1, 0);
    std::vector<std::map<SimplicialComplex::Index, std::size_t>> owner(m);
    std::vector<ReebGraph::Node> nodes;
    for (std::size_t i = 0; i < m; ++i) {
        first_node[i] = nodes.size();
        for (const auto& c : at[i]) {
            for (auto s : c.support) owner[i][s] = nodes.size();
            nodes.push_back({levels[i], c.support, {}});
        }
    }
    first_node[m] = nodes.size();
    for (auto v : j.complex.vertices()) {
        const std::size_t i = static_cast<std::size_t>(
            std::lower_bound(levels.begin(), levels.end(), f.value(v)[0]) - levels.begin());
        const auto top = dom.top_cofaces(dom.index_of(Simplex{v}));
        for (auto s : top)
            if (auto it = owner[i].find(s); it != owner[i].end()) {
                nodes[it->second].critical_vertices.push_back(v);
                break;
            }
    }

    std::vector<ReebGraph::Edge> edges;
    auto node_for = [&](std::size_t level, const FiberComponent& c) {
        std::set<std::size_t> found;
        for (auto s : c.support)
            if (auto it = owner[level].find(s); it != owner[level].end()) found.insert(it->second);
        if (found.size() != 1)
            fail(ErrorKind::InvariantBreach, "slab component does not limit to one level component at " +
                                                 format_rational(levels[level]));
        return *found.begin();
    };
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (const auto& c : between[i]) edges.push_back({node_for(i, c), node_for(i + 1, c)});

    // Contract regular nodes with one edge below and one above.
    std::vector<bool> alive(nodes.size(), true);
    std::vector<bool> edge_alive(edges.size(), true);
    std::vector<std::vector<std::size_t>> touching(nodes.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
        touching[edges[e].lower].push_back(e);
        touching[edges[e].upper].push_back(e);
    }
    for (std::size_t v = 0; v < nodes.size(); ++v) {
        if (!nodes[v].critical_vertices.empty()) continue;
        std::vector<std::size_t> down, up;
        for (auto e : touching[v]) {
            if (!edge_alive[e]) continue;
            (edges[e].upper == v ? down : up).push_back(e);
        }
        if (down.size() != 1 || up.size() != 1) continue;
        const std::size_t lo = edges[down[0]].lower, hi = edges[up[0]].upper;
        edge_alive[down[0]] = edge_alive[up[0]] = false;
        alive[v] = false;
        edges.push_back({lo, hi});
        edge_alive.push_back(true);
        touching[lo].push_back(edges.size() - 1);
        touching[hi].push_back(edges.size() - 1);
    }

    ReebGraph g;
    std::vector<std::size_t> renumber(nodes.size(), 0);
    for (std::size_t v = 0; v < nodes.size(); ++v)
        if (alive[v]) {
            renumber[v] = g.nodes.size();
            std::sort(nodes[v].critical_vertices.begin(), nodes[v].critical_vertices.end());
            g.nodes.push_back(std::move(nodes[v]));
        }
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edge_alive[e]) g.edges.push_back({renumber[edges[e].lower], renumber[edges[e].upper]});
    std::sort(g.edges.begin(), g.edges.end(),
              [](const auto& a, const auto& b) { return std::tie(a.lower, a.upper) < std::tie(b.lower, b.upper); });
    return g;
}

ReebScaffold reeb_scaffold(const PLMap& f, const CodomainStratification& s) {
    const int k = f.k();
    if (k != 1 && k != 2) fail(ErrorKind::Structural, "scaffolds support k = 1 and k = 2");
    if (s.k != k) fail(ErrorKind::Structural, "codomain stratification has the wrong dimension");
    const auto& dom = f.domain();
    ReebScaffold w;

    if (k == 1) {
        std::set<Rational> ys;
        for (const auto& v : f.values()) ys.insert(v[0]);
        w.fine = line_stratification({ys.begin(), ys.end()});
    } else {
        std::vector<Point2> points;
        for (const auto& v : f.values()) points.push_back(to_point2(v));
        std::vector<InputSegment> segments;
        for (auto e : dom.of_dimension(1)) {
            const Simplex& s1 = dom.simplex(e);
            Point2 a = to_point2(f.value(s1[0])), b = to_point2(f.value(s1[1]));
            if (!(a == b)) segments.push_back({a, b, e});
        }
        w.fine = planar_stratification(PlanarArrangement::build(points, segments, false));
    }
    const std::size_t nfine = w.fine.space.cells.size();
    std::vector<Point> rep(nfine);
    parallel_for(nfine, [&](std::size_t c) { rep[c] = w.fine.representative(c); });
    w.fine_to_coarse.resize(nfine);
    parallel_for(nfine, [&](std::size_t c) { w.fine_to_coarse[c] = s.locate_cell(rep[c]); });
    std::vector<Poset::Element> stratum_of_fine(nfine);
    for (std::size_t c = 0; c < nfine; ++c) stratum_of_fine[c] = s.space.assignment[w.fine_to_coarse[c]];

    // Pieces: open simplex rho over fine cell c, with c inside relint f(rho).
    std::vector<std::vector<std::size_t>> cells_of(dom.size());
    parallel_for(dom.size(), [&](std::size_t r) {
        const RelintTest test(f.images(dom.simplex(r)), k);
        for (std::size_t c = 0; c < nfine; ++c)
            if (test.contains(rep[c])) cells_of[r].push_back(c);
    });
    std::vector<std::size_t> first_piece(dom.size() + 1, 0);
    for (std::size_t r = 0; r < dom.size(); ++r) {
        first_piece[r] = w.pieces.size();
        for (auto c : cells_of[r]) w.pieces.emplace_back(r, c);
    }
    first_piece[dom.size()] = w.pieces.size();
    auto piece_index = [&](std::size_t r, std::size_t c) -> std::optional<std::size_t> {
        const auto& list = cells_of[r];
        auto it = std::lower_bound(list.begin(), list.end(), c);
        if (it == list.end() || *it != c) return std::nullopt;
        return first_piece[r] + static_cast<std::size_t>(it - list.begin());
    };

    std::vector<std::vector<std::size_t>> fine_closure(nfine);
    for (std::size_t c = 0; c < nfine; ++c) fine_closure[c] = w.fine.closure(c);

    const std::size_t np = w.pieces.size();
    UnionFind uf(np);
    std::vector<std::pair<std::size_t, std::size_t>> cross;  // (lower piece, upper piece)
    for (std::size_t r = 0; r < dom.size(); ++r) {
        if (cells_of[r].empty()) continue;
        const auto faces = all_faces(dom, r);
        for (auto c_up : cells_of[r]) {
            const std::size_t p_up = *piece_index(r, c_up);
            for (auto rho : faces)
                for (auto c : fine_closure[c_up]) {
                    auto p = piece_index(rho, c);
                    if (!p || *p == p_up) continue;
                    if (stratum_of_fine[c] == stratum_of_fine[c_up]) uf.unite(*p, p_up);
                    else cross.emplace_back(*p, p_up);
                }
        }
    }

    // Elements: strata in poset order, components by first piece.
    const Poset& coarse = s.space.poset;
    std::vector<std::vector<std::size_t>> pieces_of_stratum(coarse.size());
    for (std::size_t p = 0; p < np; ++p) pieces_of_stratum[stratum_of_fine[w.pieces[p].second]].push_back(p);
    w.piece_element.assign(np, 0);
    std::vector<std::string> labels;
    for (Poset::Element a = 0; a < coarse.size(); ++a) {
        std::map<std::size_t, std::size_t> slot;
        std::vector<std::set<SimplicialComplex::Index>> support;
        for (auto p : pieces_of_stratum[a]) {
            auto [it, fresh] = slot.emplace(uf.root(p), w.elements.size());
            if (fresh) {
                w.elements.push_back({a, slot.size() - 1, {}});
                support.emplace_back();
                labels.push_back(coarse.label(a) + "#" + std::to_string(slot.size() - 1));
            }
            w.piece_element[p] = it->second;
            support[it->second - (w.elements.size() - support.size())].insert(w.pieces[p].first);
        }
        const std::size_t base = w.elements.size() - support.size();
        for (std::size_t i = 0; i < support.size(); ++i)
            w.elements[base + i].support.assign(support[i].begin(), support[i].end());
    }
    std::set<std::pair<std::size_t, std::size_t>> rel;
    for (auto [p, q] : cross) rel.emplace(w.piece_element[p], w.piece_element[q]);
    w.poset = Poset::from_relations(labels, {rel.begin(), rel.end()});

    std::vector<std::vector<std::size_t>> elements_of(coarse.size());
    for (std::size_t e = 0; e < w.elements.size(); ++e) elements_of[w.elements[e].stratum].push_back(e);
    for (std::size_t up = 0; up < w.elements.size(); ++up) {
        const auto alpha = w.elements[up].stratum;
        for (Poset::Element l = 0; l < coarse.size(); ++l) {
            if (!coarse.less(l, alpha)) continue;
            std::vector<std::size_t> targets;
            for (auto e : elements_of[l])
                if (w.poset.leq(e, up)) targets.push_back(e);
            if (targets.size() != 1)
                fail(ErrorKind::Degeneracy, "component " + labels[up] + " attaches to " +
                                                std::to_string(targets.size()) + " components over " +
                                                coarse.label(l));
            w.attachments.push_back({targets.front(), up});
        }
    }

    w.strata.resize(coarse.size());
    parallel_for(coarse.size(), [&](std::size_t a) {
        auto& st = w.strata[a];
        st.element = a;
        const auto cells = s.space.stratum(a);
        if (cells.empty()) fail(ErrorKind::Structural, "codomain stratum " + coarse.label(a) + " has no cells");
        st.representative = s.representative(cells.front());
        st.fiber = fiber_components(f, st.representative);
        st.elements = elements_of[a];
    });
    return w;
}

SteinReport check_stein_square(const PLMap& f, const ReebScaffold& w, const CodomainStratification& s) {
    SteinReport r;
    const auto& dom = f.domain();

    // Pieces as a carrier over the scaffold poset, mapped to coarse cells.
    StratifiedSpace pieces;
    std::vector<std::size_t> to_coarse;
    for (std::size_t p = 0; p < w.pieces.size(); ++p) {
        pieces.cells.push_back({std::to_string(p), 0});
        pieces.boundary.emplace_back();
        to_coarse.push_back(w.fine_to_coarse.at(w.pieces[p].second));
    }
    pieces.poset = w.poset;
    pieces.assignment = w.piece_element;
    const auto check = check_stratified_map(to_coarse, pieces, s.space);
    if (!check.ok) r.problems.push_back("forgetful map: " + check.reason);
    else
        for (std::size_t e = 0; e < w.elements.size(); ++e)
            if (check.induced->assignment[e] != w.elements[e].stratum)
                r.problems.push_back("element " + w.poset.label(e) + " records the wrong stratum");

    for (const auto& a : w.attachments) {
        const auto lo = w.elements.at(a.lower).stratum, hi = w.elements.at(a.upper).stratum;
        if (!s.space.poset.less(lo, hi) || !w.poset.less(a.lower, a.upper))
            r.problems.push_back("attachment " + w.poset.label(a.lower) + " -> " + w.poset.label(a.upper) +
                                 " is not order compatible");
    }
    for (const auto& st : w.strata)
        if (st.fiber.size() != st.elements.size())
            r.problems.push_back("stratum " + s.space.poset.label(st.element) + " has " +
                                 std::to_string(st.fiber.size()) + " fiber components over its representative but " +
                                 std::to_string(st.elements.size()) + " components");

    // Sampled points: barycenters, plus two skewed interior points of maximal simplices.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> piece_at;
    for (std::size_t p = 0; p < w.pieces.size(); ++p) piece_at[w.pieces[p]] = p;
    for (std::size_t i = 0; i < dom.size(); ++i) {
        const Simplex& rho = dom.simplex(i);
        const std::size_t m = rho.size();
        std::vector<std::vector<Rational>> weights{std::vector<Rational>(m, Rational(1, static_cast<long>(m)))};
        if (dom.cofaces_of(i).empty() && m > 1) {
            const long total = static_cast<long>(m * (m + 1) / 2);
            std::vector<Rational> up, down;
            for (std::size_t t = 0; t < m; ++t) {
                up.emplace_back(static_cast<long>(t + 1), total);
                down.emplace_back(static_cast<long>(m - t), total);
            }
            weights.push_back(up);
            weights.push_back(down);
        }
        for (const auto& wt : weights) {
            ++r.samples;
            const Point y = f.evaluate(rho, wt);
            const std::size_t c = w.fine.locate_cell(y);
            auto it = piece_at.find({i, c});
            if (it == piece_at.end()) {
                r.problems.push_back("no piece for " + rho.to_string() + " at " + point_text(y));
                continue;
            }
            const auto via_scaffold = w.elements[w.piece_element[it->second]].stratum;
            const auto direct = s.locate(y);
            if (via_scaffold != direct)
                r.problems.push_back("square fails at " + rho.to_string() + " over " + point_text(y) + ": " +
                                     s.space.poset.label(via_scaffold) + " vs " + s.space.poset.label(direct));
        }
    }
    r.ok = r.problems.empty();
    return r;
}

AuditReport fiber_constancy_audit(const PLMap& f, const CodomainStratification& s, std::size_t samples) {
    if (f.k() > 2 || s.k != f.k()) fail(ErrorKind::Structural, "audit needs k <= 2 and a matching stratification");
    AuditReport report;
    for (auto c : s.top_cells()) {
        AuditEntry entry;
        entry.stratum = s.space.poset.label(s.space.assignment[c]);
        for (auto& p : s.samples(c, samples)) {
            if (p) entry.samples.push_back(*p);
            else ++entry.failed_samples;
        }
        entry.counts.resize(entry.samples.size());
        parallel_for(entry.samples.size(),
                     [&](std::size_t i) { entry.counts[i] = fiber_components(f, entry.samples[i]).size(); });
        entry.constant = std::adjacent_find(entry.counts.begin(), entry.counts.end(), std::not_equal_to<>()) ==
                         entry.counts.end();
        report.ok = report.ok && entry.constant;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace plstrat

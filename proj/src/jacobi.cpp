#include "plstrat/jacobi.hpp"

#include "plstrat/errors.hpp"
#include "plstrat/geometry.hpp"
#include "plstrat/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace plstrat {

PLMap::PLMap(SimplicialComplex domain, int k, std::vector<Point> values)
    : domain_(std::move(domain)), k_(k), values_(std::move(values)) {
    if (k_ < 1) fail(ErrorKind::Structural, "target dimension must be positive");
    if (values_.size() != domain_.vertices().size())
        fail(ErrorKind::Structural, "expected one value per domain vertex");
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (values_[i].size() != static_cast<std::size_t>(k_))
            fail(ErrorKind::Structural,
                 "value of vertex " + std::to_string(domain_.vertices()[i]) + " has wrong length");
}

const Point& PLMap::value(Vertex v) const { return values_[domain_.vertex_index(v)]; }

std::vector<Point> PLMap::images(const Simplex& s) const {
    std::vector<Point> out;
    out.reserve(s.size());
    for (auto v : s) out.push_back(value(v));
    return out;
}

Point PLMap::barycenter_image(const Simplex& s) const {
    return evaluate(s, std::vector<Rational>(s.size(), Rational(1, static_cast<long>(s.size()))));
}

Point PLMap::evaluate(const Simplex& s, const std::vector<Rational>& weights) const {
    if (weights.size() != s.size()) fail(ErrorKind::Structural, "barycentric weight count mismatch");
    Point out(static_cast<std::size_t>(k_), Rational(0));
    for (std::size_t i = 0; i < s.size(); ++i) {
        const Point& p = value(s[i]);
        for (std::size_t r = 0; r < out.size(); ++r) out[r] += weights[i] * p[r];
    }
    return out;
}

void PLMap::set_symbolic_ties(bool on) {
    if (on && k_ != 1) fail(ErrorKind::Structural, "symbolic tie-breaking is only defined for k = 1");
    symbolic_ties_ = on;
}

int PLMap::compare_vertices(Vertex a, Vertex b) const {
    const Rational& x = value(a)[0];
    const Rational& y = value(b)[0];
    if (x != y) return x > y ? 1 : -1;
    if (!symbolic_ties_ || a == b) return 0;
    return a > b ? 1 : -1;
}

namespace {

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

bool ties_resolved(const PLMap& f) { return f.k() == 1 && f.symbolic_ties(); }

bool on_domain_boundary(const SimplicialComplex& k, SimplicialComplex::Index start) {
    const int n = k.dimension();
    std::set<SimplicialComplex::Index> seen{start};
    std::vector<SimplicialComplex::Index> frontier{start};
    while (!frontier.empty()) {
        auto c = frontier.back();
        frontier.pop_back();
        if (k.simplex(c).dim() == n - 1 && k.cofaces_of(c).size() == 1) return true;
        for (auto up : k.cofaces_of(c))
            if (seen.insert(up).second) frontier.push_back(up);
    }
    return false;
}

std::vector<Vertex> star_vertices(const SimplicialComplex& k, const Simplex& s) {
    std::set<Vertex> vs;
    for (const auto& tau : star(k, s))
        for (auto v : tau)
            if (!s.contains(v)) vs.insert(v);
    return {vs.begin(), vs.end()};
}

std::string witness_text(const std::vector<Vertex>& w) {
    std::string out;
    for (auto v : w) out += (out.empty() ? "" : ",") + std::to_string(v);
    return "{" + out + "}";
}

}  // namespace

GenericityReport check_generic(const PLMap& f) {
    const auto& dom = f.domain();
    GenericityReport report;
    const bool relaxed = ties_resolved(f);

    // G1, one slot per simplex so the report order is fixed.
    std::vector<char> bad(dom.size(), 0);
    if (!relaxed)
        parallel_for(dom.size(), [&](std::size_t i) {
            const Simplex& s = dom.simplex(i);
            if (s.dim() <= f.k() && s.dim() > 0) bad[i] = !affinely_independent(f.images(s));
        });
    for (std::size_t i = 0; i < dom.size(); ++i)
        if (bad[i]) report.violations.push_back({"G1", dom.simplex(i).vertices()});

    if (f.k() == 1 && !relaxed) {
        std::vector<std::size_t> order(dom.vertices().size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](auto a, auto b) { return f.values()[a][0] < f.values()[b][0]; });
        for (std::size_t i = 1; i < order.size(); ++i)
            if (f.values()[order[i - 1]][0] == f.values()[order[i]][0])
                report.violations.push_back(
                    {"G2", {dom.vertices()[order[i - 1]], dom.vertices()[order[i]]}});
    }

    if (!relaxed) {
        auto ridge = dom.of_dimension(f.k() - 1);
        std::vector<std::vector<GenericityViolation>> found(ridge.size());
        parallel_for(ridge.size(), [&](std::size_t r) {
            const Simplex& s = dom.simplex(ridge[r]);
            auto base = f.images(s);
            const SimplicialComplex lk = link(dom, s);
            for (auto v : lk.vertices()) {
                auto pts = base;
                pts.push_back(f.value(v));
                if (!affinely_independent(pts)) {
                    auto w = s.vertices();
                    w.push_back(v);
                    found[r].push_back({"G3", w});
                }
            }
        });
        for (auto& list : found)
            for (auto& v : list) report.violations.push_back(std::move(v));
    }
    report.passed = report.violations.empty();
    return report;
}

DirectionalLinks directional_links(const PLMap& f, const Simplex& s, const Point& u) {
    if (u.size() != static_cast<std::size_t>(f.k())) fail(ErrorKind::Structural, "direction has wrong length");
    if (std::all_of(u.begin(), u.end(), [](const Rational& r) { return r == 0; }))
        fail(ErrorKind::Structural, "direction must be nonzero");
    const auto& dom = f.domain();
    dom.index_of(s);
    const SimplicialComplex lk = link(dom, s);
    const Rational level = dot(f.barycenter_image(s), u);
    std::vector<Vertex> up, down;
    for (auto v : lk.vertices()) {
        int side = sign(dot(f.value(v), u) - level);
        if (side == 0 && ties_resolved(f) && s.dim() == 0) side = f.compare_vertices(v, s[0]) * sign(u[0]);
        if (side == 0)
            fail(ErrorKind::Genericity,
                 "link vertex " + std::to_string(v) + " is level with " + s.to_string());
        (side > 0 ? up : down).push_back(v);
    }
    return {lk.full_subcomplex(up), lk.full_subcomplex(down)};
}

Point image_normal(const PLMap& f, const Simplex& s) {
    const int k = f.k();
    if (s.dim() != k - 1)
        fail(ErrorKind::Structural, s.to_string() + " is not of dimension k-1 = " + std::to_string(k - 1));
    if (k == 1) return {Rational(1)};
    auto pts = f.images(s);
    if (!affinely_independent(pts)) fail(ErrorKind::Degeneracy, "image of " + s.to_string() + " is degenerate");
    if (k == 2) {
        const Point d = pts[1] - pts[0];
        return {-d[1], d[0]};
    }
    std::vector<Point> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) rows.push_back(pts[i] - pts[0]);
    return *orthogonal_vector(rows, static_cast<std::size_t>(k));
}

HVerdict h_verdict(const PLMap& f, const Simplex& s) {
    const Point u = image_normal(f, s);
    const auto links = directional_links(f, s, u);
    HVerdict v;
    v.upper_betti = reduced_betti(links.upper);
    v.lower_betti = reduced_betti(links.lower);
    const bool up = v.upper_betti.any_nonzero();
    const bool down = v.lower_betti.any_nonzero();
    if (up != down && !on_domain_boundary(f.domain(), f.domain().index_of(s)))
        fail(ErrorKind::InvariantBreach,
             "upper and lower link verdicts disagree at interior simplex " + s.to_string());
    v.critical = up || down;
    return v;
}

bool is_h_critical(const PLMap& f, const Simplex& s) { return h_verdict(f, s).critical; }

bool is_d_critical_at(const PLMap& f, const Simplex& s, const std::vector<Rational>& weights) {
    const auto& dom = f.domain();
    dom.index_of(s);
    if (s.dim() > f.k() - 1) fail(ErrorKind::Structural, "D-criticality needs dim <= k-1");
    if (weights.size() != s.size() ||
        std::any_of(weights.begin(), weights.end(), [](const Rational& w) { return w <= 0; }) ||
        std::accumulate(weights.begin(), weights.end(), Rational(0)) != 1)
        fail(ErrorKind::Structural, "weights must be positive and sum to one");
    const Point b = f.evaluate(s, weights);
    const std::size_t k = static_cast<std::size_t>(f.k());

    std::vector<Point> dirs;
    auto add = [&](Point d, Vertex v) {
        if (std::all_of(d.begin(), d.end(), [](const Rational& r) { return r == 0; })) {
            if (!(ties_resolved(f) && s.dim() == 0)) return;
            d = {Rational(f.compare_vertices(v, s[0]))};
        }
        dirs.push_back(std::move(d));
    };
    for (auto v : star_vertices(dom, s)) add(f.value(v) - b, v);
    for (auto w : s) {
        const Point d = f.value(w) - b;
        add(d, w);
        add(Rational(-1) * d, w);
    }
    if (dirs.empty()) return true;

    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(dirs.size()));
    for (std::size_t j = 0; j < dirs.size(); ++j)
        for (std::size_t r = 0; r < k; ++r) a[r][j] = dirs[j][r];
    for (std::size_t axis = 0; axis < k; ++axis)
        for (int sgn : {1, -1}) {
            std::vector<Rational> target(k, Rational(0));
            target[axis] = sgn;
            if (!nonnegative_solution(a, target)) return true;
        }
    return false;
}

bool is_d_critical(const PLMap& f, const Simplex& s) {
    return is_d_critical_at(f, s, std::vector<Rational>(s.size(), Rational(1, static_cast<long>(s.size()))));
}

std::optional<bool> is_l_critical_surface(const PLMap& f, const Simplex& v) {
    if (f.k() != 1 || f.domain().dimension() != 2 || v.dim() != 0) return std::nullopt;
    const SimplicialComplex lk = link(f.domain(), v);
    if (lk.dimension() != 1 || classify_low_dimensional(lk) != LinkVerdict::Sphere) return std::nullopt;
    const auto links = directional_links(f, v, {Rational(1)});
    auto single_arc = [](const SimplicialComplex& c) { return !c.empty() && c.components().size() == 1; };
    return !(single_arc(links.upper) && single_arc(links.lower));
}

std::string to_string(Notion n) {
    switch (n) {
        case Notion::H: return "H";
        case Notion::D: return "D";
        case Notion::L: return "L";
    }
    return "?";
}

Notion parse_notion(const std::string& text) {
    if (text == "H") return Notion::H;
    if (text == "D") return Notion::D;
    if (text == "L") return Notion::L;
    fail(ErrorKind::Parse, "unknown criticality notion '" + text + "'");
}

CriticalityVerdict criticality(const PLMap& f, const Simplex& s) {
    CriticalityVerdict c;
    c.simplex = s;
    auto h = h_verdict(f, s);
    c.h_critical = h.critical;
    c.upper_betti = std::move(h.upper_betti);
    c.lower_betti = std::move(h.lower_betti);
    c.d_critical = is_d_critical(f, s);
    if (f.k() == 1) c.l_critical = is_l_critical_surface(f, s);
    return c;
}

JacobiSet jacobi_set(const PLMap& f, Notion notion) {
    const auto report = check_generic(f);
    if (!report.passed) {
        const auto& v = report.violations.front();
        fail(ErrorKind::Genericity, "map is not generic: " + v.rule + " fails at " + witness_text(v.witness));
    }
    const auto& dom = f.domain();
    if (notion == Notion::L && (f.k() != 1 || dom.dimension() != 2))
        fail(ErrorKind::Structural, "L-criticality is implemented for surfaces with k = 1 only");

    JacobiSet j;
    j.notion = notion;
    const auto ridge = dom.of_dimension(f.k() - 1);
    j.verdicts.resize(ridge.size());
    parallel_for(ridge.size(), [&](std::size_t i) { j.verdicts[i] = criticality(f, dom.simplex(ridge[i])); });

    std::vector<Simplex> critical;
    for (const auto& v : j.verdicts) {
        bool hit = false;
        switch (notion) {
            case Notion::H: hit = v.h_critical; break;
            case Notion::D: hit = v.d_critical; break;
            case Notion::L:
                if (!v.l_critical)
                    fail(ErrorKind::Structural, "L-criticality undecided at " + v.simplex.to_string());
                hit = *v.l_critical;
                break;
        }
        if (hit) critical.push_back(v.simplex);
    }
    j.complex = SimplicialComplex::from_facets(critical);
    return j;
}

StratifiedSpace domain_stratification(const PLMap& f, const JacobiSet& j) {
    const auto& dom = f.domain();
    if (dom.empty()) fail(ErrorKind::EmptyInput, "empty domain");
    const std::size_t n = dom.size();

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<bool> in_j(n);
    for (std::size_t i = 0; i < n; ++i) in_j[i] = j.complex.contains(dom.simplex(i));
    for (std::size_t i = 0; i < n; ++i) {
        if (in_j[i]) continue;
        for (auto face : dom.faces_of(i))
            if (!in_j[face]) parent[root(face)] = root(i);
    }

    // Components numbered by their first simplex in domain order.
    std::vector<std::size_t> comp_of(n, n);
    std::vector<std::size_t> comp_id_of_root(n, n);
    std::size_t comps = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (in_j[i]) continue;
        auto r = root(i);
        if (comp_id_of_root[r] == n) comp_id_of_root[r] = comps++;
        comp_of[i] = comp_id_of_root[r];
    }
    std::vector<std::string> comp_labels;
    for (std::size_t c = 0; c < comps; ++c) comp_labels.push_back("U" + std::to_string(c));

    Poset base;
    if (!j.complex.empty()) base = native_stratification(j.complex).poset;
    std::set<std::pair<Poset::Element, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        if (in_j[i]) continue;
        // Faces of a complement simplex that lie in J are in the closure of its component.
        std::set<std::size_t> below;
        std::vector<std::size_t> frontier{i};
        while (!frontier.empty()) {
            auto c = frontier.back();
            frontier.pop_back();
            for (auto face : dom.faces_of(c))
                if (below.insert(face).second) frontier.push_back(face);
        }
        for (auto face : below)
            if (in_j[face]) pairs.emplace(*j.complex.find(dom.simplex(face)), comp_of[i]);
    }
    StratifiedSpace s;
    s.poset = wedge_extend(base, comp_labels, {pairs.begin(), pairs.end()});
    for (std::size_t i = 0; i < n; ++i) {
        s.cells.push_back({dom.simplex(i).to_string(), dom.simplex(i).dim()});
        s.boundary.push_back(dom.faces_of(i));
        s.assignment.push_back(in_j[i] ? *j.complex.find(dom.simplex(i)) : base.size() + comp_of[i]);
    }
    return s;
}

}  // namespace plstrat

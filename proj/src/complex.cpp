#include "plstrat/complex.hpp"

#include "plstrat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace plstrat {

namespace {

void require_strict(const std::vector<Vertex>& v) {
    if (v.empty()) fail(ErrorKind::Structural, "a simplex needs at least one vertex");
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i])
            fail(ErrorKind::Structural, "simplex vertices must be strictly increasing");
}

}  // namespace

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    require_strict(vertices_);
}

Simplex::Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

Simplex Simplex::from_unsorted(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    return Simplex(std::move(vertices));
}

bool Simplex::contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

bool Simplex::disjoint_from(const Simplex& other) const {
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a;
        else ++b;
    }
    return true;
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (vertices_.size() < 2) return out;
    for (std::size_t skip = 0; skip < vertices_.size(); ++skip) {
        std::vector<Vertex> f;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (i != skip) f.push_back(vertices_[i]);
        out.emplace_back(std::move(f));
    }
    return out;
}

std::optional<Simplex> Simplex::minus(const Simplex& other) const {
    std::vector<Vertex> rest;
    std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(rest));
    if (rest.empty()) return std::nullopt;
    return Simplex(std::move(rest));
}

Simplex Simplex::join(const Simplex& other) const {
    std::vector<Vertex> all;
    std::merge(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
               std::back_inserter(all));
    return Simplex(std::move(all));
}

std::string Simplex::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vertices_[i]);
    }
    return s + "]";
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                  b.vertices_.begin(), b.vertices_.end());
}

SimplicialComplex SimplicialComplex::from_closed(std::vector<Simplex> simplices) {
    SimplicialComplex k;
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    k.simplices_ = std::move(simplices);
    for (Index i = 0; i < k.simplices_.size(); ++i) {
        k.index_.emplace(k.simplices_[i], i);
        k.dimension_ = std::max(k.dimension_, k.simplices_[i].dim());
        if (k.simplices_[i].dim() == 0) k.vertices_.push_back(k.simplices_[i][0]);
    }
    k.faces_.assign(k.simplices_.size(), {});
    k.cofaces_.assign(k.simplices_.size(), {});
    for (Index i = 0; i < k.simplices_.size(); ++i) {
        for (const auto& f : k.simplices_[i].facets()) {
            auto it = k.index_.find(f);
            if (it == k.index_.end())
                fail(ErrorKind::Structural, "simplex set is not face-closed: missing " + f.to_string());
            k.faces_[i].push_back(it->second);
            k.cofaces_[it->second].push_back(i);
        }
        std::sort(k.faces_[i].begin(), k.faces_[i].end());
    }
    return k;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets) {
    std::set<Simplex> all;
    for (const auto& f : facets) {
        const auto& v = f.vertices();
        const std::size_t n = v.size();
        if (n > 20) fail(ErrorKind::Structural, "simplex dimension too large");
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<Vertex> sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) sub.push_back(v[i]);
            all.emplace(std::move(sub));
        }
    }
    return from_closed(std::vector<Simplex>(all.begin(), all.end()));
}

SimplicialComplex SimplicialComplex::from_facets(
    std::initializer_list<std::initializer_list<Vertex>> facets) {
    std::vector<Simplex> fs;
    for (auto f : facets) fs.push_back(Simplex::from_unsorted(std::vector<Vertex>(f)));
    return from_facets(fs);
}

std::size_t SimplicialComplex::vertex_index(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v)
        fail(ErrorKind::NotAMember, "vertex " + std::to_string(v) + " is not in the complex");
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::optional<SimplicialComplex::Index> SimplicialComplex::find(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

SimplicialComplex::Index SimplicialComplex::index_of(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end())
        fail(ErrorKind::NotAMember, "simplex " + s.to_string() + " is not in the complex");
    return it->second;
}

std::vector<SimplicialComplex::Index> SimplicialComplex::of_dimension(int d) const {
    std::vector<Index> out;
    for (Index i = 0; i < simplices_.size(); ++i)
        if (simplices_[i].dim() == d) out.push_back(i);
    return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f(static_cast<std::size_t>(dimension_ + 1), 0);
    for (const auto& s : simplices_) ++f[static_cast<std::size_t>(s.dim())];
    return f;
}

std::vector<Simplex> SimplicialComplex::facets() const {
    std::vector<Simplex> out;
    for (Index i = 0; i < simplices_.size(); ++i)
        if (cofaces_[i].empty()) out.push_back(simplices_[i]);
    return out;
}

bool SimplicialComplex::is_pure() const {
    for (Index i = 0; i < simplices_.size(); ++i)
        if (cofaces_[i].empty() && simplices_[i].dim() != dimension_) return false;
    return true;
}

std::vector<SimplicialComplex::Index> SimplicialComplex::top_cofaces(Index i) const {
    std::vector<Index> out;
    std::vector<Index> frontier{i};
    std::set<Index> seen{i};
    while (!frontier.empty()) {
        Index c = frontier.back();
        frontier.pop_back();
        if (cofaces_[c].empty()) out.push_back(c);
        for (Index up : cofaces_[c])
            if (seen.insert(up).second) frontier.push_back(up);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long SimplicialComplex::euler_characteristic() const {
    long chi = 0;
    for (const auto& s : simplices_) chi += (s.dim() % 2 == 0) ? 1 : -1;
    return chi;
}

SimplicialComplex SimplicialComplex::skeleton(int d) const {
    std::vector<Simplex> keep;
    for (const auto& s : simplices_)
        if (s.dim() <= d) keep.push_back(s);
    return from_closed(std::move(keep));
}

SimplicialComplex SimplicialComplex::full_subcomplex(const std::vector<Vertex>& keep) const {
    std::vector<Vertex> sorted = keep;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Simplex> out;
    for (const auto& s : simplices_)
        if (std::includes(sorted.begin(), sorted.end(), s.begin(), s.end())) out.push_back(s);
    return from_closed(std::move(out));
}

std::vector<std::vector<Vertex>> SimplicialComplex::components() const {
    std::vector<std::size_t> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& s : simplices_) {
        if (s.dim() != 1) continue;
        auto a = root(vertex_index(s[0]));
        auto b = root(vertex_index(s[1]));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<std::size_t, std::vector<Vertex>> groups;
    for (std::size_t i = 0; i < vertices_.size(); ++i) groups[root(i)].push_back(vertices_[i]);
    std::vector<std::vector<Vertex>> out;
    for (auto& [r, vs] : groups) out.push_back(std::move(vs));
    return out;
}

std::vector<Simplex> star(const SimplicialComplex& k, const Simplex& sigma) {
    auto start = k.index_of(sigma);
    std::set<SimplicialComplex::Index> seen{start};
    std::vector<SimplicialComplex::Index> frontier{start};
    while (!frontier.empty()) {
        auto c = frontier.back();
        frontier.pop_back();
        for (auto up : k.cofaces_of(c))
            if (seen.insert(up).second) frontier.push_back(up);
    }
    std::vector<Simplex> out;
    for (auto i : seen) out.push_back(k.simplex(i));
    return out;
}

SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma) {
    std::vector<Simplex> parts;
    for (const auto& tau : star(k, sigma))
        if (auto rest = tau.minus(sigma)) parts.push_back(*rest);
    return SimplicialComplex::from_facets(parts);
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
    std::vector<Vertex> common;
    std::set_intersection(k.vertices().begin(), k.vertices().end(), l.vertices().begin(),
                          l.vertices().end(), std::back_inserter(common));
    if (!common.empty())
        fail(ErrorKind::Disjointness, "join factors share vertex " + std::to_string(common.front()));
    if (k.empty()) return l;
    if (l.empty()) return k;
    std::vector<Simplex> facets;
    for (const auto& a : k.facets())
        for (const auto& b : l.facets()) facets.push_back(a.join(b));
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex simplex_boundary(int n) {
    std::vector<Vertex> all(static_cast<std::size_t>(n + 1));
    std::iota(all.begin(), all.end(), 0);
    return SimplicialComplex::from_facets(Simplex(all).facets());
}

SimplicialComplex subdivide_edge(const SimplicialComplex& k, const Simplex& edge, Vertex fresh) {
    if (edge.dim() != 1) fail(ErrorKind::Structural, "subdivide_edge needs an edge");
    k.index_of(edge);
    if (std::binary_search(k.vertices().begin(), k.vertices().end(), fresh))
        fail(ErrorKind::Structural, "subdivision vertex already present");
    std::vector<Simplex> facets;
    Simplex w{fresh};
    for (const auto& f : k.facets()) {
        if (!edge.is_face_of(f)) {
            facets.push_back(f);
            continue;
        }
        facets.push_back(f.minus(Simplex{edge[0]})->join(w));
        facets.push_back(f.minus(Simplex{edge[1]})->join(w));
    }
    return SimplicialComplex::from_facets(facets);
}

StratifiedSpace native_stratification(const SimplicialComplex& k) {
    if (k.empty()) fail(ErrorKind::EmptyInput, "native stratification of the empty complex");
    StratifiedSpace s;
    std::vector<std::string> labels;
    Poset::Relation rel;
    for (SimplicialComplex::Index i = 0; i < k.size(); ++i) {
        labels.push_back(k.simplex(i).to_string());
        s.cells.push_back({labels.back(), k.simplex(i).dim()});
        s.boundary.push_back(k.faces_of(i));
        for (auto f : k.faces_of(i)) rel.emplace_back(f, i);
    }
    s.poset = Poset::from_relations(std::move(labels), rel);
    s.assignment.resize(k.size());
    std::iota(s.assignment.begin(), s.assignment.end(), 0);
    return s;
}

std::vector<int> skeletal_filtration(const SimplicialComplex& k) {
    if (k.empty()) fail(ErrorKind::EmptyInput, "skeletal filtration of the empty complex");
    std::vector<int> dims;
    for (const auto& s : k.simplices()) dims.push_back(s.dim());
    return dims;
}

std::string to_string(LinkVerdict v) {
    switch (v) {
    case LinkVerdict::Sphere: return "sphere";
    case LinkVerdict::Disk: return "disk";
    case LinkVerdict::NotManifold: return "not-sphere";
    case LinkVerdict::Undecided: return "undecided";
    }
    return "undecided";
}

bool ManifoldReport::has_bad_link() const {
    return std::any_of(link_checks.begin(), link_checks.end(),
                       [](const LinkCheck& c) { return c.verdict == LinkVerdict::NotManifold; });
}

namespace {

std::size_t vertex_degree(const SimplicialComplex& k, Vertex v) {
    return k.cofaces_of(k.index_of(Simplex{v})).size();
}

}  // namespace

LinkVerdict classify_low_dimensional(const SimplicialComplex& k) {
    if (k.empty()) return LinkVerdict::Sphere;
    if (!k.is_pure()) return LinkVerdict::NotManifold;
    const int d = k.dimension();
    if (d == 0) {
        if (k.vertices().size() == 2) return LinkVerdict::Sphere;
        if (k.vertices().size() == 1) return LinkVerdict::Disk;
        return LinkVerdict::NotManifold;
    }
    if (d > 2) return LinkVerdict::Undecided;
    if (k.components().size() != 1) return LinkVerdict::NotManifold;
    if (d == 1) {
        std::size_t ends = 0;
        for (auto v : k.vertices()) {
            auto deg = vertex_degree(k, v);
            if (deg == 1) ++ends;
            else if (deg != 2) return LinkVerdict::NotManifold;
        }
        if (ends == 0) return LinkVerdict::Sphere;
        return ends == 2 ? LinkVerdict::Disk : LinkVerdict::NotManifold;
    }
    // d == 2: closed or bounded surface, then Euler characteristic.
    std::vector<Simplex> boundary_edges;
    for (auto e : k.of_dimension(1)) {
        auto n = k.cofaces_of(e).size();
        if (n == 1) boundary_edges.push_back(k.simplex(e));
        else if (n != 2) return LinkVerdict::NotManifold;
    }
    for (auto v : k.vertices()) {
        auto lv = classify_low_dimensional(link(k, Simplex{v}));
        if (lv != LinkVerdict::Sphere && lv != LinkVerdict::Disk) return LinkVerdict::NotManifold;
    }
    const long chi = k.euler_characteristic();
    if (boundary_edges.empty()) return chi == 2 ? LinkVerdict::Sphere : LinkVerdict::NotManifold;
    auto rim = SimplicialComplex::from_facets(boundary_edges);
    if (classify_low_dimensional(rim) != LinkVerdict::Sphere) return LinkVerdict::NotManifold;
    return chi == 1 ? LinkVerdict::Disk : LinkVerdict::NotManifold;
}

std::vector<bool> boundary_simplices(const SimplicialComplex& k) {
    std::vector<bool> on(k.size(), false);
    const int n = k.dimension();
    if (n < 1) return on;
    for (auto i : k.of_dimension(n - 1)) {
        if (k.cofaces_of(i).size() != 1) continue;
        std::vector<SimplicialComplex::Index> stack{i};
        while (!stack.empty()) {
            auto c = stack.back();
            stack.pop_back();
            if (on[c]) continue;
            on[c] = true;
            for (auto f : k.faces_of(c)) stack.push_back(f);
        }
    }
    return on;
}

ManifoldReport manifold_check(const SimplicialComplex& k) {
    if (k.empty()) fail(ErrorKind::EmptyInput, "manifold check of the empty complex");
    ManifoldReport report;
    const int n = k.dimension();
    report.dimension = n;
    report.is_pure = k.is_pure();
    if (!report.is_pure) return report;

    bool closed = true, bounded = true;
    for (auto i : k.of_dimension(n - 1)) {
        auto c = k.cofaces_of(i).size();
        if (c != 2) closed = false;
        if (c != 1 && c != 2) bounded = false;
    }
    auto on_boundary = boundary_simplices(k);
    bool links_connected = true;
    for (SimplicialComplex::Index i = 0; i < k.size(); ++i) {
        const Simplex& s = k.simplex(i);
        if (s.dim() >= n) continue;
        auto lk = link(k, s);
        const int link_dim = n - s.dim() - 1;
        if (s.dim() <= n - 2 && lk.components().size() != 1) links_connected = false;
        LinkVerdict v = LinkVerdict::Undecided;
        if (link_dim <= 2) {
            v = classify_low_dimensional(lk);
            LinkVerdict expected = on_boundary[i] ? LinkVerdict::Disk : LinkVerdict::Sphere;
            if (v != expected && v != LinkVerdict::Undecided) v = LinkVerdict::NotManifold;
        }
        report.link_checks.push_back({s, link_dim, v});
    }
    report.is_weak_pseudomanifold = closed && links_connected;
    report.is_weak_pseudomanifold_with_boundary = bounded && links_connected;
    return report;
}

}  // namespace plstrat

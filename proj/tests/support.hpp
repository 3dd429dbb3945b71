#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include "plstrat/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing_support {

using namespace plstrat;

inline std::filesystem::path golden(const std::string& name) {
    return std::filesystem::path(PLSTRAT_DATA_DIR) / "golden" / name;
}

inline PLMap golden_map(const std::string& name) {
    return load_map(golden(name) / "complex.json", golden(name) / "values.json");
}

inline SingularLocus golden_locus(const std::string& name) { return load_locus(golden(name) / "locus.json"); }

inline const std::vector<std::string>& golden_maps() {
    static const std::vector<std::string> names{"octahedron",  "torus",      "torus_patch",
                                                "tetrahedron", "suspension", "sphere3_pentagon"};
    return names;
}

inline const std::vector<std::string>& golden_loci() {
    static const std::vector<std::string> names{"cusps_crossing", "convex_loop"};
    return names;
}

inline std::mt19937_64 rng(std::uint64_t salt) {
    std::uint64_t seed = 20240611;
    if (const char* s = std::getenv("PLSTRAT_SEED")) seed = std::strtoull(s, nullptr, 10);
    return std::mt19937_64(seed ^ (salt * 0x9e3779b97f4a7c15ULL));
}

inline int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

// ---------------------------------------------------------------- complexes

inline SimplicialComplex octahedron() {
    return SimplicialComplex::from_facets(
        {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4}, {1, 2, 5}, {2, 3, 5}, {3, 4, 5}, {1, 4, 5}});
}

/// Facets of an nu x nv grid torus with vertex ids permuted by `perm`.
inline std::vector<Simplex> torus_facets(int nu, int nv, const std::vector<Vertex>& perm) {
    auto id = [&](int i, int j) { return perm[static_cast<std::size_t>(((i % nu) * nv) + (j % nv))]; };
    std::vector<Simplex> out;
    for (int i = 0; i < nu; ++i)
        for (int j = 0; j < nv; ++j) {
            out.push_back(Simplex::from_unsorted({id(i, j), id(i + 1, j), id(i + 1, j + 1)}));
            out.push_back(Simplex::from_unsorted({id(i, j), id(i + 1, j + 1), id(i, j + 1)}));
        }
    return out;
}

/// A closed surface with at most `max_vertices` vertices: a grid torus, or
/// an octahedron or tetrahedron boundary refined by random edge splits.
inline SimplicialComplex random_surface(std::mt19937_64& g, std::size_t max_vertices = 40) {
    if (uniform(g, 0, 1) == 0) {
        const int nu = uniform(g, 3, 6), nv = uniform(g, 3, 6);
        std::vector<Vertex> perm(static_cast<std::size_t>(nu * nv));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), g);
        return SimplicialComplex::from_facets(torus_facets(nu, nv, perm));
    }
    SimplicialComplex k = uniform(g, 0, 1) ? octahedron() : simplex_boundary(3);
    const int splits = uniform(g, 0, static_cast<int>(max_vertices) - 6);
    for (int s = 0; s < splits && k.vertices().size() < max_vertices; ++s) {
        const auto edges = k.of_dimension(1);
        const auto& e = k.simplex(edges[static_cast<std::size_t>(uniform(g, 0, static_cast<int>(edges.size()) - 1))]);
        k = subdivide_edge(k, e, k.vertices().back() + 1);
    }
    return k;
}

/// Random values with coordinates in [-range, range]; resampled until generic.
inline PLMap random_generic_map(std::mt19937_64& g, const SimplicialComplex& k, int dim, int range = 1000) {
    for (;;) {
        std::vector<Point> values;
        for (std::size_t i = 0; i < k.vertices().size(); ++i) {
            Point p;
            for (int c = 0; c < dim; ++c) p.emplace_back(uniform(g, -range, range), uniform(g, 1, 7));
            values.push_back(p);
        }
        PLMap f(k, dim, values);
        if (check_generic(f).passed) return f;
    }
}

/// Random complex with at most `max_simplices` simplices on up to 7 vertices.
inline SimplicialComplex random_complex(std::mt19937_64& g, std::size_t max_simplices = 30) {
    std::vector<Simplex> facets;
    SimplicialComplex k;
    for (int attempt = 0; attempt < 40; ++attempt) {
        const int size = uniform(g, 1, 4);
        std::set<Vertex> vs;
        while (static_cast<int>(vs.size()) < size) vs.insert(uniform(g, 0, 6));
        facets.push_back(Simplex(std::vector<Vertex>(vs.begin(), vs.end())));
        auto next = SimplicialComplex::from_facets(facets);
        if (next.size() > max_simplices) {
            facets.pop_back();
            continue;
        }
        k = next;
    }
    return k;
}

// ------------------------------------------------------------- Z/2 oracle

/// Rank over Z/2 by textbook row reduction on a dense 0/1 matrix.
inline std::size_t naive_rank(std::vector<std::vector<int>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && m[r][c])
                for (std::size_t j = 0; j < cols; ++j) m[r][j] ^= m[rank][j];
        ++rank;
    }
    return rank;
}

/// Reduced Betti numbers from degree -1, computed from vertex tuples only.
inline std::vector<std::size_t> naive_reduced_betti(const SimplicialComplex& k) {
    std::map<int, std::vector<std::vector<Vertex>>> by_dim;
    by_dim[-1].push_back({});
    for (const auto& s : k.simplices()) by_dim[s.dim()].push_back(s.vertices());
    const int top = std::max(k.dimension(), -1);
    std::vector<std::size_t> rank(static_cast<std::size_t>(top + 3), 0);  // rank of d_d at index d+1
    for (int d = 0; d <= top; ++d) {
        const auto& lo = by_dim[d - 1];
        const auto& hi = by_dim[d];
        std::vector<std::vector<int>> m(lo.size(), std::vector<int>(hi.size(), 0));
        for (std::size_t c = 0; c < hi.size(); ++c)
            for (std::size_t drop = 0; drop < hi[c].size(); ++drop) {
                auto face = hi[c];
                face.erase(face.begin() + static_cast<long>(drop));
                const auto r = std::find(lo.begin(), lo.end(), face) - lo.begin();
                m[static_cast<std::size_t>(r)][c] ^= 1;
            }
        rank[static_cast<std::size_t>(d + 1)] = naive_rank(m);
    }
    std::vector<std::size_t> betti;
    for (int d = -1; d <= top; ++d) {
        const std::size_t n = by_dim[d].size();
        const std::size_t kernel = n - (d >= 0 ? rank[static_cast<std::size_t>(d + 1)] : 0);
        betti.push_back(kernel - rank[static_cast<std::size_t>(d + 2)]);
    }
    return betti;
}

// ---------------------------------------------------- vertex-link oracle

/// For a vertex of a closed surface with k = 1: the link cycle in cyclic
/// order and the number of sign changes of f around it.
struct LinkPattern {
    std::size_t up = 0, down = 0, sign_changes = 0;
};

inline LinkPattern link_pattern(const PLMap& f, Vertex v) {
    std::map<Vertex, std::vector<Vertex>> adj;
    for (const auto& s : f.domain().simplices()) {
        if (s.dim() != 2 || !s.contains(v)) continue;
        std::vector<Vertex> other;
        for (auto w : s)
            if (w != v) other.push_back(w);
        adj[other[0]].push_back(other[1]);
        adj[other[1]].push_back(other[0]);
    }
    std::vector<Vertex> cycle{adj.begin()->first};
    Vertex prev = cycle[0], cur = adj.begin()->second[0];
    while (cur != cycle[0]) {
        cycle.push_back(cur);
        const auto& n = adj[cur];
        const Vertex next = n[0] == prev ? n[1] : n[0];
        prev = cur;
        cur = next;
    }
    LinkPattern p;
    const Rational& x = f.value(v)[0];
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const bool a = f.value(cycle[i])[0] > x;
        const bool b = f.value(cycle[(i + 1) % cycle.size()])[0] > x;
        (a ? p.up : p.down) += 1;
        if (a != b) ++p.sign_changes;
    }
    return p;
}

}  // namespace testing_support

#pragma once

#include "plstrat/poset.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace plstrat {

using Vertex = std::int64_t;

/// A simplex as a strictly increasing tuple of vertex labels.
class Simplex {
public:
    Simplex() = default;
    /// Requires a strictly increasing, nonempty vertex list.
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices);

    /// Sorts first; duplicate labels are still rejected.
    static Simplex from_unsorted(std::vector<Vertex> vertices);

    int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }
    auto begin() const noexcept { return vertices_.begin(); }
    auto end() const noexcept { return vertices_.end(); }

    bool contains(Vertex v) const;
    bool is_face_of(const Simplex& other) const;
    bool disjoint_from(const Simplex& other) const;
    /// Facets of this simplex (empty for a vertex).
    std::vector<Simplex> facets() const;
    /// Vertices of `this` minus those of `other`; nullopt if nothing remains.
    std::optional<Simplex> minus(const Simplex& other) const;
    Simplex join(const Simplex& other) const;

    std::string to_string() const;

    /// Dimension first, then lexicographic.
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);
    friend bool operator==(const Simplex& a, const Simplex& b) = default;

private:
    std::vector<Vertex> vertices_;
};

/// Finite abstract simplicial complex, immutable after construction.
/// Simplices are stored sorted by dimension and then lexicographically.
class SimplicialComplex {
public:
    using Index = std::size_t;

    SimplicialComplex() = default;

    /// Face closure of the given simplices.
    static SimplicialComplex from_facets(const std::vector<Simplex>& facets);
    static SimplicialComplex from_facets(std::initializer_list<std::initializer_list<Vertex>> facets);

    bool empty() const noexcept { return simplices_.empty(); }
    /// -1 for the empty complex.
    int dimension() const noexcept { return dimension_; }
    std::size_t size() const noexcept { return simplices_.size(); }

    const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
    const Simplex& simplex(Index i) const { return simplices_.at(i); }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    /// Position of v in vertices().
    std::size_t vertex_index(Vertex v) const;

    bool contains(const Simplex& s) const { return index_.count(s) > 0; }
    std::optional<Index> find(const Simplex& s) const;
    /// Like find(), raising a not-a-member error.
    Index index_of(const Simplex& s) const;

    /// Simplices of exactly dimension d.
    std::vector<Index> of_dimension(int d) const;
    std::vector<std::size_t> f_vector() const;
    /// Maximal simplices.
    std::vector<Simplex> facets() const;
    bool is_pure() const;

    /// Immediate faces (codimension one) and cofaces (dimension one up).
    const std::vector<Index>& faces_of(Index i) const { return faces_.at(i); }
    const std::vector<Index>& cofaces_of(Index i) const { return cofaces_.at(i); }

    /// Top-dimensional simplices containing simplex i.
    std::vector<Index> top_cofaces(Index i) const;

    long euler_characteristic() const;
    SimplicialComplex skeleton(int d) const;
    /// Subcomplex of simplices whose vertices all lie in `keep`.
    SimplicialComplex full_subcomplex(const std::vector<Vertex>& keep) const;
    /// Connected components, each given as a sorted vertex list.
    std::vector<std::vector<Vertex>> components() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.simplices_ == b.simplices_;
    }

private:
    static SimplicialComplex from_closed(std::vector<Simplex> simplices);

    std::vector<Simplex> simplices_;
    std::map<Simplex, Index> index_;
    std::vector<Vertex> vertices_;
    std::vector<std::vector<Index>> faces_;
    std::vector<std::vector<Index>> cofaces_;
    int dimension_ = -1;
};

/// {tau in K : sigma is a face of tau}, sigma included.
std::vector<Simplex> star(const SimplicialComplex& k, const Simplex& sigma);

/// {tau in K : tau and sigma disjoint, tau u sigma in K}.
SimplicialComplex link(const SimplicialComplex& k, const Simplex& sigma);

/// Simplicial join; vertex labels must be disjoint.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);

/// Boundary complex of the standard simplex on vertices 0..n.
SimplicialComplex simplex_boundary(int n);

/// Stellar subdivision of one edge at a fresh vertex.
SimplicialComplex subdivide_edge(const SimplicialComplex& k, const Simplex& edge, Vertex fresh);

/// The native stratification: the face poset of K with every simplex
/// assigned to itself. Poset elements follow K's simplex order.
StratifiedSpace native_stratification(const SimplicialComplex& k);

/// dim: Nat(K) -> N0, as a per-element list.
std::vector<int> skeletal_filtration(const SimplicialComplex& k);

enum class LinkVerdict { Sphere, Disk, NotManifold, Undecided };

std::string to_string(LinkVerdict v);

struct LinkCheck {
    Simplex simplex;
    int link_dim = 0;
    LinkVerdict verdict = LinkVerdict::Undecided;
};

struct ManifoldReport {
    int dimension = -1;
    /// Non-pure complexes get no further checks and fail both tests below.
    bool is_pure = false;
    /// Every (n-1)-simplex lies in exactly two n-simplices and all links of
    /// simplices of dimension <= n-2 are connected.
    bool is_weak_pseudomanifold = false;
    /// Same, but (n-1)-simplices may lie in one n-simplex (boundary).
    bool is_weak_pseudomanifold_with_boundary = false;
    std::vector<LinkCheck> link_checks;

    bool has_bad_link() const;
};

/// Weak manifold test plus sphere/disk recognition for links of dimension
/// at most two; higher-dimensional links are reported as undecided.
/// Throws on the empty complex.
ManifoldReport manifold_check(const SimplicialComplex& k);

/// Classifies a complex of dimension <= 2 as sphere, disk, or neither.
LinkVerdict classify_low_dimensional(const SimplicialComplex& k);

/// Simplices of K lying in its boundary: faces of (n-1)-simplices that have
/// exactly one n-dimensional coface.
std::vector<bool> boundary_simplices(const SimplicialComplex& k);

}  // namespace plstrat

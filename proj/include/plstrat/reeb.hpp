#pragma once

#include "plstrat/arrangement.hpp"
#include "plstrat/jacobi.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plstrat {

/// One connected component of f^{-1}(y).
struct FiberComponent {
    /// Top-dimensional domain simplices meeting the component, sorted.
    std::vector<SimplicialComplex::Index> support;
    Point level;
};

/// Components of f^{-1}(y), ordered by their first support simplex. Two
/// simplices are joined when they share a face that meets the fiber.
std::vector<FiberComponent> fiber_components(const PLMap& f, const Point& y);

struct ReebGraph {
    struct Node {
        Rational level;
        std::vector<SimplicialComplex::Index> support;
        /// Jacobi vertices lying in this level-set component.
        std::vector<Vertex> critical_vertices;
    };
    struct Edge {
        std::size_t lower = 0, upper = 0;
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;

    std::size_t connected_components() const;
    /// E - V + C.
    long cycle_rank() const;
};

/// Reeb graph of a k = 1 map: level-set components at every vertex value
/// joined through the slabs between consecutive values, then regular nodes
/// of degree two are contracted. Critical vertices come from the Jacobi
/// set under `notion`.
ReebGraph reeb_graph(const PLMap& f, Notion notion = Notion::H);

/// Stratified stand-in for the Reeb space over a codomain stratification.
struct ReebScaffold {
    struct Stratum {
        Poset::Element element;  // in the codomain poset
        Point representative;
        /// Fiber components over the representative point.
        std::vector<FiberComponent> fiber;
        /// Connected components of f^{-1}(stratum); one scaffold element each.
        std::vector<std::size_t> elements;
    };
    struct Element {
        Poset::Element stratum;  // forgetful map to the codomain poset
        std::size_t component = 0;
        std::vector<SimplicialComplex::Index> support;  // domain simplices of any dimension
    };
    struct Attachment {
        std::size_t lower = 0, upper = 0;  // scaffold elements
    };

    std::vector<Stratum> strata;  // in codomain poset order
    std::vector<Element> elements;
    std::vector<Attachment> attachments;
    Poset poset;  // one element per scaffold element, same order

    /// Carrier for sampled checks: the fine cell decomposition of R^k cut by
    /// the images of all domain faces, and the scaffold element of each
    /// (domain simplex, fine cell) piece.
    CodomainStratification fine;
    std::vector<std::size_t> fine_to_coarse;  // fine cell -> coarse cell
    std::vector<std::pair<SimplicialComplex::Index, std::size_t>> pieces;
    std::vector<std::size_t> piece_element;
};

/// Components of f^{-1}(A) for every stratum A of `s`, computed from the
/// pieces (open simplex, fine cell); relations come from piece closures.
/// Raises a degeneracy error when a component over a stratum attaches to
/// zero or several components over a stratum in its closure.
ReebScaffold reeb_scaffold(const PLMap& f, const CodomainStratification& s);

struct SteinReport {
    bool ok = false;
    std::size_t samples = 0;
    std::vector<std::string> problems;
};

/// Verifies that forgetting components is a stratified map, that every
/// attachment is order-compatible, that fiber counts over representatives
/// match component counts, and that stratum(g(q(x))) == stratum(f(x)) at
/// sampled domain points.
SteinReport check_stein_square(const PLMap& f, const ReebScaffold& w, const CodomainStratification& s);

struct AuditEntry {
    std::string stratum;
    std::vector<Point> samples;
    std::vector<std::size_t> counts;
    bool constant = true;
    std::size_t failed_samples = 0;
};

struct AuditReport {
    bool ok = true;
    std::vector<AuditEntry> entries;
};

/// Fiber component counts at `samples` interior points of every open top
/// stratum of `s`.
AuditReport fiber_constancy_audit(const PLMap& f, const CodomainStratification& s, std::size_t samples);

}  // namespace plstrat

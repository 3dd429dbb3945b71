#pragma once

#include "plstrat/geometry.hpp"
#include "plstrat/jacobi.hpp"
#include "plstrat/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plstrat {

struct InputSegment {
    Point2 a, b;
    std::size_t source = 0;
};

/// Planar subdivision induced by points and closed segments in R^2, with
/// exact predicates. Vertices are kept in lexicographic order; edges are
/// open segments between consecutive vertices on an input segment.
class PlanarArrangement {
public:
    struct Edge {
        std::size_t a = 0, b = 0;          // vertex indices, a < b
        std::vector<std::size_t> sources;  // input segments covering the edge
    };
    struct Face {
        bool bounded = false;
        /// Twice the area enclosed by the outer cycle (0 for the unbounded face).
        Rational area2;
        /// Boundary cycles as vertex sequences; the face lies to their left.
        std::vector<std::vector<std::size_t>> cycles;
        std::vector<std::size_t> isolated_vertices;
        /// Closure: vertices and edges on the boundary, sorted.
        std::vector<std::size_t> vertices;
        std::vector<std::size_t> edges;
    };
    struct Cell {
        int dim = 0;
        std::size_t index = 0;
        friend bool operator==(const Cell&, const Cell&) = default;
    };

    PlanarArrangement() { finish({}); }

    /// In strict mode only transverse crossings between segment interiors
    /// and shared endpoints are allowed; T-junctions, overlaps, points on
    /// segment interiors and crossings through a third segment raise a
    /// genericity error. Permissive mode splits at every contact.
    static PlanarArrangement build(const std::vector<Point2>& points, const std::vector<InputSegment>& segments,
                                   bool strict);

    const std::vector<Point2>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Face>& faces() const noexcept { return faces_; }
    std::size_t unbounded_face() const noexcept { return faces_.size() - 1; }

    /// Input segments whose relative interior contains vertex v.
    const std::vector<std::size_t>& crossing_sources(std::size_t v) const { return interior_sources_.at(v); }
    /// Was vertex v created by a crossing (not an input point or endpoint)?
    bool is_crossing(std::size_t v) const { return crossing_.at(v); }
    std::size_t degree(std::size_t v) const { return incident_.at(v).size(); }
    /// Incident edges of v.
    const std::vector<std::size_t>& incident_edges(std::size_t v) const { return incident_.at(v); }

    std::optional<std::size_t> find_vertex(const Point2& p) const;

    /// Lowest-dimensional cell containing p.
    Cell locate(const Point2& p) const;

    /// Connected components of the 1-skeleton (isolated vertices count).
    std::size_t connected_components() const;
    /// V - E + F == 1 + C.
    bool euler_ok() const;

    /// A point strictly inside face f, stepped off the j-th boundary
    /// half-edge. nullopt if halving fails to reach the face.
    std::optional<Point2> interior_point(std::size_t f, std::size_t j = 0) const;

    /// A point inside the cell (vertex, edge midpoint, or face sample).
    Point2 representative(const Cell& c) const;

private:
    void finish(std::vector<std::pair<std::size_t, std::size_t>> edge_pairs);

    std::vector<Point2> vertices_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
    std::vector<std::vector<std::size_t>> interior_sources_;
    std::vector<bool> crossing_;
    std::vector<std::vector<std::size_t>> incident_;
};

/// The Jacobi image split into cells; `k` is 1 or 2.
struct RefinedImage {
    int k = 1;
    /// k = 1: sorted distinct critical values and their preimage counts.
    std::vector<Rational> points;
    std::vector<int> point_multiplicity;
    /// k = 2: arrangement of the image; multiplicities count Jacobi
    /// simplices whose image relative interior contains the cell.
    PlanarArrangement arrangement;
    std::vector<int> vertex_multiplicity;
    std::vector<int> edge_multiplicity;
};

RefinedImage refine_image(const PLMap& f, const JacobiSet& j);

/// Strict refinement of raw planar data. Points and segments are treated as
/// images of vertices and edges of a one-dimensional complex.
RefinedImage refine_planar(const std::vector<Point2>& points, const std::vector<InputSegment>& segments);

struct ContainmentViolation {
    std::string lower, upper;
};

/// Pairs of refined cells (tau, sigma), dim tau <= dim sigma, where the
/// relative interior of tau meets the closure of sigma without tau lying
/// in the closure of sigma.
std::vector<ContainmentViolation> containment_violations(const RefinedImage& r);

/// A stratification of R^k (k = 1, 2) carried by explicit cells.
struct CodomainStratification {
    int k = 1;
    StratifiedSpace space;
    /// k = 1: cells are points y_i (index i) then intervals I_0..I_m (index
    /// m + i); I_0 and I_m are unbounded.
    std::vector<Rational> line_points;
    /// k = 2: cells are vertices, edges, then faces in arrangement order.
    PlanarArrangement arrangement;

    std::size_t locate_cell(const Point& y) const;
    /// Stratum containing y; boundary points go to the lower-dimensional cell.
    Poset::Element locate(const Point& y) const;
    /// Exact point inside cell c.
    Point representative(std::size_t c) const;
    /// Open top-dimensional cells.
    std::vector<std::size_t> top_cells() const;
    /// `count` distinct-where-possible sample points inside top cell c;
    /// nullopt entries mark failed samples.
    std::vector<std::optional<Point>> samples(std::size_t c, std::size_t count) const;
    /// Cells of the carrier contained in the closure of cell c (c included).
    std::vector<std::size_t> closure(std::size_t c) const;
};

/// Cells of R^1 cut at the given points (sorted, distinct); one stratum per cell,
/// points below their flanking intervals.
CodomainStratification line_stratification(const std::vector<Rational>& points);

/// One stratum per cell of the arrangement: the containment poset on
/// vertices and edges, extended by one maximal element per face.
CodomainStratification planar_stratification(const PlanarArrangement& a);

/// P_f^wedge on R^k for a refined image.
CodomainStratification build_codomain_stratification(const RefinedImage& r);

/// Every closure pair (lower cell, face) is checked geometrically: points
/// of the face accumulate at the lower cell.
bool verify_closure_pairs(const CodomainStratification& s);

Poset::Element locate(const CodomainStratification& s, const Point& y);

}  // namespace plstrat

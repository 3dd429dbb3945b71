#pragma once

#include "plstrat/complex.hpp"
#include "plstrat/homology.hpp"
#include "plstrat/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace plstrat {

/// A map from a simplicial complex to R^k, affine on every simplex.
class PLMap {
public:
    PLMap() = default;
    /// `values[i]` is the image of domain.vertices()[i]. Throws a structural
    /// error on a missing value or a wrong coordinate count.
    PLMap(SimplicialComplex domain, int k, std::vector<Point> values);

    const SimplicialComplex& domain() const noexcept { return domain_; }
    int k() const noexcept { return k_; }
    const std::vector<Point>& values() const noexcept { return values_; }
    const Point& value(Vertex v) const;

    /// Images of the vertices of s, in vertex order.
    std::vector<Point> images(const Simplex& s) const;
    Point barycenter_image(const Simplex& s) const;
    /// f at the point of s with the given barycentric weights.
    Point evaluate(const Simplex& s, const std::vector<Rational>& weights) const;

    /// For k = 1: break value ties by vertex label (index-ordered
    /// infinitesimal perturbation). Off by default.
    bool symbolic_ties() const noexcept { return symbolic_ties_; }
    void set_symbolic_ties(bool on);

    /// For k = 1: sign of f(a) - f(b), with symbolic tie-breaking when
    /// enabled. Returns 0 only for a == b or an unbroken tie.
    int compare_vertices(Vertex a, Vertex b) const;

private:
    SimplicialComplex domain_;
    int k_ = 1;
    std::vector<Point> values_;
    bool symbolic_ties_ = false;
};

struct GenericityViolation {
    std::string rule;  // "G1", "G2" or "G3"
    std::vector<Vertex> witness;
};

struct GenericityReport {
    bool passed = true;
    std::vector<GenericityViolation> violations;
};

/// Local general-position checks:
///   G1  every simplex of dimension <= k has affinely independent images;
///   G2  for k = 1 all vertex values are distinct;
///   G3  for every (k-1)-simplex s and v in its link, f(v) avoids aff f(s).
GenericityReport check_generic(const PLMap& f);

struct DirectionalLinks {
    SimplicialComplex upper;
    SimplicialComplex lower;
};

/// Upper/lower parts of link(s) relative to the barycenter of s along u.
/// A link vertex level with the barycenter raises a genericity error.
DirectionalLinks directional_links(const PLMap& f, const Simplex& s, const Point& u);

/// Normal to aff f(s) for a (k-1)-simplex s; the rotation (-dy, dx) for k = 2
/// and +1 for k = 1. Throws a degeneracy error if f(s) is not (k-1)-dimensional.
Point image_normal(const PLMap& f, const Simplex& s);

struct HVerdict {
    bool critical = false;
    BettiVector upper_betti;  // along +u
    BettiVector lower_betti;  // along -u
};

/// Upper-link homology test on a (k-1)-simplex, evaluated for u and -u. In
/// the interior the two verdicts must agree (invariant breach otherwise);
/// on the domain boundary the simplex is critical if either side is.
HVerdict h_verdict(const PLMap& f, const Simplex& s);
bool is_h_critical(const PLMap& f, const Simplex& s);

/// Differential test at the point of s with the given barycentric weights
/// (all positive). Critical iff the positive hull of the image directions
/// around that point is not all of R^k.
bool is_d_critical_at(const PLMap& f, const Simplex& s, const std::vector<Rational>& weights);
/// Same test at the barycenter.
bool is_d_critical(const PLMap& f, const Simplex& s);

/// Link-regularity test for a vertex of a surface with k = 1: regular iff
/// the upper and lower links are each one nonempty arc. Undecided (nullopt)
/// outside that setting, including boundary vertices.
std::optional<bool> is_l_critical_surface(const PLMap& f, const Simplex& v);

enum class Notion { H, D, L };

std::string to_string(Notion n);
Notion parse_notion(const std::string& text);

struct CriticalityVerdict {
    Simplex simplex;
    bool h_critical = false;
    bool d_critical = false;
    std::optional<bool> l_critical;
    BettiVector upper_betti;
    BettiVector lower_betti;
};

/// All three verdicts for one (k-1)-simplex. L is only evaluated for
/// surfaces with k = 1.
CriticalityVerdict criticality(const PLMap& f, const Simplex& s);

struct JacobiSet {
    SimplicialComplex complex;
    Notion notion = Notion::H;
    /// One verdict per (k-1)-simplex of the domain, in domain order.
    std::vector<CriticalityVerdict> verdicts;
};

/// Face closure of the critical (k-1)-simplices. Requires check_generic to
/// pass; notion L additionally requires a surface with k = 1.
JacobiSet jacobi_set(const PLMap& f, Notion notion);

/// X over Nat(J)^wedge: simplices of J are their own strata and every
/// connected component of the complement is one more maximal stratum.
/// Carrier cells are the domain simplices in domain order.
StratifiedSpace domain_stratification(const PLMap& f, const JacobiSet& j);

}  // namespace plstrat

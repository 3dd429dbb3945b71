#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plstrat {

/// Finite poset on labelled elements. The order is kept both as covering
/// relations (Hasse diagram) and as a transitive-closure bit matrix.
class Poset {
public:
    using Element = std::size_t;
    using Relation = std::vector<std::pair<Element, Element>>;

    Poset() = default;

    /// Builds the reflexive-transitive closure of `leq`. Throws a structural
    /// error on duplicate labels, out-of-range indices, or a cycle.
    static Poset from_relations(std::vector<std::string> labels, const Relation& leq);

    /// Looks elements up by label. Throws on unknown labels.
    static Poset from_label_relations(std::vector<std::string> labels,
                                      const std::vector<std::pair<std::string, std::string>>& leq);

    /// The chain [n] = {0 < 1 < ... < n}.
    static Poset chain(std::size_t n);

    /// n pairwise incomparable elements.
    static Poset antichain(std::size_t n);

    std::size_t size() const noexcept { return labels_.size(); }
    bool empty() const noexcept { return labels_.empty(); }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(Element e) const { return labels_.at(e); }
    std::optional<Element> find(std::string_view label) const;
    /// Like find(), but unknown labels raise a not-a-member error.
    Element at(std::string_view label) const;

    bool leq(Element a, Element b) const { return closure_[a][b]; }
    bool less(Element a, Element b) const { return a != b && closure_[a][b]; }
    bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

    /// Covering pairs (a, b): a < b with nothing strictly between.
    const Relation& covers() const noexcept { return covers_; }
    const std::vector<Element>& upper_covers(Element e) const { return upper_covers_.at(e); }
    const std::vector<Element>& lower_covers(Element e) const { return lower_covers_.at(e); }

    std::vector<Element> minimal_elements() const;
    std::vector<Element> maximal_elements() const;

    /// Checks reflexivity, transitivity and antisymmetry of the stored closure.
    bool validate() const;

    /// Same labels and the same order relation.
    friend bool operator==(const Poset& a, const Poset& b);

private:
    void finish();

    std::vector<std::string> labels_;
    std::map<std::string, Element, std::less<>> index_;
    std::vector<boost::dynamic_bitset<>> closure_;
    Relation covers_;
    std::vector<std::vector<Element>> upper_covers_;
    std::vector<std::vector<Element>> lower_covers_;
};

using ElementSet = std::vector<Poset::Element>;

/// Order-preserving map between two posets.
struct MonotoneMap {
    Poset source;
    Poset target;
    std::vector<Poset::Element> assignment;

    Poset::Element operator()(Poset::Element e) const { return assignment.at(e); }
};

/// A cellular carrier together with a map to a stratifying poset.
///
/// `boundary[c]` lists the cells in the immediate boundary of cell c; the
/// closure relation is the reflexive-transitive closure of these lists.
struct StratifiedSpace {
    struct Cell {
        std::string id;
        int dim = 0;
    };

    std::vector<Cell> cells;
    std::vector<std::vector<std::size_t>> boundary;
    Poset poset;
    std::vector<Poset::Element> assignment;

    std::size_t cell_index(std::string_view id) const;
    /// Cells whose stratum is `e`, in carrier order.
    std::vector<std::size_t> stratum(Poset::Element e) const;
    /// Continuity in the upward-closed topology: if c lies in the closure of
    /// c' then assignment(c) <= assignment(c').
    bool is_continuous() const;
};

/// True iff the reflexive-transitive closure of `leq` on n elements is
/// antisymmetric (reflexivity and transitivity hold after closure).
bool validate_poset(std::size_t n, const Poset::Relation& leq);

/// Minimal open set containing e: {p : e <= p}.
ElementSet up_set(const Poset& p, Poset::Element e);
ElementSet down_set(const Poset& p, Poset::Element e);

/// True iff `u` is upward closed.
bool is_open(const Poset& p, const ElementSet& u);

Poset product(const Poset& p, const Poset& q);
/// Element index of (a, b) in product(p, q).
inline Poset::Element product_index(const Poset& q, Poset::Element a, Poset::Element b) {
    return a * q.size() + b;
}
MonotoneMap projection_first(const Poset& p, const Poset& q);
MonotoneMap projection_second(const Poset& p, const Poset& q);

/// Adjoins a new global minimum (left cone) or maximum (right cone).
Poset left_cone(const Poset& p, const std::string& new_label = "bottom");
Poset right_cone(const Poset& p, const std::string& new_label = "top");

/// Connected-ambient extension: adds one maximal element per component
/// label with `l <= alpha` for each closure pair (l, alpha index).
Poset wedge_extend(const Poset& q, const std::vector<std::string>& components,
                   const std::vector<std::pair<Poset::Element, std::size_t>>& closure_pairs);

/// Identifies the given elements into a single new element. Throws a
/// structural error if the quotient relation is not antisymmetric.
Poset collapse(const Poset& p, const ElementSet& merged, const std::string& new_label);

/// Quotient map p -> collapse(p, merged, ...).
std::vector<Poset::Element> collapse_assignment(const Poset& p, const ElementSet& merged);

bool is_monotone(const Poset& source, const Poset& target,
                 const std::vector<Poset::Element>& assignment);

MonotoneMap compose(const MonotoneMap& first, const MonotoneMap& second);

/// f^{-1}(u) as an element set of the source.
ElementSet preimage(const MonotoneMap& f, const ElementSet& u);

/// Structural isomorphism test (backtracking); intended for small posets.
bool are_isomorphic(const Poset& a, const Poset& b);

struct StratifiedMapCheck {
    bool ok = false;
    std::optional<MonotoneMap> induced;
    std::string reason;
};

/// Checks whether a cell map S -> T induces a well-defined monotone map of
/// stratifying posets. `f_cells[c]` is the T-cell receiving S-cell c.
StratifiedMapCheck check_stratified_map(const std::vector<std::size_t>& f_cells,
                                        const StratifiedSpace& s, const StratifiedSpace& t);

/// True iff the identity on the (shared) carrier induces a monotone
/// surjection fine.poset -> coarse.poset.
bool is_refinement(const StratifiedSpace& fine, const StratifiedSpace& coarse);

/// The trivial stratification of a carrier over a one-point poset.
StratifiedSpace trivial_stratification(const StratifiedSpace& carrier);

/// Maximal chains, found by depth-first search over covering relations from
/// minimal elements in element order. Chains longer than `max_length`
/// elements are skipped; 0 means no limit.
std::vector<ElementSet> linear_subposets(const Poset& p, std::size_t max_length = 0);

/// A stratified space with a marked closed subspace, i.e. S inside X.
struct EmbeddedSpace {
    StratifiedSpace ambient;
    std::vector<bool> in_subspace;
};

/// Checks that a cell map (S in X) -> (T in Y) is a morphism of embedded
/// stratified spaces: it carries S into T, restricts to a stratified map,
/// and sends the complement of S into the complement of T. On success the
/// induced map on the ambient stratifications is also checked.
StratifiedMapCheck check_embedded_morphism(const std::vector<std::size_t>& f_cells,
                                           const EmbeddedSpace& source,
                                           const EmbeddedSpace& target);

}  // namespace plstrat

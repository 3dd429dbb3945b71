#pragma once

#include "plstrat/arrangement.hpp"

#include <string>
#include <utility>
#include <vector>

namespace plstrat {

/// Fold curves of a map to R^2 given as polylines. A strand whose first and
/// last points coincide is closed.
struct SingularLocus {
    std::vector<std::vector<Point2>> strands;
    /// Birth/death points as (strand, vertex index).
    std::vector<std::pair<std::size_t, std::size_t>> cusps;
    /// Additional user-requested 0-cells, (strand, vertex index).
    std::vector<std::pair<std::size_t, std::size_t>> marks;

    bool is_closed(std::size_t strand) const;
};

struct ZeroCell {
    std::size_t vertex = 0;            // arrangement vertex
    std::vector<std::string> reasons;  // crossing, cusp, tangency, endpoint, junction, mark
};

struct LocusStratification {
    /// Carrier: the arrangement cells. Strata: 0-cells, arcs, then faces.
    CodomainStratification strat;
    std::vector<ZeroCell> zero_cells;
    /// Arrangement edges making up each arc, in edge order.
    std::vector<std::vector<std::size_t>> arcs;
};

/// Cuts the locus at crossings, cusps, vertical tangencies (strict sign
/// changes of the x-increment) and open strand ends, and stratifies R^2 over
/// the face poset of the result extended by the complementary regions.
/// Vertical segments and non-transverse contacts raise genericity errors.
LocusStratification stratify_singular_locus(const SingularLocus& l);

/// True iff no 0-cell can be dropped: each one is a crossing, a cusp, a
/// vertical tangency, a strand end, or a meeting point of three or more arcs.
bool coarseness_check(const LocusStratification& s, const SingularLocus& l);

}  // namespace plstrat

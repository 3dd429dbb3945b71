#pragma once

#include "support.hpp"

namespace testing_support {

inline bool closed_surface(const SimplicialComplex& k) {
    if (k.dimension() != 2) return false;
    const auto r = manifold_check(k);
    return r.is_weak_pseudomanifold && !r.has_bad_link();
}

/// Violations of "D-critical implies H-critical" and, for surfaces with
/// k = 1, "D-critical implies not L-regular", plus disagreements with the
/// link-pattern oracle for vertices of closed surfaces.
inline std::vector<std::string> criticality_implication_violations(const PLMap& f) {
    std::vector<std::string> bad;
    const auto& dom = f.domain();
    const bool surface = closed_surface(dom);
    for (auto i : dom.of_dimension(f.k() - 1)) {
        const Simplex& s = dom.simplex(i);
        const auto v = criticality(f, s);
        if (v.d_critical && !v.h_critical) bad.push_back("D-critical but H-regular at " + s.to_string());
        if (v.d_critical && v.l_critical == false) bad.push_back("D-critical but L-regular at " + s.to_string());
        if (surface && f.k() == 1) {
            const auto p = link_pattern(f, s[0]);
            const bool extremum = p.up == 0 || p.down == 0;
            if (v.h_critical != (extremum || p.sign_changes > 2))
                bad.push_back("H oracle mismatch at " + s.to_string());
            if (v.d_critical != extremum) bad.push_back("D oracle mismatch at " + s.to_string());
            if (v.l_critical != std::optional<bool>(p.sign_changes != 2))
                bad.push_back("L oracle mismatch at " + s.to_string());
        }
    }
    return bad;
}

}  // namespace testing_support

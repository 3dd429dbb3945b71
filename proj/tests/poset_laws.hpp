#pragma once

// Random poset law checks shared by the poset suite and the acceptance run.

#include "support.hpp"

namespace testing_support {

/// Random DAG on up to 8 elements whose edges go from lower to higher index.
inline std::pair<std::size_t, Poset::Relation> random_relation(std::mt19937_64& g) {
    const std::size_t n = static_cast<std::size_t>(uniform(g, 1, 8));
    const int density = uniform(g, 10, 50);
    Poset::Relation rel;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (uniform(g, 0, 99) < density) rel.emplace_back(i, j);
    return {n, rel};
}

/// Warshall closure of a relation.
inline std::vector<std::vector<bool>> closure_oracle(std::size_t n, const Poset::Relation& rel) {
    std::vector<std::vector<bool>> c(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) c[i][i] = true;
    for (auto [a, b] : rel) c[a][b] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (c[i][k] && c[k][j]) c[i][j] = true;
    return c;
}

inline std::vector<std::string> labels_for(std::size_t n, const std::string& prefix) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

/// A monotone map source -> target found by randomized search, falling back
/// to a constant map.
inline std::vector<Poset::Element> random_monotone(std::mt19937_64& g, const Poset& source, const Poset& target) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<Poset::Element> f(source.size());
        for (auto& x : f) x = static_cast<Poset::Element>(uniform(g, 0, static_cast<int>(target.size()) - 1));
        if (is_monotone(source, target, f)) return f;
    }
    const auto constant = static_cast<Poset::Element>(uniform(g, 0, static_cast<int>(target.size()) - 1));
    return std::vector<Poset::Element>(source.size(), constant);
}

inline bool is_up_closed(const std::vector<std::vector<bool>>& c, const std::vector<bool>& u) {
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j)
            if (u[i] && c[i][j] && !u[j]) return false;
    return true;
}

/// Checks one random poset against the laws; returns descriptions of failures.
inline std::vector<std::string> poset_law_violations(std::mt19937_64& g) {
    std::vector<std::string> bad;
    const auto [n, rel] = random_relation(g);
    const auto p = Poset::from_relations(labels_for(n, "x"), rel);
    const auto c = closure_oracle(n, rel);

    if (!p.validate()) bad.push_back("validate failed");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (p.leq(i, j) != c[i][j]) bad.push_back("order differs from closure oracle");

    // Open sets: every subset tested against the oracle; opens closed under
    // union and intersection.
    std::vector<std::vector<bool>> opens;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<bool> u(n);
        ElementSet es;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1u) {
                u[i] = true;
                es.push_back(i);
            }
        const bool open = is_up_closed(c, u);
        if (is_open(p, es) != open) bad.push_back("is_open disagrees with oracle");
        if (open) opens.push_back(u);
    }
    for (std::size_t x = 0; x < opens.size(); ++x)
        for (std::size_t y = x; y < opens.size(); ++y) {
            std::vector<bool> uni(n), inter(n);
            for (std::size_t i = 0; i < n; ++i) {
                uni[i] = opens[x][i] || opens[y][i];
                inter[i] = opens[x][i] && opens[y][i];
            }
            if (!is_up_closed(c, uni) || !is_up_closed(c, inter)) bad.push_back("opens not closed under union/meet");
        }
    for (std::size_t i = 0; i < n; ++i) {
        ElementSet expected;
        for (std::size_t j = 0; j < n; ++j)
            if (c[i][j]) expected.push_back(j);
        if (up_set(p, i) != expected) bad.push_back("up_set differs from oracle");
    }

    // Product universal property on a random cone R -> P, R -> Q.
    const auto [qn, qrel] = random_relation(g);
    const auto q = Poset::from_relations(labels_for(qn, "y"), qrel);
    const auto pq = product(p, q);
    const auto pi1 = projection_first(p, q), pi2 = projection_second(p, q);
    if (!is_monotone(pq, p, pi1.assignment) || !is_monotone(pq, q, pi2.assignment))
        bad.push_back("projections not monotone");
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < q.size(); ++b)
            for (std::size_t a2 = 0; a2 < p.size(); ++a2)
                for (std::size_t b2 = 0; b2 < q.size(); ++b2)
                    if (pq.leq(product_index(q, a, b), product_index(q, a2, b2)) != (p.leq(a, a2) && q.leq(b, b2)))
                        bad.push_back("product order wrong");
    const auto [rn, rrel] = random_relation(g);
    const auto r = Poset::from_relations(labels_for(rn, "r"), rrel);
    const auto gp = random_monotone(g, r, p), gq = random_monotone(g, r, q);
    std::vector<Poset::Element> pair(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) pair[i] = product_index(q, gp[i], gq[i]);
    if (!is_monotone(r, pq, pair)) bad.push_back("pairing not monotone");
    for (std::size_t i = 0; i < r.size(); ++i)
        if (pi1(pair[i]) != gp[i] || pi2(pair[i]) != gq[i]) bad.push_back("pairing does not factor");
    // Uniqueness: any other candidate differs in some projection.
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t e = 0; e < pq.size(); ++e)
            if (e != pair[i] && pi1(e) == gp[i] && pi2(e) == gq[i]) bad.push_back("pairing not unique");

    // UC continuity: preimages of opens are open.
    MonotoneMap mp{r, p, gp};
    for (const auto& u : opens) {
        ElementSet es;
        for (std::size_t i = 0; i < n; ++i)
            if (u[i]) es.push_back(i);
        if (!is_open(r, preimage(mp, es))) bad.push_back("preimage of open not open");
    }

    // Cones.
    const auto lc = left_cone(p), rc = right_cone(p);
    if (lc.size() != n + 1 || rc.size() != n + 1) bad.push_back("cone size");
    for (std::size_t i = 0; i < n; ++i) {
        if (!lc.less(n, i) || !rc.less(i, n)) bad.push_back("cone point misplaced");
        for (std::size_t j = 0; j < n; ++j)
            if (lc.leq(i, j) != p.leq(i, j) || rc.leq(i, j) != p.leq(i, j)) bad.push_back("cone changed order");
    }
    const std::size_t len = static_cast<std::size_t>(uniform(g, 0, 6));
    if (!are_isomorphic(left_cone(Poset::chain(len)), Poset::chain(len + 1)) ||
        !are_isomorphic(right_cone(Poset::chain(len)), Poset::chain(len + 1)))
        bad.push_back("[n] cone is not [n+1]");

    // Wedge extension with every maximal element in some closure pair, then
    // collapse of the new maxima: the right cone.
    const std::size_t comps = static_cast<std::size_t>(uniform(g, 1, 3));
    std::vector<std::pair<Poset::Element, std::size_t>> pairs;
    for (auto mx : p.maximal_elements())
        pairs.emplace_back(mx, static_cast<std::size_t>(uniform(g, 0, static_cast<int>(comps) - 1)));
    for (std::size_t i = 0; i < n; ++i)
        if (uniform(g, 0, 3) == 0)
            pairs.emplace_back(i, static_cast<std::size_t>(uniform(g, 0, static_cast<int>(comps) - 1)));
    const auto ext = wedge_extend(p, labels_for(comps, "A"), pairs);
    if (!ext.validate()) bad.push_back("wedge extension invalid");
    for (std::size_t a = 0; a < comps; ++a)
        if (!ext.upper_covers(n + a).empty()) bad.push_back("component not maximal");
    ElementSet top;
    for (std::size_t a = 0; a < comps; ++a) top.push_back(n + a);
    if (!are_isomorphic(collapse(ext, top, "top"), rc)) bad.push_back("collapse is not the right cone");
    return bad;
}

}  // namespace testing_support

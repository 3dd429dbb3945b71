#include "plstrat/poset.hpp"

#include "plstrat/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace plstrat {

Poset Poset::from_relations(std::vector<std::string> labels, const Relation& leq) {
    Poset p;
    const std::size_t n = labels.size();
    p.labels_ = std::move(labels);
    for (Element i = 0; i < n; ++i) {
        if (!p.index_.emplace(p.labels_[i], i).second)
            fail(ErrorKind::Structural, "duplicate poset label '" + p.labels_[i] + "'");
    }
    p.closure_.assign(n, boost::dynamic_bitset<>(n));
    for (Element i = 0; i < n; ++i) p.closure_[i].set(i);
    for (auto [a, b] : leq) {
        if (a >= n || b >= n) fail(ErrorKind::Structural, "relation references unknown element");
        p.closure_[a].set(b);
    }
    // Warshall on bit rows.
    for (Element k = 0; k < n; ++k)
        for (Element i = 0; i < n; ++i)
            if (i != k && p.closure_[i][k]) p.closure_[i] |= p.closure_[k];
    for (Element i = 0; i < n; ++i)
        for (Element j = i + 1; j < n; ++j)
            if (p.closure_[i][j] && p.closure_[j][i])
                fail(ErrorKind::Structural, "order relation is not antisymmetric: '" +
                                                p.labels_[i] + "' and '" + p.labels_[j] + "'");
    p.finish();
    return p;
}

Poset Poset::from_label_relations(std::vector<std::string> labels,
                                  const std::vector<std::pair<std::string, std::string>>& leq) {
    std::map<std::string, Element, std::less<>> idx;
    for (Element i = 0; i < labels.size(); ++i) idx.emplace(labels[i], i);
    Relation rel;
    for (const auto& [a, b] : leq) {
        auto ia = idx.find(a);
        auto ib = idx.find(b);
        if (ia == idx.end() || ib == idx.end())
            fail(ErrorKind::NotAMember, "relation references unknown label '" +
                                            (ia == idx.end() ? a : b) + "'");
        rel.emplace_back(ia->second, ib->second);
    }
    return from_relations(std::move(labels), rel);
}

Poset Poset::chain(std::size_t n) {
    std::vector<std::string> labels;
    Relation rel;
    for (std::size_t i = 0; i <= n; ++i) {
        labels.push_back(std::to_string(i));
        if (i > 0) rel.emplace_back(i - 1, i);
    }
    return from_relations(std::move(labels), rel);
}

Poset Poset::antichain(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return from_relations(std::move(labels), {});
}

void Poset::finish() {
    const std::size_t n = labels_.size();
    covers_.clear();
    upper_covers_.assign(n, {});
    lower_covers_.assign(n, {});
    for (Element a = 0; a < n; ++a) {
        boost::dynamic_bitset<> strict = closure_[a];
        strict.reset(a);
        boost::dynamic_bitset<> beyond(n);
        for (auto c = strict.find_first(); c != boost::dynamic_bitset<>::npos; c = strict.find_next(c)) {
            boost::dynamic_bitset<> above_c = closure_[c];
            above_c.reset(c);
            beyond |= above_c;
        }
        boost::dynamic_bitset<> cov = strict - beyond;
        for (auto b = cov.find_first(); b != boost::dynamic_bitset<>::npos; b = cov.find_next(b)) {
            covers_.emplace_back(a, b);
            upper_covers_[a].push_back(b);
            lower_covers_[b].push_back(a);
        }
    }
    for (auto& v : lower_covers_) std::sort(v.begin(), v.end());
}

std::optional<Poset::Element> Poset::find(std::string_view label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Poset::Element Poset::at(std::string_view label) const {
    auto e = find(label);
    if (!e) fail(ErrorKind::NotAMember, "unknown poset element '" + std::string(label) + "'");
    return *e;
}

std::vector<Poset::Element> Poset::minimal_elements() const {
    std::vector<Element> out;
    for (Element e = 0; e < size(); ++e)
        if (lower_covers_[e].empty()) out.push_back(e);
    return out;
}

std::vector<Poset::Element> Poset::maximal_elements() const {
    std::vector<Element> out;
    for (Element e = 0; e < size(); ++e)
        if (upper_covers_[e].empty()) out.push_back(e);
    return out;
}

bool Poset::validate() const {
    const std::size_t n = size();
    for (Element a = 0; a < n; ++a) {
        if (!closure_[a][a]) return false;
        for (Element b = 0; b < n; ++b) {
            if (!closure_[a][b]) continue;
            if (a != b && closure_[b][a]) return false;
            if (!closure_[b].is_subset_of(closure_[a])) return false;
        }
    }
    return true;
}

bool operator==(const Poset& a, const Poset& b) {
    return a.labels_ == b.labels_ && a.closure_ == b.closure_;
}

std::size_t StratifiedSpace::cell_index(std::string_view id) const {
    for (std::size_t c = 0; c < cells.size(); ++c)
        if (cells[c].id == id) return c;
    fail(ErrorKind::NotAMember, "unknown cell '" + std::string(id) + "'");
}

std::vector<std::size_t> StratifiedSpace::stratum(Poset::Element e) const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cells.size(); ++c)
        if (assignment[c] == e) out.push_back(c);
    return out;
}

bool StratifiedSpace::is_continuous() const {
    if (assignment.size() != cells.size() || boundary.size() != cells.size()) return false;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (assignment[c] >= poset.size()) return false;
        for (std::size_t b : boundary[c])
            if (!poset.leq(assignment[b], assignment[c])) return false;
    }
    return true;
}

bool validate_poset(std::size_t n, const Poset::Relation& leq) {
    std::vector<boost::dynamic_bitset<>> m(n, boost::dynamic_bitset<>(n));
    for (std::size_t i = 0; i < n; ++i) m[i].set(i);
    for (auto [a, b] : leq) {
        if (a >= n || b >= n) return false;
        m[a].set(b);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (m[i][k]) m[i] |= m[k];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m[i][j] && m[j][i]) return false;
    return true;
}

ElementSet up_set(const Poset& p, Poset::Element e) {
    if (e >= p.size()) fail(ErrorKind::NotAMember, "unknown poset element");
    ElementSet out;
    for (Poset::Element q = 0; q < p.size(); ++q)
        if (p.leq(e, q)) out.push_back(q);
    return out;
}

ElementSet down_set(const Poset& p, Poset::Element e) {
    if (e >= p.size()) fail(ErrorKind::NotAMember, "unknown poset element");
    ElementSet out;
    for (Poset::Element q = 0; q < p.size(); ++q)
        if (p.leq(q, e)) out.push_back(q);
    return out;
}

bool is_open(const Poset& p, const ElementSet& u) {
    std::vector<bool> in(p.size(), false);
    for (auto e : u) {
        if (e >= p.size()) fail(ErrorKind::NotAMember, "unknown poset element");
        in[e] = true;
    }
    for (auto e : u)
        for (auto up : p.upper_covers(e))
            if (!in[up]) return false;
    return true;
}

Poset product(const Poset& p, const Poset& q) {
    std::vector<std::string> labels;
    labels.reserve(p.size() * q.size());
    for (Poset::Element a = 0; a < p.size(); ++a)
        for (Poset::Element b = 0; b < q.size(); ++b)
            labels.push_back("(" + p.label(a) + "," + q.label(b) + ")");
    Poset::Relation rel;
    for (Poset::Element a = 0; a < p.size(); ++a)
        for (Poset::Element b = 0; b < q.size(); ++b) {
            for (auto a2 : p.upper_covers(a)) rel.emplace_back(product_index(q, a, b), product_index(q, a2, b));
            for (auto b2 : q.upper_covers(b)) rel.emplace_back(product_index(q, a, b), product_index(q, a, b2));
        }
    return Poset::from_relations(std::move(labels), rel);
}

MonotoneMap projection_first(const Poset& p, const Poset& q) {
    MonotoneMap m{product(p, q), p, {}};
    for (Poset::Element a = 0; a < p.size(); ++a)
        for (Poset::Element b = 0; b < q.size(); ++b) m.assignment.push_back(a);
    return m;
}

MonotoneMap projection_second(const Poset& p, const Poset& q) {
    MonotoneMap m{product(p, q), q, {}};
    for (Poset::Element a = 0; a < p.size(); ++a)
        for (Poset::Element b = 0; b < q.size(); ++b) m.assignment.push_back(b);
    return m;
}

namespace {

Poset adjoin(const Poset& p, const std::string& new_label, bool as_minimum) {
    std::vector<std::string> labels = p.labels();
    labels.push_back(new_label);
    const Poset::Element fresh = p.size();
    Poset::Relation rel = p.covers();
    for (Poset::Element e = 0; e < p.size(); ++e) {
        if (as_minimum) rel.emplace_back(fresh, e);
        else rel.emplace_back(e, fresh);
    }
    return Poset::from_relations(std::move(labels), rel);
}

}  // namespace

Poset left_cone(const Poset& p, const std::string& new_label) { return adjoin(p, new_label, true); }

Poset right_cone(const Poset& p, const std::string& new_label) { return adjoin(p, new_label, false); }

Poset wedge_extend(const Poset& q, const std::vector<std::string>& components,
                   const std::vector<std::pair<Poset::Element, std::size_t>>& closure_pairs) {
    std::vector<std::string> labels = q.labels();
    for (const auto& c : components) {
        if (q.find(c)) fail(ErrorKind::Structural, "component label '" + c + "' collides with an element");
        labels.push_back(c);
    }
    Poset::Relation rel = q.covers();
    for (auto [l, alpha] : closure_pairs) {
        if (l >= q.size() || alpha >= components.size())
            fail(ErrorKind::Structural, "closure pair references an unknown element");
        rel.emplace_back(l, q.size() + alpha);
    }
    return Poset::from_relations(std::move(labels), rel);
}

std::vector<Poset::Element> collapse_assignment(const Poset& p, const ElementSet& merged) {
    std::vector<bool> is_merged(p.size(), false);
    for (auto e : merged) is_merged.at(e) = true;
    std::vector<Poset::Element> to(p.size());
    Poset::Element next = 0;
    for (Poset::Element e = 0; e < p.size(); ++e)
        if (!is_merged[e]) to[e] = next++;
    for (Poset::Element e = 0; e < p.size(); ++e)
        if (is_merged[e]) to[e] = next;
    return to;
}

Poset collapse(const Poset& p, const ElementSet& merged, const std::string& new_label) {
    if (merged.empty()) return p;
    auto to = collapse_assignment(p, merged);
    std::vector<std::string> labels;
    std::vector<bool> is_merged(p.size(), false);
    for (auto e : merged) is_merged[e] = true;
    for (Poset::Element e = 0; e < p.size(); ++e)
        if (!is_merged[e]) labels.push_back(p.label(e));
    labels.push_back(new_label);
    Poset::Relation rel;
    for (auto [a, b] : p.covers())
        if (to[a] != to[b]) rel.emplace_back(to[a], to[b]);
    return Poset::from_relations(std::move(labels), rel);
}

bool is_monotone(const Poset& source, const Poset& target,
                 const std::vector<Poset::Element>& assignment) {
    if (assignment.size() != source.size()) return false;
    for (auto e : assignment)
        if (e >= target.size()) return false;
    for (auto [a, b] : source.covers())
        if (!target.leq(assignment[a], assignment[b])) return false;
    return true;
}

MonotoneMap compose(const MonotoneMap& first, const MonotoneMap& second) {
    if (!(first.target == second.source))
        fail(ErrorKind::Structural, "monotone maps are not composable");
    MonotoneMap out{first.source, second.target, {}};
    out.assignment.reserve(first.assignment.size());
    for (auto e : first.assignment) out.assignment.push_back(second.assignment.at(e));
    return out;
}

ElementSet preimage(const MonotoneMap& f, const ElementSet& u) {
    std::vector<bool> in(f.target.size(), false);
    for (auto e : u) in.at(e) = true;
    ElementSet out;
    for (Poset::Element e = 0; e < f.source.size(); ++e)
        if (in[f.assignment[e]]) out.push_back(e);
    return out;
}

bool are_isomorphic(const Poset& a, const Poset& b) {
    const std::size_t n = a.size();
    if (n != b.size() || a.covers().size() != b.covers().size()) return false;
    auto signature = [](const Poset& p, Poset::Element e) {
        std::size_t below = 0, above = 0;
        for (Poset::Element q = 0; q < p.size(); ++q) {
            if (p.less(q, e)) ++below;
            if (p.less(e, q)) ++above;
        }
        return std::make_pair(below, above);
    };
    std::vector<std::pair<std::size_t, std::size_t>> sa(n), sb(n);
    for (Poset::Element e = 0; e < n; ++e) {
        sa[e] = signature(a, e);
        sb[e] = signature(b, e);
    }
    {
        auto x = sa, y = sb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return false;
    }
    std::vector<Poset::Element> map(n, n);
    std::vector<bool> used(n, false);
    std::function<bool(Poset::Element)> extend = [&](Poset::Element i) -> bool {
        if (i == n) return true;
        for (Poset::Element j = 0; j < n; ++j) {
            if (used[j] || sa[i] != sb[j]) continue;
            bool ok = true;
            for (Poset::Element k = 0; k < i && ok; ++k)
                ok = a.leq(k, i) == b.leq(map[k], j) && a.leq(i, k) == b.leq(j, map[k]);
            if (!ok) continue;
            map[i] = j;
            used[j] = true;
            if (extend(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return extend(0);
}

StratifiedMapCheck check_stratified_map(const std::vector<std::size_t>& f_cells,
                                        const StratifiedSpace& s, const StratifiedSpace& t) {
    if (f_cells.size() != s.cells.size())
        fail(ErrorKind::NotAMember, "cell map does not cover the source carrier");
    for (auto c : f_cells)
        if (c >= t.cells.size()) fail(ErrorKind::NotAMember, "cell map leaves the target carrier");

    StratifiedMapCheck out;
    const std::size_t none = t.poset.size();
    std::vector<Poset::Element> induced(s.poset.size(), none);
    for (std::size_t c = 0; c < s.cells.size(); ++c) {
        Poset::Element src = s.assignment[c];
        Poset::Element dst = t.assignment[f_cells[c]];
        if (induced[src] == none) {
            induced[src] = dst;
        } else if (induced[src] != dst) {
            out.reason = "stratum '" + s.poset.label(src) + "' lands in both '" +
                         t.poset.label(induced[src]) + "' and '" + t.poset.label(dst) + "'";
            return out;
        }
    }
    for (Poset::Element e = 0; e < s.poset.size(); ++e) {
        if (induced[e] == none) {
            out.reason = "stratum '" + s.poset.label(e) + "' is empty";
            return out;
        }
    }
    for (auto [a, b] : s.poset.covers()) {
        if (!t.poset.leq(induced[a], induced[b])) {
            out.reason = "induced map is not monotone on '" + s.poset.label(a) + "' <= '" +
                         s.poset.label(b) + "'";
            return out;
        }
    }
    out.ok = true;
    out.induced = MonotoneMap{s.poset, t.poset, std::move(induced)};
    return out;
}

bool is_refinement(const StratifiedSpace& fine, const StratifiedSpace& coarse) {
    if (fine.cells.size() != coarse.cells.size())
        fail(ErrorKind::Structural, "refinement check needs identical carriers");
    for (std::size_t c = 0; c < fine.cells.size(); ++c)
        if (fine.cells[c].id != coarse.cells[c].id)
            fail(ErrorKind::Structural, "refinement check needs identical carriers");
    std::vector<std::size_t> identity(fine.cells.size());
    std::iota(identity.begin(), identity.end(), 0);
    auto check = check_stratified_map(identity, fine, coarse);
    if (!check.ok) return false;
    std::vector<bool> hit(coarse.poset.size(), false);
    for (auto e : check.induced->assignment) hit[e] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

StratifiedSpace trivial_stratification(const StratifiedSpace& carrier) {
    StratifiedSpace out;
    out.cells = carrier.cells;
    out.boundary = carrier.boundary;
    out.poset = Poset::from_relations({"*"}, {});
    out.assignment.assign(carrier.cells.size(), 0);
    return out;
}

std::vector<ElementSet> linear_subposets(const Poset& p, std::size_t max_length) {
    std::vector<ElementSet> out;
    ElementSet current;
    std::function<void(Poset::Element)> walk = [&](Poset::Element e) {
        current.push_back(e);
        const auto& ups = p.upper_covers(e);
        if (ups.empty()) {
            if (max_length == 0 || current.size() <= max_length) out.push_back(current);
        } else if (max_length == 0 || current.size() < max_length) {
            for (auto u : ups) walk(u);
        }
        current.pop_back();
    };
    for (auto m : p.minimal_elements()) walk(m);
    return out;
}

StratifiedMapCheck check_embedded_morphism(const std::vector<std::size_t>& f_cells,
                                           const EmbeddedSpace& source,
                                           const EmbeddedSpace& target) {
    const auto& s = source.ambient;
    const auto& t = target.ambient;
    if (f_cells.size() != s.cells.size() || source.in_subspace.size() != s.cells.size() ||
        target.in_subspace.size() != t.cells.size())
        fail(ErrorKind::Structural, "embedded morphism data has inconsistent sizes");
    StratifiedMapCheck out;
    for (std::size_t c = 0; c < s.cells.size(); ++c) {
        if (f_cells[c] >= t.cells.size()) fail(ErrorKind::NotAMember, "cell map leaves the target carrier");
        bool in_s = source.in_subspace[c];
        bool in_t = target.in_subspace[f_cells[c]];
        if (in_s != in_t) {
            out.reason = in_s ? "cell '" + s.cells[c].id + "' of S leaves T"
                              : "cell '" + s.cells[c].id + "' outside S lands in T";
            return out;
        }
    }
    return check_stratified_map(f_cells, s, t);
}

}  // namespace plstrat

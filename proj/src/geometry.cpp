#include "plstrat/geometry.hpp"

#include "plstrat/errors.hpp"

#include <algorithm>

namespace plstrat {

std::optional<std::vector<Rational>> nonnegative_solution(const std::vector<std::vector<Rational>>& a,
                                                          const std::vector<Rational>& b) {
    const std::size_t m = a.size();
    const std::size_t n = m ? a.front().size() : 0;
    if (b.size() != m) fail(ErrorKind::Structural, "feasibility system has mismatched shapes");
    if (m == 0) return std::vector<Rational>(n, Rational(0));

    // Tableau columns: n originals, m artificials, rhs.
    const std::size_t width = n + m + 1;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width, Rational(0)));
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i].size() != n) fail(ErrorKind::Structural, "feasibility system is ragged");
        const bool flip = b[i] < 0;
        for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
        t[i][n + i] = 1;
        t[i][width - 1] = flip ? Rational(-b[i]) : b[i];
        basis[i] = n + i;
    }
    // Phase-one objective row: reduced costs of minimizing the artificial sum.
    std::vector<Rational> cost(width, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < width; ++j)
            if (j < n || j == width - 1) cost[j] -= t[i][j];

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j < n + m; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;
        std::size_t leave = m;
        Rational best;
        for (std::size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][width - 1] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;  // unbounded direction; cannot happen in phase one
        const Rational pivot = t[leave][enter];
        for (auto& v : t[leave]) v /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            const Rational f = cost[enter];
            for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    if (cost[width - 1] != 0) return std::nullopt;
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        if (basis[i] < n) x[basis[i]] = t[i][width - 1];
        else if (t[i][width - 1] != 0) return std::nullopt;
    }
    return x;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& m, std::size_t n) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        const Rational lead = m[r][c];
        for (auto& v : m[r]) v /= lead;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t matrix_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t n = rows.front().size();
    return row_reduce(rows, n).size();
}

std::optional<Point> orthogonal_vector(const std::vector<Point>& rows, std::size_t n) {
    std::vector<std::vector<Rational>> m(rows.begin(), rows.end());
    auto pivots = row_reduce(m, n);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free = n;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) {
            free = c;
            break;
        }
    if (free == n) return std::nullopt;
    Point v(n, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    return v;
}

bool affinely_independent(const std::vector<Point>& points) {
    if (points.size() <= 1) return true;
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 1; i < points.size(); ++i) rows.push_back(points[i] - points[0]);
    return matrix_rank(rows) == points.size() - 1;
}

bool in_convex_hull(const std::vector<Point>& points, const Point& y) {
    if (points.empty()) return false;
    const std::size_t k = y.size();
    std::vector<std::vector<Rational>> a(k + 1, std::vector<Rational>(points.size()));
    std::vector<Rational> b(k + 1);
    for (std::size_t j = 0; j < points.size(); ++j) {
        for (std::size_t r = 0; r < k; ++r) a[r][j] = points[j][r];
        a[k][j] = 1;
    }
    for (std::size_t r = 0; r < k; ++r) b[r] = y[r];
    b[k] = 1;
    return nonnegative_solution(a, b).has_value();
}

Point2 to_point2(const Point& p) {
    if (p.size() != 2) fail(ErrorKind::Structural, "expected a point of R^2");
    return {p[0], p[1]};
}

Point to_point(const Point2& p) { return {p.x, p.y}; }

Rational cross(const Point2& a, const Point2& b, const Point2& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

int orient(const Point2& a, const Point2& b, const Point2& c) {
    const Rational v = cross(a, b, c);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
    if (orient(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

bool in_open_segment(const Point2& a, const Point2& b, const Point2& p) {
    return on_segment(a, b, p) && !(p == a) && !(p == b);
}

SegmentIntersection intersect_segments(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const int o1 = orient(a, b, c), o2 = orient(a, b, d);
    const int o3 = orient(c, d, a), o4 = orient(c, d, b);
    SegmentIntersection r;
    if (o1 == 0 && o2 == 0) {
        // Collinear: compare by projection onto the dominant axis.
        auto key = [&](const Point2& p) { return a.x != b.x ? p.x : p.y; };
        Rational lo1 = std::min(key(a), key(b)), hi1 = std::max(key(a), key(b));
        Rational lo2 = std::min(key(c), key(d)), hi2 = std::max(key(c), key(d));
        Rational lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
        if (lo > hi) return r;
        if (lo < hi) {
            r.contact = SegmentContact::Overlap;
            return r;
        }
        Point2 p = (key(a) == lo) ? a : (key(b) == lo ? b : (key(c) == lo ? c : d));
        const bool end1 = p == a || p == b, end2 = p == c || p == d;
        r.contact = (end1 && end2) ? SegmentContact::SharedEndpoint : SegmentContact::Touching;
        r.point = p;
        return r;
    }
    if (o1 * o2 > 0 || o3 * o4 > 0) return r;
    if (o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
        const Rational t = cross(c, d, a) / (cross(c, d, a) - cross(c, d, b));
        r.contact = SegmentContact::Crossing;
        r.point = Point2{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        return r;
    }
    // Exactly one orientation vanishes: an endpoint lies on the other segment.
    Point2 p = o1 == 0 ? c : (o2 == 0 ? d : (o3 == 0 ? a : b));
    const bool end1 = p == a || p == b, end2 = p == c || p == d;
    r.contact = (end1 && end2) ? SegmentContact::SharedEndpoint : SegmentContact::Touching;
    r.point = p;
    return r;
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && orient(h[k - 2], h[k - 1], p) <= 0) --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && orient(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

bool in_relative_interior(const std::vector<Point>& points, const Point& y) {
    if (points.empty()) return false;
    if (y.size() == 1) {
        Rational lo = points.front()[0], hi = lo;
        for (const auto& p : points) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        if (lo == hi) return y[0] == lo;
        return lo < y[0] && y[0] < hi;
    }
    if (y.size() != 2) fail(ErrorKind::Structural, "relative interior test supports R^1 and R^2");
    std::vector<Point2> pts;
    for (const auto& p : points) pts.push_back(to_point2(p));
    auto hull = convex_hull(pts);
    const Point2 q = to_point2(y);
    if (hull.size() == 1) return hull[0] == q;
    if (hull.size() == 2) return in_open_segment(hull[0], hull[1], q);
    for (std::size_t i = 0; i < hull.size(); ++i)
        if (orient(hull[i], hull[(i + 1) % hull.size()], q) <= 0) return false;
    return true;
}

int point_in_polygon(const std::vector<Point2>& polygon, const Point2& p) {
    const std::size_t n = polygon.size();
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = polygon[i];
        const Point2& b = polygon[(i + 1) % n];
        if (on_segment(a, b, p)) return -1;
        // Half-open rule on y avoids double counting at vertices.
        if ((a.y > p.y) != (b.y > p.y)) {
            const Rational x_at = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x_at) inside = !inside;
        }
    }
    return inside ? 1 : 0;
}

}  // namespace plstrat

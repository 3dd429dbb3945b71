#pragma once

#include "plstrat/rational.hpp"

#include <optional>
#include <vector>

namespace plstrat {

/// Exact feasibility of {x >= 0 : A x = b} by phase-one simplex with
/// Bland's rule. Returns a witness when feasible.
std::optional<std::vector<Rational>> nonnegative_solution(const std::vector<std::vector<Rational>>& a,
                                                          const std::vector<Rational>& b);

/// Rank of a rational matrix given as rows.
std::size_t matrix_rank(std::vector<std::vector<Rational>> rows);

/// A nonzero vector orthogonal to every row, if the rows have rank below
/// the ambient dimension `n`.
std::optional<Point> orthogonal_vector(const std::vector<Point>& rows, std::size_t n);

/// Are the points affinely independent?
bool affinely_independent(const std::vector<Point>& points);

/// Is y a convex combination of `points` (all in R^k)?
bool in_convex_hull(const std::vector<Point>& points, const Point& y);

struct Point2 {
    Rational x, y;
    friend bool operator==(const Point2&, const Point2&) = default;
    /// Lexicographic (x, then y).
    friend bool operator<(const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

Point2 to_point2(const Point& p);
Point to_point(const Point2& p);

/// Sign of the cross product (b - a) x (c - a).
int orient(const Point2& a, const Point2& b, const Point2& c);

/// Twice the signed area.
Rational cross(const Point2& a, const Point2& b, const Point2& c);

/// Is p on the closed segment [a, b]?
bool on_segment(const Point2& a, const Point2& b, const Point2& p);
/// Is p strictly between a and b on segment [a, b]?
bool in_open_segment(const Point2& a, const Point2& b, const Point2& p);

enum class SegmentContact {
    None,
    /// Interiors cross at one point, transversally.
    Crossing,
    /// Endpoints coincide and nothing else is shared.
    SharedEndpoint,
    /// An endpoint of one touches the interior of the other.
    Touching,
    /// Collinear with a shared piece of positive length.
    Overlap,
};

struct SegmentIntersection {
    SegmentContact contact = SegmentContact::None;
    std::optional<Point2> point;
};

SegmentIntersection intersect_segments(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

/// Andrew's monotone chain; counterclockwise, no collinear points kept.
std::vector<Point2> convex_hull(std::vector<Point2> pts);

/// y in the relative interior of conv(points), for points in R^1 or R^2.
bool in_relative_interior(const std::vector<Point>& points, const Point& y);

/// Point-in-polygon by crossing parity; boundary points are reported as -1,
/// strict inside as 1, outside as 0.
int point_in_polygon(const std::vector<Point2>& polygon, const Point2& p);

}  // namespace plstrat

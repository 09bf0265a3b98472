#pragma once

#include <compare>
#include <vector>

#include "rookh/permutation.hpp"
#include "rookh/tableau.hpp"

namespace rookh {

// Coordinate convention used everywhere: a point (x, y) has x on the
// horizontal axis and y on the vertical axis; the diagram of w puts a point
// at (i, w(i)).
struct Point {
    int x = 0;
    int y = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

// A finite set of lattice points with pairwise distinct x's and pairwise
// distinct y's (a partial permutation matrix). Stored sorted by x.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> points);
    static PointSet diagram(const Permutation& w);

    const std::vector<Point>& points() const { return points_; }
    bool empty() const { return points_.empty(); }
    int size() const { return static_cast<int>(points_.size()); }

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::vector<Point> points_;  // sorted by x
};

// One shadow line: the boundary of the union of northeast-quadrant shadows
// of a subset of the input points. The line descends through its `points`
// (x strictly increasing, y strictly decreasing), turning at a northeast
// `corner` between each consecutive pair. A line through a single point has
// no corners but still both rays.
struct ShadowLine {
    std::vector<Point> points;   // input points on the line, in x order
    std::vector<Point> corners;  // northeast corners: (points[t+1].x, points[t].y)
    int vertical_ray_x = 0;      // = points.front().x, the smallest x on the line
    int horizontal_ray_y = 0;    // = points.back().y, the smallest y on the line
};

// The shadow lines L_1, L_2, ... of ps in construction order: L_1 bounds the
// union of NE shadows of all points, L_2 bounds the shadows of what remains
// after removing the points on L_1, and so on. Every input point lies on
// exactly one line. Empty input gives an empty list.
std::vector<ShadowLine> shadow_lines(const PointSet& ps);

// The set of northeast corners of all shadow lines of ps.
PointSet shadow_set(const PointSet& ps);

// Length of the longest increasing subsequence of w.
int lis(const Permutation& w);

// Schensted correspondence computed through iterated shadow lines: row i of
// P collects the horizontal-ray y-coordinates of the i-th shadow-line
// family, row i of Q the vertical-ray x-coordinates; iteration replaces the
// point set by its shadow set until empty.
TableauPair rsk_viennot(const Permutation& w);

// Schensted correspondence by classical row insertion; independent of the
// shadow-line route and used as its oracle.
TableauPair rsk_insert(const Permutation& w);

}  // namespace rookh

#include "rookh/shadow.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rookh {

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    std::set<int> ys;
    for (size_t i = 0; i < points_.size(); ++i) {
        if (i + 1 < points_.size() && points_[i].x == points_[i + 1].x)
            throw std::invalid_argument("PointSet: x coordinates must be distinct");
        if (!ys.insert(points_[i].y).second)
            throw std::invalid_argument("PointSet: y coordinates must be distinct");
    }
}

PointSet PointSet::diagram(const Permutation& w) {
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(w.size()));
    for (int i = 1; i <= w.size(); ++i) pts.push_back({i, w(i)});
    return PointSet(std::move(pts));
}

std::vector<ShadowLine> shadow_lines(const PointSet& ps) {
    // Scanning left to right, a point joins the first line whose current
    // lowest y still exceeds its own y; otherwise it starts a new line.
    // Line t then consists of the points that survive t-1 rounds of
    // "remove the southwest staircase", which is exactly the iterated
    // boundary description.
    std::vector<ShadowLine> lines;
    for (const Point& p : ps.points()) {
        size_t t = 0;
        while (t < lines.size() && lines[t].points.back().y < p.y) ++t;
        if (t == lines.size()) lines.push_back({});
        lines[t].points.push_back(p);
    }
    for (ShadowLine& line : lines) {
        line.vertical_ray_x = line.points.front().x;
        line.horizontal_ray_y = line.points.back().y;
        for (size_t k = 0; k + 1 < line.points.size(); ++k)
            line.corners.push_back({line.points[k + 1].x, line.points[k].y});
    }
    return lines;
}

PointSet shadow_set(const PointSet& ps) {
    std::vector<Point> corners;
    for (const ShadowLine& line : shadow_lines(ps))
        corners.insert(corners.end(), line.corners.begin(), line.corners.end());
    return PointSet(std::move(corners));
}

int lis(const Permutation& w) {
    // Patience piles: tails[k] = smallest possible tail of an increasing
    // subsequence of length k+1.
    std::vector<int> tails;
    for (int v : w.images()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

TableauPair rsk_viennot(const Permutation& w) {
    std::vector<std::vector<int>> p_rows, q_rows;
    PointSet ps = PointSet::diagram(w);
    while (!ps.empty()) {
        std::vector<int> p_row, q_row;
        for (const ShadowLine& line : shadow_lines(ps)) {
            p_row.push_back(line.horizontal_ray_y);
            q_row.push_back(line.vertical_ray_x);
        }
        std::sort(p_row.begin(), p_row.end());
        std::sort(q_row.begin(), q_row.end());
        p_rows.push_back(std::move(p_row));
        q_rows.push_back(std::move(q_row));
        ps = shadow_set(ps);
    }
    return TableauPair(StandardTableau(std::move(p_rows)), StandardTableau(std::move(q_rows)));
}

TableauPair rsk_insert(const Permutation& w) {
    std::vector<std::vector<int>> p_rows, q_rows;
    for (int i = 1; i <= w.size(); ++i) {
        int x = w(i);
        size_t row = 0;
        while (true) {
            if (row == p_rows.size()) {
                p_rows.push_back({x});
                q_rows.push_back({i});
                break;
            }
            auto it = std::upper_bound(p_rows[row].begin(), p_rows[row].end(), x);
            if (it == p_rows[row].end()) {
                p_rows[row].push_back(x);
                q_rows[row].push_back(i);
                break;
            }
            std::swap(x, *it);  // bump
            ++row;
        }
    }
    return TableauPair(StandardTableau(std::move(p_rows)), StandardTableau(std::move(q_rows)));
}

}  // namespace rookh

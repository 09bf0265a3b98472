#include "rookh/extension.hpp"

#include <stdexcept>

namespace rookh {

namespace {

std::vector<int> missing_values(int bound, const std::vector<int>& used_sorted) {
    std::vector<int> out;
    size_t t = 0;
    for (int v = 1; v <= bound; ++v) {
        while (t < used_sorted.size() && used_sorted[t] < v) ++t;
        if (t == used_sorted.size() || used_sorted[t] != v) out.push_back(v);
    }
    return out;
}

}  // namespace

Permutation extend_to_permutation(const RookPlacement& r, const LocusParams& params) {
    if (r.board_n() != params.n || r.board_m() != params.m)
        throw std::invalid_argument("extend_to_permutation: board mismatch");
    const int rp = r.size();
    if (rp < params.r)
        throw std::invalid_argument("extend_to_permutation: placement smaller than r");

    const int x_offset = params.m - params.r;  // barred columns on the horizontal axis
    const int y_offset = params.n - params.r;  // barred rows on the vertical axis
    const int big = params.extended_size();

    std::vector<int> used_i, used_j;
    for (const Cell& c : r.cells()) used_i.push_back(c.i);
    for (const Cell& c : r.cells()) used_j.push_back(c.j);
    std::sort(used_j.begin(), used_j.end());  // cells are sorted by i already
    const std::vector<int> free_i = missing_values(params.n, used_i);
    const std::vector<int> free_j = missing_values(params.m, used_j);

    std::vector<int> images(static_cast<size_t>(big), 0);
    auto put = [&](ExtendedBoardLabel x, ExtendedBoardLabel y) {
        images[static_cast<size_t>(x.rank(x_offset) - 1)] = y.rank(y_offset);
    };

    for (const Cell& c : r.cells())
        put(ExtendedBoardLabel::plain(c.i), ExtendedBoardLabel::plain(c.j));
    for (int i = 1; i <= rp - params.r; ++i)
        put(ExtendedBoardLabel::bar(i), ExtendedBoardLabel::bar(i));
    // Unused row indices climb through the remaining added columns...
    for (size_t l = 0; l < free_j.size(); ++l)
        put(ExtendedBoardLabel::bar(rp - params.r + static_cast<int>(l) + 1),
            ExtendedBoardLabel::plain(free_j[l]));
    // ...and unused column indices run along the remaining added rows.
    for (size_t k = 0; k < free_i.size(); ++k)
        put(ExtendedBoardLabel::plain(free_i[k]),
            ExtendedBoardLabel::bar(rp - params.r + static_cast<int>(k) + 1));

    return Permutation(std::move(images));
}

RookPlacement extended_shadow_set(const RookPlacement& r, const LocusParams& params) {
    const Permutation ex = extend_to_permutation(r, params);
    const PointSet corners = shadow_set(PointSet::diagram(ex));
    const int x_offset = params.m - params.r;
    const int y_offset = params.n - params.r;
    std::vector<Cell> cells;
    cells.reserve(static_cast<size_t>(corners.size()));
    for (const Point& p : corners.points()) {
        if (p.x <= x_offset || p.y <= y_offset)
            throw std::logic_error("extended_shadow_set: corner escaped the original board");
        cells.push_back({p.x - x_offset, p.y - y_offset});
    }
    return RookPlacement(params.n, params.m, std::move(cells));
}

LatticeProfile profile(const RookPlacement& r) {
    LatticeProfile out;
    out.xs.assign(static_cast<size_t>(r.board_n()), -1);
    out.ys.assign(static_cast<size_t>(r.board_m()), -1);
    for (const Cell& c : r.cells()) {
        out.xs[static_cast<size_t>(c.i - 1)] = 0;
        out.ys[static_cast<size_t>(c.j - 1)] = 0;
    }
    for (const ShadowLine& line : shadow_lines(r.diagram())) {
        out.xs[static_cast<size_t>(line.vertical_ray_x - 1)] = 1;
        out.ys[static_cast<size_t>(line.horizontal_ray_y - 1)] = 1;
    }
    return out;
}

bool is_extended_shadow_set(const RookPlacement& r, const LocusParams& params) {
    if (r.board_n() != params.n || r.board_m() != params.m)
        throw std::invalid_argument("is_extended_shadow_set: board mismatch");
    const LatticeProfile prof = profile(r);
    int sum = 0;
    for (int v : prof.xs)
        if ((sum += v) > params.m - params.r) return false;
    sum = 0;
    for (int v : prof.ys)
        if ((sum += v) > params.n - params.r) return false;
    return true;
}

}  // namespace rookh

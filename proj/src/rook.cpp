#include "rookh/rook.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace rookh {

LocusParams::LocusParams(int n_, int m_, int r_) : n(n_), m(m_), r(r_) {
    if (n < 1 || m < 1) throw std::invalid_argument("LocusParams: need n, m >= 1");
    if (r < 0 || r > min_side())
        throw std::invalid_argument("LocusParams: need 0 <= r <= min(n, m)");
}

RookPlacement::RookPlacement(int n, int m, std::vector<Cell> cells)
    : n_(n), m_(m), cells_(std::move(cells)) {
    if (n_ < 1 || m_ < 1) throw std::invalid_argument("RookPlacement: need n, m >= 1");
    std::sort(cells_.begin(), cells_.end());
    std::set<int> js;
    for (size_t k = 0; k < cells_.size(); ++k) {
        const Cell& c = cells_[k];
        if (c.i < 1 || c.i > n_ || c.j < 1 || c.j > m_)
            throw std::invalid_argument("RookPlacement: cell out of range");
        if (k + 1 < cells_.size() && c.i == cells_[k + 1].i)
            throw std::invalid_argument("RookPlacement: two rooks share a column");
        if (!js.insert(c.j).second)
            throw std::invalid_argument("RookPlacement: two rooks share a row");
    }
}

bool RookPlacement::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

bool RookPlacement::contains_all(const RookPlacement& sub) const {
    for (const Cell& c : sub.cells())
        if (!contains(c)) return false;
    return true;
}

PointSet RookPlacement::diagram() const {
    std::vector<Point> pts;
    pts.reserve(cells_.size());
    for (const Cell& c : cells_) pts.push_back({c.i, c.j});
    return PointSet(std::move(pts));
}

std::vector<RookPlacement> enumerate_rook_placements(int n, int m, int d) {
    if (n < 1 || m < 1) throw std::invalid_argument("enumerate_rook_placements: need n, m >= 1");
    if (d < 0 || d > std::min(n, m))
        throw std::invalid_argument("enumerate_rook_placements: need 0 <= d <= min(n, m)");
    std::vector<RookPlacement> out;
    std::vector<int> rows;  // chosen i's, increasing
    auto assign_columns = [&](auto&& self, std::vector<int>& cols_left, std::vector<Cell>& acc) -> void {
        size_t k = acc.size();
        if (k == rows.size()) {
            out.emplace_back(n, m, acc);
            return;
        }
        for (size_t t = 0; t < cols_left.size(); ++t) {
            int j = cols_left[t];
            cols_left.erase(cols_left.begin() + static_cast<long>(t));
            acc.push_back({rows[k], j});
            self(self, cols_left, acc);
            acc.pop_back();
            cols_left.insert(cols_left.begin() + static_cast<long>(t), j);
        }
    };
    auto choose_rows = [&](auto&& self, int next) -> void {
        if (static_cast<int>(rows.size()) == d) {
            std::vector<int> cols(static_cast<size_t>(m));
            std::iota(cols.begin(), cols.end(), 1);
            std::vector<Cell> acc;
            assign_columns(assign_columns, cols, acc);
            return;
        }
        for (int i = next; i <= n; ++i) {
            rows.push_back(i);
            self(self, i + 1);
            rows.pop_back();
        }
    };
    choose_rows(choose_rows, 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RookPlacement> enumerate_upper_locus(const LocusParams& params) {
    std::vector<RookPlacement> out;
    for (int d = params.r; d <= params.min_side(); ++d) {
        auto slice = enumerate_rook_placements(params.n, params.m, d);
        out.insert(out.end(), slice.begin(), slice.end());
    }
    return out;
}

RookPlacement act(const Permutation& sigma, const Permutation& tau, const RookPlacement& r) {
    if (sigma.size() != r.board_n() || tau.size() != r.board_m())
        throw std::invalid_argument("act: permutation sizes must match the board");
    std::vector<Cell> cells;
    cells.reserve(r.cells().size());
    for (const Cell& c : r.cells()) cells.push_back({sigma(c.i), tau(c.j)});
    return RookPlacement(r.board_n(), r.board_m(), std::move(cells));
}

long long fixed_point_count(const Permutation& sigma, const Permutation& tau,
                            const std::vector<RookPlacement>& locus) {
    long long count = 0;
    for (const RookPlacement& r : locus)
        if (act(sigma, tau, r) == r) ++count;
    return count;
}

}  // namespace rookh

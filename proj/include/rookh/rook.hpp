#pragma once

#include <compare>
#include <vector>

#include "rookh/permutation.hpp"
#include "rookh/shadow.hpp"

namespace rookh {

// Board-and-threshold parameters: an n x m board (first coordinate in [n],
// second in [m]) and a minimum rook count r.
struct LocusParams {
    int n = 1;
    int m = 1;
    int r = 0;

    LocusParams(int n_, int m_, int r_);
    int min_side() const { return n < m ? n : m; }
    int extended_size() const { return n + m - r; }

    friend bool operator==(const LocusParams&, const LocusParams&) = default;
};

struct Cell {
    int i = 0;  // column index in [n] (horizontal axis)
    int j = 0;  // row index in [m] (vertical axis)
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A set of non-attacking cells on an n x m board: all i's distinct, all j's
// distinct. Cells are stored sorted.
class RookPlacement {
public:
    RookPlacement() = default;
    RookPlacement(int n, int m, std::vector<Cell> cells);

    int board_n() const { return n_; }
    int board_m() const { return m_; }
    int size() const { return static_cast<int>(cells_.size()); }
    const std::vector<Cell>& cells() const { return cells_; }
    bool contains(Cell c) const;
    bool contains_all(const RookPlacement& sub) const;
    PointSet diagram() const;

    friend bool operator==(const RookPlacement&, const RookPlacement&) = default;
    friend auto operator<=>(const RookPlacement&, const RookPlacement&) = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Cell> cells_;
};

// All rook placements of size exactly d on the n x m board, sorted by cell
// list. |result| = C(n,d) C(m,d) d!.
std::vector<RookPlacement> enumerate_rook_placements(int n, int m, int d);

// All placements of size >= params.r: sizes ascending, then lexicographic on
// sorted cell lists. This ordering is stable and relied upon by the CLI but
// by no algorithm.
std::vector<RookPlacement> enumerate_upper_locus(const LocusParams& params);

// Row/column permutation action: cells (i,j) -> (sigma(i), tau(j)). A left
// action preserving size.
RookPlacement act(const Permutation& sigma, const Permutation& tau, const RookPlacement& r);

// #{R in locus : act(sigma, tau, R) = R}.
long long fixed_point_count(const Permutation& sigma, const Permutation& tau,
                            const std::vector<RookPlacement>& locus);

}  // namespace rookh

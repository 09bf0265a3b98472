#pragma once

#include <compare>
#include <vector>

#include "rookh/rook.hpp"

namespace rookh {

// A coordinate on the extended board: either one of the added rows/columns
// ("barred") or an original index ("plain"). All barred labels precede all
// plain labels; within each kind the integer decides.
struct ExtendedBoardLabel {
    bool barred = false;
    int k = 1;

    static ExtendedBoardLabel bar(int k) { return {true, k}; }
    static ExtendedBoardLabel plain(int k) { return {false, k}; }

    // Position in 1..(axis length) given how many barred labels the axis has.
    int rank(int barred_count) const { return barred ? k : barred_count + k; }

    friend bool operator==(const ExtendedBoardLabel&, const ExtendedBoardLabel&) = default;
    friend auto operator<=>(const ExtendedBoardLabel& a, const ExtendedBoardLabel& b) {
        if (a.barred != b.barred) return a.barred ? std::strong_ordering::less
                                                  : std::strong_ordering::greater;
        return a.k <=> b.k;
    }
};

// The canonical extension of R (with |R| = r' >= params.r) to a permutation
// of n+m-r letters. The board grows by m-r columns on the left and n-r rows
// on the bottom; points (bar i, bar i) fill the first r'-r added diagonal
// slots, the remaining added columns pick up the unused row indices in
// increasing order, and the remaining added rows pick up the unused column
// indices in increasing order. Axes are relabeled to 1..n+m-r with barred
// labels first (offset m-r horizontally, n-r vertically).
Permutation extend_to_permutation(const RookPlacement& r, const LocusParams& params);

// The shadow set of extend_to_permutation(r, params), re-expressed in the
// original [n] x [m] coordinates. Every corner provably lands back on the
// original board; this is asserted and a violation reports a bug rather
// than rejecting the input.
RookPlacement extended_shadow_set(const RookPlacement& r, const LocusParams& params);

// Per-axis classification of a placement's shadow geometry: entry +1 where a
// shadow line launches a ray on that coordinate, -1 where the coordinate
// misses the placement entirely, 0 otherwise.
struct LatticeProfile {
    std::vector<int> xs;  // length n, xs[i-1] describes the vertical line x = i
    std::vector<int> ys;  // length m, ys[j-1] describes the horizontal line y = j

    friend bool operator==(const LatticeProfile&, const LatticeProfile&) = default;
};

LatticeProfile profile(const RookPlacement& r);

// True iff every prefix sum of profile(r).xs is <= m-r and every prefix sum
// of profile(r).ys is <= n-r; equivalently, r is the extended shadow set of
// some placement of size >= params.r.
bool is_extended_shadow_set(const RookPlacement& r, const LocusParams& params);

}  // namespace rookh

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "rookh/extension.hpp"
#include "rookh/rook.hpp"

using namespace rookh;

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long b = 1;
    for (int t = 0; t < k; ++t) b = b * (n - t) / (t + 1);
    return b;
}

RookPlacement place(int n, int m, std::vector<Cell> cells) {
    return RookPlacement(n, m, std::move(cells));
}

}  // namespace

TEST_CASE("enumerate_rook_placements: counts") {
    CHECK(enumerate_rook_placements(2, 2, 2).size() == 2);
    CHECK(enumerate_rook_placements(3, 5, 0) == std::vector<RookPlacement>{place(3, 5, {})});
    std::vector<size_t> counts44;
    for (int d = 0; d <= 4; ++d) counts44.push_back(enumerate_rook_placements(4, 4, d).size());
    CHECK(counts44 == std::vector<size_t>{1, 16, 72, 96, 24});
    for (int n = 1; n <= 5; ++n)
        for (int m = 1; m <= 5; ++m)
            for (int d = 0; d <= std::min(n, m); ++d)
                CHECK(static_cast<long long>(enumerate_rook_placements(n, m, d).size()) ==
                      binomial(n, d) * binomial(m, d) * factorial(d));
    CHECK_THROWS_AS(enumerate_rook_placements(3, 2, 4), std::invalid_argument);
}

TEST_CASE("enumerate_upper_locus: membership and documented order") {
    auto uz = enumerate_upper_locus(LocusParams(2, 2, 1));
    REQUIRE(uz.size() == 6);
    for (size_t k = 0; k + 1 < uz.size(); ++k) {
        CHECK(uz[k].size() <= uz[k + 1].size());
        if (uz[k].size() == uz[k + 1].size()) CHECK(uz[k].cells() < uz[k + 1].cells());
    }
    CHECK(enumerate_upper_locus(LocusParams(1, 1, 1)) ==
          std::vector<RookPlacement>{place(1, 1, {{1, 1}})});
    CHECK(enumerate_upper_locus(LocusParams(1, 1, 0)).size() == 2);
    CHECK_THROWS_AS(LocusParams(3, 2, 4), std::invalid_argument);
}

TEST_CASE("act: group action, size preserved, orbits") {
    auto r = place(2, 2, {{1, 1}});
    CHECK(act(Permutation::identity(2), Permutation::identity(2), r) == r);
    CHECK(act(Permutation({2, 1}), Permutation::identity(2), r) == place(2, 2, {{2, 1}}));

    std::set<RookPlacement> orbit;
    for (const auto& s : all_permutations(2))
        for (const auto& t : all_permutations(2)) orbit.insert(act(s, t, r));
    CHECK(orbit.size() == 4);

    // act(s1 s2) = act(s1) after act(s2), checked on a 3x3 slice.
    auto sample = enumerate_rook_placements(3, 3, 2);
    for (const auto& s1 : all_permutations(3))
        for (const auto& s2 : all_permutations(3)) {
            const auto& t = Permutation({2, 3, 1});
            for (const auto& rr : sample)
                CHECK(act(compose(s1, s2), t, rr) ==
                      act(s1, Permutation::identity(3), act(s2, t, rr)));
        }
    CHECK_THROWS_AS(act(Permutation::identity(3), Permutation::identity(2), r),
                    std::invalid_argument);
}

TEST_CASE("fixed_point_count") {
    auto uz221 = enumerate_upper_locus(LocusParams(2, 2, 1));
    CHECK(fixed_point_count(Permutation::identity(2), Permutation::identity(2), uz221) == 6);
    auto z221 = enumerate_rook_placements(2, 2, 1);
    CHECK(fixed_point_count(Permutation({2, 1}), Permutation::identity(2), z221) == 0);
    // A singleton (i,j) is fixed iff sigma(i)=i and tau(j)=j.
    CHECK(fixed_point_count(Permutation({2, 1}), Permutation({2, 1}), z221) == 0);
    std::vector<RookPlacement> just_empty{place(2, 2, {})};
    CHECK(fixed_point_count(Permutation({2, 1}), Permutation({2, 1}), just_empty) == 1);
}

TEST_CASE("extend_to_permutation: worked 8x6 example") {
    LocusParams params(8, 6, 2);
    auto r = place(8, 6, {{2, 3}, {3, 4}, {5, 2}, {8, 5}});
    Permutation ex = extend_to_permutation(r, params);
    REQUIRE(ex.size() == 12);
    // Added points on the extended board, before relabeling:
    // (bar1,bar1),(bar2,bar2),(bar3,1),(bar4,6),(1,bar3),(4,bar4),(6,bar5),(7,bar6);
    // barred columns map to 1..4, plain columns to 5..12, barred rows to
    // 1..6, plain rows to 7..12.
    CHECK(ex == Permutation({1, 2, 7, 12, 3, 9, 10, 4, 8, 5, 6, 11}));

    // Restricted to the plain block the extension is the original placement.
    for (const Cell& c : r.cells()) CHECK(ex(c.i + 4) == c.j + 6);
    // Increasing patterns in the added columns and rows.
    for (int x = 1; x + 1 <= 4; ++x) CHECK(ex(x) < ex(x + 1));
    auto inv = ex.inverse();
    for (int y = 1; y + 1 <= 6; ++y) CHECK(inv(y) < inv(y + 1));
}

TEST_CASE("extend_to_permutation: forced tiny cases") {
    CHECK(extend_to_permutation(place(1, 1, {}), LocusParams(1, 1, 0)) == Permutation({2, 1}));
    CHECK(extend_to_permutation(place(1, 1, {{1, 1}}), LocusParams(1, 1, 1)) ==
          Permutation({1}));
    // A full diagonal with n = m = r extends to itself.
    CHECK(extend_to_permutation(place(3, 3, {{1, 1}, {2, 2}, {3, 3}}), LocusParams(3, 3, 3)) ==
          Permutation::identity(3));
    CHECK_THROWS_AS(extend_to_permutation(place(2, 2, {}), LocusParams(2, 2, 1)),
                    std::invalid_argument);
}

TEST_CASE("extend_to_permutation: increasing patterns hold everywhere") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            for (int r = 0; r <= std::min(n, m); ++r) {
                LocusParams params(n, m, r);
                for (const auto& rp : enumerate_upper_locus(params)) {
                    Permutation ex = extend_to_permutation(rp, params);
                    for (int x = 1; x + 1 <= m - r; ++x) CHECK(ex(x) < ex(x + 1));
                    auto inv = ex.inverse();
                    for (int y = 1; y + 1 <= n - r; ++y) CHECK(inv(y) < inv(y + 1));
                    for (const Cell& c : rp.cells()) CHECK(ex(c.i + m - r) == c.j + n - r);
                }
            }
}

TEST_CASE("extended_shadow_set: worked example and tiny cases") {
    CHECK(extended_shadow_set(place(8, 6, {{2, 3}, {3, 4}, {5, 2}, {8, 5}}), LocusParams(8, 6, 2)) ==
          place(8, 6, {{1, 1}, {2, 6}, {4, 3}, {5, 4}, {6, 2}}));
    CHECK(extended_shadow_set(place(1, 1, {{1, 1}}), LocusParams(1, 1, 1)) == place(1, 1, {}));
    CHECK(extended_shadow_set(place(1, 1, {}), LocusParams(1, 1, 0)) == place(1, 1, {{1, 1}}));
}

TEST_CASE("extended_shadow_set: always lands on the board (n,m <= 4)") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            for (int r = 0; r <= std::min(n, m); ++r) {
                LocusParams params(n, m, r);
                for (const auto& rp : enumerate_upper_locus(params))
                    CHECK_NOTHROW(extended_shadow_set(rp, params));
            }
}

TEST_CASE("profile: worked 8x8 sequence and empty placement") {
    auto r = place(8, 8, {{2, 2}, {3, 5}, {4, 3}, {5, 6}, {6, 1}, {7, 7}});
    CHECK(profile(r).xs == std::vector<int>{-1, 1, 1, 0, 1, 0, 1, -1});
    auto empty = profile(place(3, 4, {}));
    CHECK(empty.xs == std::vector<int>{-1, -1, -1});
    CHECK(empty.ys == std::vector<int>{-1, -1, -1, -1});
}

TEST_CASE("is_extended_shadow_set: worked instances") {
    CHECK(is_extended_shadow_set(place(5, 7, {}), LocusParams(5, 7, 3)));
    // With r = 7 on the 8x8 board the x prefix sums reach 2 > m-r = 1 at
    // x = 5, so the placement is not an extended shadow set.
    auto r = place(8, 8, {{2, 2}, {3, 5}, {4, 3}, {5, 6}, {6, 1}, {7, 7}});
    CHECK_FALSE(is_extended_shadow_set(r, LocusParams(8, 8, 7)));
}

TEST_CASE("is_extended_shadow_set: predicate matches the ES image (n,m <= 4)") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m)
            for (int r = 0; r <= std::min(n, m); ++r) {
                LocusParams params(n, m, r);
                auto uz = enumerate_upper_locus(params);
                std::set<RookPlacement> image;
                for (const auto& rp : uz) image.insert(extended_shadow_set(rp, params));
                // ES is injective on the locus...
                CHECK(image.size() == uz.size());
                // ...and its image is exactly the predicate's true-set.
                std::set<RookPlacement> predicate_true;
                for (const auto& cand : enumerate_upper_locus(LocusParams(n, m, 0)))
                    if (is_extended_shadow_set(cand, params)) predicate_true.insert(cand);
                CHECK(image == predicate_true);
            }
}

TEST_CASE("r = 0: extended shadow sets permute the full locus") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= 4; ++m) {
            LocusParams params(n, m, 0);
            auto all = enumerate_upper_locus(params);
            std::set<RookPlacement> image;
            for (const auto& rp : all) image.insert(extended_shadow_set(rp, params));
            CHECK(image == std::set<RookPlacement>(all.begin(), all.end()));
        }
}

TEST_CASE("n = m = r specializes to the permutation-case test") {
    // Thresholds drop to zero: a placement is an extended shadow set iff it
    // is the shadow set of a permutation of the board.
    const int n = 4;
    LocusParams params(n, n, n);
    std::set<RookPlacement> shadow_images;
    for (const auto& w : all_permutations(n)) {
        std::vector<Cell> cells;
        const PointSet corners = shadow_set(PointSet::diagram(w));
        for (const auto& p : corners.points()) cells.push_back({p.x, p.y});
        shadow_images.insert(place(n, n, std::move(cells)));
    }
    for (const auto& cand : enumerate_upper_locus(LocusParams(n, n, 0)))
        CHECK(is_extended_shadow_set(cand, params) == (shadow_images.count(cand) == 1));
}

TEST_CASE("extended board labels order barred before plain") {
    CHECK(ExtendedBoardLabel::bar(3) < ExtendedBoardLabel::plain(1));
    CHECK(ExtendedBoardLabel::bar(1) < ExtendedBoardLabel::bar(2));
    CHECK(ExtendedBoardLabel::plain(2) < ExtendedBoardLabel::plain(5));
    CHECK(ExtendedBoardLabel::bar(2).rank(3) == 2);
    CHECK(ExtendedBoardLabel::plain(2).rank(3) == 5);
}

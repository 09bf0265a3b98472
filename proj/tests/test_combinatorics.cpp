#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "rookh/partition.hpp"
#include "rookh/permutation.hpp"
#include "rookh/shadow.hpp"
#include "rookh/tableau.hpp"

using namespace rookh;

namespace {

// Oracle: count standard tableaux of a shape by exhaustive filling.
long long count_syt_exhaustive(const Partition& shape) {
    const int n = shape.size();
    std::vector<std::vector<int>> rows(static_cast<size_t>(shape.length()));
    auto rec = [&](auto&& self, int next) -> long long {
        if (next > n) return 1;
        long long total = 0;
        for (int i = 0; i < shape.length(); ++i) {
            auto& row = rows[static_cast<size_t>(i)];
            if (static_cast<int>(row.size()) >= shape.part(i)) continue;
            size_t col = row.size();
            if (i > 0 && rows[static_cast<size_t>(i - 1)].size() <= col) continue;
            row.push_back(next);
            total += self(self, next + 1);
            row.pop_back();
        }
        return total;
    };
    return rec(rec, 1);
}

// Oracle: longest increasing subsequence by scanning all 2^n subsequences.
int lis_bruteforce(const Permutation& w) {
    const int n = w.size();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int prev = 0, len = 0;
        bool ok = true;
        for (int i = 1; i <= n && ok; ++i) {
            if (!(mask & (1u << (i - 1)))) continue;
            if (w(i) < prev)
                ok = false;
            else {
                prev = w(i);
                ++len;
            }
        }
        if (ok) best = std::max(best, len);
    }
    return best;
}

PointSet points(std::vector<Point> pts) { return PointSet(std::move(pts)); }

}  // namespace

TEST_CASE("partitions_of: counts and canonical order") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(0)[0] == Partition());
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(10).size() == 42);

    // Reverse-lexicographic: (n) first, then descending-lex.
    auto p4 = partitions_of(4);
    CHECK(p4[0].parts() == std::vector<int>{4});
    CHECK(p4[1].parts() == std::vector<int>{3, 1});
    CHECK(p4[2].parts() == std::vector<int>{2, 2});
    CHECK(p4[3].parts() == std::vector<int>{2, 1, 1});
    CHECK(p4[4].parts() == std::vector<int>{1, 1, 1, 1});

    // Each exactly once.
    for (int n = 0; n <= 9; ++n) {
        auto ps = partitions_of(n);
        std::set<Partition> distinct(ps.begin(), ps.end());
        CHECK(distinct.size() == ps.size());
        for (const auto& p : ps) CHECK(p.size() == n);
    }
}

TEST_CASE("syt_count: hook lengths vs exhaustive enumeration") {
    CHECK(syt_count(Partition({7})) == 1);
    CHECK(syt_count(Partition({2, 1})) == 2);
    CHECK(syt_count(Partition({4, 2, 1})) == 35);
    for (int n = 0; n <= 8; ++n)
        for (const auto& shape : partitions_of(n))
            CHECK(syt_count(shape) == count_syt_exhaustive(shape));
}

TEST_CASE("lis: fixed values and brute force") {
    CHECK(lis(Permutation::identity(6)) == 6);
    CHECK(lis(Permutation({6, 3, 5, 7, 1, 2, 8, 4})) == 4);
    CHECK(lis(Permutation({5, 4, 3, 2, 1})) == 1);
    for (const auto& w : all_permutations(6)) CHECK(lis(w) == lis_bruteforce(w));
}

TEST_CASE("shadow_lines: worked 8-point diagram") {
    auto lines = shadow_lines(PointSet::diagram(Permutation({6, 3, 5, 7, 1, 2, 8, 4})));
    REQUIRE(lines.size() == 4);
    std::set<int> hor, ver;
    for (const auto& line : lines) {
        hor.insert(line.horizontal_ray_y);
        ver.insert(line.vertical_ray_x);
    }
    CHECK(hor == std::set<int>{1, 2, 4, 8});
    CHECK(ver == std::set<int>{1, 3, 4, 7});

    // Every input point lies on exactly one line.
    std::multiset<Point> covered;
    for (const auto& line : lines)
        covered.insert(line.points.begin(), line.points.end());
    CHECK(covered.size() == 8);
    std::set<Point> distinct(covered.begin(), covered.end());
    CHECK(distinct.size() == 8);
}

TEST_CASE("shadow_lines: identity and antichain extremes") {
    auto nested = shadow_lines(PointSet::diagram(Permutation::identity(5)));
    CHECK(nested.size() == 5);
    for (const auto& line : nested) {
        CHECK(line.points.size() == 1);
        CHECK(line.corners.empty());
    }

    std::vector<Point> anti;
    for (int i = 1; i <= 5; ++i) anti.push_back({i, 6 - i});
    auto single = shadow_lines(points(anti));
    REQUIRE(single.size() == 1);
    CHECK(single[0].points.size() == 5);
    CHECK(single[0].corners.size() == 4);
    CHECK(single[0].vertical_ray_x == 1);
    CHECK(single[0].horizontal_ray_y == 1);
}

TEST_CASE("shadow_set: worked example and iteration") {
    PointSet first = shadow_set(PointSet::diagram(Permutation({6, 3, 5, 7, 1, 2, 8, 4})));
    CHECK(first == points({{2, 6}, {5, 3}, {6, 5}, {8, 7}}));
    PointSet second = shadow_set(first);
    CHECK(second == points({{5, 6}}));
    CHECK(shadow_set(second).empty());
    CHECK(shadow_set(PointSet::diagram(Permutation::identity(7))).empty());
}

TEST_CASE("shadow_set: corners inherit input coordinates") {
    for (const auto& w : all_permutations(5)) {
        std::set<int> xs, ys;
        const PointSet diagram = PointSet::diagram(w);
        for (const auto& p : diagram.points()) {
            xs.insert(p.x);
            ys.insert(p.y);
        }
        const PointSet corners = shadow_set(diagram);
        for (const auto& p : corners.points()) {
            CHECK(xs.count(p.x) == 1);
            CHECK(ys.count(p.y) == 1);
        }
    }
}

TEST_CASE("rsk_viennot: worked example tableaux") {
    auto pq = rsk_viennot(Permutation({6, 3, 5, 7, 1, 2, 8, 4}));
    CHECK(pq.p == StandardTableau({{1, 2, 4, 8}, {3, 5, 7}, {6}}));
    CHECK(pq.q == StandardTableau({{1, 3, 4, 7}, {2, 6, 8}, {5}}));
    auto viaInsert = rsk_insert(Permutation({6, 3, 5, 7, 1, 2, 8, 4}));
    CHECK(pq == viaInsert);
}

TEST_CASE("rsk_insert: tiny cases") {
    auto ascending = rsk_insert(Permutation({1, 2}));
    CHECK(ascending.p == StandardTableau({{1, 2}}));
    CHECK(ascending.q == StandardTableau({{1, 2}}));
    auto descending = rsk_insert(Permutation({2, 1}));
    CHECK(descending.p == StandardTableau({{1}, {2}}));
    CHECK(descending.q == StandardTableau({{1}, {2}}));
    auto id = rsk_viennot(Permutation::identity(4));
    CHECK(id.p == StandardTableau({{1, 2, 3, 4}}));
    CHECK(id.q == id.p);
}

TEST_CASE("rsk routes agree, map is injective, shapes partition n") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::vector<int>>>> images;
        for (const auto& w : all_permutations(n)) {
            auto viennot = rsk_viennot(w);
            CHECK(viennot == rsk_insert(w));
            CHECK(viennot.p.shape().size() == n);
            CHECK(viennot.p.content() == Permutation::identity(n).images());
            CHECK(viennot.q.content() == Permutation::identity(n).images());
            images.insert({viennot.p.rows(), viennot.q.rows()});
        }
        CHECK(images.size() == static_cast<size_t>(factorial(n)));
    }
}

TEST_CASE("shadow set size vs lis, first row vs lis") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : all_permutations(n)) {
            CHECK(shadow_set(PointSet::diagram(w)).size() == n - lis(w));
            CHECK(rsk_viennot(w).p.shape().first_part() == lis(w));
        }
}

TEST_CASE("permutation basics") {
    Permutation w({3, 1, 2, 5, 4});
    CHECK(compose(w, w.inverse()) == Permutation::identity(5));
    CHECK(w.cycle_type() == Partition({3, 2}));
    CHECK(class_representative(Partition({3, 2})) == Permutation({2, 3, 1, 5, 4}));
    CHECK(conjugacy_class_size(Partition({3, 2})) == 20);
    CHECK(conjugacy_class_size(Partition({1, 1, 1})) == 1);
    CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
}

TEST_CASE("tableau validation rejects malformed fillings") {
    CHECK_THROWS_AS(StandardTableau({{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau({{2, 3}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau({{1}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(TableauPair(StandardTableau({{1, 2}}), StandardTableau({{1}, {2}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(PointSet({{1, 1}, {1, 2}}), std::invalid_argument);
}

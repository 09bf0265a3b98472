#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rookh/frobenius.hpp"

using namespace rookh;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("character tables: pinned values") {
    auto t1 = character_table(1);
    CHECK(t1.value(P({1}), P({1})) == 1);

    // n = 3, lambda = (2,1): classes in canonical order (3), (2,1), (1,1,1).
    auto t3 = character_table(3);
    CHECK(t3.value(P({2, 1}), P({3})) == -1);
    CHECK(t3.value(P({2, 1}), P({2, 1})) == 0);
    CHECK(t3.value(P({2, 1}), P({1, 1, 1})) == 2);
    CHECK(t3.class_size(P({3})) == 2);
    CHECK(t3.class_size(P({2, 1})) == 3);
    CHECK(t3.class_size(P({1, 1, 1})) == 1);
}

TEST_CASE("character tables: orthogonality and dimensions up to n = 10") {
    for (int n = 1; n <= 10; ++n) {
        const CharacterTable t = character_table(n);
        const int classes = static_cast<int>(t.partitions().size());
        const long long order = factorial(n);
        std::vector<int> identity_parts(static_cast<size_t>(n), 1);
        const int id = t.index_of(P(identity_parts));
        for (int a = 0; a < classes; ++a) {
            CHECK(t.value(a, id) == syt_count(t.partitions()[static_cast<size_t>(a)]));
            for (int b = a; b < classes; ++b) {
                long long dot = 0;
                for (int rho = 0; rho < classes; ++rho)
                    dot += t.class_size(rho) * t.value(a, rho) * t.value(b, rho);
                CHECK(dot == (a == b ? order : 0));
            }
        }
        // Column orthogonality: sum_lambda chi(rho) chi(sigma) = [rho=sigma] n!/|K_rho|.
        for (int rho = 0; rho < classes; ++rho)
            for (int sigma = rho; sigma < classes; ++sigma) {
                long long dot = 0;
                for (int l = 0; l < classes; ++l) dot += t.value(l, rho) * t.value(l, sigma);
                CHECK(dot == (rho == sigma ? order / t.class_size(rho) : 0));
            }
    }
}

TEST_CASE("symmetrizer annihilation: criterion vs restriction, n <= 7") {
    CHECK_FALSE(symmetrizer_annihilates(P({5}), 5));
    CHECK(symmetrizer_annihilates(P({1, 1, 1}), 2));
    for (int n = 1; n <= 7; ++n)
        for (const Partition& lambda : partitions_of(n))
            for (int j = 0; j <= n; ++j)
                CHECK(symmetrizer_annihilates(lambda, j) ==
                      (trivial_multiplicity_in_restriction(lambda, j) == 0));
}

TEST_CASE("kronecker: pinned values and full symmetry") {
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lambda : partitions_of(n)) {
            std::vector<int> row(static_cast<size_t>(n), 1);
            CHECK(kronecker(P({n}), lambda, lambda) == 1);
            CHECK(kronecker(P({n}), lambda, P(row)) == (lambda == P(row) ? 1 : 0));
        }
    CHECK(kronecker(P({1, 1, 1}), P({1, 1, 1}), P({3})) == 1);
    for (int n = 1; n <= 5; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (const auto& c : parts) {
                    const long long v = kronecker(a, b, c);
                    CHECK(v >= 0);
                    CHECK(v == kronecker(b, a, c));
                    CHECK(v == kronecker(a, c, b));
                }
    }
    CHECK_THROWS_AS(kronecker(P({2}), P({1}), P({1})), std::invalid_argument);
}

TEST_CASE("frobenius_from_fixed_points: layers of the slice loci") {
    for (int n = 1; n <= 3; ++n)
        for (int m = 1; m <= 3; ++m) {
            for (int d = 0; d <= std::min(n, m); ++d)
                CHECK(frobenius_from_fixed_points(enumerate_rook_placements(n, m, d), n, m) ==
                      frob_layer(n, m, d));
            for (int r = 0; r <= std::min(n, m); ++r) {
                DoublySchurVector expected(n, m);
                for (int rp = r; rp <= std::min(n, m); ++rp) expected += frob_layer(n, m, rp);
                CHECK(frobenius_from_fixed_points(enumerate_upper_locus(LocusParams(n, m, r)), n,
                                                  m) == expected);
            }
        }

    // The lone empty placement carries the trivial module.
    std::vector<RookPlacement> point{RookPlacement(3, 2, {})};
    DoublySchurVector trivial(3, 2);
    trivial.add(P({3}), P({2}), 1);
    CHECK(frobenius_from_fixed_points(point, 3, 2) == trivial);

    // A locus that is not action-closed must be rejected.
    std::vector<RookPlacement> lopsided{RookPlacement(2, 2, {{1, 1}})};
    CHECK_THROWS_AS(frobenius_from_fixed_points(lopsided, 2, 2), std::invalid_argument);
}

TEST_CASE("graded_frobenius_oracle matches the closed form on small boards") {
    const MonomialOrderSpec spec{};
    {
        auto series = graded_frobenius_oracle(LocusParams(1, 1, 1), spec);
        DoublySchurVector s1s1(1, 1);
        s1s1.add(P({1}), P({1}), 1);
        CHECK(series.layer(0) == s1s1);
        CHECK(series.top_degree() == 0);
    }
    for (int r = 0; r <= 2; ++r)
        CHECK(graded_frobenius_oracle(LocusParams(2, 2, r), spec) ==
              grfrob_main(LocusParams(2, 2, r)));
    CHECK(graded_frobenius_oracle(LocusParams(2, 3, 1), spec) ==
          grfrob_main(LocusParams(2, 3, 1)));
    CHECK(graded_frobenius_oracle(LocusParams(3, 3, 2), spec) ==
          grfrob_main(LocusParams(3, 3, 2)));
}

TEST_CASE("log-concavity checker: vacuous, real, and violating series") {
    // Single layer: nothing to check.
    GradedDoublySchurSeries single(2, 2);
    single.set_layer(0, frob_layer(2, 2, 0));
    CHECK(check_equivariant_log_concavity(single, 2, 2).passed);

    CHECK(check_equivariant_log_concavity(grfrob_main(LocusParams(2, 2, 1)), 2, 2).passed);
    CHECK(check_equivariant_log_concavity(grfrob_main(LocusParams(3, 4, 2)), 3, 4).passed);

    // Dimensions 1, 1, 3 concentrated on the trivial module: the middle
    // square cannot cover the outer product.
    GradedDoublySchurSeries bad(2, 2);
    DoublySchurVector one(2, 2), three(2, 2);
    one.add(P({2}), P({2}), 1);
    three.add(P({2}), P({2}), 3);
    bad.set_layer(0, one);
    bad.set_layer(1, one);
    bad.set_layer(2, three);
    auto report = check_equivariant_log_concavity(bad, 2, 2);
    CHECK_FALSE(report.passed);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].degree == 1);
    CHECK(report.violations[0].row_key == P({2}));
    CHECK(report.violations[0].column_key == P({2}));
    CHECK(report.violations[0].deficit == -2);

    // Fractional layer coefficients are rejected up front.
    GradedDoublySchurSeries frac(1, 1);
    DoublySchurVector half(1, 1);
    half.add(P({1}), P({1}), mpq_class(1, 2));
    frac.set_layer(0, half);
    frac.set_layer(1, half);
    frac.set_layer(2, half);
    CHECK_THROWS_AS(check_equivariant_log_concavity(frac, 1, 1), std::invalid_argument);
}

#include "rookh/verify.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "rookh/frobenius.hpp"
#include "rookh/json_io.hpp"

namespace rookh::verify {

namespace {

constexpr size_t kMaxRecordedFailures = 20;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string triple(int n, int m, int r) {
    std::ostringstream os;
    os << "(" << n << "," << m << "," << r << ")";
    return os.str();
}

template <typename Fn>
SuiteResult timed(const std::string& name, Fn&& body) {
    SuiteResult result;
    result.name = name;
    Timer timer;
    try {
        body(result);
    } catch (const std::exception& e) {
        result.expect(false, std::string("exception: ") + e.what());
    }
    result.ms = timer.ms();
    return result;
}

const MonomialOrderSpec kDefaultOrder{};

}  // namespace

void SuiteResult::expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    passed = false;
    if (failures.size() < kMaxRecordedFailures) failures.push_back(what);
}

SuiteResult shadow_worked_example() {
    return timed("shadow-worked-example", [](SuiteResult& out) {
        const Permutation w({6, 3, 5, 7, 1, 2, 8, 4});
        const PointSet first = shadow_set(PointSet::diagram(w));
        out.expect(first == PointSet({{2, 6}, {5, 3}, {6, 5}, {8, 7}}), "shadow set of the worked"
                                                                        " permutation");
        out.expect(shadow_set(first) == PointSet({{5, 6}}), "iterated shadow set");
        const TableauPair pq = rsk_viennot(w);
        out.expect(pq.p == StandardTableau({{1, 2, 4, 8}, {3, 5, 7}, {6}}), "insertion tableau");
        out.expect(pq.q == StandardTableau({{1, 3, 4, 7}, {2, 6, 8}, {5}}), "recording tableau");
    });
}

SuiteResult rsk_equivalence(int max_n) {
    return timed("rsk-equivalence", [max_n](SuiteResult& out) {
        for (int n = 1; n <= max_n; ++n)
            for (const Permutation& w : all_permutations(n)) {
                const TableauPair viennot = rsk_viennot(w);
                if (!(viennot == rsk_insert(w))) {
                    out.expect(false, "route mismatch at n=" + std::to_string(n));
                    continue;
                }
                ++out.checks;
                out.expect(shadow_set(PointSet::diagram(w)).size() == n - lis(w),
                           "shadow size law at n=" + std::to_string(n));
                out.expect(viennot.p.shape().first_part() == lis(w),
                           "first row law at n=" + std::to_string(n));
            }
    });
}

SuiteResult extension_worked_example() {
    return timed("extension-worked-example", [](SuiteResult& out) {
        const LocusParams params(8, 6, 2);
        const RookPlacement placement(8, 6, {{2, 3}, {3, 4}, {5, 2}, {8, 5}});
        out.expect(extend_to_permutation(placement, params) ==
                       Permutation({1, 2, 7, 12, 3, 9, 10, 4, 8, 5, 6, 11}),
                   "extended permutation");
        out.expect(extended_shadow_set(placement, params) ==
                       RookPlacement(8, 6, {{1, 1}, {2, 6}, {4, 3}, {5, 4}, {6, 2}}),
                   "extended shadow set");
        out.expect(shadow_monomial(placement, params) ==
                       Monomial({{{1, 1}, 1}, {{2, 6}, 1}, {{4, 3}, 1}, {{5, 4}, 1}, {{6, 2}, 1}}),
                   "extended shadow monomial");
    });
}

SuiteResult basis_theorem(int max_side) {
    return timed("basis-theorem", [max_side](SuiteResult& out) {
        for (int n = 1; n <= max_side; ++n)
            for (int m = 1; m <= max_side; ++m)
                for (int r = 0; r <= std::min(n, m); ++r) {
                    const LocusParams params(n, m, r);
                    const auto locus = enumerate_upper_locus(params);
                    const auto basis = standard_monomials(locus, kDefaultOrder);

                    std::set<Monomial> expected;
                    for (const auto& rp : locus) expected.insert(shadow_monomial(rp, params));
                    out.expect(expected.size() == locus.size(),
                               "shadow monomials not distinct at " + triple(n, m, r));
                    out.expect(std::set<Monomial>(basis.begin(), basis.end()) == expected,
                               "standard monomials differ from shadow monomials at " +
                                   triple(n, m, r));

                    const auto gens = generators_I(params);
                    GradedMembershipTester tester(locus);
                    for (const auto& g : gens)
                        out.expect(tester.contains(g),
                                   "generator outside graded ideal at " + triple(n, m, r));

                    std::vector<long long> std_by_degree(static_cast<size_t>(params.min_side()) + 1,
                                                         0);
                    for (const auto& b : basis) std_by_degree[static_cast<size_t>(b.degree())]++;
                    for (int d = 0; d <= params.min_side(); ++d)
                        out.expect(ideal_degree_dimension(gens, d, n, m) +
                                           std_by_degree[static_cast<size_t>(d)] ==
                                       monomial_space_dimension(n, m, d),
                                   "dimension audit failed at " + triple(n, m, r) +
                                       " degree " + std::to_string(d));
                }
    });
}

SuiteResult hilbert_agreement(int oracle_side, int formula_side) {
    return timed("hilbert-agreement", [=](SuiteResult& out) {
        out.expect(hilbert_series_via_lis(LocusParams(2, 2, 1)) ==
                       std::vector<long long>{1, 4, 1},
                   "pinned series at (2,2,1)");
        for (int n = 1; n <= formula_side; ++n)
            for (int m = 1; m <= formula_side; ++m)
                for (int r = 0; r <= std::min(n, m); ++r) {
                    const LocusParams params(n, m, r);
                    const auto via_lis = hilbert_series_via_lis(params);
                    out.expect(via_lis == dimension(grfrob_main(params)),
                               "lis vs formula at " + triple(n, m, r));
                    if (n <= oracle_side && m <= oracle_side) {
                        const auto locus = enumerate_upper_locus(params);
                        out.expect(via_lis == hilbert_series_oracle(locus, kDefaultOrder),
                                   "lis vs oracle at " + triple(n, m, r));
                        MonomialOrderSpec other = kDefaultOrder;
                        other.tiebreak = AntidiagonalTieBreak::smaller_i_first;
                        out.expect(via_lis == hilbert_series_oracle(locus, other),
                                   "lis vs oracle (alternate tie-break) at " + triple(n, m, r));
                    }
                }
    });
}

SuiteResult schur_identities(int grid, int sum_side) {
    return timed("schur-identities", [=](SuiteResult& out) {
        for (int d = 0; d <= grid; ++d)
            for (int a = 0; a <= grid; ++a)
                for (int b = 0; b <= grid; ++b)
                    for (int p = 0; p <= grid; ++p)
                        for (int q = 0; q <= grid; ++q) {
                            const DoublySchurVector direct = truncated_pieri_sum(d, a, b, p, q);
                            bool all = true;
                            for (const Partition& left : partitions_of(a + d))
                                for (const Partition& right : partitions_of(b + d))
                                    all = all && lemma_coef(d, a, b, p, q, left, right) ==
                                                     direct.coefficient(left, right);
                            out.expect(all, "coefficient formula at d,a,b,p,q grid point");
                            out.expect(check_interchange(d, a, b, p, q),
                                       "interchange identity at grid point");
                        }
        for (int n = 1; n <= sum_side; ++n)
            for (int m = 1; m <= sum_side; ++m)
                for (int r = 0; r <= std::min(n, m); ++r)
                    out.expect(check_sum_identity(LocusParams(n, m, r)),
                               "sum identity at " + triple(n, m, r));
    });
}

SuiteResult module_structure(int fixed_side,
                             const std::vector<std::pair<int, int>>& graded_pairs) {
    return timed("module-structure", [=](SuiteResult& out) {
        for (const auto& [n, m] : graded_pairs)
            for (int r = 0; r <= std::min(n, m); ++r) {
                const LocusParams params(n, m, r);
                out.expect(graded_frobenius_oracle(params, kDefaultOrder) == grfrob_main(params),
                           "graded oracle vs closed form at " + triple(n, m, r));
            }
        for (int n = 1; n <= fixed_side; ++n)
            for (int m = 1; m <= fixed_side; ++m)
                for (int r = 0; r <= std::min(n, m); ++r) {
                    DoublySchurVector expected(n, m);
                    for (int rp = r; rp <= std::min(n, m); ++rp)
                        expected += frob_layer(n, m, rp);
                    out.expect(frobenius_from_fixed_points(
                                   enumerate_upper_locus(LocusParams(n, m, r)), n, m) == expected,
                               "fixed-point decomposition at " + triple(n, m, r));
                }
    });
}

SuiteResult log_concavity(int max_n, int max_m) {
    return timed("log-concavity", [=](SuiteResult& out) {
        for (int n = 1; n <= max_n; ++n) {
            const CharacterTable tn = character_table(n);
            for (int m = 1; m <= max_m; ++m) {
                const CharacterTable tm = character_table(m);
                for (int r = 0; r <= std::min(n, m); ++r) {
                    const auto report = check_equivariant_log_concavity(
                        grfrob_main(LocusParams(n, m, r)), tn, tm);
                    out.expect(report.passed,
                               "log-concavity violation at " + triple(n, m, r) +
                                   (report.violations.empty()
                                        ? ""
                                        : " first at degree " +
                                              std::to_string(report.violations.front().degree)));
                }
            }
        }
    });
}

SuiteResult annihilator_lemma(int max_n) {
    return timed("annihilator-lemma", [=](SuiteResult& out) {
        for (int n = 1; n <= max_n; ++n)
            for (const Partition& lambda : partitions_of(n))
                for (int j = 0; j <= n; ++j)
                    out.expect(symmetrizer_annihilates(lambda, j) ==
                                   (trivial_multiplicity_in_restriction(lambda, j) == 0),
                               "criterion vs restriction at n=" + std::to_string(n));
    });
}

SuiteResult symmetrizer_membership(int max_side) {
    return timed("symmetrizer-membership", [=](SuiteResult& out) {
        for (int n = 1; n <= max_side; ++n)
            for (int m = 1; m <= max_side; ++m)
                for (int r = 0; r <= std::min(n, m); ++r) {
                    const LocusParams params(n, m, r);
                    GradedMembershipTester tester(enumerate_upper_locus(params));
                    for (int d = 0; d <= params.min_side(); ++d) {
                        const auto slice = enumerate_rook_placements(n, m, d);
                        const int bound = n + m - d - r;
                        for (int size = bound + 1; size <= n; ++size) {
                            std::vector<int> support;
                            auto rec = [&](auto&& self, int next) -> void {
                                if (static_cast<int>(support.size()) == size) {
                                    for (const auto& rp : slice)
                                        out.expect(
                                            tester.contains(row_symmetrizer_element(support, rp)),
                                            "row symmetrizer escaped at " + triple(n, m, r));
                                    return;
                                }
                                for (int v = next; v <= n; ++v) {
                                    support.push_back(v);
                                    self(self, v + 1);
                                    support.pop_back();
                                }
                            };
                            rec(rec, 1);
                        }
                        for (int size = bound + 1; size <= m; ++size) {
                            std::vector<int> support;
                            auto rec = [&](auto&& self, int next) -> void {
                                if (static_cast<int>(support.size()) == size) {
                                    for (const auto& rp : slice)
                                        out.expect(tester.contains(
                                                       column_symmetrizer_element(support, rp)),
                                                   "column symmetrizer escaped at " +
                                                       triple(n, m, r));
                                    return;
                                }
                                for (int v = next; v <= m; ++v) {
                                    support.push_back(v);
                                    self(self, v + 1);
                                    support.pop_back();
                                }
                            };
                            rec(rec, 1);
                        }
                    }
                }
    });
}

SuiteResult vanishing_witnesses_suite(int max_side) {
    return timed("vanishing-witnesses", [=](SuiteResult& out) {
        for (int n = 1; n <= max_side; ++n)
            for (int m = 1; m <= max_side; ++m)
                for (int r = 0; r <= std::min(n, m); ++r) {
                    const LocusParams params(n, m, r);
                    const auto locus = enumerate_upper_locus(params);
                    for (const auto& w : vanishing_witnesses(params)) {
                        bool all = true;
                        for (const auto& pt : locus) all = all && w.evaluate(pt) == 0;
                        out.expect(all, "witness fails to vanish at " + triple(n, m, r));
                    }
                }
    });
}

SuiteResult cache_roundtrip(const std::filesystem::path& dir) {
    return timed("cache-roundtrip", [=](SuiteResult& out) {
        std::filesystem::create_directories(dir);
        const int n = 5;
        const auto path = character_table_cache_path(n, dir);
        std::filesystem::remove(path);

        const CharacterTable fresh = character_table_cached(n, dir);
        out.expect(fresh == character_table(n), "cached table equals recomputation");
        std::ifstream in(path);
        std::stringstream bytes;
        bytes << in.rdbuf();
        out.expect(bytes.str() == render_character_table_cache(fresh),
                   "cache file is byte-identical to the renderer");

        const CharacterTable reread = character_table_cached(n, dir);
        out.expect(reread == fresh, "cache hit equals first result");

        std::ofstream(path, std::ios::trunc) << "{ not json";
        const CharacterTable rebuilt = character_table_cached(n, dir);
        out.expect(rebuilt == fresh, "corrupt cache is rebuilt");
        std::ifstream again(path);
        std::stringstream bytes2;
        bytes2 << again.rdbuf();
        out.expect(bytes2.str() == render_character_table_cache(fresh),
                   "rebuilt cache is byte-identical");
    });
}

std::vector<std::string> suite_names() {
    return {"shadow",  "rsk",          "extension", "basis",       "hilbert",  "identities",
            "module",  "logconcave",   "annihilator", "symmetrizer", "witnesses", "cache"};
}

SuiteResult run_suite(const std::string& name, int scale, const std::filesystem::path& cache_dir) {
    const bool quick = scale < 0;
    const bool full = scale > 0;
    if (name == "shadow") return shadow_worked_example();
    if (name == "rsk") return rsk_equivalence(quick ? 5 : 7);
    if (name == "extension") return extension_worked_example();
    if (name == "basis") return basis_theorem(quick ? 3 : 4);
    if (name == "hilbert") return hilbert_agreement(quick ? 3 : 4, quick ? 4 : 5);
    if (name == "identities") return schur_identities(quick ? 3 : 4, quick ? 4 : 6);
    if (name == "module") {
        std::vector<std::pair<int, int>> pairs{{2, 2}, {2, 3}, {3, 3}};
        if (!quick) pairs.push_back({3, 4});
        return module_structure(quick ? 3 : 4, pairs);
    }
    if (name == "logconcave") return full ? log_concavity(8, 10) : log_concavity(5, 6);
    if (name == "annihilator") return annihilator_lemma(quick ? 6 : 7);
    if (name == "symmetrizer") return symmetrizer_membership(quick ? 3 : 4);
    if (name == "witnesses") return vanishing_witnesses_suite(quick ? 4 : 5);
    if (name == "cache") return cache_roundtrip(cache_dir);
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace rookh::verify

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace rookh::verify {

// Outcome of one verification suite. Checks count every comparison made;
// failures carry a short description of each mismatch (capped).
struct SuiteResult {
    std::string name;
    bool passed = true;
    long long checks = 0;
    std::vector<std::string> failures;
    double ms = 0;

    void expect(bool ok, const std::string& what);
};

// Exact reproduction of the worked shadow-line figures: the fixed
// 8-element permutation's shadow set, its iterate, and both tableaux.
SuiteResult shadow_worked_example();

// rsk_viennot == rsk_insert over all of S_1..S_max_n, plus the shadow-set
// size law |S(w)| = n - lis(w) and first-row law.
SuiteResult rsk_equivalence(int max_n);

// Exact reproduction of the worked extension: the fixed 4-rook placement on
// the 8 x 6 board with r = 2, its extended permutation and shadow set.
SuiteResult extension_worked_example();

// For every board with sides <= max_side and every r: the standard monomial
// basis equals the extended shadow monomials, every generator lies in the
// graded vanishing ideal, and the degreewise dimension audit
//   dim (ideal)_d + #standard monomials of degree d = dim of the full
//   degree-d monomial space
// certifies that the generators present the whole graded ideal.
SuiteResult basis_theorem(int max_side);

// Hilbert series agreement: the lis route equals the dimension series of
// the closed-form graded Frobenius image for sides <= formula_side, and
// equals the standard-monomial histogram for sides <= oracle_side (under
// two different tie-breaks). Includes the pinned [1,4,1] instance.
SuiteResult hilbert_agreement(int oracle_side, int formula_side);

// Closed-form coefficient vs direct Pieri expansion on the full grid
// d,a,b,p,q <= grid; the interchange identity on the same grid; the
// truncated-sum collapse for sides <= sum_side, all r.
SuiteResult schur_identities(int grid, int sum_side);

// Module structure: the graded character oracle equals the closed form for
// all r at the listed (n, m) pairs, and the ungraded fixed-point
// decomposition equals the layer sum for sides <= fixed_side.
SuiteResult module_structure(int fixed_side,
                             const std::vector<std::pair<int, int>>& graded_pairs);

// Equivariant log-concavity of the closed-form series for all n <= max_n,
// m <= max_m, r <= min(n, m).
SuiteResult log_concavity(int max_n, int max_m);

// The first-part criterion for symmetrizer annihilation against the
// character-restriction computation, all shapes of size <= max_n, all j.
SuiteResult annihilator_lemma(int max_n);

// Row and column symmetrizer elements with support larger than n+m-d-r land
// in the graded vanishing ideal, for sides <= max_side.
SuiteResult symmetrizer_membership(int max_side);

// Vanishing witnesses evaluate to zero on every locus point, sides <= max_side.
SuiteResult vanishing_witnesses_suite(int max_side);

// Character-table disk cache: byte-identical rewrite, corrupt-file rebuild.
SuiteResult cache_roundtrip(const std::filesystem::path& dir);

// Named registry for the CLI. scale < 0 shrinks the bounds for a quick
// pass, 0 runs the documented defaults, > 0 widens log_concavity to the
// full claimed range.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, int scale, const std::filesystem::path& cache_dir);

}  // namespace rookh::verify

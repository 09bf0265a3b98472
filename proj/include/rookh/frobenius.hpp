#pragma once

#include "rookh/character_table.hpp"
#include "rookh/quotient.hpp"
#include "rookh/schur.hpp"

namespace rookh {

// A rational-valued function on conjugacy class pairs of S_n x S_m, indexed
// by the canonical partition orders of the two character tables.
class ClassFunction2D {
public:
    ClassFunction2D(int classes_n, int classes_m)
        : classes_n_(classes_n), classes_m_(classes_m),
          values_(static_cast<size_t>(classes_n) * static_cast<size_t>(classes_m), 0) {}

    int classes_n() const { return classes_n_; }
    int classes_m() const { return classes_m_; }
    mpq_class& at(int rho, int sigma) { return values_[index(rho, sigma)]; }
    const mpq_class& at(int rho, int sigma) const { return values_[index(rho, sigma)]; }

private:
    size_t index(int rho, int sigma) const {
        return static_cast<size_t>(rho) * classes_m_ + sigma;
    }
    int classes_n_, classes_m_;
    std::vector<mpq_class> values_;
};

// Decomposes the permutation module spanned by a locus closed under the row/
// column action: coefficient of s_lambda (x) s_mu is
// (1/(n! m!)) sum over class pairs of |K_rho||K_sigma| fix(rho,sigma)
// chi^lambda(rho) chi^mu(sigma), with one representative per class pair.
// Throws if any multiplicity comes out negative or fractional (the sign that
// the locus is not closed under the action).
DoublySchurVector frobenius_from_fixed_points(const std::vector<RookPlacement>& locus, int n,
                                              int m);

// Graded Frobenius image of the quotient modeled by a GradedQuotientModel:
// the trace of each class-pair representative on the degree-d layer is the
// sum over degree-d basis monomials of the coefficient of the monomial in
// the normal form of its image; traces are then decomposed against the
// character tables. Must reproduce grfrob_main on upper loci.
GradedDoublySchurSeries graded_frobenius_oracle(const GradedQuotientModel& model);
GradedDoublySchurSeries graded_frobenius_oracle(const LocusParams& params,
                                                const MonomialOrderSpec& spec);

struct LogConcavityViolation {
    int degree = 0;  // the internal degree i whose square fails to dominate
    Partition row_key;
    Partition column_key;
    long long deficit = 0;  // mult(V_i (x) V_i) - mult(V_{i-1} (x) V_{i+1}), negative
};

struct LogConcavityReport {
    bool passed = true;
    std::vector<LogConcavityViolation> violations;
};

// Checks the multiplicity criterion for the surjections
// V_i (x) V_i ->> V_{i-1} (x) V_{i+1} at every internal degree of the series
// under the diagonal action: for each irreducible pair the multiplicity in
// the square must dominate. Tensor characters are pointwise products of
// layer characters on class pairs. Violations are report content, not
// errors. Layer multiplicities must be nonnegative integers.
LogConcavityReport check_equivariant_log_concavity(const GradedDoublySchurSeries& series,
                                                   const CharacterTable& table_n,
                                                   const CharacterTable& table_m);
LogConcavityReport check_equivariant_log_concavity(const GradedDoublySchurSeries& series, int n,
                                                   int m);

}  // namespace rookh

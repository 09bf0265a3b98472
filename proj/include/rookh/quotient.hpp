#pragma once

#include <map>
#include <vector>

#include "rookh/exact_matrix.hpp"
#include "rookh/ideal.hpp"

namespace rookh {

// Evaluation vector of a monomial over the locus points, in locus order.
std::vector<mpq_class> evaluation_vector(const Monomial& m,
                                         const std::vector<RookPlacement>& locus);
std::vector<mpq_class> evaluation_vector(const PolynomialExact& f,
                                         const std::vector<RookPlacement>& locus);

// The standard monomial basis of the associated graded vanishing ideal of
// the locus, in increasing order: scan candidate monomials from small to
// large under `spec`, keeping each monomial whose evaluation vector on the
// locus falls outside the span of the evaluations of the monomials already
// kept, until |locus| monomials are kept.
//
// Candidates are restricted to squarefree monomials supported on rook
// placements. This loses nothing: a monomial whose support hits one row or
// column twice vanishes identically on rook placements, so it lies in the
// vanishing ideal and is its own initial term; and a non-squarefree monomial
// m with rook support S evaluates like the lower-degree monomial of S, so
// m - monomial_of(S) is in the ideal with initial term m under any
// degree-compatible order. Either way such a monomial sits in the initial
// ideal and is never standard.
//
// Requires spec.degree_then_lex: the greedy scan characterizes standard
// monomials of the *graded* ideal only when the order refines total degree.
// (For the homogeneous ideals arising here the pure-lex and degree-then-lex
// initial ideals coincide, but the scan itself needs the graded refinement.)
std::vector<Monomial> standard_monomials(const std::vector<RookPlacement>& locus,
                                         const MonomialOrderSpec& spec);

// Membership oracle for the associated graded vanishing ideal of a locus: a
// homogeneous f of degree d lies in gr I(locus) iff its evaluation vector is
// spanned by the evaluations of the monomials of degree < d. Spans are
// built lazily and shared across queries.
class GradedMembershipTester {
public:
    explicit GradedMembershipTester(std::vector<RookPlacement> locus);

    const std::vector<RookPlacement>& locus() const { return locus_; }
    bool contains(const PolynomialExact& f) const;

private:
    std::vector<RookPlacement> locus_;
    // span_below_[d]: evaluations of all placements of size < d; the last
    // entry already holds every placement and serves all larger degrees.
    std::vector<RowSpanBuilder> span_below_;
};

bool graded_ideal_membership(const PolynomialExact& f, const std::vector<RookPlacement>& locus);

// The graded quotient by the associated graded vanishing ideal of the locus
// of placements of size >= params.r: holds the locus, the standard monomial
// basis, and the inverted evaluation matrix enabling normal-form solves.
class GradedQuotientModel {
public:
    GradedQuotientModel(const LocusParams& params, const MonomialOrderSpec& spec);

    const LocusParams& params() const { return params_; }
    const MonomialOrderSpec& order() const { return spec_; }
    const std::vector<RookPlacement>& locus() const { return locus_; }
    const std::vector<Monomial>& basis() const { return basis_; }
    int basis_degree(size_t k) const { return basis_degrees_[k]; }

    // Coefficients over the basis monomials of degree exactly deg(m) in the
    // expansion of m modulo the graded ideal; zero map for members.
    std::map<Monomial, mpq_class> normal_form(const Monomial& m) const;

    // Single normal-form coefficient: the weight of basis()[k] in the
    // expansion of the squarefree monomial supported on `support`.
    mpq_class basis_coefficient(size_t k, const RookPlacement& support) const;

private:
    LocusParams params_;
    MonomialOrderSpec spec_;
    std::vector<RookPlacement> locus_;
    std::vector<Monomial> basis_;
    std::vector<int> basis_degrees_;
    ExactMatrix inverse_;  // inverse of the |locus| x |basis| evaluation matrix
};

// Coefficient list of the Hilbert series: entry d counts placements R of
// size >= r with n+m-r - lis(extend_to_permutation(R)) = d.
std::vector<long long> hilbert_series_via_lis(const LocusParams& params);

// Degree histogram of standard_monomials(locus, spec).
std::vector<long long> hilbert_series_oracle(const std::vector<RookPlacement>& locus,
                                             const MonomialOrderSpec& spec);

}  // namespace rookh

#pragma once

#include <vector>

#include "rookh/extension.hpp"
#include "rookh/polynomial.hpp"

namespace rookh {

// monomial_of(extended_shadow_set(r, params)); its degree is
// n+m-r-lis(extend_to_permutation(r, params)).
Monomial shadow_monomial(const RookPlacement& r, const LocusParams& params);

// The four generator families of the graded ideal: products of two variables
// from one row (squares included), products of two variables from one
// column, products of n-r+1 distinct row sums, and products of m-r+1
// distinct column sums. The sum-product families are empty when r = 0.
// Duplicates across families are emitted once.
std::vector<PolynomialExact> generators_I(const LocusParams& params);

// Inhomogeneous polynomials vanishing on every placement of size >= r: the
// quadratic generators together with the products of (row sum - 1) over
// n-r+1 distinct rows and (column sum - 1) over m-r+1 distinct columns. The
// top component of each witness is the corresponding generator.
std::vector<PolynomialExact> vanishing_witnesses(const LocusParams& params);

// Sum over all bijections w of the set S (extended by the identity) of the
// monomial of w applied to r's rows: sum_w prod_{(i,j) in r} x_{w(i),j}.
// Coinciding images accumulate their multiplicity.
PolynomialExact row_symmetrizer_element(const std::vector<int>& s, const RookPlacement& r);
// Column analogue, permuting j within T.
PolynomialExact column_symmetrizer_element(const std::vector<int>& t, const RookPlacement& r);

// Dimension of the span of { g * m : g in gens, m a monomial on the n x m
// grid, deg(g*m) = degree }, by exact incremental elimination. Generators
// must be homogeneous.
long long ideal_degree_dimension(const std::vector<PolynomialExact>& gens, int degree, int n,
                                 int m);

// Number of monomials of the given degree in n*m variables.
long long monomial_space_dimension(int n, int m, int degree);

// All monomials of exactly the given degree on the n x m grid.
std::vector<Monomial> all_monomials_of_degree(int n, int m, int degree);

}  // namespace rookh

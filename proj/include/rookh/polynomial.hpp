#pragma once

#include <gmpxx.h>

#include <map>

#include "rookh/monomial.hpp"

namespace rookh {

// A polynomial with exact rational coefficients, stored as a sparse map with
// no zero coefficients.
class PolynomialExact {
public:
    using Terms = std::map<Monomial, mpq_class>;

    PolynomialExact() = default;
    static PolynomialExact constant(const mpq_class& c);
    static PolynomialExact term(const Monomial& m, const mpq_class& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const;
    bool is_homogeneous() const;

    void add_term(const Monomial& m, const mpq_class& c);
    PolynomialExact& operator+=(const PolynomialExact& o);
    PolynomialExact& operator-=(const PolynomialExact& o);
    friend PolynomialExact operator+(PolynomialExact a, const PolynomialExact& b);
    friend PolynomialExact operator-(PolynomialExact a, const PolynomialExact& b);
    friend PolynomialExact operator*(const PolynomialExact& a, const PolynomialExact& b);
    PolynomialExact& operator*=(const mpq_class& c);

    // The top-degree homogeneous part (zero polynomial for zero input).
    PolynomialExact top_component() const;
    // Largest monomial under the given order; requires a nonzero polynomial.
    const Monomial& initial_monomial(const MonomialOrderSpec& spec) const;

    // Substitute 1 at the cells of r and 0 elsewhere. Throws if a variable
    // falls outside r's board.
    mpq_class evaluate(const RookPlacement& r) const;

    friend bool operator==(const PolynomialExact&, const PolynomialExact&) = default;

private:
    Terms terms_;
};

// Evaluation of a single monomial at a placement: 1 iff the monomial's
// support is contained in r.
mpq_class evaluate(const Monomial& m, const RookPlacement& r);

}  // namespace rookh

#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "rookh/rook.hpp"

namespace rookh {

// Index of the variable x_{i,j} on an n x m board.
struct VariableIndex {
    int i = 1;
    int j = 1;
    friend bool operator==(const VariableIndex&, const VariableIndex&) = default;
    friend auto operator<=>(const VariableIndex&, const VariableIndex&) = default;
};

// A monomial over the variable grid: sparse exponent vector, no zero
// exponents stored. The empty monomial is 1.
class Monomial {
public:
    Monomial() = default;
    static Monomial variable(VariableIndex v);
    explicit Monomial(std::vector<std::pair<VariableIndex, int>> factors);

    const std::vector<std::pair<VariableIndex, int>>& factors() const { return factors_; }
    int degree() const;
    bool is_one() const { return factors_.empty(); }
    bool squarefree() const;
    int exponent(VariableIndex v) const;
    Monomial operator*(const Monomial& o) const;

    // Key order for containers; use compare() for the monomial order.
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::pair<VariableIndex, int>> factors_;  // sorted by variable
};

// Squarefree product of the variables at the cells of r.
Monomial monomial_of(const RookPlacement& r);

// The two conventions for ranking variables by antidiagonal i+j:
// `example` makes variables on small antidiagonals largest (x_{1,1} is the
// greatest variable), `definition` makes them smallest. The induced
// lexicographic orders differ, and only one of them makes the increasing
// chain of a symmetrized placement the leading term; both stay selectable.
enum class DiagonalDirection { example, definition };

// Within one antidiagonal: whether larger i means a larger variable.
enum class AntidiagonalTieBreak { larger_i_first, smaller_i_first };

// A diagonal monomial order: variable comparability decided first by i+j,
// then by the tie-break; monomials compared lexicographically, optionally
// with total degree taken first. Orders constructed here always satisfy the
// monomial-order axioms (1 is minimal, multiplication preserves order).
struct MonomialOrderSpec {
    DiagonalDirection direction = DiagonalDirection::example;
    AntidiagonalTieBreak tiebreak = AntidiagonalTieBreak::larger_i_first;
    bool degree_then_lex = true;

    bool variable_greater(VariableIndex a, VariableIndex b) const;

    friend bool operator==(const MonomialOrderSpec&, const MonomialOrderSpec&) = default;
};

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrderSpec& spec);

inline bool monomial_less(const Monomial& a, const Monomial& b, const MonomialOrderSpec& spec) {
    return compare(a, b, spec) == std::strong_ordering::less;
}

}  // namespace rookh

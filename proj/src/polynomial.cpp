#include "rookh/polynomial.hpp"

#include <stdexcept>

namespace rookh {

PolynomialExact PolynomialExact::constant(const mpq_class& c) {
    return term(Monomial(), c);
}

PolynomialExact PolynomialExact::term(const Monomial& m, const mpq_class& c) {
    PolynomialExact p;
    p.add_term(m, c);
    return p;
}

int PolynomialExact::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool PolynomialExact::is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        if (d == -1) d = m.degree();
        if (m.degree() != d) return false;
    }
    return true;
}

void PolynomialExact::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PolynomialExact& PolynomialExact::operator+=(const PolynomialExact& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

PolynomialExact& PolynomialExact::operator-=(const PolynomialExact& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

PolynomialExact operator+(PolynomialExact a, const PolynomialExact& b) { return a += b; }
PolynomialExact operator-(PolynomialExact a, const PolynomialExact& b) { return a -= b; }

PolynomialExact operator*(const PolynomialExact& a, const PolynomialExact& b) {
    PolynomialExact out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, ca * cb);
    return out;
}

PolynomialExact& PolynomialExact::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

PolynomialExact PolynomialExact::top_component() const {
    const int d = degree();
    PolynomialExact out;
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) out.add_term(m, c);
    return out;
}

const Monomial& PolynomialExact::initial_monomial(const MonomialOrderSpec& spec) const {
    if (is_zero()) throw std::invalid_argument("initial_monomial: zero polynomial");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : terms_)
        if (!best || monomial_less(*best, m, spec)) best = &m;
    return *best;
}

mpq_class evaluate(const Monomial& m, const RookPlacement& r) {
    for (const auto& [v, e] : m.factors()) {
        if (v.i < 1 || v.i > r.board_n() || v.j < 1 || v.j > r.board_m())
            throw std::invalid_argument("evaluate: variable outside the board");
        if (!r.contains({v.i, v.j})) return 0;
    }
    return 1;
}

mpq_class PolynomialExact::evaluate(const RookPlacement& r) const {
    mpq_class total = 0;
    for (const auto& [m, c] : terms_)
        if (rookh::evaluate(m, r) != 0) total += c;
    return total;
}

}  // namespace rookh

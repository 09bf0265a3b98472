#include "rookh/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace rookh {

Monomial Monomial::variable(VariableIndex v) { return Monomial({{v, 1}}); }

Monomial::Monomial(std::vector<std::pair<VariableIndex, int>> factors)
    : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    for (size_t k = 0; k < factors_.size(); ++k) {
        if (factors_[k].second <= 0)
            throw std::invalid_argument("Monomial: exponents must be positive");
        if (k + 1 < factors_.size() && factors_[k].first == factors_[k + 1].first)
            throw std::invalid_argument("Monomial: repeated variable entry");
    }
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

bool Monomial::squarefree() const {
    for (const auto& [v, e] : factors_)
        if (e != 1) return false;
    return true;
}

int Monomial::exponent(VariableIndex v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), std::pair{v, 0});
    return it != factors_.end() && it->first == v ? it->second : 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    std::vector<std::pair<VariableIndex, int>> merged;
    merged.reserve(factors_.size() + o.factors_.size());
    size_t a = 0, b = 0;
    while (a < factors_.size() || b < o.factors_.size()) {
        if (b == o.factors_.size() ||
            (a < factors_.size() && factors_[a].first < o.factors_[b].first)) {
            merged.push_back(factors_[a++]);
        } else if (a == factors_.size() || o.factors_[b].first < factors_[a].first) {
            merged.push_back(o.factors_[b++]);
        } else {
            merged.push_back({factors_[a].first, factors_[a].second + o.factors_[b].second});
            ++a;
            ++b;
        }
    }
    Monomial out;
    out.factors_ = std::move(merged);
    return out;
}

Monomial monomial_of(const RookPlacement& r) {
    std::vector<std::pair<VariableIndex, int>> factors;
    factors.reserve(static_cast<size_t>(r.size()));
    for (const Cell& c : r.cells()) factors.push_back({{c.i, c.j}, 1});
    return Monomial(std::move(factors));
}

bool MonomialOrderSpec::variable_greater(VariableIndex a, VariableIndex b) const {
    const int da = a.i + a.j, db = b.i + b.j;
    if (da != db)
        return direction == DiagonalDirection::example ? da < db : da > db;
    if (a.i != b.i)
        return tiebreak == AntidiagonalTieBreak::larger_i_first ? a.i > b.i : a.i < b.i;
    return false;
}

std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrderSpec& spec) {
    if (a == b) return std::strong_ordering::equal;
    if (spec.degree_then_lex) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    }
    // Walk the union of supports from the greatest variable downward; the
    // first exponent difference decides, larger exponent winning.
    std::vector<VariableIndex> vars;
    for (const auto& [v, e] : a.factors()) vars.push_back(v);
    for (const auto& [v, e] : b.factors()) vars.push_back(v);
    std::sort(vars.begin(), vars.end(),
              [&](VariableIndex x, VariableIndex y) { return spec.variable_greater(x, y); });
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (VariableIndex v : vars)
        if (auto c = a.exponent(v) <=> b.exponent(v); c != 0) return c;
    return std::strong_ordering::equal;
}

}  // namespace rookh

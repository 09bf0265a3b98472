#include "rookh/quotient.hpp"

#include <algorithm>
#include <stdexcept>

namespace rookh {

std::vector<mpq_class> evaluation_vector(const Monomial& m,
                                         const std::vector<RookPlacement>& locus) {
    std::vector<mpq_class> v;
    v.reserve(locus.size());
    for (const RookPlacement& r : locus) v.push_back(evaluate(m, r));
    return v;
}

std::vector<mpq_class> evaluation_vector(const PolynomialExact& f,
                                         const std::vector<RookPlacement>& locus) {
    std::vector<mpq_class> v;
    v.reserve(locus.size());
    for (const RookPlacement& r : locus) v.push_back(f.evaluate(r));
    return v;
}

std::vector<Monomial> standard_monomials(const std::vector<RookPlacement>& locus,
                                         const MonomialOrderSpec& spec) {
    if (locus.empty()) throw std::invalid_argument("standard_monomials: empty locus");
    if (!spec.degree_then_lex)
        throw std::invalid_argument(
            "standard_monomials: the scan needs a degree-compatible order; standard monomials "
            "of a graded ideal are only characterized degreewise when the order refines total "
            "degree (set degree_then_lex)");
    const int n = locus.front().board_n();
    const int m = locus.front().board_m();

    std::vector<Monomial> candidates;
    for (const RookPlacement& r : enumerate_upper_locus(LocusParams(n, m, 0)))
        candidates.push_back(monomial_of(r));
    std::sort(candidates.begin(), candidates.end(),
              [&](const Monomial& a, const Monomial& b) { return monomial_less(a, b, spec); });

    std::vector<Monomial> kept;
    RowSpanBuilder span(locus.size());
    for (const Monomial& cand : candidates) {
        if (kept.size() == locus.size()) break;
        if (span.add(evaluation_vector(cand, locus))) kept.push_back(cand);
    }
    if (kept.size() != locus.size())
        throw std::logic_error("standard_monomials: candidate evaluations failed to span");
    return kept;
}

GradedMembershipTester::GradedMembershipTester(std::vector<RookPlacement> locus)
    : locus_(std::move(locus)) {
    if (locus_.empty()) throw std::invalid_argument("GradedMembershipTester: empty locus");
    const int n = locus_.front().board_n();
    const int m = locus_.front().board_m();
    const int top = std::min(n, m);
    auto all = enumerate_upper_locus(LocusParams(n, m, 0));  // sizes ascending
    RowSpanBuilder span(locus_.size());
    size_t next = 0;
    for (int d = 0; d <= top + 1; ++d) {
        while (next < all.size() && all[next].size() < d)
            span.add(evaluation_vector(monomial_of(all[next++]), locus_));
        span_below_.push_back(span);
    }
}

bool GradedMembershipTester::contains(const PolynomialExact& f) const {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous())
        throw std::invalid_argument("graded membership: polynomial must be homogeneous");
    const size_t d = std::min<size_t>(static_cast<size_t>(f.degree()), span_below_.size() - 1);
    return span_below_[d].contains(evaluation_vector(f, locus_));
}

bool graded_ideal_membership(const PolynomialExact& f, const std::vector<RookPlacement>& locus) {
    return GradedMembershipTester(locus).contains(f);
}

GradedQuotientModel::GradedQuotientModel(const LocusParams& params, const MonomialOrderSpec& spec)
    : params_(params),
      spec_(spec),
      locus_(enumerate_upper_locus(params)),
      basis_(standard_monomials(locus_, spec)),
      inverse_(0, 0) {
    basis_degrees_.reserve(basis_.size());
    for (const Monomial& b : basis_) basis_degrees_.push_back(b.degree());

    const int size = static_cast<int>(locus_.size());
    ExactMatrix eval(size, size);
    for (int col = 0; col < size; ++col) {
        auto v = evaluation_vector(basis_[static_cast<size_t>(col)], locus_);
        for (int row = 0; row < size; ++row) eval.at(row, col) = v[static_cast<size_t>(row)];
    }
    inverse_ = eval.inverse();
}

std::map<Monomial, mpq_class> GradedQuotientModel::normal_form(const Monomial& m) const {
    const int d = m.degree();
    const auto v = evaluation_vector(m, locus_);
    std::map<Monomial, mpq_class> out;
    for (size_t k = 0; k < basis_.size(); ++k) {
        mpq_class c = 0;
        for (size_t row = 0; row < locus_.size(); ++row)
            if (v[row] != 0) c += inverse_.at(static_cast<int>(k), static_cast<int>(row));
        if (c == 0) continue;
        // Coefficients live in degrees <= d; only the top layer is the
        // normal form in the graded quotient.
        if (basis_degrees_[k] > d)
            throw std::logic_error("normal_form: solve leaked above the input degree");
        if (basis_degrees_[k] == d) out.emplace(basis_[k], std::move(c));
    }
    return out;
}

mpq_class GradedQuotientModel::basis_coefficient(size_t k, const RookPlacement& support) const {
    mpq_class c = 0;
    for (size_t row = 0; row < locus_.size(); ++row)
        if (locus_[row].contains_all(support))
            c += inverse_.at(static_cast<int>(k), static_cast<int>(row));
    return c;
}

std::vector<long long> hilbert_series_via_lis(const LocusParams& params) {
    std::vector<long long> coeffs;
    for (const RookPlacement& r : enumerate_upper_locus(params)) {
        const int d = params.extended_size() - lis(extend_to_permutation(r, params));
        if (static_cast<size_t>(d) >= coeffs.size()) coeffs.resize(static_cast<size_t>(d) + 1, 0);
        coeffs[static_cast<size_t>(d)]++;
    }
    return coeffs;
}

std::vector<long long> hilbert_series_oracle(const std::vector<RookPlacement>& locus,
                                             const MonomialOrderSpec& spec) {
    std::vector<long long> coeffs;
    for (const Monomial& b : standard_monomials(locus, spec)) {
        const size_t d = static_cast<size_t>(b.degree());
        if (d >= coeffs.size()) coeffs.resize(d + 1, 0);
        coeffs[d]++;
    }
    return coeffs;
}

}  // namespace rookh

#include "rookh/schur.hpp"

#include <algorithm>
#include <stdexcept>

namespace rookh {

mpq_class SchurVector::coefficient(const Partition& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? mpq_class(0) : it->second;
}

void SchurVector::add(const Partition& key, const mpq_class& c) {
    if (c == 0) return;
    if (key.size() != degree_)
        throw std::invalid_argument("SchurVector: key degree mismatch");
    auto [it, inserted] = coeffs_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

SchurVector& SchurVector::operator+=(const SchurVector& o) {
    if (degree_ != o.degree_)
        throw std::invalid_argument("SchurVector: degree mismatch in addition");
    for (const auto& [k, c] : o.coeffs_) add(k, c);
    return *this;
}

mpq_class DoublySchurVector::coefficient(const Partition& left, const Partition& right) const {
    auto it = coeffs_.find({left, right});
    return it == coeffs_.end() ? mpq_class(0) : it->second;
}

void DoublySchurVector::add(const Partition& left, const Partition& right, const mpq_class& c) {
    if (c == 0) return;
    if (left.size() != left_degree_ || right.size() != right_degree_)
        throw std::invalid_argument("DoublySchurVector: key bidegree mismatch");
    auto [it, inserted] = coeffs_.emplace(std::pair{left, right}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

DoublySchurVector& DoublySchurVector::operator+=(const DoublySchurVector& o) {
    if (left_degree_ != o.left_degree_ || right_degree_ != o.right_degree_)
        throw std::invalid_argument("DoublySchurVector: bidegree mismatch in addition");
    for (const auto& [k, c] : o.coeffs_) add(k.first, k.second, c);
    return *this;
}

const DoublySchurVector& GradedDoublySchurSeries::layer(int d) const {
    auto it = layers_.find(d);
    return it == layers_.end() ? empty_ : it->second;
}

void GradedDoublySchurSeries::set_layer(int d, DoublySchurVector v) {
    if (v.left_degree() != n_ || v.right_degree() != m_)
        throw std::invalid_argument("GradedDoublySchurSeries: layer bidegree mismatch");
    if (v.is_zero())
        layers_.erase(d);
    else
        layers_.insert_or_assign(d, std::move(v));
}

int GradedDoublySchurSeries::top_degree() const {
    return layers_.empty() ? -1 : layers_.rbegin()->first;
}

IntegerPolynomial::IntegerPolynomial(std::vector<long long> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntegerPolynomial IntegerPolynomial::one() { return IntegerPolynomial({1}); }

long long IntegerPolynomial::coefficient(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<size_t>(k)] : 0;
}

bool IntegerPolynomial::is_palindromic() const {
    for (size_t a = 0, b = coeffs_.size(); a < b; ++a)
        if (coeffs_[a] != coeffs_[b - a - 1]) return false;
    return true;
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.coeffs_.empty() || b.coeffs_.empty()) return IntegerPolynomial();
    std::vector<long long> prod(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntegerPolynomial(std::move(prod));
}

SchurVector pieri_h(const Partition& lambda, int k) {
    SchurVector out(lambda.size() + k);
    if (k < 0) return out;
    // Horizontal strips: mu interlaces lambda row by row,
    // lambda_i <= mu_i and mu_{i+1} <= lambda_i, adding k cells in total.
    const int rows = lambda.length() + 1;
    std::vector<int> mu;
    auto rec = [&](auto&& self, int row, int remaining) -> void {
        if (row == rows) {
            if (remaining == 0) {
                std::vector<int> parts;
                for (int p : mu)
                    if (p > 0) parts.push_back(p);
                out.add(Partition(std::move(parts)), 1);
            }
            return;
        }
        const int lo = lambda.part(row);
        const int hi_interlace = row == 0 ? lambda.part(0) + remaining : lambda.part(row - 1);
        const int hi = std::min(lo + remaining, row == 0 ? lo + remaining : hi_interlace);
        for (int p = lo; p <= hi; ++p) {
            mu.push_back(p);
            self(self, row + 1, remaining - (p - lo));
            mu.pop_back();
        }
    };
    rec(rec, 0, k);
    return out;
}

FirstPartPredicate FirstPartPredicate::at_most(int bound) { return {0, bound}; }
FirstPartPredicate FirstPartPredicate::equals(int value) { return {value, value}; }
FirstPartPredicate FirstPartPredicate::between(int lo, int hi) { return {lo, hi}; }

bool FirstPartPredicate::operator()(const Partition& p) const {
    return p.first_part() >= lo_ && p.first_part() <= hi_;
}

SchurVector truncate(const SchurVector& f, const FirstPartPredicate& pred) {
    SchurVector out(f.degree());
    for (const auto& [k, c] : f.coefficients())
        if (pred(k)) out.add(k, c);
    return out;
}

DoublySchurVector truncate(const DoublySchurVector& f, const FirstPartPredicate& pred) {
    DoublySchurVector out(f.left_degree(), f.right_degree());
    for (const auto& [k, c] : f.coefficients())
        if (pred(k.first) && pred(k.second)) out.add(k.first, k.second, c);
    return out;
}

DoublySchurVector frob_layer(int n, int m, int d) {
    if (d < 0 || d > std::min(n, m))
        throw std::invalid_argument("frob_layer: need 0 <= d <= min(n, m)");
    DoublySchurVector out(n, m);
    for (const Partition& mu : partitions_of(d)) {
        const SchurVector left = pieri_h(mu, n - d);
        const SchurVector right = pieri_h(mu, m - d);
        for (const auto& [l, cl] : left.coefficients())
            for (const auto& [r, cr] : right.coefficients()) out.add(l, r, cl * cr);
    }
    return out;
}

GradedDoublySchurSeries grfrob_toy(int n, int m) {
    GradedDoublySchurSeries out(n, m);
    for (int d = 0; d <= std::min(n, m); ++d) out.set_layer(d, frob_layer(n, m, d));
    return out;
}

GradedDoublySchurSeries grfrob_main(const LocusParams& params) {
    GradedDoublySchurSeries out(params.n, params.m);
    for (int d = 0; d <= params.min_side(); ++d) {
        const auto bound = FirstPartPredicate::at_most(params.extended_size() - d);
        out.set_layer(d, truncate(frob_layer(params.n, params.m, d), bound));
    }
    return out;
}

mpq_class lemma_coef(int d, int a, int b, int p, int q, const Partition& left,
                     const Partition& right) {
    if (left.size() != a + d || right.size() != b + d)
        throw std::invalid_argument("lemma_coef: need left |- a+d and right |- b+d");
    if (left.first_part() != p || right.first_part() != q) return 0;
    long long max_tail = 0;
    for (int i = 0;; ++i) {
        const int mn = std::min(left.part(i), right.part(i));
        const int mx = std::max(left.part(i + 1), right.part(i + 1));
        if (mn < mx) return 0;
        max_tail += i == 0 ? 0 : std::max(left.part(i), right.part(i));
        if (left.part(i) == 0 && right.part(i) == 0) break;
    }
    IntegerPolynomial product = IntegerPolynomial::one();
    const int len = std::max(left.length(), right.length());
    for (int i = 0; i < len; ++i) {
        const int width = std::min(left.part(i), right.part(i)) -
                          std::max(left.part(i + 1), right.part(i + 1));
        product = product * IntegerPolynomial(std::vector<long long>(static_cast<size_t>(width) + 1, 1));
    }
    return static_cast<long>(product.coefficient(d - static_cast<int>(max_tail)));
}

DoublySchurVector truncated_pieri_sum(int d, int a, int b, int p, int q) {
    DoublySchurVector out(a + d, b + d);
    if (d < 0 || a < 0 || b < 0) return out;
    for (const Partition& mu : partitions_of(d)) {
        const SchurVector left = truncate(pieri_h(mu, a), FirstPartPredicate::equals(p));
        const SchurVector right = truncate(pieri_h(mu, b), FirstPartPredicate::equals(q));
        for (const auto& [l, cl] : left.coefficients())
            for (const auto& [r, cr] : right.coefficients()) out.add(l, r, cl * cr);
    }
    return out;
}

bool check_interchange(int d, int a, int b, int p, int q) {
    const int mx = std::max(p, q);
    const DoublySchurVector lhs = truncated_pieri_sum(d, a, b, p, q);
    const DoublySchurVector rhs = truncated_pieri_sum(d + a + b - mx, mx - b, mx - a, p, q);
    if (lhs.left_degree() != rhs.left_degree() || lhs.right_degree() != rhs.right_degree())
        return lhs.is_zero() && rhs.is_zero();
    return lhs == rhs;
}

bool check_sum_identity(const LocusParams& params) {
    DoublySchurVector lhs(params.n, params.m);
    for (int d = 0; d <= params.min_side(); ++d)
        lhs += truncate(frob_layer(params.n, params.m, d),
                        FirstPartPredicate::at_most(params.extended_size() - d));
    DoublySchurVector rhs(params.n, params.m);
    for (int rp = params.r; rp <= params.min_side(); ++rp)
        rhs += frob_layer(params.n, params.m, rp);
    return lhs == rhs;
}

long long dimension(const DoublySchurVector& f) {
    mpq_class total = 0;
    for (const auto& [k, c] : f.coefficients())
        total += c * static_cast<long>(syt_count(k.first)) *
                 static_cast<long>(syt_count(k.second));
    if (total.get_den() != 1)
        throw std::logic_error("dimension: non-integer result signals corruption");
    if (!total.get_num().fits_slong_p())
        throw std::logic_error("dimension: result exceeds 64 bits");
    return total.get_num().get_si();
}

std::vector<long long> dimension(const GradedDoublySchurSeries& series) {
    std::vector<long long> out;
    const int top = series.top_degree();
    for (int d = 0; d <= top; ++d) out.push_back(dimension(series.layer(d)));
    return out;
}

}  // namespace rookh

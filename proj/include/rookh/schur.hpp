#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "rookh/partition.hpp"
#include "rookh/rook.hpp"

namespace rookh {

// Element of one graded piece of the symmetric function ring in the Schur
// basis: sparse coefficient map, all keys partitioning the same degree.
// h_k and e_k are not separate objects: h_k = s_(k) and e_k = s_(1^k).
class SchurVector {
public:
    SchurVector() = default;
    explicit SchurVector(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const std::map<Partition, mpq_class>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    mpq_class coefficient(const Partition& key) const;
    void add(const Partition& key, const mpq_class& c);
    SchurVector& operator+=(const SchurVector& o);

    friend bool operator==(const SchurVector&, const SchurVector&) = default;

private:
    int degree_ = 0;
    std::map<Partition, mpq_class> coeffs_;
};

// Element of one bidegree of the Schur basis of doubly symmetric functions.
class DoublySchurVector {
public:
    DoublySchurVector() = default;
    DoublySchurVector(int left_degree, int right_degree)
        : left_degree_(left_degree), right_degree_(right_degree) {}

    int left_degree() const { return left_degree_; }
    int right_degree() const { return right_degree_; }
    const std::map<std::pair<Partition, Partition>, mpq_class>& coefficients() const {
        return coeffs_;
    }
    bool is_zero() const { return coeffs_.empty(); }
    mpq_class coefficient(const Partition& left, const Partition& right) const;
    void add(const Partition& left, const Partition& right, const mpq_class& c);
    DoublySchurVector& operator+=(const DoublySchurVector& o);

    friend bool operator==(const DoublySchurVector&, const DoublySchurVector&) = default;

private:
    int left_degree_ = 0;
    int right_degree_ = 0;
    std::map<std::pair<Partition, Partition>, mpq_class> coeffs_;
};

// A doubly symmetric function graded by a formal degree; every layer shares
// the bidegree (n, m) and degrees stay within 0..min(n,m).
class GradedDoublySchurSeries {
public:
    GradedDoublySchurSeries() = default;
    GradedDoublySchurSeries(int n, int m) : n_(n), m_(m), empty_(n, m) {}

    int n() const { return n_; }
    int m() const { return m_; }
    const std::map<int, DoublySchurVector>& layers() const { return layers_; }
    // The layer at degree d; the zero vector if absent.
    const DoublySchurVector& layer(int d) const;
    void set_layer(int d, DoublySchurVector v);
    // Largest degree carrying a nonzero layer, or -1 if none.
    int top_degree() const;

    friend bool operator==(const GradedDoublySchurSeries& a, const GradedDoublySchurSeries& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.layers_ == b.layers_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    DoublySchurVector empty_;
    std::map<int, DoublySchurVector> layers_;  // nonzero layers only
};

// Dense integer polynomial in one formal variable, trailing zeros trimmed.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;  // zero
    explicit IntegerPolynomial(std::vector<long long> coeffs);
    static IntegerPolynomial one();

    const std::vector<long long>& coefficients() const { return coeffs_; }
    long long coefficient(int k) const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    bool is_palindromic() const;
    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);

    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

private:
    std::vector<long long> coeffs_;
};

// Schur expansion of s_lambda * h_k: partitions obtained from lambda by
// adding a horizontal strip of k cells, each with coefficient 1. Negative k
// gives the zero vector (of formal degree |lambda|+k).
SchurVector pieri_h(const Partition& lambda, int k);

// Truncation predicates on the first part.
class FirstPartPredicate {
public:
    static FirstPartPredicate at_most(int bound);
    static FirstPartPredicate equals(int value);
    static FirstPartPredicate between(int lo, int hi);
    bool operator()(const Partition& p) const;

private:
    FirstPartPredicate(int lo, int hi) : lo_(lo), hi_(hi) {}
    int lo_, hi_;
};

// Keep exactly the keys satisfying the predicate; for doubly symmetric input
// both keys must satisfy it.
SchurVector truncate(const SchurVector& f, const FirstPartPredicate& pred);
DoublySchurVector truncate(const DoublySchurVector& f, const FirstPartPredicate& pred);

// sum over mu |- d of (s_mu h_{n-d}) (x) (s_mu h_{m-d}), for 0 <= d <= min(n,m).
DoublySchurVector frob_layer(int n, int m, int d);

// Graded series with layer d = frob_layer(n, m, d) for every d.
GradedDoublySchurSeries grfrob_toy(int n, int m);

// Graded series with layer d = frob_layer truncated to first parts at most
// n+m-d-r on both sides.
GradedDoublySchurSeries grfrob_main(const LocusParams& params);

// Coefficient of s_{left} (x) s_{right} in
// sum over mu |- d of {s_mu h_a}_{first part = p} (x) {s_mu h_b}_{first part = q},
// through the closed form: zero unless left_1 = p, right_1 = q and
// min(left_i, right_i) >= max(left_{i+1}, right_{i+1}) for all i; otherwise
// the coefficient of the palindromic product
//   prod_i (1 + t + ... + t^{min(left_i, right_i) - max(left_{i+1}, right_{i+1})})
// at exponent d - sum_i max(left_{i+1}, right_{i+1}).
mpq_class lemma_coef(int d, int a, int b, int p, int q, const Partition& left,
                     const Partition& right);

// sum over mu |- d of {s_mu h_a}_{first part = p} (x) {s_mu h_b}_{first part = q},
// expanded through pieri_h; the direct route that lemma_coef must reproduce.
// Any negative argument among d, a, b empties the sum.
DoublySchurVector truncated_pieri_sum(int d, int a, int b, int p, int q);

// Verifies the interchange identity
//   sum_{mu |- d} {s_mu h_a}_{l1=p} (x) {s_mu h_b}_{l1=q}
//     = sum_{mu |- d+a+b-max(p,q)} {s_mu h_{max(p,q)-b}}_{l1=p} (x) {s_mu h_{max(p,q)-a}}_{l1=q}
// with negative h-indices or a negative partition size making a side empty.
bool check_interchange(int d, int a, int b, int p, int q);

// Verifies that the degreewise-truncated layer sum collapses to the plain
// layer sum over sizes r..min(n,m):
//   sum_d {frob_layer(n,m,d)}_{l1 <= n+m-d-r} = sum_{r'=r..min} frob_layer(n,m,r').
bool check_sum_identity(const LocusParams& params);

// Dimension bridges: sum of coefficient * syt_count(left) * syt_count(right);
// per layer for a series. Results must come out integral.
long long dimension(const DoublySchurVector& f);
std::vector<long long> dimension(const GradedDoublySchurSeries& series);

}  // namespace rookh

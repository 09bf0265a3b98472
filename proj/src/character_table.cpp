#include "rookh/character_table.hpp"

#include "rookh/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace rookh {

namespace {

// Murnaghan-Nakayama through first-column hook lengths (beta-numbers):
// removing a border strip of size k corresponds to replacing some beta value
// b by b-k, with sign (-1)^{count of beta values strictly between b-k and b}.
long long mn_value(const std::vector<int>& beta, const std::vector<int>& rho, size_t rho_pos,
                   std::map<std::pair<std::vector<int>, size_t>, long long>& memo) {
    if (rho_pos == rho.size()) return 1;
    const auto key = std::make_pair(beta, rho_pos);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int k = rho[rho_pos];
    long long total = 0;
    for (size_t t = 0; t < beta.size(); ++t) {
        const int target = beta[t] - k;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int crossings = 0;
        for (int b : beta)
            if (target < b && b < beta[t]) ++crossings;
        std::vector<int> next = beta;
        next[t] = target;
        std::sort(next.begin(), next.end());
        const long long sub = mn_value(next, rho, rho_pos + 1, memo);
        total += (crossings % 2 == 0) ? sub : -sub;
    }
    memo.emplace(key, total);
    return total;
}

std::vector<int> beta_numbers(const Partition& lambda) {
    const int len = lambda.length();
    std::vector<int> beta;
    beta.reserve(static_cast<size_t>(len));
    for (int i = 0; i < len; ++i) beta.push_back(lambda.part(i) + (len - 1 - i));
    std::sort(beta.begin(), beta.end());
    return beta;
}

}  // namespace

long long character_value(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
        throw std::invalid_argument("character_value: sizes must agree");
    std::map<std::pair<std::vector<int>, size_t>, long long> memo;
    return mn_value(beta_numbers(lambda), rho.parts(), 0, memo);
}

CharacterTable::CharacterTable(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("CharacterTable: n must be nonnegative");
    partitions_ = partitions_of(n);
    for (size_t k = 0; k < partitions_.size(); ++k)
        index_.emplace(partitions_[k], static_cast<int>(k));
    class_sizes_.reserve(partitions_.size());
    for (const Partition& rho : partitions_) class_sizes_.push_back(conjugacy_class_size(rho));
    values_.reserve(partitions_.size());
    for (const Partition& lambda : partitions_) {
        std::vector<long long> row;
        row.reserve(partitions_.size());
        const auto beta = beta_numbers(lambda);
        for (const Partition& rho : partitions_) {
            // The memo keys on the remaining cycle position, so it is only
            // valid within one rho.
            std::map<std::pair<std::vector<int>, size_t>, long long> memo;
            row.push_back(mn_value(beta, rho.parts(), 0, memo));
        }
        values_.push_back(std::move(row));
    }
}

CharacterTable::CharacterTable(int n, std::vector<Partition> partitions,
                               std::vector<std::vector<long long>> values,
                               std::vector<long long> class_sizes)
    : n_(n),
      partitions_(std::move(partitions)),
      values_(std::move(values)),
      class_sizes_(std::move(class_sizes)) {
    if (values_.size() != partitions_.size() || class_sizes_.size() != partitions_.size())
        throw std::invalid_argument("CharacterTable: inconsistent component sizes");
    for (const auto& row : values_)
        if (row.size() != partitions_.size())
            throw std::invalid_argument("CharacterTable: ragged value matrix");
    for (size_t k = 0; k < partitions_.size(); ++k)
        index_.emplace(partitions_[k], static_cast<int>(k));
}

int CharacterTable::index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("CharacterTable: unknown partition");
    return it->second;
}

CharacterTable character_table(int n) { return CharacterTable(n); }

bool symmetrizer_annihilates(const Partition& lambda, int j) {
    if (j < 0 || j > lambda.size())
        throw std::invalid_argument("symmetrizer_annihilates: need 0 <= j <= |lambda|");
    return lambda.first_part() < j;
}

long long trivial_multiplicity_in_restriction(const Partition& lambda, int j) {
    const int n = lambda.size();
    if (j < 0 || j > n)
        throw std::invalid_argument("trivial_multiplicity_in_restriction: need 0 <= j <= n");
    // (1/j!) sum over classes rho' of S_j of |K_rho'| chi^lambda(rho' 1^{n-j}).
    long long total = 0;
    for (const Partition& rho : partitions_of(j)) {
        std::vector<int> padded = rho.parts();
        padded.insert(padded.end(), static_cast<size_t>(n - j), 1);
        total += conjugacy_class_size(rho) * character_value(lambda, Partition(std::move(padded)));
    }
    const long long fact = factorial(j);
    if (total % fact != 0)
        throw std::logic_error("trivial_multiplicity_in_restriction: non-integer multiplicity");
    return total / fact;
}

long long kronecker(const Partition& lambda, const Partition& nu, const Partition& alpha) {
    const int n = lambda.size();
    if (nu.size() != n || alpha.size() != n)
        throw std::invalid_argument("kronecker: partitions must have equal size");
    const CharacterTable table = character_table(n);
    long long total = 0;
    for (size_t k = 0; k < table.partitions().size(); ++k) {
        const int rho = static_cast<int>(k);
        total += table.class_size(rho) * table.value(table.index_of(lambda), rho) *
                 table.value(table.index_of(nu), rho) * table.value(table.index_of(alpha), rho);
    }
    const long long fact = factorial(n);
    if (total % fact != 0) throw std::logic_error("kronecker: non-integer multiplicity");
    return total / fact;
}

}  // namespace rookh

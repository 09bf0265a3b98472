#pragma once

#include <compare>
#include <vector>

#include "rookh/partition.hpp"

namespace rookh {

// A permutation of {1, ..., N} in one-line notation.
class Permutation {
public:
    Permutation() = default;  // the unique permutation of the empty set
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const;  // 1-based application
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    Partition cycle_type() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// Functional composition: compose(a, b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

std::vector<Permutation> all_permutations(int n);

// Canonical representative of the conjugacy class with the given cycle type:
// cycles in decreasing length on consecutive letters, e.g. (3,2) -> [2,3,1,5,4].
Permutation class_representative(const Partition& cycle_type);

// |K_rho| = n!/z_rho where z_rho = prod_k k^{m_k} m_k!.
long long conjugacy_class_size(const Partition& cycle_type);

}  // namespace rookh

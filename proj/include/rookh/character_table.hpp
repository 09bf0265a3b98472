#pragma once

#include <map>
#include <vector>

#include "rookh/partition.hpp"

namespace rookh {

// The full integer character table of the symmetric group on n letters:
// values chi^lambda(rho) for lambda, rho |- n, plus conjugacy class sizes.
// Rows and columns follow the canonical partitions_of(n) order.
class CharacterTable {
public:
    explicit CharacterTable(int n);

    int n() const { return n_; }
    const std::vector<Partition>& partitions() const { return partitions_; }
    int index_of(const Partition& p) const;
    long long value(int lambda_idx, int rho_idx) const {
        return values_[static_cast<size_t>(lambda_idx)][static_cast<size_t>(rho_idx)];
    }
    long long value(const Partition& lambda, const Partition& rho) const {
        return value(index_of(lambda), index_of(rho));
    }
    long long class_size(int rho_idx) const { return class_sizes_[static_cast<size_t>(rho_idx)]; }
    long long class_size(const Partition& rho) const { return class_size(index_of(rho)); }

    // Used by the disk cache: construct from precomputed data, validating
    // nothing beyond shapes. Orthogonality checks live in the test suite.
    CharacterTable(int n, std::vector<Partition> partitions,
                   std::vector<std::vector<long long>> values, std::vector<long long> class_sizes);

    friend bool operator==(const CharacterTable&, const CharacterTable&) = default;

private:
    int n_ = 0;
    std::vector<Partition> partitions_;
    std::vector<std::vector<long long>> values_;  // [lambda][rho]
    std::vector<long long> class_sizes_;
    std::map<Partition, int> index_;
};

// Computes the table by the Murnaghan-Nakayama border-strip recursion.
// Practical up to n around 12.
CharacterTable character_table(int n);

// chi^lambda(rho) for a single pair, |lambda| = |rho|.
long long character_value(const Partition& lambda, const Partition& rho);

// True iff symmetrizing over the first j letters kills the irreducible
// module of shape lambda, i.e. lambda_1 < j.
bool symmetrizer_annihilates(const Partition& lambda, int j);

// Independent route to the same answer: multiplicity of the trivial
// character of S_j in the restriction of chi^lambda, by character inner
// product over the embedded classes. Annihilation means multiplicity zero.
long long trivial_multiplicity_in_restriction(const Partition& lambda, int j);

// Kronecker coefficient: (1/n!) sum_rho |K_rho| chi^l(rho) chi^nu(rho) chi^alpha(rho).
long long kronecker(const Partition& lambda, const Partition& nu, const Partition& alpha);

}  // namespace rookh

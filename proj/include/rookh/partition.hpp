#pragma once

#include <compare>
#include <vector>

namespace rookh {

// A partition of a nonnegative integer: weakly decreasing positive parts.
// The empty partition is the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return n_; }  // sum of parts
    int length() const { return static_cast<int>(parts_.size()); }

    // 0-based; indices beyond the length read as 0.
    int part(int i) const {
        return i >= 0 && i < length() ? parts_[static_cast<size_t>(i)] : 0;
    }
    int first_part() const { return part(0); }

    friend bool operator==(const Partition&, const Partition&) = default;
    // Key order for maps; the canonical enumeration order is partitions_of's.
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// All partitions of n, each exactly once, in reverse-lexicographic order:
// (n) first, (1,...,1) last. Consumers must not rely on any other order.
std::vector<Partition> partitions_of(int n);

// Number of standard Young tableaux of shape `shape`, by the hook length
// formula. Exact in 64-bit for |shape| <= 20.
long long syt_count(const Partition& shape);

// n! as a 64-bit integer; requires 0 <= n <= 20.
long long factorial(int n);

}  // namespace rookh

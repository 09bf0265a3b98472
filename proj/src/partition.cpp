#include "rookh/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace rookh {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    // Extending with the largest admissible part first yields the
    // reverse-lexicographic order.
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

long long factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial: need 0 <= n <= 20");
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

long long syt_count(const Partition& shape) {
    const int n = shape.size();
    if (n > 20) throw std::invalid_argument("syt_count: supported up to |shape| = 20");
    if (n == 0) return 1;
    // Column lengths of the diagram.
    std::vector<int> col(static_cast<size_t>(shape.first_part()), 0);
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape.part(i); ++j) col[static_cast<size_t>(j)]++;
    long long hooks = 1;
    for (int i = 0; i < shape.length(); ++i)
        for (int j = 0; j < shape.part(i); ++j)
            hooks *= (shape.part(i) - j) + (col[static_cast<size_t>(j)] - i) - 1;
    return factorial(n) / hooks;
}

}  // namespace rookh

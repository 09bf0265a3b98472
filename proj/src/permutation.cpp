#include "rookh/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rookh {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<size_t>(v - 1)])
            throw std::invalid_argument("Permutation: images must be a bijection of 1..N");
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return Permutation(std::move(img));
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > size()) throw std::out_of_range("Permutation: index out of range");
    return images_[static_cast<size_t>(i - 1)];
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 1; i <= size(); ++i) inv[static_cast<size_t>((*this)(i)-1)] = i;
    return Permutation(std::move(inv));
}

Partition Permutation::cycle_type() const {
    std::vector<bool> seen(images_.size(), false);
    std::vector<int> lengths;
    for (int i = 1; i <= size(); ++i) {
        if (seen[static_cast<size_t>(i - 1)]) continue;
        int len = 0, j = i;
        do {
            seen[static_cast<size_t>(j - 1)] = true;
            j = (*this)(j);
            ++len;
        } while (j != i);
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return Partition(std::move(lengths));
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("compose: size mismatch");
    std::vector<int> img(static_cast<size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) img[static_cast<size_t>(i - 1)] = a(b(i));
    return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

Permutation class_representative(const Partition& cycle_type) {
    std::vector<int> img(static_cast<size_t>(cycle_type.size()));
    int start = 1;
    for (int len : cycle_type.parts()) {
        for (int k = 0; k < len; ++k) {
            int from = start + k;
            int to = (k + 1 < len) ? from + 1 : start;
            img[static_cast<size_t>(from - 1)] = to;
        }
        start += len;
    }
    return Permutation(std::move(img));
}

long long conjugacy_class_size(const Partition& cycle_type) {
    long long z = 1;
    int run = 0, prev = 0;
    for (int p : cycle_type.parts()) {
        if (p == prev) {
            ++run;
        } else {
            prev = p;
            run = 1;
        }
        z *= static_cast<long long>(p) * run;  // accumulates k^{m_k} m_k! runwise
    }
    return factorial(cycle_type.size()) / z;
}

}  // namespace rookh

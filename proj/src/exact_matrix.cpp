#include "rookh/exact_matrix.hpp"

#include <stdexcept>

namespace rookh {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative shape");
    data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), mpq_class(0));
}

int ExactMatrix::rank() const {
    RowSpanBuilder span(static_cast<size_t>(cols_));
    std::vector<mpq_class> row(static_cast<size_t>(cols_));
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) row[static_cast<size_t>(c)] = at(r, c);
        span.add(row);
    }
    return static_cast<int>(span.rank());
}

ExactMatrix ExactMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: matrix not square");
    const int n = rows_;
    ExactMatrix work(*this);
    ExactMatrix inv(n, n);
    for (int i = 0; i < n; ++i) inv.at(i, i) = 1;

    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (work.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot == -1) throw std::invalid_argument("inverse: singular matrix");
        if (pivot != col)
            for (int c = 0; c < n; ++c) {
                std::swap(work.at(pivot, c), work.at(col, c));
                std::swap(inv.at(pivot, c), inv.at(col, c));
            }
        const mpq_class scale = 1 / work.at(col, col);
        for (int c = 0; c < n; ++c) {
            work.at(col, c) *= scale;
            inv.at(col, c) *= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || work.at(r, col) == 0) continue;
            const mpq_class factor = work.at(r, col);
            for (int c = 0; c < n; ++c) {
                work.at(r, c) -= factor * work.at(col, c);
                inv.at(r, c) -= factor * inv.at(col, c);
            }
        }
    }
    return inv;
}

size_t RowSpanBuilder::reduce(std::vector<mpq_class>& v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        const mpq_class& coeff = v[pivots_[k]];
        if (coeff == 0) continue;
        const mpq_class factor = coeff;
        const auto& row = rows_[k];
        for (size_t c = 0; c < dim_; ++c)
            if (row[c] != 0) v[c] -= factor * row[c];
    }
    for (size_t c = 0; c < dim_; ++c)
        if (v[c] != 0) return c;
    return dim_;
}

bool RowSpanBuilder::contains(const std::vector<mpq_class>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("RowSpanBuilder: dimension mismatch");
    std::vector<mpq_class> copy = v;
    return reduce(copy) == dim_;
}

bool RowSpanBuilder::add(const std::vector<mpq_class>& v) {
    if (v.size() != dim_) throw std::invalid_argument("RowSpanBuilder: dimension mismatch");
    std::vector<mpq_class> copy = v;
    const size_t pivot = reduce(copy);
    if (pivot == dim_) return false;
    const mpq_class scale = 1 / copy[pivot];
    for (size_t c = 0; c < dim_; ++c) copy[c] *= scale;
    rows_.push_back(std::move(copy));
    pivots_.push_back(pivot);
    return true;
}

}  // namespace rookh

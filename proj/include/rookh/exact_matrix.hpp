#pragma once

#include <gmpxx.h>

#include <vector>

namespace rookh {

// Dense matrix over the rationals. Exact arithmetic only; rank and inverse
// are deterministic.
class ExactMatrix {
public:
    ExactMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpq_class& at(int r, int c) { return data_[index(r, c)]; }
    const mpq_class& at(int r, int c) const { return data_[index(r, c)]; }

    int rank() const;
    // Inverse of a square matrix; throws std::invalid_argument if singular.
    ExactMatrix inverse() const;

private:
    size_t index(int r, int c) const { return static_cast<size_t>(r) * cols_ + c; }
    int rows_, cols_;
    std::vector<mpq_class> data_;
};

// Incremental row space over the rationals: rows are added one at a time and
// reduced against the pivots accumulated so far. Supports in-span queries.
class RowSpanBuilder {
public:
    explicit RowSpanBuilder(size_t dim) : dim_(dim) {}

    size_t dim() const { return dim_; }
    size_t rank() const { return rows_.size(); }
    bool contains(const std::vector<mpq_class>& v) const;
    // Adds v if it enlarges the span; returns true exactly in that case.
    bool add(const std::vector<mpq_class>& v);

private:
    // Reduces v in place; returns the pivot position or dim_ if v reduced
    // to zero. Each stored row has zeros at all earlier pivots, so one
    // forward sweep suffices.
    size_t reduce(std::vector<mpq_class>& v) const;

    size_t dim_;
    std::vector<std::vector<mpq_class>> rows_;  // pivot entry scaled to 1
    std::vector<size_t> pivots_;
};

}  // namespace rookh

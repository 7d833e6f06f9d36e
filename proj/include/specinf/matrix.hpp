#pragma once

#include <optional>
#include <vector>

#include "specinf/rational.hpp"

namespace specinf {

// Dense exact rational matrix, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    QMatrix operator*(const QMatrix& o) const;
    std::vector<Rational> operator*(const std::vector<Rational>& v) const;
    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    // Gauss-Jordan inverse; nullopt if singular.
    std::optional<QMatrix> inverse() const;

    std::size_t rank() const;

    // Basis of the right null space (each vector has cols() entries).
    std::vector<std::vector<Rational>> nullspace() const;

    // One solution of A x = b, or nullopt if inconsistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

// Incremental rank tracker: feed rows one at a time, rank is maintained by
// fraction-free elimination over integer-scaled rows.
class IncrementalRank {
public:
    // Returns true if the row was independent of those seen so far.
    bool add_row(const std::vector<Rational>& row);
    std::size_t rank() const { return pivots_.size(); }

private:
    struct EchelonRow {
        std::size_t pivot;
        std::vector<mpz_class> entries;
    };
    std::vector<EchelonRow> pivots_;
};

} // namespace specinf

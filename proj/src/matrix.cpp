#include "specinf/matrix.hpp"

namespace specinf {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

std::vector<Rational> QMatrix::operator*(const std::vector<Rational>& v) const {
    std::vector<Rational> r(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

std::optional<QMatrix> QMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    QMatrix a = *this;
    QMatrix inv = identity(rows_);
    for (std::size_t col = 0; col < cols_; ++col) {
        std::size_t piv = col;
        while (piv < rows_ && a.at(piv, col) == 0) ++piv;
        if (piv == rows_) return std::nullopt;
        for (std::size_t j = 0; j < cols_; ++j) {
            std::swap(a.at(piv, j), a.at(col, j));
            std::swap(inv.at(piv, j), inv.at(col, j));
        }
        Rational d = a.at(col, col);
        for (std::size_t j = 0; j < cols_; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == col || a.at(i, col) == 0) continue;
            Rational m = a.at(i, col);
            for (std::size_t j = 0; j < cols_; ++j) {
                a.at(i, j) -= m * a.at(col, j);
                inv.at(i, j) -= m * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::size_t QMatrix::rank() const {
    IncrementalRank r;
    for (std::size_t i = 0; i < rows_; ++i) {
        std::vector<Rational> row(cols_);
        for (std::size_t j = 0; j < cols_; ++j) row[j] = at(i, j);
        r.add_row(row);
    }
    return r.rank();
}

// Row-reduce in place; returns pivot column per pivot row.
static std::vector<std::size_t> rref(QMatrix& a) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
        Rational d = a.at(row, col);
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(row, j) /= d;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            Rational m = a.at(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j) a.at(i, j) -= m * a.at(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

std::vector<std::vector<Rational>> QMatrix::nullspace() const {
    QMatrix a = *this;
    std::vector<std::size_t> pivot_cols = rref(a);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols_, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> QMatrix::solve(const std::vector<Rational>& b) const {
    QMatrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<std::size_t> pivot_cols = rref(aug);
    for (std::size_t c : pivot_cols)
        if (c == cols_) return std::nullopt; // pivot in augmented column
    std::vector<Rational> x(cols_, Rational(0));
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = aug.at(r, cols_);
    return x;
}

bool IncrementalRank::add_row(const std::vector<Rational>& row) {
    // scale to integers
    mpz_class lcm = 1;
    for (const auto& x : row)
        if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<mpz_class> r(row.size());
    bool nonzero = false;
    for (std::size_t j = 0; j < row.size(); ++j) {
        r[j] = row[j].get_num() * (lcm / row[j].get_den());
        if (r[j] != 0) nonzero = true;
    }
    if (!nonzero) return false;
    // fraction-free reduction against the stored echelon rows
    for (const auto& e : pivots_) {
        if (r[e.pivot] == 0) continue;
        const mpz_class& a = e.entries[e.pivot];
        mpz_class b = r[e.pivot];
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        mpz_class ma = a / g, mb = b / g;
        mpz_class content = 0;
        for (std::size_t j = 0; j < r.size(); ++j) {
            r[j] = ma * r[j] - mb * e.entries[j];
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), r[j].get_mpz_t());
        }
        if (content > 1)
            for (auto& x : r) x /= content;
    }
    std::size_t pivot = r.size();
    for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot == r.size()) return false;
    pivots_.push_back({pivot, std::move(r)});
    return true;
}

} // namespace specinf

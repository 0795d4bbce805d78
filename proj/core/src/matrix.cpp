#include "dictlp/matrix.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace dictlp {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("QMatrix: ragged initializer");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("QMatrix: row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

QVector QMatrix::row(std::size_t r) const {
    QVector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
}

QVector QMatrix::column(std::size_t c) const {
    QVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

QMatrix QMatrix::select_columns(std::span<const std::size_t> cols) const {
    QMatrix out(rows_, cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
        if (cols[k] >= cols_) throw std::out_of_range("QMatrix: column index out of range");
        for (std::size_t r = 0; r < rows_; ++r) out(r, k) = (*this)(r, cols[k]);
    }
    return out;
}

QMatrix QMatrix::with_row(const QVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("QMatrix: appended row has wrong length");
    QMatrix out(rows_ + 1, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < cols_; ++c) out(rows_, c) = v[c];
    return out;
}

QVector operator*(const QMatrix& m, const QVector& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    QVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero()) out[r] += m(r, c) * v[c];
    return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    QMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

QVector operator+(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sum: length mismatch");
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

QVector operator-(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector difference: length mismatch");
    QVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

QVector operator*(const Rational& k, const QVector& v) {
    QVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
    return out;
}

Rational dot(const QVector& a, const QVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool is_nonnegative(const QVector& v) {
    for (const auto& x : v)
        if (x.is_negative()) return false;
    return true;
}

bool is_nonpositive(const QVector& v) {
    for (const auto& x : v)
        if (x.is_positive()) return false;
    return true;
}

bool is_zero(const QVector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

std::ostream& operator<<(std::ostream& os, const QVector& v) {
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    return os << ')';
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", " : "") << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

RrefResult rref(const QMatrix& m) {
    RrefResult out{m, 0, {}};
    QMatrix& a = out.reduced;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t pivot = lead;
        while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != lead)
            for (std::size_t k = 0; k < cols; ++k) std::swap(a(pivot, k), a(lead, k));

        const Rational inv = Rational(1) / a(lead, c);
        for (std::size_t k = c; k < cols; ++k) a(lead, k) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || a(r, c).is_zero()) continue;
            const Rational factor = a(r, c);
            for (std::size_t k = c; k < cols; ++k) a(r, k) -= factor * a(lead, k);
        }
        out.pivot_cols.push_back(c);
        ++lead;
    }
    out.rank = lead;
    return out;
}

std::size_t rank(const QMatrix& m) { return rref(m).rank; }

std::optional<QMatrix> solve_linear(const QMatrix& m, const QMatrix& rhs) {
    if (m.rows() != m.cols()) throw std::invalid_argument("solve_linear: matrix is not square");
    if (rhs.rows() != m.rows()) throw std::invalid_argument("solve_linear: right-hand side has wrong length");
    const std::size_t n = m.rows();
    QMatrix aug(n, n + rhs.cols());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        for (std::size_t c = 0; c < rhs.cols(); ++c) aug(r, n + c) = rhs(r, c);
    }
    RrefResult red = rref(aug);
    // Nonsingular iff the first n columns all carry pivots.
    if (red.pivot_cols.size() < n || (n > 0 && red.pivot_cols[n - 1] != n - 1)) return std::nullopt;
    QMatrix x(n, rhs.cols());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < rhs.cols(); ++c) x(r, c) = red.reduced(r, n + c);
    return x;
}

std::optional<QVector> solve_linear(const QMatrix& m, const QVector& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve_linear: right-hand side has wrong length");
    QMatrix b(rhs.size(), 1);
    for (std::size_t i = 0; i < rhs.size(); ++i) b(i, 0) = rhs[i];
    auto x = solve_linear(m, b);
    if (!x) return std::nullopt;
    return x->column(0);
}

bool rowspace_contains(const QMatrix& m, const QVector& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("rowspace_contains: vector length differs from column count");
    return rank(m) == rank(m.with_row(v));
}

bool rowspace_equal(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("rowspace_equal: column counts differ");
    QMatrix stacked(a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) stacked(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) stacked(a.rows() + r, c) = b(r, c);
    const std::size_t joint = rank(stacked);
    return rank(a) == joint && rank(b) == joint;
}

}  // namespace dictlp

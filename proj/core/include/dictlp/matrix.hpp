#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "dictlp/rational.hpp"

namespace dictlp {

/// Fixed-length vector of exact rationals.
class QVector {
public:
    QVector() = default;
    explicit QVector(std::size_t size) : entries_(size) {}
    QVector(std::initializer_list<Rational> values) : entries_(values) {}
    explicit QVector(std::vector<Rational> values) : entries_(std::move(values)) {}

    std::size_t size() const { return entries_.size(); }
    Rational& operator[](std::size_t i) { return entries_[i]; }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }

    auto begin() { return entries_.begin(); }
    auto end() { return entries_.end(); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    std::span<const Rational> view() const { return entries_; }

    friend bool operator==(const QVector&, const QVector&) = default;

private:
    std::vector<Rational> entries_;
};

/// Dense row-major matrix of exact rationals.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    /// Builds from nested rows; every row must have the same length.
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    QVector row(std::size_t r) const;
    QVector column(std::size_t c) const;
    QMatrix transpose() const;
    /// Columns picked in the given order (0-based positions).
    QMatrix select_columns(std::span<const std::size_t> cols) const;
    /// Copy with one extra row appended.
    QMatrix with_row(const QVector& v) const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

QVector operator*(const QMatrix& m, const QVector& v);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const Rational& k, const QVector& v);
Rational dot(const QVector& a, const QVector& b);

bool is_nonnegative(const QVector& v);
bool is_nonpositive(const QVector& v);
bool is_zero(const QVector& v);

std::ostream& operator<<(std::ostream& os, const QVector& v);
std::ostream& operator<<(std::ostream& os, const QMatrix& m);

struct RrefResult {
    QMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;  // 0-based, strictly increasing
};

/// Reduced row echelon form. The first nonzero entry in a column (scanning
/// down from the current row) is taken as pivot.
RrefResult rref(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Unique solution of m·x = rhs, or nullopt when m is singular.
/// Throws std::invalid_argument when m is not square or rhs has the wrong length.
std::optional<QVector> solve_linear(const QMatrix& m, const QVector& rhs);

/// Solves m·X = rhs for all columns of rhs at once; nullopt when m is singular.
std::optional<QMatrix> solve_linear(const QMatrix& m, const QMatrix& rhs);

/// True iff v is a linear combination of the rows of m.
bool rowspace_contains(const QMatrix& m, const QVector& v);

/// True iff the two matrices span the same row space.
bool rowspace_equal(const QMatrix& a, const QMatrix& b);

}  // namespace dictlp

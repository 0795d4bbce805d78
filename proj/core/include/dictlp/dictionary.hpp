#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "dictlp/matrix.hpp"
#include "dictlp/model.hpp"

namespace dictlp {

enum class Side { Primal, Dual };

inline Side flip(Side s) { return s == Side::Primal ? Side::Dual : Side::Primal; }

/// Raised when the columns selected as a basis are linearly dependent.
class NotABasisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by pivot() when the pivot element is zero.
class DegeneratePivotError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * A dictionary for an ordered partition B ∪ N of the variables {1..m+n}:
 *
 *     x_B = constants - coefficients · x_N
 *     z   = objective_value + objective · x_N
 *
 * Row r belongs to basis()[r], column k to nonbasis()[k]. Variable indices
 * are 1-based. The side tag only affects naming (x/z versus y/-w); the
 * algebra is the same for both.
 */
class Dictionary {
public:
    /// Checks shapes and that basis/nonbasis partition {1..m+n}.
    Dictionary(Side side, std::vector<std::size_t> basis, std::vector<std::size_t> nonbasis, QVector constants,
               QMatrix coefficients, QVector objective, Rational objective_value);

    Side side() const { return side_; }
    const std::vector<std::size_t>& basis() const { return basis_; }
    const std::vector<std::size_t>& nonbasis() const { return nonbasis_; }
    const QVector& constants() const { return constants_; }
    const QMatrix& coefficients() const { return coefficients_; }
    const QVector& objective() const { return objective_; }
    const Rational& objective_value() const { return objective_value_; }

    std::size_t rows() const { return basis_.size(); }
    std::size_t cols() const { return nonbasis_.size(); }
    std::size_t var_count() const { return basis_.size() + nonbasis_.size(); }

    /// Position of var in basis()/nonbasis(), or npos.
    std::size_t basis_position(std::size_t var) const;
    std::size_t nonbasis_position(std::size_t var) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Same dictionary with the objective row replaced.
    Dictionary with_objective(QVector objective, Rational objective_value) const;

    /// Strict equality: orders of B and N matter.
    friend bool operator==(const Dictionary&, const Dictionary&) = default;

private:
    Side side_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> nonbasis_;
    QVector constants_;
    QMatrix coefficients_;
    QVector objective_;
    Rational objective_value_;
};

/// The slack-basis dictionary: B = (n+1..n+m), N = (1..n), p = b, Q = A0, q = c.
Dictionary initial_dictionary(const StandardLP& lp);

/**
 * Dictionary for the given ordered basis, computed from A_B^{-1}. N is the
 * complement in ascending order. Throws NotABasisError when A_B is singular
 * and std::invalid_argument for wrong size, out-of-range or repeated indices.
 */
Dictionary dictionary_from_basis(const AugmentedLP& aug, std::span<const std::size_t> basis, Side side = Side::Primal);

/**
 * Exchanges `enter` (nonbasic, position s) and `leave` (basic, position r) by
 * solving row r for the entering variable and substituting it everywhere.
 * enter takes position r of B, leave takes position s of N.
 */
Dictionary pivot(const Dictionary& d, std::size_t enter, std::size_t leave);

bool is_primal_feasible(const Dictionary& d);
bool is_dual_feasible(const Dictionary& d);

/// (p, Q, q, z*) -> (-q, -Q^T, -p, -z*) with B and N swapped and the side flipped.
Dictionary negative_transpose(const Dictionary& d);

/// The point with x_N = 0, indexed by variable (entry j-1 holds x_j).
QVector basic_solution(const Dictionary& d);

/// Sorts B and N ascending and permutes rows and columns to match.
Dictionary canonicalize(const Dictionary& d);

/// Equality up to the order of B and N.
bool equivalent(const Dictionary& a, const Dictionary& b);

}  // namespace dictlp

#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "dictlp/matrix.hpp"

namespace dictlp {

/**
 * Max-form linear program
 *
 *     max  c^T x   s.t.  A0 x <= b,  x >= 0
 *
 * with m constraints and n decision variables. Variables are numbered
 * 1..n (decisions) and n+1..n+m (slacks) wherever an index is exposed.
 */
class StandardLP {
public:
    /// Throws std::invalid_argument unless m, n >= 1 and the shapes agree.
    StandardLP(QMatrix a0, QVector b, QVector c);

    std::size_t m() const { return a0_.rows(); }
    std::size_t n() const { return a0_.cols(); }
    const QMatrix& a0() const { return a0_; }
    const QVector& b() const { return b_; }
    const QVector& c() const { return c_; }

    friend bool operator==(const StandardLP&, const StandardLP&) = default;

private:
    QMatrix a0_;
    QVector b_;
    QVector c_;
};

/// The LP with slacks appended: A = [A0 I], objective padded with m zeros.
struct AugmentedLP {
    StandardLP base;
    QMatrix a;
    QVector c_ext;

    std::size_t m() const { return base.m(); }
    std::size_t n() const { return base.n(); }
    std::size_t var_count() const { return base.m() + base.n(); }
};

/**
 * Relates the dual variable names y_1..y_{m+n} to columns of the dual's own
 * augmented matrix. For a primal with m constraints and n decisions, the dual
 * decisions are y_{n+1..n+m} and the dual slacks are y_{1..n}. In the dual
 * StandardLP (n constraints, m decisions) y_{n+i} is column i and y_j is
 * column m+j. All indices are 1-based.
 */
class DualIndexMap {
public:
    DualIndexMap(std::size_t primal_m, std::size_t primal_n) : m_(primal_m), n_(primal_n) {}

    std::size_t column_of_variable(std::size_t y) const;
    std::size_t variable_of_column(std::size_t column) const;
    std::size_t size() const { return m_ + n_; }

private:
    std::size_t m_;
    std::size_t n_;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/**
 * Reads the line-oriented LP format:
 *
 *     lp v1
 *     <m> <n>
 *     c_1 ... c_n
 *     a_11 ... a_1n b_1        (m rows)
 *
 * '#' starts a comment; blank and comment-only lines are skipped; tokens are
 * separated by any run of spaces or tabs. Throws ParseError.
 */
StandardLP parse_lp(std::istream& in);
StandardLP parse_lp(std::string_view text);

/// Canonical text: single spaces, newline after every line, no comments.
std::string serialize_lp(const StandardLP& lp);

AugmentedLP augment(const StandardLP& lp);

/// Dual in max form: A0' = -A0^T, b' = -c, c' = -b.
std::pair<StandardLP, DualIndexMap> dual_lp(const StandardLP& lp);

}  // namespace dictlp

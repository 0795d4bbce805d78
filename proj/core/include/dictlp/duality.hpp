#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dictlp/dictionary.hpp"
#include "dictlp/matrix.hpp"
#include "dictlp/model.hpp"

namespace dictlp {

/**
 * The (m+1) x (m+n+2) matrix
 *
 *     [ 0 | A0   | I | -b ]
 *     [ 1 | -c^T | 0 |  0 ]
 *
 * with columns labelled 0, 1..m+n, m+n+1. Its kernel carries the primal
 * problem (x_0 is the objective value, x_{m+n+1} = 1) and its row space the
 * dual problem (y_0 = 1, y_{m+n+1} is the dual objective -w).
 */
struct RMatrix {
    QMatrix mat;
    std::size_t m = 0;
    std::size_t n = 0;
};

RMatrix build_R(const StandardLP& lp);

/// R · xbar == 0. Throws std::invalid_argument when the length is not m+n+2.
bool in_kernel(const RMatrix& r, const QVector& xbar);

/// ybar lies in the row space of R. Throws std::invalid_argument on length mismatch.
bool in_rowspace(const RMatrix& r, const QVector& ybar);

/**
 * Multipliers (u_1..u_m, u_0) with [u, u_0] · R = ybar, read off the identity
 * and leading columns of R; nullopt when ybar is not in the row space.
 */
std::optional<QVector> rowspace_witness(const RMatrix& r, const QVector& ybar);

/// The matrix [[0, Q, I, -p], [1, -q^T, 0, -z*]] with its column labels.
struct DictionaryMatrix {
    QMatrix mat;
    std::vector<std::size_t> labels;  // (0, N..., B..., m+n+1)

    /// Columns permuted so that label k sits in column k.
    QMatrix natural_order() const;
};

DictionaryMatrix dictionary_matrix(const Dictionary& d);

/**
 * The dictionary of the dual LP whose basic variables are `basis` (dual
 * variable names y_1..y_{m+n}, size n), built directly from the dual's own
 * augmented matrix. Returned with Side::Dual and y-variable indices.
 * Throws NotABasisError when the selection is singular.
 */
Dictionary dual_dictionary_direct(const StandardLP& lp, std::span<const std::size_t> basis);

struct BijectionReport {
    std::vector<std::size_t> basis;
    bool negative_transpose_matches = false;
    bool rowspace_matches = false;
    std::string details;

    bool passed() const { return negative_transpose_matches && rowspace_matches; }
};

/**
 * For a primal basis B: compares negative_transpose(dictionary_from_basis(B))
 * with dual_dictionary_direct(N) up to ordering, and checks that the
 * dictionary matrix spans the same row space as R. Throws NotABasisError
 * for a singular B.
 */
BijectionReport verify_bijection(const StandardLP& lp, std::span<const std::size_t> basis);

class BudgetExceededError : public std::runtime_error {
public:
    BudgetExceededError(std::size_t candidates, std::size_t limit);
    std::size_t candidates() const { return candidates_; }

private:
    std::size_t candidates_;
};

inline constexpr std::size_t kDefaultBasisLimit = 100000;

/// C(n, k), saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k);

/**
 * All m-subsets of {1..m+n} with nonsingular A_B, ascending within and
 * across subsets. Throws BudgetExceededError when C(m+n, m) > limit.
 */
std::vector<std::vector<std::size_t>> enumerate_bases(const StandardLP& lp, std::size_t limit = kDefaultBasisLimit);

/// verify_bijection over every enumerated basis; reports in basis order.
/// With threads > 1 the bases are split across worker threads.
std::vector<BijectionReport> verify_all_bases(const StandardLP& lp, std::size_t limit = kDefaultBasisLimit,
                                              unsigned threads = 1);

}  // namespace dictlp

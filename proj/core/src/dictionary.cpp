#include "dictlp/dictionary.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dictlp {

Dictionary::Dictionary(Side side, std::vector<std::size_t> basis, std::vector<std::size_t> nonbasis, QVector constants,
                       QMatrix coefficients, QVector objective, Rational objective_value)
    : side_(side),
      basis_(std::move(basis)),
      nonbasis_(std::move(nonbasis)),
      constants_(std::move(constants)),
      coefficients_(std::move(coefficients)),
      objective_(std::move(objective)),
      objective_value_(std::move(objective_value)) {
    const std::size_t m = basis_.size();
    const std::size_t n = nonbasis_.size();
    if (constants_.size() != m || coefficients_.rows() != m || coefficients_.cols() != n || objective_.size() != n)
        throw std::invalid_argument("Dictionary: inconsistent shapes");
    std::vector<bool> seen(m + n + 1, false);
    auto mark = [&](std::size_t v) {
        if (v < 1 || v > m + n || seen[v])
            throw std::invalid_argument("Dictionary: B and N must partition 1.." + std::to_string(m + n));
        seen[v] = true;
    };
    std::for_each(basis_.begin(), basis_.end(), mark);
    std::for_each(nonbasis_.begin(), nonbasis_.end(), mark);
}

std::size_t Dictionary::basis_position(std::size_t var) const {
    auto it = std::find(basis_.begin(), basis_.end(), var);
    return it == basis_.end() ? npos : static_cast<std::size_t>(it - basis_.begin());
}

std::size_t Dictionary::nonbasis_position(std::size_t var) const {
    auto it = std::find(nonbasis_.begin(), nonbasis_.end(), var);
    return it == nonbasis_.end() ? npos : static_cast<std::size_t>(it - nonbasis_.begin());
}

Dictionary Dictionary::with_objective(QVector objective, Rational objective_value) const {
    return Dictionary(side_, basis_, nonbasis_, constants_, coefficients_, std::move(objective),
                      std::move(objective_value));
}

Dictionary initial_dictionary(const StandardLP& lp) {
    std::vector<std::size_t> basis(lp.m());
    std::vector<std::size_t> nonbasis(lp.n());
    std::iota(basis.begin(), basis.end(), lp.n() + 1);
    std::iota(nonbasis.begin(), nonbasis.end(), 1);
    return Dictionary(Side::Primal, std::move(basis), std::move(nonbasis), lp.b(), lp.a0(), lp.c(), Rational(0));
}

Dictionary dictionary_from_basis(const AugmentedLP& aug, std::span<const std::size_t> basis, Side side) {
    const std::size_t m = aug.m();
    const std::size_t total = aug.var_count();
    if (basis.size() != m)
        throw std::invalid_argument("dictionary_from_basis: basis must have " + std::to_string(m) + " indices");
    std::vector<bool> in_basis(total + 1, false);
    for (std::size_t v : basis) {
        if (v < 1 || v > total) throw std::invalid_argument("dictionary_from_basis: index out of range");
        if (in_basis[v]) throw std::invalid_argument("dictionary_from_basis: repeated index");
        in_basis[v] = true;
    }
    std::vector<std::size_t> nonbasis;
    for (std::size_t v = 1; v <= total; ++v)
        if (!in_basis[v]) nonbasis.push_back(v);

    std::vector<std::size_t> basis_cols(basis.size());
    std::vector<std::size_t> nonbasis_cols(nonbasis.size());
    std::transform(basis.begin(), basis.end(), basis_cols.begin(), [](std::size_t v) { return v - 1; });
    std::transform(nonbasis.begin(), nonbasis.end(), nonbasis_cols.begin(), [](std::size_t v) { return v - 1; });
    const QMatrix a_b = aug.a.select_columns(basis_cols);
    const QMatrix a_n = aug.a.select_columns(nonbasis_cols);

    // Solve A_B [p | Q] = [b | A_N] in one elimination.
    QMatrix rhs(m, 1 + nonbasis.size());
    for (std::size_t i = 0; i < m; ++i) {
        rhs(i, 0) = aug.base.b()[i];
        for (std::size_t k = 0; k < nonbasis.size(); ++k) rhs(i, 1 + k) = a_n(i, k);
    }
    auto solved = solve_linear(a_b, rhs);
    if (!solved) throw NotABasisError("not a basis: the selected columns of A are linearly dependent");

    QVector p(m);
    QMatrix q_mat(m, nonbasis.size());
    for (std::size_t i = 0; i < m; ++i) {
        p[i] = (*solved)(i, 0);
        for (std::size_t k = 0; k < nonbasis.size(); ++k) q_mat(i, k) = (*solved)(i, 1 + k);
    }

    // q = c_N - Q^T c_B, z* = c_B^T p
    QVector c_b(m);
    for (std::size_t i = 0; i < m; ++i) c_b[i] = aug.c_ext[basis[i] - 1];
    QVector q(nonbasis.size());
    for (std::size_t k = 0; k < nonbasis.size(); ++k) {
        Rational v = aug.c_ext[nonbasis[k] - 1];
        for (std::size_t i = 0; i < m; ++i) v -= q_mat(i, k) * c_b[i];
        q[k] = v;
    }
    Rational z = dot(c_b, p);

    return Dictionary(side, std::vector<std::size_t>(basis.begin(), basis.end()), std::move(nonbasis), std::move(p),
                      std::move(q_mat), std::move(q), std::move(z));
}

Dictionary pivot(const Dictionary& d, std::size_t enter, std::size_t leave) {
    const std::size_t s = d.nonbasis_position(enter);
    const std::size_t r = d.basis_position(leave);
    if (s == Dictionary::npos) throw std::invalid_argument("pivot: x" + std::to_string(enter) + " is not nonbasic");
    if (r == Dictionary::npos) throw std::invalid_argument("pivot: x" + std::to_string(leave) + " is not basic");

    const QMatrix& a = d.coefficients();
    const QVector& p = d.constants();
    const QVector& q = d.objective();
    const Rational& elem = a(r, s);
    if (elem.is_zero()) throw DegeneratePivotError("degenerate pivot element: coefficient of the entering variable in the leaving row is zero");

    const std::size_t m = d.rows();
    const std::size_t n = d.cols();
    const Rational inv = Rational(1) / elem;

    // Row r solved for the entering variable:
    //   x_enter = p_r/a - (1/a) x_leave - sum_{k != s} (a_rk/a) x_k
    QVector new_p(m);
    QMatrix new_a(m, n);
    new_p[r] = p[r] * inv;
    for (std::size_t k = 0; k < n; ++k) new_a(r, k) = (k == s) ? inv : a(r, k) * inv;

    for (std::size_t i = 0; i < m; ++i) {
        if (i == r) continue;
        const Rational& f = a(i, s);
        new_p[i] = p[i] - f * new_p[r];
        for (std::size_t k = 0; k < n; ++k) new_a(i, k) = (k == s) ? -f * inv : a(i, k) - f * new_a(r, k);
    }

    QVector new_q(n);
    const Rational& qs = q[s];
    for (std::size_t k = 0; k < n; ++k) new_q[k] = (k == s) ? -qs * inv : q[k] - qs * new_a(r, k);
    Rational new_z = d.objective_value() + qs * new_p[r];

    auto basis = d.basis();
    auto nonbasis = d.nonbasis();
    basis[r] = enter;
    nonbasis[s] = leave;
    return Dictionary(d.side(), std::move(basis), std::move(nonbasis), std::move(new_p), std::move(new_a),
                      std::move(new_q), std::move(new_z));
}

bool is_primal_feasible(const Dictionary& d) { return is_nonnegative(d.constants()); }

bool is_dual_feasible(const Dictionary& d) { return is_nonpositive(d.objective()); }

Dictionary negative_transpose(const Dictionary& d) {
    QMatrix t = d.coefficients().transpose();
    for (std::size_t r = 0; r < t.rows(); ++r)
        for (std::size_t c = 0; c < t.cols(); ++c) t(r, c) = -t(r, c);
    return Dictionary(flip(d.side()), d.nonbasis(), d.basis(), Rational(-1) * d.objective(), std::move(t),
                      Rational(-1) * d.constants(), -d.objective_value());
}

QVector basic_solution(const Dictionary& d) {
    QVector x(d.var_count());
    for (std::size_t i = 0; i < d.rows(); ++i) x[d.basis()[i] - 1] = d.constants()[i];
    return x;
}

Dictionary canonicalize(const Dictionary& d) {
    auto order = [](const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> perm(idx.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return idx[a] < idx[b]; });
        return perm;
    };
    const auto row_perm = order(d.basis());
    const auto col_perm = order(d.nonbasis());
    std::vector<std::size_t> basis(d.rows());
    std::vector<std::size_t> nonbasis(d.cols());
    QVector p(d.rows());
    QVector q(d.cols());
    QMatrix a(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i) {
        basis[i] = d.basis()[row_perm[i]];
        p[i] = d.constants()[row_perm[i]];
        for (std::size_t k = 0; k < d.cols(); ++k) a(i, k) = d.coefficients()(row_perm[i], col_perm[k]);
    }
    for (std::size_t k = 0; k < d.cols(); ++k) {
        nonbasis[k] = d.nonbasis()[col_perm[k]];
        q[k] = d.objective()[col_perm[k]];
    }
    return Dictionary(d.side(), std::move(basis), std::move(nonbasis), std::move(p), std::move(a), std::move(q),
                      d.objective_value());
}

bool equivalent(const Dictionary& a, const Dictionary& b) { return canonicalize(a) == canonicalize(b); }

}  // namespace dictlp

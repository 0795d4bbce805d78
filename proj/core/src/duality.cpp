#include "dictlp/duality.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <thread>

namespace dictlp {

RMatrix build_R(const StandardLP& lp) {
    const std::size_t m = lp.m();
    const std::size_t n = lp.n();
    QMatrix r(m + 1, m + n + 2);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) r(i, 1 + j) = lp.a0()(i, j);
        r(i, 1 + n + i) = 1;
        r(i, m + n + 1) = -lp.b()[i];
    }
    r(m, 0) = 1;
    for (std::size_t j = 0; j < n; ++j) r(m, 1 + j) = -lp.c()[j];
    return RMatrix{std::move(r), m, n};
}

bool in_kernel(const RMatrix& r, const QVector& xbar) {
    if (xbar.size() != r.mat.cols()) throw std::invalid_argument("in_kernel: vector length must be m+n+2");
    return is_zero(r.mat * xbar);
}

bool in_rowspace(const RMatrix& r, const QVector& ybar) {
    if (ybar.size() != r.mat.cols()) throw std::invalid_argument("in_rowspace: vector length must be m+n+2");
    return rowspace_contains(r.mat, ybar);
}

std::optional<QVector> rowspace_witness(const RMatrix& r, const QVector& ybar) {
    if (ybar.size() != r.mat.cols()) throw std::invalid_argument("rowspace_witness: vector length must be m+n+2");
    // Column 0 is e_{m+1} and columns n+1..n+m are e_1..e_m, so the
    // multipliers are forced by those coordinates.
    QVector u(r.m + 1);
    for (std::size_t i = 0; i < r.m; ++i) u[i] = ybar[1 + r.n + i];
    u[r.m] = ybar[0];
    if (r.mat.transpose() * u != ybar) return std::nullopt;
    return u;
}

QMatrix DictionaryMatrix::natural_order() const {
    QMatrix out(mat.rows(), mat.cols());
    for (std::size_t k = 0; k < labels.size(); ++k)
        for (std::size_t r = 0; r < mat.rows(); ++r) out(r, labels[k]) = mat(r, k);
    return out;
}

DictionaryMatrix dictionary_matrix(const Dictionary& d) {
    const std::size_t m = d.rows();
    const std::size_t n = d.cols();
    QMatrix mat(m + 1, m + n + 2);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t k = 0; k < n; ++k) mat(i, 1 + k) = d.coefficients()(i, k);
        mat(i, 1 + n + i) = 1;
        mat(i, m + n + 1) = -d.constants()[i];
    }
    mat(m, 0) = 1;
    for (std::size_t k = 0; k < n; ++k) mat(m, 1 + k) = -d.objective()[k];
    mat(m, m + n + 1) = -d.objective_value();

    std::vector<std::size_t> labels;
    labels.reserve(m + n + 2);
    labels.push_back(0);
    labels.insert(labels.end(), d.nonbasis().begin(), d.nonbasis().end());
    labels.insert(labels.end(), d.basis().begin(), d.basis().end());
    labels.push_back(m + n + 1);
    return DictionaryMatrix{std::move(mat), std::move(labels)};
}

Dictionary dual_dictionary_direct(const StandardLP& lp, std::span<const std::size_t> basis) {
    auto [dual, map] = dual_lp(lp);
    std::vector<std::size_t> columns;
    columns.reserve(basis.size());
    for (std::size_t y : basis) columns.push_back(map.column_of_variable(y));

    Dictionary in_columns = dictionary_from_basis(augment(dual), columns, Side::Dual);

    auto relabel = [&map](const std::vector<std::size_t>& cols) {
        std::vector<std::size_t> vars(cols.size());
        std::transform(cols.begin(), cols.end(), vars.begin(),
                       [&map](std::size_t c) { return map.variable_of_column(c); });
        return vars;
    };
    return Dictionary(Side::Dual, relabel(in_columns.basis()), relabel(in_columns.nonbasis()),
                      in_columns.constants(), in_columns.coefficients(), in_columns.objective(),
                      in_columns.objective_value());
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

}  // namespace

BijectionReport verify_bijection(const StandardLP& lp, std::span<const std::size_t> basis) {
    BijectionReport report;
    report.basis.assign(basis.begin(), basis.end());

    const Dictionary primal = dictionary_from_basis(augment(lp), basis);
    const Dictionary via_transpose = negative_transpose(primal);

    std::ostringstream details;
    try {
        const Dictionary direct = dual_dictionary_direct(lp, primal.nonbasis());
        report.negative_transpose_matches = equivalent(via_transpose, direct);
        if (!report.negative_transpose_matches) details << "negative transpose differs from the direct dual dictionary; ";
    } catch (const NotABasisError&) {
        details << "dual selection {" << join(primal.nonbasis()) << "} is singular; ";
    }

    report.rowspace_matches = rowspace_equal(dictionary_matrix(primal).natural_order(), build_R(lp).mat);
    if (!report.rowspace_matches) details << "dictionary matrix spans a different row space than R; ";

    report.details = report.passed() ? "ok" : details.str();
    return report;
}

BudgetExceededError::BudgetExceededError(std::size_t candidates, std::size_t limit)
    : std::runtime_error("basis enumeration needs " + std::to_string(candidates) + " candidate subsets, limit is " +
                         std::to_string(limit)),
      candidates_(candidates) {}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        // result * (n - k + i) / i stays integral at every step
        const std::size_t factor = n - k + i;
        if (result > std::numeric_limits<std::size_t>::max() / factor) return std::numeric_limits<std::size_t>::max();
        result = result * factor / i;
    }
    return result;
}

std::vector<std::vector<std::size_t>> enumerate_bases(const StandardLP& lp, std::size_t limit) {
    const std::size_t m = lp.m();
    const std::size_t total = lp.m() + lp.n();
    const std::size_t candidates = binomial(total, m);
    if (candidates > limit) throw BudgetExceededError(candidates, limit);

    const QMatrix a = augment(lp).a;
    std::vector<std::vector<std::size_t>> bases;
    std::vector<std::size_t> subset(m);
    for (std::size_t i = 0; i < m; ++i) subset[i] = i + 1;
    for (;;) {
        std::vector<std::size_t> cols(m);
        std::transform(subset.begin(), subset.end(), cols.begin(), [](std::size_t v) { return v - 1; });
        if (rank(a.select_columns(cols)) == m) bases.push_back(subset);

        // next subset in lexicographic order
        std::size_t i = m;
        while (i > 0 && subset[i - 1] == total - m + i) --i;
        if (i == 0) break;
        ++subset[i - 1];
        for (std::size_t k = i; k < m; ++k) subset[k] = subset[k - 1] + 1;
    }
    return bases;
}

std::vector<BijectionReport> verify_all_bases(const StandardLP& lp, std::size_t limit, unsigned threads) {
    const auto bases = enumerate_bases(lp, limit);
    std::vector<BijectionReport> reports(bases.size());
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t i = first; i < bases.size(); i += stride) reports[i] = verify_bijection(lp, bases[i]);
    };
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, bases.size()));
    if (workers == 1) {
        work(0, 1);
        return reports;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    pool.clear();
    return reports;
}

}  // namespace dictlp

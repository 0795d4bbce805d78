#include "dictlp/model.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <vector>

namespace dictlp {

StandardLP::StandardLP(QMatrix a0, QVector b, QVector c) : a0_(std::move(a0)), b_(std::move(b)), c_(std::move(c)) {
    if (a0_.rows() < 1 || a0_.cols() < 1) throw std::invalid_argument("StandardLP: need m >= 1 and n >= 1");
    if (b_.size() != a0_.rows()) throw std::invalid_argument("StandardLP: b length differs from row count");
    if (c_.size() != a0_.cols()) throw std::invalid_argument("StandardLP: c length differs from column count");
}

std::size_t DualIndexMap::column_of_variable(std::size_t y) const {
    if (y < 1 || y > m_ + n_) throw std::out_of_range("DualIndexMap: variable index out of range");
    return y > n_ ? y - n_ : m_ + y;
}

std::size_t DualIndexMap::variable_of_column(std::size_t column) const {
    if (column < 1 || column > m_ + n_) throw std::out_of_range("DualIndexMap: column index out of range");
    return column <= m_ ? n_ + column : column - m_;
}

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
    std::vector<Line> lines;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ss(raw);
        Line line{number, {}};
        for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

std::size_t parse_count(const Line& line, const std::string& tok) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line.number, "expected a nonnegative integer, got '" + tok + "'");
    return value;
}

Rational parse_scalar(const Line& line, const std::string& tok) {
    try {
        return Rational::parse(tok);
    } catch (const std::exception& e) {
        throw ParseError(line.number, e.what());
    }
}

void expect_arity(const Line& line, std::size_t want, const char* what) {
    if (line.tokens.size() != want)
        throw ParseError(line.number, std::string(what) + ": expected " + std::to_string(want) + " values, got " +
                                          std::to_string(line.tokens.size()));
}

}  // namespace

StandardLP parse_lp(std::istream& in) {
    const auto lines = tokenize(in);
    if (lines.empty()) throw ParseError(1, "empty input, expected 'lp v1' header");
    const Line& header = lines[0];
    if (header.tokens.size() != 2 || header.tokens[0] != "lp" || header.tokens[1] != "v1")
        throw ParseError(header.number, "expected header 'lp v1'");
    if (lines.size() < 2) throw ParseError(header.number, "missing dimension line");

    const Line& dims = lines[1];
    expect_arity(dims, 2, "dimension line");
    const std::size_t m = parse_count(dims, dims.tokens[0]);
    const std::size_t n = parse_count(dims, dims.tokens[1]);
    if (m < 1 || n < 1) throw ParseError(dims.number, "m and n must both be at least 1");

    if (lines.size() < 3) throw ParseError(dims.number, "missing objective line");
    const Line& obj = lines[2];
    expect_arity(obj, n, "objective line");
    QVector c(n);
    for (std::size_t j = 0; j < n; ++j) c[j] = parse_scalar(obj, obj.tokens[j]);

    QMatrix a0(m, n);
    QVector b(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (lines.size() < 4 + i) throw ParseError(lines.back().number, "expected " + std::to_string(m) + " constraint rows");
        const Line& row = lines[3 + i];
        expect_arity(row, n + 1, "constraint row");
        for (std::size_t j = 0; j < n; ++j) a0(i, j) = parse_scalar(row, row.tokens[j]);
        b[i] = parse_scalar(row, row.tokens[n]);
    }
    if (lines.size() > 3 + m) throw ParseError(lines[3 + m].number, "unexpected content after constraint rows");
    return StandardLP(std::move(a0), std::move(b), std::move(c));
}

StandardLP parse_lp(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_lp(in);
}

std::string serialize_lp(const StandardLP& lp) {
    std::ostringstream out;
    out << "lp v1\n" << lp.m() << ' ' << lp.n() << '\n';
    for (std::size_t j = 0; j < lp.n(); ++j) out << (j ? " " : "") << lp.c()[j];
    out << '\n';
    for (std::size_t i = 0; i < lp.m(); ++i) {
        for (std::size_t j = 0; j < lp.n(); ++j) out << lp.a0()(i, j) << ' ';
        out << lp.b()[i] << '\n';
    }
    return out.str();
}

AugmentedLP augment(const StandardLP& lp) {
    const std::size_t m = lp.m();
    const std::size_t n = lp.n();
    QMatrix a(m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = lp.a0()(i, j);
        a(i, n + i) = 1;
    }
    QVector c_ext(n + m);
    for (std::size_t j = 0; j < n; ++j) c_ext[j] = lp.c()[j];
    return AugmentedLP{lp, std::move(a), std::move(c_ext)};
}

std::pair<StandardLP, DualIndexMap> dual_lp(const StandardLP& lp) {
    QMatrix a0 = lp.a0().transpose();
    for (std::size_t r = 0; r < a0.rows(); ++r)
        for (std::size_t c = 0; c < a0.cols(); ++c) a0(r, c) = -a0(r, c);
    return {StandardLP(std::move(a0), Rational(-1) * lp.c(), Rational(-1) * lp.b()), DualIndexMap(lp.m(), lp.n())};
}

}  // namespace dictlp

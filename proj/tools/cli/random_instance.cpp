#include "random_instance.hpp"

#include <stdexcept>

namespace dictlp::cli {

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t reject_below = (0 - span) % span;
    std::uint64_t x = next();
    while (x < reject_below) x = next();
    return lo + static_cast<std::int64_t>(x % span);
}

StandardLP random_lp(std::size_t m, std::size_t n, std::uint64_t seed, std::int64_t bound) {
    if (m < 1 || n < 1) throw std::invalid_argument("random_lp: m and n must be at least 1");
    if (bound < 1) throw std::invalid_argument("random_lp: bound must be at least 1");
    SplitMix64 rng(seed);
    auto draw = [&] { return Rational(static_cast<long>(rng.uniform(-bound, bound))); };
    QVector c(n);
    for (auto& v : c) v = draw();
    QMatrix a0(m, n);
    QVector b(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) a0(i, j) = draw();
        b[i] = draw();
    }
    return StandardLP(std::move(a0), std::move(b), std::move(c));
}

}  // namespace dictlp::cli

#pragma once

#include <cstddef>
#include <cstdint>

#include "dictlp/model.hpp"

namespace dictlp::cli {

/**
 * SplitMix64 (Steele, Lea, Flood 2014): state += 0x9e3779b97f4a7c15, then
 * the output is mixed with shifts 30/27/31 and multipliers
 * 0xbf58476d1ce4e5b9 / 0x94d049bb133111eb. Any SplitMix64 implementation
 * seeded with the same value produces the same instances.
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi] by rejection: draws below (2^64 mod span)
    /// are discarded, the rest reduced mod span.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::uint64_t state_;
};

/**
 * Random instance with integer entries uniform in [-bound, bound], drawn in
 * file order: c_1..c_n, then for each row a_i1..a_in, b_i.
 * Requires m, n, bound >= 1.
 */
StandardLP random_lp(std::size_t m, std::size_t n, std::uint64_t seed, std::int64_t bound = 5);

}  // namespace dictlp::cli

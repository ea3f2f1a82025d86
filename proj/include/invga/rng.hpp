#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace invga {

/// Seeded random stream used by every stochastic component.
///
/// All draws are derived from the raw mt19937_64 output with our own
/// bounding logic, so a given seed produces the same sequence on every
/// platform and standard library (std::uniform_int_distribution makes no
/// such promise).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Unbiased uniform integer in [lo, hi], inclusive. Requires lo <= hi.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span =
            static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
        if (span == ~std::uint64_t{0}) {
            return static_cast<std::int64_t>(next_u64());
        }
        // Mask-rejection: draw k bits where 2^k > span, retry on overshoot.
        std::uint64_t mask = span;
        mask |= mask >> 1;
        mask |= mask >> 2;
        mask |= mask >> 4;
        mask |= mask >> 8;
        mask |= mask >> 16;
        mask |= mask >> 32;
        std::uint64_t r = next_u64() & mask;
        while (r > span) {
            r = next_u64() & mask;
        }
        return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + r);
    }

    std::size_t uniform_index(std::size_t count) {
        return static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(count) - 1));
    }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// First k entries of a uniform random permutation of 0..n-1.
    std::vector<std::size_t> sample_distinct(std::size_t k, std::size_t n) {
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) {
            idx[i] = i;
        }
        for (std::size_t i = 0; i < k && i + 1 < n; ++i) {
            const std::size_t j =
                i + static_cast<std::size_t>(uniform_int(0, static_cast<std::int64_t>(n - i) - 1));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        return idx;
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const std::size_t j = uniform_index(i);
            std::swap(items[i - 1], items[j]);
        }
    }

  private:
    std::mt19937_64 gen_;
};

} // namespace invga

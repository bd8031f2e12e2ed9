#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gcore {

// SplitMix64. Self-contained so that seeded runs are reproducible across
// platforms and standard library versions (std::uniform_int_distribution is
// implementation-defined).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling to avoid modulo bias
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % bound;
    }

    double unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::span<T> values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

    /// k distinct values from [0, n) by partial Fisher-Yates. Order is random.
    std::vector<std::uint32_t> sample_distinct(std::uint32_t n, std::uint32_t k);

  private:
    std::uint64_t state_;
};

/// Stable per-index seed derivation: stream i of a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    Rng rng(master ^ (0x517cc1b727220a95ULL * (index + 1)));
    return rng.next_u64();
}

inline std::vector<std::uint32_t> Rng::sample_distinct(std::uint32_t n, std::uint32_t k) {
    if (k > n) k = n;
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::uint32_t> out;
    out.reserve(k);
    for (std::uint32_t i = 0; i < k; ++i) {
        std::uint32_t j = i + static_cast<std::uint32_t>(below(n - i));
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    return out;
}

} // namespace gcore

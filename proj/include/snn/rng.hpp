/**
 * Deterministic random number generation.
 *
 * Everything seeded goes through this generator so that a fixed seed gives
 * bit-identical results across builds and platforms; the standard
 * distributions are avoided because their output is implementation-defined.
 */
#ifndef SNN_RNG_HPP
#define SNN_RNG_HPP

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <vector>

namespace snn {

/// splitmix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Derive an independent stream seed from a master seed and a stream id.
/// Chain calls to fan out over several indices, e.g.
/// derive_seed(derive_seed(master, rate_index), sample_index).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return mix64(seed + 0x9E3779B97F4A7C15ull * (stream + 1));
}

inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> streams) noexcept {
    for (std::uint64_t s : streams) seed = derive_seed(seed, s);
    return seed;
}

/// splitmix64 sequence generator.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() noexcept {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n), unbiased via rejection. Requires n > 0.
    std::uint64_t uniform_below(std::uint64_t n) noexcept {
        const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
        const std::uint64_t limit = max - max % n;
        std::uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return x % n;
    }

    /// k distinct indices from [0, n), returned sorted ascending.
    std::vector<std::ptrdiff_t> sample_without_replacement(std::ptrdiff_t n, std::ptrdiff_t k);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(uniform_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

inline std::vector<std::ptrdiff_t> Rng::sample_without_replacement(std::ptrdiff_t n,
                                                                   std::ptrdiff_t k) {
    std::vector<std::ptrdiff_t> pool(static_cast<std::size_t>(n));
    for (std::ptrdiff_t i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    // Partial Fisher-Yates: the first k slots end up holding the sample.
    for (std::ptrdiff_t i = 0; i < k; ++i) {
        std::ptrdiff_t j = i + static_cast<std::ptrdiff_t>(
                                   uniform_below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    pool.resize(static_cast<std::size_t>(k));
    std::sort(pool.begin(), pool.end());
    return pool;
}

}  // namespace snn

#endif

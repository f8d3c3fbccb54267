#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace causalgen {

// splitmix64 finalizer (Steele, Lea & Flood / Vigna). Used both for seeding
// the main generator and for deriving independent child seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Portable seeded 64-bit generator: xoshiro256++ (Blackman & Vigna 2019),
/// state expanded from the seed with splitmix64. The same seed yields the
/// same stream on every platform; none of the implementation-defined
/// std::random distributions are used anywhere in the library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : state_) {
            x = mix64(x);
            w = x;
        }
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Index drawn from a categorical distribution; probs need not be
    /// normalized beyond validation (last bucket absorbs rounding slack).
    int categorical(const std::vector<double>& probs) {
        const double u = uniform01();
        double cum = 0.0;
        for (std::size_t k = 0; k + 1 < probs.size(); ++k) {
            cum += probs[k];
            if (u < cum) return static_cast<int>(k);
        }
        return static_cast<int>(probs.size()) - 1;
    }

    /// Standard normal via Box-Muller; consumes exactly two uniforms.
    double normal() {
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Fisher-Yates shuffle driven by this stream.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

// Seed-splitting stages; child seeds are a pure function of
// (master_seed, sweep point, run index, stage).
enum class SeedStage : std::uint64_t { config = 1, graph = 2, scm = 3, data = 4 };

/// Derive a child seed by chaining the splitmix64 finalizer over the
/// components. Regenerating one artifact never disturbs the others.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t point, std::uint64_t index,
                                 SeedStage stage) {
    std::uint64_t h = mix64(master);
    h = mix64(h ^ (point + 0x100ULL));
    h = mix64(h ^ (index + 0x10000ULL));
    h = mix64(h ^ static_cast<std::uint64_t>(stage));
    return h;
}

}  // namespace causalgen

#ifndef BERTINI_RNG_HPP
#define BERTINI_RNG_HPP

#include <cstdint>

namespace bertini {

/*
 * SplitMix64 generator (Steele, Lea, Flood; public domain reference
 * constants).  Chosen over std::mt19937 + distributions because report
 * determinism must be bit-exact across platforms, and the standard
 * distributions are implementation-defined.
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n), n >= 1, by rejection sampling.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    /// Uniform signed integer in [-bound, bound].
    long long signed_bounded(long long bound) {
        return static_cast<long long>(below(2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
    }

private:
    std::uint64_t state_;
};

}  // namespace bertini

#endif  // BERTINI_RNG_HPP

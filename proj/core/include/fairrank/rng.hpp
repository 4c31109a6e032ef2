#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace fairrank {

// Deterministic 64-bit PRNG: xorshift64* with the classic (12, 25, 27)
// shift triple and multiplier 0x2545F4914F6CDD1D.  The seed is mixed once
// through the splitmix64 finalizer so that seed 0 (and other small seeds)
// yields a healthy non-zero state.  Instance generation and the test
// harness rely on this generator producing identical streams on every
// platform, which is why std::mt19937 / std::uniform_int_distribution
// (implementation-defined streams) are not used.
class Xorshift64Star {
public:
    explicit Xorshift64Star(uint64_t seed) {
        // splitmix64 finalizer.
        uint64_t z = seed + 0x9E3779B97F4A7C15ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z ^= z >> 31;
        state_ = z != 0 ? z : 0x9E3779B97F4A7C15ull;
    }

    uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1Dull;
    }

    // Uniform in [0, bound), unbiased via rejection of the tail zone.
    uint64_t below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("rng: bound must be positive");
        uint64_t zone = (static_cast<unsigned __int128>(1) << 64) / bound * bound;
        for (;;) {
            uint64_t x = next();
            if (zone == 0 || x < zone) return x % bound;  // zone == 0 iff bound divides 2^64
        }
    }

    // Uniform in [lo, hi], inclusive.
    long long range(long long lo, long long hi) {
        if (lo > hi) throw std::invalid_argument("rng: empty range");
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo) + 1));
    }

    // Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    uint64_t state_;
};

}  // namespace fairrank

#ifndef HEARSTKIT_RNG_HPP
#define HEARSTKIT_RNG_HPP

#include <cstdint>
#include <vector>

namespace hearstkit {

// splitmix64, used for seeding and seed derivation.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

// xoshiro256++: portable, seedable; identical streams on every platform
// for a given seed. All stochastic protocol code goes through this.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& w : s_) w = sm.next();
    }

    uint64_t next() {
        const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform in [0,1) with 53 bits of precision.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [-1,1).
    double uniform_sym() { return 2.0 * uniform01() - 1.0; }

    // Unbiased integer in [0, bound) via rejection.
    uint64_t below(uint64_t bound) {
        const uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

// Stable (seed, index) -> stream derivation for per-iteration RNGs.
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
    SplitMix64 sm(seed ^ (0xa0761d6478bd642fULL + index * 0xe7037ed1a0b428dbULL));
    return sm.next();
}

template <typename T>
void shuffle(std::vector<T>& v, Xoshiro256pp& rng) {
    for (size_t i = v.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng.below(i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace hearstkit

#endif

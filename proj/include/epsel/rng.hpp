#pragma once

#include <cstdint>

// Deterministic, platform-independent random streams.
//
// Every simulation unit (scenario s, replication r) owns its own generator,
// seeded by hashing (base_seed, s, r) with the splitmix64 finalizer.  Results
// are therefore identical for any execution order or degree of parallelism.

namespace epsel {

// splitmix64 finalizer (Steele, Lea & Flood / Vigna reference constants).
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Child seed for stream (a, b) of a base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t h = mix64(base);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    return h;
}

// xoshiro256++ (Blackman & Vigna 2019), seeded through splitmix64 as its
// authors recommend.  Chosen over std::mt19937_64 because the simulator
// constructs one generator per replication and the 4-word state makes that
// construction essentially free.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        s_[0] = mix64(seed);
        s_[1] = mix64(s_[0]);
        s_[2] = mix64(s_[1]);
        s_[3] = mix64(s_[2]);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4];
};

}  // namespace epsel

#pragma once

#include <cstdint>

namespace fracwalk {

// splitmix64 step (Steele, Lea, Vigna); used for seeding and substream keys.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t splitmix64_hash(std::uint64_t x) {
    std::uint64_t s = x;
    return splitmix64_next(s);
}

// xoshiro256++ (Blackman, Vigna).  One instance per Monte Carlo sample;
// state expanded from a 64-bit key via splitmix64.
class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(std::uint64_t key) {
        std::uint64_t sm = key;
        for (auto& w : s_) w = splitmix64_next(sm);
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
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

    // uniform on [0, 1): 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // uniform on the open interval (0, 1); safe for inverse-CDF transforms
    // that are singular at the endpoints.
    double uniform_open01() {
        return (static_cast<double>(next() >> 12) + 0.5) * 0x1.0p-52;
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

// Substream derivation: sample i draws from a generator keyed by
// seed XOR splitmix64_hash(i).  Output is therefore a pure function of
// (seed, i), independent of any worker/thread assignment.
inline Xoshiro256pp substream(std::uint64_t seed, std::uint64_t index) {
    return Xoshiro256pp(seed ^ splitmix64_hash(index));
}

inline constexpr const char* rng_name = "xoshiro256++/splitmix64-substreams";

}  // namespace fracwalk

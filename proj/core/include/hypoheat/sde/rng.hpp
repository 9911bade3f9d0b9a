#pragma once

#include <cmath>
#include <cstdint>

namespace hypoheat::sde {

/// splitmix64, used to key per-path streams from (master seed, path index).
inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// xoshiro256** with a self-contained Box-Muller normal generator. Each path
/// owns one Rng seeded from (master, path index), so ensembles are bit-stable
/// under any scheduling of paths across workers.
class Rng {
public:
    Rng() : Rng(0, 0) {}
    Rng(uint64_t master_seed, uint64_t stream_index) {
        uint64_t sm = master_seed ^ (0xA3C59AC2ull * (stream_index + 1));
        sm ^= stream_index << 32;
        for (auto& w : s_) w = splitmix64(sm);
    }

    uint64_t next_u64() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in (0,1).
    double uniform() {
        return (next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54;
    }

    /// Standard normal (cached Box-Muller pair).
    double normal() {
        if (has_cache_) {
            has_cache_ = false;
            return cache_;
        }
        const double u1 = uniform(), u2 = uniform();
        const double rad = std::sqrt(-2.0 * std::log(u1));
        const double ang = 6.283185307179586476925287 * u2;
        cache_ = rad * std::sin(ang);
        has_cache_ = true;
        return rad * std::cos(ang);
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
    double cache_ = 0.0;
    bool has_cache_ = false;
};

} // namespace hypoheat::sde

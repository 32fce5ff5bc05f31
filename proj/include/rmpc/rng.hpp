#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rmpc {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// mt19937_64 engine with hand-rolled distributions.  The std:: distribution
// objects are implementation-defined, so sampling goes through explicit
// integer/bit arithmetic to keep streams reproducible across toolchains.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // uniform on {0, ..., bound-1}, bound >= 1; rejection keeps it unbiased
    uint64_t uniform_below(uint64_t bound) {
        uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            uint64_t x = eng_();
            if (x >= threshold) return x % bound;
        }
    }

    // uniform on [0, 1) with 53-bit resolution
    double unit_double() { return double(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit_double() < p; }

    // standard normal via Box-Muller; second value cached
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1, u2;
        do { u1 = unit_double(); } while (u1 == 0.0);
        u2 = unit_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925287 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Independent per-frame stream: the pair (master_seed, frame_index) is mixed
// into one engine seed, so frame i sees the same noise no matter which worker
// runs it or in what order.
inline Rng frame_rng(uint64_t master_seed, uint64_t frame_index) {
    uint64_t s = splitmix64(master_seed ^ splitmix64(frame_index + 0x51ed2701));
    return Rng(s);
}

} // namespace rmpc

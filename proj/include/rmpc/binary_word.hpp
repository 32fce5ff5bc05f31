#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace rmpc {

// Vector over GF(2), bit-packed into 64-bit limbs.  Bit i lives in limb i/64
// at position i%64.  Length is fixed at construction; unused high bits of the
// last limb stay zero.
class BinaryWord {
public:
    BinaryWord() = default;
    explicit BinaryWord(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static BinaryWord from_support(int n, const std::vector<int32_t>& support) {
        BinaryWord x(n);
        for (int32_t i : support) x.set(i, 1);
        return x;
    }

    int size() const { return n_; }

    int get(int i) const { return int((w_[size_t(i) >> 6] >> (i & 63)) & 1u); }

    void set(int i, int v) {
        uint64_t m = 1ull << (i & 63);
        if (v) w_[size_t(i) >> 6] |= m;
        else   w_[size_t(i) >> 6] &= ~m;
    }

    void flip(int i) { w_[size_t(i) >> 6] ^= 1ull << (i & 63); }

    void operator^=(const BinaryWord& o) {
        for (size_t j = 0; j < w_.size(); ++j) w_[j] ^= o.w_[j];
    }

    int weight() const {
        int s = 0;
        for (uint64_t v : w_) s += std::popcount(v);
        return s;
    }

    // parity of <*this, o> = popcount(AND) mod 2
    int dot(const BinaryWord& o) const {
        uint64_t acc = 0;
        for (size_t j = 0; j < w_.size(); ++j) acc ^= w_[j] & o.w_[j];
        return std::popcount(acc) & 1;
    }

    bool is_zero() const {
        for (uint64_t v : w_) if (v) return false;
        return true;
    }

    // index of the first set bit, or -1
    int first_set() const {
        for (size_t j = 0; j < w_.size(); ++j)
            if (w_[j]) return int(j * 64 + std::countr_zero(w_[j]));
        return -1;
    }

    std::vector<int32_t> support() const {
        std::vector<int32_t> s;
        for (size_t j = 0; j < w_.size(); ++j) {
            uint64_t v = w_[j];
            while (v) {
                s.push_back(int32_t(j * 64 + std::countr_zero(v)));
                v &= v - 1;
            }
        }
        return s;
    }

    bool operator==(const BinaryWord& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BinaryWord& o) const { return !(*this == o); }

    const std::vector<uint64_t>& limbs() const { return w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace rmpc

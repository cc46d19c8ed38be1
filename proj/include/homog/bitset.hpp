#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace homog {

// Fixed-width dynamic bitset; the workhorse behind adjacency rows and
// vertex sets. Word layout is little-endian within the vector.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    int size_bits() const { return n_; }
    std::size_t words() const { return w_.size(); }
    uint64_t word(std::size_t i) const { return w_[i]; }

    bool test(int i) const { return (w_[std::size_t(i) >> 6] >> (i & 63)) & 1u; }
    void set(int i) { w_[std::size_t(i) >> 6] |= uint64_t(1) << (i & 63); }
    void reset(int i) { w_[std::size_t(i) >> 6] &= ~(uint64_t(1) << (i & 63)); }
    void clear() { std::fill(w_.begin(), w_.end(), 0); }

    void set_all() {
        std::fill(w_.begin(), w_.end(), ~uint64_t(0));
        trim();
    }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += std::popcount(x);
        return c;
    }

    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }

    bool none() const { return !any(); }

    long long and_count(const Bitset& o) const {
        long long c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    Bitset complement_within(int nbits) const {
        Bitset r = *this;
        for (auto& x : r.w_) x = ~x;
        r.n_ = nbits;
        r.trim();
        return r;
    }

    int first_set() const { return next_set(-1); }

    // First set bit strictly after `after`, or -1.
    int next_set(int after) const {
        int start = after + 1;
        if (start >= n_) return -1;
        std::size_t wi = std::size_t(start) >> 6;
        uint64_t cur = w_[wi] & (~uint64_t(0) << (start & 63));
        while (true) {
            if (cur) return int(wi * 64 + std::countr_zero(cur));
            if (++wi >= w_.size()) return -1;
            cur = w_[wi];
        }
    }

    template <class F> void for_each(F f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t cur = w_[wi];
            while (cur) {
                int b = std::countr_zero(cur);
                f(int(wi * 64 + b));
                cur &= cur - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(std::size_t(count()));
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

    bool operator==(const Bitset& o) const = default;

private:
    int n_ = 0;
    std::vector<uint64_t> w_;

    void trim() {
        if (n_ & 63) w_.back() &= (~uint64_t(0)) >> (64 - (n_ & 63));
    }
};

} // namespace homog

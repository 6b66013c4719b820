#pragma once

#include <cstdint>
#include <vector>

namespace zsf {

// Fixed-width dynamic bitset over [0, n). Supports the cyclic shift used
// by subsequence-sum closures: shifted(k) maps bit i to bit (i + k) mod n.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::int64_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::int64_t size() const { return n_; }

    bool test(std::int64_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::int64_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    std::int64_t count() const {
        std::int64_t c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }

    BitVec& operator|=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    bool operator==(const BitVec&) const = default;

    BitVec shifted(std::int64_t k) const {
        BitVec r(n_);
        k %= n_;
        if (k < 0) k += n_;
        if (k == 0) return *this;
        for (std::int64_t i = 0; i < n_; ++i)
            if (test(i)) r.set((i + k) % n_);
        return r;
    }

    // adds sums reachable by appending one copy of g: S |= (S + g) | {g}
    void close_with(std::int64_t g) {
        BitVec sh = shifted(g);
        *this |= sh;
        set(g % n_);
    }

    std::vector<std::int64_t> to_list() const {
        std::vector<std::int64_t> v;
        for (std::int64_t i = 0; i < n_; ++i)
            if (test(i)) v.push_back(i);
        return v;
    }

private:
    std::int64_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace zsf

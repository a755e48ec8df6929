#pragma once

#include <cstdint>
#include <vector>

namespace toric {

/// Fixed-size bitset sized at runtime. Used for poset relations and
/// vertex/facet incidences, where the subset and intersection operations
/// dominate the running time.
class Bits {
public:
    Bits() : n_(0) {}
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int size() const { return n_; }

    void set(int i) { w_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    int count() const {
        int c = 0;
        for (uint64_t x : w_) c += __builtin_popcountll(x);
        return c;
    }

    bool any() const {
        for (uint64_t x : w_)
            if (x) return true;
        return false;
    }

    bool is_subset_of(const Bits& o) const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    /// Lowest set index, or -1.
    int first_set() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i) * 64 + __builtin_ctzll(w_[i]);
        return -1;
    }

    /// Highest set index, or -1.
    int last_set() const {
        for (size_t i = w_.size(); i-- > 0;)
            if (w_[i]) return int(i) * 64 + 63 - __builtin_clzll(w_[i]);
        return -1;
    }

    int next_set(int from) const {
        if (from >= n_) return -1;
        size_t word = from >> 6;
        uint64_t cur = w_[word] & (~uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return int(word) * 64 + __builtin_ctzll(cur);
            if (++word >= w_.size()) return -1;
            cur = w_[word];
        }
    }

    Bits operator&(const Bits& o) const {
        Bits r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }

    Bits operator|(const Bits& o) const {
        Bits r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }

    bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator<(const Bits& o) const { return w_ < o.w_; }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (int i = first_set(); i >= 0; i = next_set(i + 1)) out.push_back(i);
        return out;
    }

private:
    int n_;
    std::vector<uint64_t> w_;
};

}  // namespace toric

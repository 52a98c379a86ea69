#ifndef GENT_BITSET_HPP
#define GENT_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "gent/errors.hpp"

namespace gent {

/// Fixed-width dynamic bitset used for vertex sets. Comparison follows the
/// numeric value of the bitmask (vertex 0 is the least significant bit).
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bitset from_mask(int n, std::uint64_t mask) {
        Bitset b(n);
        if (n > 0) b.w_[0] = mask;
        return b;
    }

    int universe_size() const { return n_; }

    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    void set_all() {
        for (auto& w : w_) w = ~std::uint64_t(0);
        trim();
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

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

    Bitset operator&(const Bitset& o) const { return apply(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); }
    Bitset operator|(const Bitset& o) const { return apply(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); }
    Bitset operator^(const Bitset& o) const { return apply(o, [](std::uint64_t a, std::uint64_t b) { return a ^ b; }); }
    Bitset minus(const Bitset& o) const { return apply(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; }); }

    Bitset complement_set() const {
        Bitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // numeric order of the mask value
    bool operator<(const Bitset& o) const {
        for (std::size_t i = w_.size(); i-- > 0;)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        return false;
    }

    /// Mask value as a 64-bit word; only valid when the universe fits.
    std::uint64_t mask64() const {
        if (n_ > 64) throw InputError("bitset does not fit in 64 bits");
        return w_.empty() ? 0 : w_[0];
    }

    int find_first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            std::uint64_t w = w_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(int(i * 64) + b);
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> v;
        v.reserve(count());
        for_each([&](int i) { v.push_back(i); });
        return v;
    }

private:
    template <typename Op>
    Bitset apply(const Bitset& o, Op op) const {
        Bitset r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = op(w_[i], o.w_[i]);
        return r;
    }

    void trim() {
        if (n_ % 64 != 0 && !w_.empty())
            w_.back() &= (std::uint64_t(1) << (n_ % 64)) - 1;
        if (n_ == 0) w_.clear();
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace gent

#endif

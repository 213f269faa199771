#ifndef BICOVER_BITS_HPP
#define BICOVER_BITS_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace bicover {

/// Smallest x >= 0 with 2^x >= v.  Requires v >= 1.
inline int ceil_log2(std::uint64_t v) {
    int x = 0;
    while ((std::uint64_t{1} << x) < v) ++x;
    return x;
}

/// Smallest x >= 0 with 2^x * den >= num, i.e. ceil(log2(num/den)) for a
/// rational argument, evaluated in integer arithmetic.  Requires den >= 1.
inline int ceil_log2_ratio(std::uint64_t num, std::uint64_t den) {
    int x = 0;
    while ((std::uint64_t{1} << x) * den < num) ++x;
    return x;
}

/// Exact binomial coefficient; saturates at UINT64_MAX on overflow.
inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        if (r > UINT64_MAX / num) return UINT64_MAX;
        r = r * num / static_cast<std::uint64_t>(i);
    }
    return r;
}

/// Advances a strictly increasing k-subset of {0..n-1} to its lexicographic
/// successor.  Returns false when c was the last one.
inline bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<int> first_combination(int k) {
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[i] = i;
    return c;
}

/// Dynamic fixed-width bitset over 64-bit words.  Used for per-edge masks,
/// where the hot operation is AND followed by a zero test.
class EdgeBitset {
public:
    EdgeBitset() = default;
    explicit EdgeBitset(int nbits)
        : nbits_(nbits), w_(static_cast<std::size_t>((nbits + 63) / 64), 0) {}

    int size() const { return nbits_; }
    int words() const { return static_cast<int>(w_.size()); }
    const std::uint64_t* data() const { return w_.data(); }
    std::uint64_t* data() { return w_.data(); }

    void set(int i) { w_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[static_cast<std::size_t>(i >> 6)] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1; }

    void set_all() {
        for (auto& x : w_) x = ~std::uint64_t{0};
        trim();
    }

    bool none() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    bool any() const { return !none(); }

    int count() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }

    /// Index of the lowest set bit; -1 if none.
    int first() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i * 64) + std::countr_zero(w_[i]);
        return -1;
    }

    EdgeBitset& operator&=(const EdgeBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    EdgeBitset& operator|=(const EdgeBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    friend EdgeBitset operator&(EdgeBitset a, const EdgeBitset& b) { return a &= b; }
    friend EdgeBitset operator|(EdgeBitset a, const EdgeBitset& b) { return a |= b; }
    friend bool operator==(const EdgeBitset& a, const EdgeBitset& b) {
        return a.nbits_ == b.nbits_ && a.w_ == b.w_;
    }

private:
    void trim() {
        if (nbits_ & 63) w_.back() &= (std::uint64_t{1} << (nbits_ & 63)) - 1;
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace bicover

#endif // BICOVER_BITS_HPP

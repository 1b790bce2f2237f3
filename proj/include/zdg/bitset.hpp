#pragma once

#include <cstdint>
#include <vector>

namespace zdg {

/// Fixed-size bit set used for element sets and adjacency rows.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    bool operator==(const Bitset& o) const = default;

    /// True when every bit of this set is also set in `o`.
    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    /// Index of the first set bit at or after `from`, or -1.
    int next_set(int from) const {
        if (from >= size_) return -1;
        int w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) {
                int bit = (w << 6) + __builtin_ctzll(cur);
                return bit < size_ ? bit : -1;
            }
            if (++w >= static_cast<int>(words_.size())) return -1;
            cur = words_[w];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int i = next_set(0); i >= 0; i = next_set(i + 1)) out.push_back(i);
        return out;
    }

private:
    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace zdg

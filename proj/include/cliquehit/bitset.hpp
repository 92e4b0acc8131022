#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace cliquehit {

// Fixed-width bitset over {0, ..., nbits-1}. Binary operations require equal widths.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {
        assert(nbits >= 0);
    }

    static Bitset full(int nbits) {
        Bitset b(nbits);
        for (auto& w : b.words_) w = ~0ull;
        b.trim();
        return b;
    }

    static Bitset of(int nbits, std::initializer_list<int> bits) {
        Bitset b(nbits);
        for (int i : bits) b.set(i);
        return b;
    }

    static Bitset from_vector(int nbits, const std::vector<int>& bits) {
        Bitset b(nbits);
        for (int i : bits) b.set(i);
        return b;
    }

    int width() const { return nbits_; }

    bool test(int i) const {
        assert(0 <= i && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    void set(int i) {
        assert(0 <= i && i < nbits_);
        words_[i >> 6] |= 1ull << (i & 63);
    }

    void reset(int i) {
        assert(0 <= i && i < nbits_);
        words_[i >> 6] &= ~(1ull << (i & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    Bitset& operator^=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

    // set difference: bits in *this and not in o
    Bitset setminus(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        Bitset r(*this);
        for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const = default;

    // index of lowest set bit, -1 if none
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    // lowest set bit strictly above i, -1 if none
    int next(int i) const {
        if (i + 1 >= nbits_) return -1;
        int w = (i + 1) >> 6;
        std::uint64_t cur = words_[w] & (~0ull << ((i + 1) & 63));
        while (true) {
            if (cur) return w * 64 + std::countr_zero(cur);
            if (++w >= int(words_.size())) return -1;
            cur = words_[w];
        }
    }

    template <typename F>
    void for_each(F f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                f(int(i * 64) + std::countr_zero(w));
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

    // Orders sets as their ascending member lists compare lexicographically:
    // at the lowest differing bit, the set containing it comes first.
    bool lex_less(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t d = words_[i] ^ o.words_[i];
            if (d) {
                std::uint64_t low = d & (~d + 1);
                return words_[i] & low;
            }
        }
        return false;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>{}(nbits_);
        for (auto w : words_) h = h * 1099511628211ull + std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    void trim() {
        if (nbits_ & 63) words_.back() &= (~0ull >> (64 - (nbits_ & 63)));
        if (nbits_ == 0 && !words_.empty()) words_.clear();
    }

    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace cliquehit

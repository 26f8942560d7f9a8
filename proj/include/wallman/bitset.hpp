#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace wallman {

/// Dynamically sized set of small integers, stored as 64-bit words.
///
/// Every set of lattice elements, filter members, or space points is one of
/// these. Bits past size() are kept zero, so word-wise equality and
/// popcount are exact.
class Bitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t bits_per_word = 64;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;

    explicit Bitset(std::size_t size) : size_(size), words_(word_count(size), 0) {}

    Bitset(std::size_t size, std::initializer_list<std::size_t> members) : Bitset(size)
    {
        for (auto m : members)
            set(m);
    }

    static Bitset full(std::size_t size)
    {
        Bitset b(size);
        std::fill(b.words_.begin(), b.words_.end(), ~Word{0});
        b.trim();
        return b;
    }

    template <typename Range>
    static Bitset from_range(std::size_t size, const Range& members)
    {
        Bitset b(size);
        for (auto m : members)
            b.set(static_cast<std::size_t>(m));
        return b;
    }

    std::size_t size() const { return size_; }

    /// Copy with a new universe size; members at or past new_size are dropped.
    Bitset resized(std::size_t new_size) const
    {
        Bitset r(new_size);
        std::size_t n = std::min(r.words_.size(), words_.size());
        std::copy_n(words_.begin(), n, r.words_.begin());
        r.trim();
        return r;
    }

    void set(std::size_t i) { words_[i / bits_per_word] |= bit(i); }
    void reset(std::size_t i) { words_[i / bits_per_word] &= ~bit(i); }
    void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }
    bool test(std::size_t i) const { return (words_[i / bits_per_word] & bit(i)) != 0; }
    bool operator[](std::size_t i) const { return test(i); }

    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool any() const
    {
        return std::any_of(words_.begin(), words_.end(), [](Word w) { return w != 0; });
    }
    bool none() const { return !any(); }

    /// Index of the lowest member, or npos.
    std::size_t first() const { return next(0); }

    /// Index of the lowest member >= from, or npos.
    std::size_t next(std::size_t from) const
    {
        if (from >= size_)
            return npos;
        std::size_t w = from / bits_per_word;
        Word cur = words_[w] & (~Word{0} << (from % bits_per_word));
        while (true) {
            if (cur != 0)
                return w * bits_per_word + static_cast<std::size_t>(std::countr_zero(cur));
            if (++w == words_.size())
                return npos;
            cur = words_[w];
        }
    }

    bool is_subset_of(const Bitset& other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~other.words_[i]) != 0)
                return false;
        return true;
    }

    bool intersects(const Bitset& other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & other.words_[i]) != 0)
                return true;
        return false;
    }

    /// Popcount of the intersection without materializing it.
    std::size_t count_and(const Bitset& other) const
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator^=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= o.words_[i];
        return *this;
    }
    /// Set difference.
    Bitset& operator-=(const Bitset& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    Bitset operator~() const
    {
        Bitset r(*this);
        for (auto& w : r.words_)
            w = ~w;
        r.trim();
        return r;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    friend bool operator==(const Bitset& a, const Bitset& b) = default;

    /// Lexicographic on the member index sequence: {0} < {0,1} < {1}.
    friend bool operator<(const Bitset& a, const Bitset& b)
    {
        std::size_t i = a.first(), j = b.first();
        while (i != npos && j != npos) {
            if (i != j)
                return i < j;
            i = a.next(i + 1);
            j = b.next(j + 1);
        }
        return i == npos && j != npos;
    }

    template <typename F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            Word cur = words_[w];
            while (cur != 0) {
                f(w * bits_per_word + static_cast<std::size_t>(std::countr_zero(cur)));
                cur &= cur - 1;
            }
        }
    }

    std::vector<std::size_t> members() const
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const
    {
        std::size_t h = size_;
        for (auto w : words_)
            h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    const std::vector<Word>& words() const { return words_; }

private:
    static std::size_t word_count(std::size_t bits) { return (bits + bits_per_word - 1) / bits_per_word; }
    static Word bit(std::size_t i) { return Word{1} << (i % bits_per_word); }

    void trim()
    {
        if (size_ % bits_per_word != 0 && !words_.empty())
            words_.back() &= (Word{1} << (size_ % bits_per_word)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<Word> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

} // namespace wallman

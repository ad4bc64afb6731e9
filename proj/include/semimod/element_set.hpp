#pragma once

// Dense bit set over the element indices 0..n-1 of a finite structure.
//
// Ideals, submodules and zero-divisor sets are all stored this way.  The
// canonical order used for every list of ideals in the library is the
// lexicographic order of the sorted member lists, i.e. {0,2,4} < {0,3}.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace semimod {

using Index = std::uint32_t;

class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}
    ElementSet(std::size_t universe, std::initializer_list<Index> members)
        : ElementSet(universe) {
        for (Index i : members) insert(i);
    }

    static ElementSet full(std::size_t universe) {
        ElementSet s(universe);
        for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Index>(i));
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(Index i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    // Returns true if i was not present before.
    bool insert(Index i) {
        std::uint64_t& w = words_[i >> 6];
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (w & bit) return false;
        w |= bit;
        return true;
    }
    void erase(Index i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t size() const {
        std::size_t n = 0;
        for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    bool is_subset_of(const ElementSet& other) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~other.words_[k]) return false;
        return true;
    }

    ElementSet& operator|=(const ElementSet& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
        return *this;
    }
    ElementSet& operator&=(const ElementSet& other) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
        return *this;
    }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

    // Members of *this not in other.
    ElementSet minus(const ElementSet& other) const {
        ElementSet r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= ~other.words_[k];
        return r;
    }

    std::optional<Index> first() const { return next_from(0); }
    // Smallest member >= from.
    std::optional<Index> next_from(std::size_t from) const {
        if (from >= universe_) return std::nullopt;
        std::size_t k = from >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w) return static_cast<Index>(k * 64 + std::countr_zero(w));
            if (++k == words_.size()) return std::nullopt;
            w = words_[k];
        }
    }

    std::vector<Index> members() const {
        std::vector<Index> out;
        for (auto i = first(); i; i = next_from(*i + 1)) out.push_back(*i);
        return out;
    }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    // Lexicographic on sorted member lists.
    friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
        auto x = a.first();
        auto y = b.first();
        while (x && y) {
            if (*x != *y) return *x <=> *y;
            x = a.next_from(*x + 1);
            y = b.next_from(*y + 1);
        }
        if (x) return std::strong_ordering::greater;
        if (y) return std::strong_ordering::less;
        return std::strong_ordering::equal;
    }

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace semimod

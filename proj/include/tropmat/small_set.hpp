#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace tropmat {

/// Subset of {0,...,63} backed by a single machine word. Ground sets in this
/// library are capped at 64 elements; all subset enumeration is exponential
/// and meant for desk-scale instances.
class SmallSet {
public:
    constexpr SmallSet() = default;
    constexpr explicit SmallSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr int max_elements = 64;

    static constexpr SmallSet of(std::initializer_list<int> elems) {
        SmallSet s;
        for (int e : elems) s.insert(e);
        return s;
    }

    /// {0,...,n-1}
    static constexpr SmallSet full(int n) {
        return n >= 64 ? SmallSet(~std::uint64_t{0}) : SmallSet((std::uint64_t{1} << n) - 1);
    }

    constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
    constexpr void insert(int e) { bits_ |= std::uint64_t{1} << e; }
    constexpr void erase(int e) { bits_ &= ~(std::uint64_t{1} << e); }

    constexpr SmallSet with(int e) const {
        SmallSet s = *this;
        s.insert(e);
        return s;
    }
    constexpr SmallSet without(int e) const {
        SmallSet s = *this;
        s.erase(e);
        return s;
    }

    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int min() const { return std::countr_zero(bits_); }

    constexpr bool subset_of(SmallSet o) const { return (bits_ & o.bits_) == bits_; }
    constexpr bool intersects(SmallSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr SmallSet operator|(SmallSet o) const { return SmallSet(bits_ | o.bits_); }
    constexpr SmallSet operator&(SmallSet o) const { return SmallSet(bits_ & o.bits_); }
    /// set difference
    constexpr SmallSet operator-(SmallSet o) const { return SmallSet(bits_ & ~o.bits_); }
    constexpr SmallSet& operator|=(SmallSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr SmallSet& operator&=(SmallSet o) {
        bits_ &= o.bits_;
        return *this;
    }

    constexpr bool operator==(const SmallSet&) const = default;

    constexpr std::uint64_t raw() const { return bits_; }

    /// Lexicographic order on the sorted element lists; a strict prefix
    /// precedes its extensions ({0} < {0,1} < {0,2} < {1}).
    static constexpr bool lex_less(SmallSet a, SmallSet b) {
        while (!a.empty() && !b.empty()) {
            int x = a.min(), y = b.min();
            if (x != y) return x < y;
            a.erase(x);
            b.erase(y);
        }
        return a.empty() && !b.empty();
    }

    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int e : *this) out.push_back(e);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int e : *this) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

private:
    std::uint64_t bits_ = 0;
};

/// Visits every k-subset of {0,...,n-1} in lexicographic order of the sorted
/// element tuples. The callback may return void, or bool to stop early.
template <class F>
void for_each_combination(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    auto emit = [&]() {
        SmallSet s;
        for (int i : idx) s.insert(i);
        if constexpr (std::is_same_v<decltype(f(SmallSet{})), bool>) {
            return f(s);
        } else {
            f(s);
            return false;
        }
    };
    if (k == 0) {
        f(SmallSet{});
        return;
    }
    while (true) {
        if (emit()) return;
        // advance the rightmost index that still has room
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

}  // namespace tropmat

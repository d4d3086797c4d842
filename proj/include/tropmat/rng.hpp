#pragma once

#include <cstdint>

namespace tropmat {

/// splitmix64; used instead of <random> distributions so that generated
/// instances are byte-identical for a fixed seed on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// uniform in [0, n); n > 0
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// uniform in [lo, hi] inclusive
    int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

    /// true with probability num/den
    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
    std::uint64_t state_;
};

}  // namespace tropmat

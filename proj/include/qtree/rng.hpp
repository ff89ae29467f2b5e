#ifndef QTREE_RNG_HPP
#define QTREE_RNG_HPP

#include <cstdint>

namespace qtree {

/// splitmix64 stream. std::mt19937 would be deterministic too, but the
/// standard integer distributions are not portable across library
/// implementations; suites must be byte-reproducible, so randomness is
/// pinned down to this generator plus rejection sampling.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// uniform in [0, n) by rejection
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) return 0;
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

    /// derive an independent stream (for per-instance determinism)
    Rng fork(std::uint64_t salt) {
        std::uint64_t s = state_ ^ (salt + 0x632be59bd9b4e019ull);
        s = (s ^ (s >> 30)) * 0xbf58476d1ce4e5b9ull;
        return Rng(s);
    }

private:
    std::uint64_t state_;
};

} // namespace qtree

#endif

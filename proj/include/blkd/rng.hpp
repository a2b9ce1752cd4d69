#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>

#include "rational.hpp"

namespace blkd {

// Deterministic randomness for the generators. The raw stream is MT19937-64
// (output sequence fixed by the published algorithm; frozen vectors live in
// the tests). Bounded draws and Bernoulli trials are implemented here rather
// than through distribution objects, whose output is not pinned across
// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // unbiased uniform draw in [0, m)
    std::uint64_t below(std::uint64_t m) {
        if (m == 0) throw std::invalid_argument("Rng::below(0)");
        // reject the top partial band of the 64-bit range
        std::uint64_t usable = ~std::uint64_t(0) - (~std::uint64_t(0) % m + 1) % m;
        while (true) {
            std::uint64_t r = next();
            if (usable == ~std::uint64_t(0) || r <= usable) return r % m;
        }
    }

    // uniform draw in [0, m) for big m, via 64-bit limbs and rejection
    Int below_int(const Int& m) {
        if (m <= 0) throw std::invalid_argument("Rng::below_int: m <= 0");
        if (m <= Int(~std::uint64_t(0))) return Int(below(std::uint64_t(m)));
        unsigned words = 0;
        Int t = m - 1;
        while (t > 0) {
            ++words;
            t >>= 64;
        }
        while (true) {
            Int r = 0;
            for (unsigned i = 0; i < words; ++i) r = (r << 64) | Int(next());
            if (r < (Int(1) << (64 * words)) - ((Int(1) << (64 * words)) % m)) return r % m;
        }
    }

    // exact Bernoulli(p) for rational p; p clamped to [0,1]
    bool bernoulli(const Rat& p) {
        if (p <= 0) return false;
        if (p >= 1) return true;
        return below_int(denominator(p)) < numerator(p);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace blkd

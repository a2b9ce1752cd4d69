#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace blkd {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Every threshold in the repo is decided through this header: plain rational
// comparisons, or integer cross-powering for W^{p/q} forms. No floating point
// ever reaches a branch.

inline Int ipow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Rat rpow(const Rat& base, unsigned e) {
    return Rat(ipow(numerator(base), e), ipow(denominator(base), e));
}

inline bool rat_is_int(const Rat& r) { return denominator(r) == 1; }

inline Int rat_floor(const Rat& r) {
    Int q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && numerator(r) % denominator(r) != 0) --q;
    return q;
}

inline Int rat_ceil(const Rat& r) {
    Int f = rat_floor(r);
    return f + (Rat(f) == r ? 0 : 1);
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational '" + s + "' (expected p or p/q)");
    }
}

inline std::string rat_str(const Rat& r) {
    if (rat_is_int(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

enum class Cmp { less, equal, greater };

inline Cmp cmp_rat(const Rat& a, const Rat& b) {
    if (a < b) return Cmp::less;
    if (a == b) return Cmp::equal;
    return Cmp::greater;
}

// t vs coeff * W^{p/q}, all quantities nonnegative; exact via cross-powering.
inline Cmp cmp_count_vs_pow(const Int& t, const Rat& coeff, const Int& W, unsigned p, unsigned q) {
    if (coeff < 0) throw std::invalid_argument("cmp_count_vs_pow: negative coefficient");
    // (t * cd)^q  vs  cn^q * W^p
    Int lhs = ipow(t * denominator(coeff), q);
    Int rhs = ipow(numerator(coeff), q) * ipow(W, p);
    if (lhs < rhs) return Cmp::less;
    if (lhs == rhs) return Cmp::equal;
    return Cmp::greater;
}

// smallest nonnegative integer y with y >= coeff * W^{p/q}
inline Int ceil_coeff_pow(const Rat& coeff, const Int& W, unsigned p, unsigned q) {
    if (coeff <= 0) return 0;
    Int lo = 0, hi = 1;
    while (cmp_count_vs_pow(hi, coeff, W, p, q) == Cmp::less) hi <<= 1;
    while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (cmp_count_vs_pow(mid, coeff, W, p, q) == Cmp::less)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

// Threshold of the form coeff * W^{p/q}; remembers whether a comparison ever
// landed exactly on the boundary (the spec's flagged edge case).
struct PowThreshold {
    Rat coeff;
    Int W = 0;
    unsigned p = 1;
    unsigned q = 1;
    mutable bool boundary_hit = false;

    Cmp compare(const Int& t) const {
        Cmp c = cmp_count_vs_pow(t, coeff, W, p, q);
        if (c == Cmp::equal) boundary_hit = true;
        return c;
    }
    bool at_least(const Int& t) const { return compare(t) != Cmp::less; }      // t >= thr
    bool strictly_above(const Int& t) const { return compare(t) == Cmp::greater; }
    bool strictly_below(const Int& t) const { return compare(t) == Cmp::less; }  // t < thr
    Int ceil() const { return ceil_coeff_pow(coeff, W, p, q); }

    std::string str() const {
        std::string s = rat_str(coeff);
        if (!(p == q || W == 1)) {
            s += "*" + W.str() + "^(" + std::to_string(p) + "/" + std::to_string(q) + ")";
        } else if (p == q) {
            // integral exponent 1: fold W in
            return rat_str(coeff * Rat(W));
        }
        return s;
    }
};

// Certified rational interval for Euler's number, tight to 1e-6.
inline Rat euler_lo() { return Rat(2718281, 1000000); }
inline Rat euler_hi() { return Rat(2718282, 1000000); }

}  // namespace blkd

#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>
#include <stdexcept>
#include <cstdint>

namespace mcf {

using Int = mpz_class;
using Rat = mpq_class;

// Errors shared across modules.
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}
inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline int sgn(const Rat& r) { return mpq_sgn(r.get_mpq_t()); }
inline int sgn(const Int& z) { return mpz_sgn(z.get_mpz_t()); }
inline Rat abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

Int floor_div(const Int& a, const Int& b);
Int rat_floor(const Rat& r);

// Parses "p", "p/q", or decimal-free integer strings.
Rat parse_rat(const std::string& s);
std::string rat_str(const Rat& r);

double to_double(const Rat& r);

// Closed interval with rational endpoints; the bare minimum of interval
// arithmetic needed to steer sign determination of algebraic numbers.
struct RatInterval {
    Rat lo, hi;
    RatInterval() = default;
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    static RatInterval point(const Rat& v) { return {v, v}; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    Rat width() const { return hi - lo; }
    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator*(const RatInterval& o) const;
    RatInterval operator+(const Rat& c) const { return {lo + c, hi + c}; }
    RatInterval operator*(const Rat& c) const {
        return c >= 0 ? RatInterval{lo * c, hi * c} : RatInterval{hi * c, lo * c};
    }
    // Sign if the interval certifies one, else 2 (undecided).
    int certified_sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        if (sgn(lo) == 0 && sgn(hi) == 0) return 0;
        return 2;
    }
};

// splitmix64: the named stable generator used by every randomized check in
// this project. Streams are split per worker by seeding with seed + index.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform in [0,1).
    double next_double() { return (next() >> 11) * 0x1.0p-53; }
    // Uniform integer in [0, n).
    uint64_t next_below(uint64_t n) { return next() % n; }
    // Small random rational with numerator in [1, num_max] and denominator in [1, den_max].
    Rat next_rat(long num_max, long den_max) {
        long n = 1 + long(next_below(uint64_t(num_max)));
        long d = 1 + long(next_below(uint64_t(den_max)));
        return make_rat(n, d);
    }
};

} // namespace mcf

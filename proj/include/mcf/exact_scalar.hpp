#pragma once

#include "mcf/poly.hpp"

#include <optional>
#include <variant>

namespace mcf {

// View of a quadratic value as (a + b*sqrt(d)) / c with d squarefree, c > 0,
// gcd(a, b, c) = 1. d == 0 encodes a rational.
struct QuadView {
    Int a, b, c, d;
    std::string str() const;
};

// A number in the exact tower: a rational, or a real algebraic number given
// by a squarefree defining polynomial, a residue polynomial (the value is
// residue(alpha) for the root alpha isolated by [lo, hi]), and the interval.
//
// Arithmetic is exact. Elements of the same field (same defining polynomial
// and same root) combine by residue arithmetic; a rational combines with
// anything; two quadratic values from distinct fields combine through a
// resultant composition. Anything past that throws unsupported_error, which
// is the documented failure mode of the domain-search pipeline.
class ExactScalar {
public:
    ExactScalar() : v_(Rat(0)) {}
    ExactScalar(long n) : v_(Rat(n)) {}
    ExactScalar(const Rat& r) : v_(r) {}
    ExactScalar(const Int& z) : v_(Rat(z)) {}

    // The root of p isolated by `iv` (exactly one real root of p inside).
    static ExactScalar make_root(const Poly& p, const RatInterval& iv);
    // All real roots of p, ascending.
    static std::vector<ExactScalar> all_roots(const Poly& p);
    static ExactScalar sqrt_of(const Rat& v);
    // (a + b*sqrt(d)) / c, integers, c != 0, d >= 0 (d need not be squarefree).
    static ExactScalar from_quad(const Int& a, const Int& b, const Int& c, const Int& d);

    bool is_rational() const { return std::holds_alternative<Rat>(v_); }
    const Rat& rat() const; // requires is_rational()

    ExactScalar operator+(const ExactScalar& o) const;
    ExactScalar operator-(const ExactScalar& o) const;
    ExactScalar operator*(const ExactScalar& o) const;
    ExactScalar operator/(const ExactScalar& o) const;
    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    // Exact three-way comparison, decidable across fields.
    int compare(const ExactScalar& o) const;
    bool operator==(const ExactScalar& o) const { return compare(o) == 0; }
    bool operator!=(const ExactScalar& o) const { return compare(o) != 0; }
    bool operator<(const ExactScalar& o) const { return compare(o) < 0; }
    bool operator<=(const ExactScalar& o) const { return compare(o) <= 0; }
    bool operator>(const ExactScalar& o) const { return compare(o) > 0; }
    bool operator>=(const ExactScalar& o) const { return compare(o) >= 0; }

    double to_double() const;
    // Enclosing interval of width <= eps.
    RatInterval approx(const Rat& eps) const;

    // Deterministic byte encoding of the value; equal values encode equally.
    // Rationals demote, so the encoding doubles as the canonicality check.
    std::string encode() const;
    // Identifier of the representation field Q(alpha) (empty for rationals);
    // values with equal identifiers combine by residue arithmetic.
    std::string rep_field() const;
    // Human-readable form: "p/q", "(a+b*sqrt(d))/c", or "root(<poly>, k)".
    std::string str() const;
    // Quadratic view when the value has degree <= 2 over Q.
    std::optional<QuadView> quad_view() const;
    // Degree of the value's minimal polynomial (1 for rationals).
    int value_degree() const;

private:
    struct Alg {
        Poly defining;   // squarefree, monic, no rational roots
        Poly residue;    // deg < deg defining; value = residue(alpha)
        RatInterval iv;  // isolates alpha among defining's roots
        // Canonical (minpoly primitive-integer, root index, interval), lazily
        // computed; minpoly has no rational roots.
        mutable std::optional<std::tuple<Poly, int, RatInterval>> canon;
    };
    std::variant<Rat, Alg> v_;

    explicit ExactScalar(Alg a) : v_(std::move(a)) {}
    const Alg& alg() const { return std::get<Alg>(v_); }
    static ExactScalar normalized(Poly defining, Poly residue, RatInterval iv);
    static bool same_field(const Alg& a, const Alg& b);
    const std::tuple<Poly, int, RatInterval>& canonical() const;
    RatInterval value_interval() const;
    void refine() const; // halve the root interval (mutates cached iv)
    ExactScalar compose(const ExactScalar& o, int op) const; // 0:+ 1:*
    friend ExactScalar invert(const ExactScalar& x);
};

ExactScalar invert(const ExactScalar& x);

using ExactVec = std::vector<ExactScalar>;

ExactScalar dot(const ExactVec& a, const ExactVec& b);
ExactVec vec_add(const ExactVec& a, const ExactVec& b);
ExactVec vec_scale(const ExactVec& a, const ExactScalar& s);
ExactScalar vec_sum(const ExactVec& a);
// Scale so the coordinate sum is 1 (throws on zero sum).
ExactVec normalize_sum(const ExactVec& a);
std::string encode_vec(const ExactVec& a);

} // namespace mcf

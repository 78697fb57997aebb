#pragma once

#include "mcf/rational.hpp"

#include <optional>
#include <utility>

namespace mcf {

// Univariate polynomial over Q, coefficients stored lowest degree first.
// The zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rat& v);
    static Poly x();                       // the monomial x
    static Poly from_ints(const std::vector<long>& coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return int(c_.size()) - 1; } // -1 for zero poly
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& operator[](size_t i) const { return c_[i]; }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
    Rat constant_term() const { return c_.empty() ? Rat(0) : c_.front(); }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // Euclidean division; denominator must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    // Division known to be exact; throws std::logic_error on a nonzero remainder.
    Poly divexact(const Poly& d) const;

    Poly derivative() const;
    Rat eval(const Rat& x) const;
    RatInterval eval(const RatInterval& x) const;
    double eval(double x) const;
    // p(x) -> p(-x)
    Poly reflect() const;
    // p(x) -> x^deg * p(1/x) (coefficient reversal)
    Poly reverse() const;
    // p(x) -> p(x + a)
    Poly shift(const Rat& a) const;
    // Substitute another polynomial for x.
    Poly compose(const Poly& inner) const;
    Poly monic() const;

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

Poly gcd(const Poly& a, const Poly& b);
// g = gcd(a,b) = s*a + t*b with g monic (or zero).
void extended_gcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t);
Poly squarefree_part(const Poly& p);

// Scale to integer coefficients with content 1 and positive leading coefficient.
Poly primitive_integer(const Poly& p);

// Sturm chain of p (p assumed squarefree for exact root counting; the chain
// itself is defined for any p and counts distinct roots).
std::vector<Poly> sturm_chain(const Poly& p);
int sign_variations_at(const std::vector<Poly>& chain, const Rat& x);
int sign_variations_at_inf(const std::vector<Poly>& chain, int direction);
// Number of distinct real roots in (a, b]; endpoints must not be roots of p
// when exactness matters (callers arrange this).
int count_roots(const std::vector<Poly>& chain, const Rat& a, const Rat& b);
int count_real_roots(const Poly& p);
int count_roots_in(const Poly& p, const Rat& a, const Rat& b);

// Cauchy-style bound B such that all real roots lie in (-B, B).
Rat root_bound(const Poly& p);

// Isolating intervals for the distinct real roots of p (any nonzero p; the
// squarefree part is isolated). Intervals are pairwise disjoint, sorted,
// and each endpoint is not a root unless lo == hi (exact rational root).
std::vector<RatInterval> isolate_real_roots(const Poly& p);

// All rational roots, via the rational root theorem on the primitive integer
// form. Returns nullopt when the divisor enumeration exceeds its work cap
// (never the case for the small matrices this project handles).
std::optional<std::vector<Rat>> rational_roots(const Poly& p);

// Divide out the factor (x - r) for every rational root r (with multiplicity).
Poly strip_rational_roots(const Poly& p, const std::vector<Rat>& roots);

// Determinant of a square matrix of polynomials by fraction-free elimination.
Poly poly_matrix_det(std::vector<std::vector<Poly>> m);

// Resultant_y(p(y), q(y)) where q's coefficients are polynomials in x.
// p is lifted to constant-in-x coefficients. Used for algebraic number
// composition: see exact_scalar.cpp.
Poly resultant_lifted(const Poly& p, const std::vector<Poly>& q_coeffs_in_x);

} // namespace mcf

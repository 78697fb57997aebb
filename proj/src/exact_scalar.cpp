#include "mcf/exact_scalar.hpp"

#include <algorithm>
#include <sstream>

namespace mcf {

namespace {

// Largest e with e^2 dividing n (n > 0), by trial division.
Int square_part(Int n) {
    Int e(1);
    if (n <= 1) return e;
    for (Int p(2); p * p * p <= n; ++p) {
        while (n % (p * p) == 0) {
            n /= p * p;
            e *= p;
        }
        while (n % p == 0) n /= p;
    }
    // Remaining n has no cube factor; it is a square iff it is a perfect square.
    if (n > 1 && mpz_perfect_square_p(n.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        e *= r;
    }
    return e;
}

// Coefficients (in y) of x - r(y), as polynomials in x.
std::vector<Poly> x_minus_residue(const Poly& r) {
    int d = std::max(r.degree(), 0);
    std::vector<Poly> q(size_t(d) + 1);
    q[0] = Poly(std::vector<Rat>{r.is_zero() ? Rat(0) : -r[0], Rat(1)}); // x - r0
    for (int k = 1; k <= d; ++k) q[size_t(k)] = Poly::constant(-r[size_t(k)]);
    return q;
}

} // namespace

std::string QuadView::str() const {
    std::ostringstream os;
    if (d == 0 || b == 0) {
        os << a;
        if (c != 1) os << "/" << c;
        return os.str();
    }
    os << "(" << a << (b >= 0 ? "+" : "-") << mcf::abs(Rat(b)).get_num()
       << "*sqrt(" << d << "))/" << c;
    return os.str();
}

const Rat& ExactScalar::rat() const {
    if (!is_rational()) throw std::logic_error("ExactScalar::rat on algebraic value");
    return std::get<Rat>(v_);
}

ExactScalar ExactScalar::normalized(Poly defining, Poly residue, RatInterval iv) {
    residue = residue.divmod(defining).second;
    if (residue.degree() <= 0) return ExactScalar(residue.is_zero() ? Rat(0) : residue[0]);
    Alg a;
    a.defining = std::move(defining);
    a.residue = std::move(residue);
    a.iv = std::move(iv);
    return ExactScalar(std::move(a));
}

ExactScalar ExactScalar::make_root(const Poly& p, const RatInterval& iv) {
    Poly sf = squarefree_part(p);
    if (sf.degree() <= 0) throw std::domain_error("make_root: constant polynomial");
    if (iv.lo == iv.hi) return ExactScalar(iv.lo); // degenerate rational root
    auto rr = rational_roots(sf);
    Poly stripped = sf;
    if (rr) {
        for (const Rat& r : *rr)
            if (r > iv.lo && r < iv.hi) return ExactScalar(r); // the isolated root is rational
        stripped = strip_rational_roots(sf, *rr);
    }
    if (stripped.degree() <= 0)
        throw std::logic_error("make_root: no irrational root in interval");
    // Narrow to the isolating interval of `stripped` that holds our root.
    auto candidates = isolate_real_roots(stripped);
    auto chain = sturm_chain(stripped);
    for (const auto& c : candidates) {
        Rat lo = std::max(c.lo, iv.lo), hi = std::min(c.hi, iv.hi);
        if (lo >= hi) continue;
        if (count_roots(chain, lo, hi) == 1)
            return normalized(stripped.monic(), Poly::x(), RatInterval(lo, hi));
    }
    throw std::logic_error("make_root: interval does not isolate a root");
}

std::vector<ExactScalar> ExactScalar::all_roots(const Poly& p) {
    std::vector<ExactScalar> out;
    for (const auto& iv : isolate_real_roots(p)) out.push_back(make_root(p, iv));
    return out;
}

ExactScalar ExactScalar::sqrt_of(const Rat& v) {
    if (sgn(v) < 0) throw std::domain_error("sqrt_of: negative");
    // sqrt(p/q) = sqrt(p*q)/q
    return from_quad(0, 1, v.get_den(), v.get_num() * v.get_den());
}

ExactScalar ExactScalar::from_quad(const Int& a0, const Int& b0, const Int& c0, const Int& d0) {
    if (c0 == 0) throw std::domain_error("from_quad: zero denominator");
    if (d0 < 0) throw std::domain_error("from_quad: negative radicand");
    Int a = a0, b = b0, c = c0, d = d0;
    if (d == 0 || b == 0) return ExactScalar(make_rat(a, c));
    Int e = square_part(d);
    b *= e;
    d /= e * e;
    if (d == 1) return ExactScalar(make_rat(a + b, c));
    if (c < 0) { a = -a; b = -b; c = -c; }
    // defining x^2 - d, alpha = sqrt(d) > 0
    Poly def(std::vector<Rat>{Rat(-d), Rat(0), Rat(1)});
    Rat hi = Rat(d) + 1;
    Poly res(std::vector<Rat>{make_rat(a, c), make_rat(b, c)});
    return normalized(def, res, RatInterval(Rat(0), hi));
}

bool ExactScalar::same_field(const Alg& a, const Alg& b) {
    if (!(a.defining == b.defining)) return false;
    // Same defining polynomial: same root iff the isolating intervals overlap
    // on a subinterval containing a root.
    Rat lo = std::max(a.iv.lo, b.iv.lo), hi = std::min(a.iv.hi, b.iv.hi);
    if (lo >= hi) return false;
    return count_roots_in(a.defining, lo, hi) == 1;
}

void ExactScalar::refine() const {
    const Alg& a = alg();
    auto& iv = const_cast<Alg&>(a).iv;
    Rat mid = (iv.lo + iv.hi) / 2;
    if (sgn(a.defining.eval(mid)) == 0) mid = (iv.lo * 2 + iv.hi) / 3; // dodge an exact hit
    // The defining polynomial is squarefree with exactly one (simple) root in
    // the interval, so the endpoint signs differ.
    if (sgn(a.defining.eval(iv.lo)) == sgn(a.defining.eval(mid)))
        iv.lo = mid;
    else
        iv.hi = mid;
}

RatInterval ExactScalar::value_interval() const {
    if (is_rational()) return RatInterval::point(rat());
    const Alg& a = alg();
    return a.residue.eval(a.iv);
}

int ExactScalar::sign() const {
    if (is_rational()) return sgn(rat());
    const Alg& a = alg();
    // Exact zero test: value = 0 iff alpha is a root of gcd(residue, defining).
    Poly g = gcd(a.residue, a.defining);
    if (g.degree() >= 1 && count_roots_in(g, a.iv.lo, a.iv.hi) == 1) return 0;
    while (true) {
        int s = value_interval().certified_sign();
        if (s != 2) return s;
        refine();
    }
}

int ExactScalar::compare(const ExactScalar& o) const {
    if (is_rational() && o.is_rational()) return cmp(rat(), o.rat());
    if (is_rational() || o.is_rational() ||
        same_field(alg(), o.alg())) {
        return (*this - o).sign();
    }
    // Distinct fields: separate by refinement, with an exact equality fallback.
    for (int round = 0; round < 80; ++round) {
        RatInterval va = value_interval(), vb = o.value_interval();
        if (va.lo > vb.hi) return 1;
        if (vb.lo > va.hi) return -1;
        refine();
        o.refine();
    }
    const auto& [pa, ia, iva] = canonical();
    const auto& [pb, ib, ivb] = o.canonical();
    if (pa == pb && ia == ib) return 0;
    while (true) {
        RatInterval va = value_interval(), vb = o.value_interval();
        if (va.lo > vb.hi) return 1;
        if (vb.lo > va.hi) return -1;
        refine();
        o.refine();
    }
}

const std::tuple<Poly, int, RatInterval>& ExactScalar::canonical() const {
    const Alg& a = alg();
    if (a.canon) return *a.canon;
    // Characteristic polynomial of the value: Res_y(defining(y), x - residue(y)).
    Poly chi = resultant_lifted(a.defining, x_minus_residue(a.residue));
    Poly sf = squarefree_part(chi);
    auto cands = isolate_real_roots(sf);
    auto chain = sturm_chain(sf);
    // Find which candidate holds our value by shrinking the value interval.
    size_t hit = cands.size();
    while (true) {
        RatInterval v = value_interval();
        size_t n = 0, which = cands.size();
        for (size_t i = 0; i < cands.size(); ++i) {
            const auto& c = cands[i];
            bool disjoint = (c.hi < v.lo) || (c.lo > v.hi);
            if (!disjoint) { ++n; which = i; }
        }
        if (n == 1) { hit = which; break; }
        refine();
    }
    RatInterval root_iv = cands[hit];
    if (root_iv.lo == root_iv.hi)
        throw std::logic_error("canonical: rational value not demoted"); // construction demotes these
    auto rr = rational_roots(sf);
    Poly stripped = rr ? strip_rational_roots(sf, *rr) : sf;
    if (!(stripped == sf)) {
        // Recompute the index within the stripped polynomial.
        auto c2 = isolate_real_roots(stripped);
        auto ch2 = sturm_chain(stripped);
        for (size_t i = 0; i < c2.size(); ++i) {
            Rat lo = std::max(c2[i].lo, root_iv.lo), hi = std::min(c2[i].hi, root_iv.hi);
            if (lo < hi && count_roots(ch2, lo, hi) == 1) {
                a.canon = {primitive_integer(stripped), int(i), RatInterval(lo, hi)};
                return *a.canon;
            }
        }
        throw std::logic_error("canonical: lost root while stripping");
    }
    int index = int(hit);
    a.canon = {primitive_integer(stripped), index, root_iv};
    return *a.canon;
}

ExactScalar ExactScalar::compose(const ExactScalar& o, int op) const {
    const auto& [pa, ia, iva] = canonical();
    const auto& [pb, ib, ivb] = o.canonical();
    if (pa.degree() > 2 || pb.degree() > 2)
        throw unsupported_error("ExactScalar: mixed-field arithmetic beyond quadratics");
    Poly A = Poly(std::vector<Rat>(pa.coeffs())).monic();
    Poly B = Poly(std::vector<Rat>(pb.coeffs())).monic();
    Poly chi;
    if (op == 0) {
        // minpoly divisor for a+b: Res_y(A(y), B(x-y))
        int dB = B.degree();
        std::vector<Poly> q(size_t(dB) + 1);
        for (int k = 0; k <= dB; ++k) {
            // coefficient of y^k in B(x - y)
            std::vector<Rat> cx;
            for (int j = k; j <= dB; ++j) {
                Int binom;
                mpz_bin_uiui(binom.get_mpz_t(), unsigned(j), unsigned(k));
                Rat term = B[size_t(j)] * Rat(binom) * ((k % 2) ? -1 : 1);
                if (int(cx.size()) <= j - k) cx.resize(size_t(j - k) + 1, Rat(0));
                cx[size_t(j - k)] += term;
            }
            q[size_t(k)] = Poly(std::move(cx));
        }
        chi = resultant_lifted(A, q);
    } else {
        // minpoly divisor for a*b: Res_y(A(y), y^m B(x/y))
        int dB = B.degree();
        std::vector<Poly> q(size_t(dB) + 1);
        for (int j = 0; j <= dB; ++j) {
            // y^(m-j) coefficient is B_j x^j
            std::vector<Rat> cx(size_t(j) + 1, Rat(0));
            cx[size_t(j)] = B[size_t(j)];
            q[size_t(dB - j)] = Poly(std::move(cx));
        }
        chi = resultant_lifted(A, q);
    }
    if (chi.is_zero() || chi.degree() < 1)
        throw std::logic_error("compose: degenerate resultant");
    Poly sf = squarefree_part(chi);
    auto chain = sturm_chain(sf);
    // Refine until the combined interval isolates one root of sf.
    ExactScalar a_copy = *this, b_copy = o;
    while (true) {
        RatInterval va = a_copy.value_interval(), vb = b_copy.value_interval();
        RatInterval w = (op == 0) ? va + vb : va * vb;
        if (sgn(sf.eval(w.lo)) != 0 && sgn(sf.eval(w.hi)) != 0 &&
            count_roots(chain, w.lo, w.hi) == 1)
            return make_root(sf, w);
        a_copy.refine();
        b_copy.refine();
    }
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    if (is_rational() && o.is_rational()) return ExactScalar(rat() + o.rat());
    if (is_rational()) return o + *this;
    const Alg& a = alg();
    if (o.is_rational())
        return normalized(a.defining, a.residue + Poly::constant(o.rat()), a.iv);
    if (same_field(a, o.alg()))
        return normalized(a.defining, a.residue + o.alg().residue, a.iv);
    return compose(o, 0);
}

ExactScalar ExactScalar::operator-() const {
    if (is_rational()) return ExactScalar(Rat(-rat()));
    const Alg& a = alg();
    return normalized(a.defining, -a.residue, a.iv);
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    if (is_rational() && o.is_rational()) return ExactScalar(rat() * o.rat());
    if (is_rational()) return o * *this;
    const Alg& a = alg();
    if (o.is_rational()) {
        if (sgn(o.rat()) == 0) return ExactScalar(Rat(0));
        return normalized(a.defining, a.residue * o.rat(), a.iv);
    }
    if (same_field(a, o.alg()))
        return normalized(a.defining, a.residue * o.alg().residue, a.iv);
    return compose(o, 1);
}

ExactScalar invert(const ExactScalar& x) {
    if (x.is_rational()) {
        if (sgn(x.rat()) == 0) throw std::domain_error("ExactScalar: division by zero");
        return ExactScalar(Rat(1) / x.rat());
    }
    if (x.sign() == 0) throw std::domain_error("ExactScalar: division by zero");
    const auto& a = x.alg();
    Poly p = a.defining;
    Poly r = a.residue;
    while (true) {
        Poly g, s, t;
        extended_gcd(r, p, g, s, t);
        if (g.degree() == 0) {
            // r*s == 1 mod p, and alpha is a root of p, so s(alpha) = 1/r(alpha).
            return ExactScalar::normalized(a.defining, s, a.iv);
        }
        // alpha is not a root of g (the value is nonzero), so alpha is a root
        // of p/g; shrink and retry.
        p = p.divexact(g).monic();
        r = r.divmod(p).second;
    }
}

ExactScalar ExactScalar::operator/(const ExactScalar& o) const {
    return *this * mcf::invert(o);
}

double ExactScalar::to_double() const {
    if (is_rational()) return mcf::to_double(rat());
    ExactScalar c = *this;
    while (true) {
        RatInterval v = c.value_interval();
        if (mcf::to_double(v.width()) < 1e-15 * (1.0 + std::abs(mcf::to_double(v.lo))))
            return mcf::to_double((v.lo + v.hi) / 2);
        c.refine();
    }
}

RatInterval ExactScalar::approx(const Rat& eps) const {
    if (is_rational()) return RatInterval::point(rat());
    ExactScalar c = *this;
    while (true) {
        RatInterval v = c.value_interval();
        if (v.width() <= eps) return v;
        c.refine();
    }
}

int ExactScalar::value_degree() const {
    if (is_rational()) return 1;
    return std::get<0>(canonical()).degree();
}

std::string ExactScalar::rep_field() const {
    if (is_rational()) return "";
    const Alg& a = alg();
    Poly p = primitive_integer(a.defining);
    // Root index among the defining polynomial's real roots.
    int idx = 0;
    for (const auto& iv : isolate_real_roots(a.defining)) {
        Rat lo = std::max(iv.lo, a.iv.lo), hi = std::min(iv.hi, a.iv.hi);
        if (lo < hi && count_roots_in(a.defining, lo, hi) == 1) break;
        ++idx;
    }
    std::ostringstream os;
    os << "F[";
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) os << ",";
        os << p[i].get_num();
    }
    os << "]#" << idx;
    return os.str();
}

std::string ExactScalar::encode() const {
    if (is_rational()) return "q" + rat_str(rat());
    if (sign() == 0) return "q0";
    const auto& [p, idx, iv] = canonical();
    std::ostringstream os;
    os << "a[";
    for (size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) os << ",";
        os << p[i].get_num();
    }
    os << "]#" << idx;
    return os.str();
}

std::optional<QuadView> ExactScalar::quad_view() const {
    if (is_rational()) {
        return QuadView{rat().get_num(), 0, rat().get_den(), 0};
    }
    const auto& [p, idx, iv] = canonical();
    if (p.degree() != 2) return std::nullopt;
    // p = A x^2 + B x + C (integers); value = (-B +- sqrt(B^2-4AC)) / (2A)
    Int A = p[2].get_num(), B = p[1].get_num(), C = p[0].get_num();
    Int disc = B * B - 4 * A * C;
    Int e = square_part(disc);
    Int d = disc / (e * e);
    // Which branch: compare the value against -B/(2A).
    Rat mid = make_rat(-B, 2 * A);
    int branch = compare(ExactScalar(mid)); // +1 above, -1 below (never 0: irrational)
    Int a = -B, b = branch > 0 ? e : -e, c = 2 * A;
    if (c < 0) { a = -a; b = -b; c = -c; }
    Int g = gcd(gcd(abs(a), abs(b)), c);
    if (g > 1) { a /= g; b /= g; c /= g; }
    return QuadView{a, b, c, d};
}

std::string ExactScalar::str() const {
    if (is_rational()) return rat_str(rat());
    auto q = quad_view();
    if (q) return q->str();
    const auto& [p, idx, iv] = canonical();
    std::ostringstream os;
    os << "root(" << p.str() << ", " << idx << ")";
    return os.str();
}

ExactScalar dot(const ExactVec& a, const ExactVec& b) {
    if (a.size() != b.size()) throw std::logic_error("dot: size mismatch");
    ExactScalar s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

ExactVec vec_add(const ExactVec& a, const ExactVec& b) {
    if (a.size() != b.size()) throw std::logic_error("vec_add: size mismatch");
    ExactVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExactVec vec_scale(const ExactVec& a, const ExactScalar& s) {
    ExactVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

ExactScalar vec_sum(const ExactVec& a) {
    ExactScalar s(0);
    for (const auto& v : a) s += v;
    return s;
}

ExactVec normalize_sum(const ExactVec& a) {
    ExactScalar s = vec_sum(a);
    if (s.is_zero()) throw std::domain_error("normalize_sum: zero coordinate sum");
    ExactVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / s;
    return r;
}

std::string encode_vec(const ExactVec& a) {
    std::string s;
    for (const auto& v : a) {
        s += v.encode();
        s += "|";
    }
    return s;
}

} // namespace mcf

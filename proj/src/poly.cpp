#include "mcf/poly.hpp"

#include <algorithm>
#include <sstream>

namespace mcf {

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& v) {
    if (sgn(v) == 0) return Poly();
    return Poly(std::vector<Rat>{v});
}

Poly Poly::x() { return Poly(std::vector<Rat>{Rat(0), Rat(1)}); }

Poly Poly::from_ints(const std::vector<long>& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
}

Poly Poly::operator*(const Rat& s) const {
    if (sgn(s) == 0) return Poly();
    std::vector<Rat> r(c_);
    for (auto& v : r) v *= s;
    return Poly(std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
    std::vector<Rat> rem(c_);
    int dd = d.degree();
    int rd = int(rem.size()) - 1;
    if (rd < dd) return {Poly(), *this};
    std::vector<Rat> quot(rd - dd + 1, Rat(0));
    Rat lead = d.leading();
    for (int k = rd; k >= dd; --k) {
        if (sgn(rem[k]) == 0) continue;
        Rat q = rem[k] / lead;
        quot[k - dd] = q;
        for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= q * d.c_[i];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly Poly::divexact(const Poly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("Poly::divexact: nonzero remainder");
    return q;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(long(i));
    return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatInterval Poly::eval(const RatInterval& x) const {
    RatInterval acc(Rat(0), Rat(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + RatInterval::point(*it);
    return acc;
}

double Poly::eval(double x) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

Poly Poly::reflect() const {
    std::vector<Rat> r(c_);
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return Poly(std::move(r));
}

Poly Poly::reverse() const {
    std::vector<Rat> r(c_.rbegin(), c_.rend());
    return Poly(std::move(r));
}

Poly Poly::shift(const Rat& a) const {
    return compose(Poly(std::vector<Rat>{a, Rat(1)}));
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * inner + Poly::constant(*it);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = c_[i];
        if (sgn(a) == 0) continue;
        if (!first) os << (sgn(a) > 0 ? " + " : " - ");
        else if (sgn(a) < 0) os << "-";
        Rat mag = abs(a);
        if (mag != 1 || i == 0) os << rat_str(mag);
        if (i > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = std::move(y);
        y = r.monic(); // keeps coefficient growth in check
    }
    return x.monic();
}

void extended_gcd(const Poly& a, const Poly& b, Poly& g, Poly& s, Poly& t) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(Rat(1)), s1;
    Poly t0, t1 = Poly::constant(Rat(1));
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (!r0.is_zero()) {
        Rat inv = Rat(1) / r0.leading();
        g = r0 * inv; s = s0 * inv; t = t0 * inv;
    } else {
        g = Poly(); s = Poly(); t = Poly();
    }
}

Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return Poly::constant(Rat(1));
    Poly g = gcd(p, p.derivative());
    return p.divexact(g).monic();
}

Poly primitive_integer(const Poly& p) {
    if (p.is_zero()) return p;
    Int l(1);
    for (const Rat& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Rat> scaled;
    scaled.reserve(p.coeffs().size());
    Int g(0);
    for (const Rat& c : p.coeffs()) {
        Rat v = c * Rat(l);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
        scaled.push_back(v);
    }
    if (g == 0) g = 1;
    if (sgn(p.leading()) < 0) g = -g;
    for (auto& v : scaled) v /= Rat(g);
    return Poly(std::move(scaled));
}

std::vector<Poly> sturm_chain(const Poly& p) {
    std::vector<Poly> chain;
    chain.push_back(p);
    Poly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain[chain.size() - 1];
        Poly r = a.divmod(b).second;
        if (r.is_zero()) break;
        // Scale by a positive constant only; sign flips would break the chain.
        Poly next = -r;
        chain.push_back(next * (Rat(1) / abs(next.leading())));
    }
    return chain;
}

static int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int sign_variations_at(const std::vector<Poly>& chain, const Rat& x) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const Poly& q : chain) signs.push_back(sgn(q.eval(x)));
    return variations(signs);
}

int sign_variations_at_inf(const std::vector<Poly>& chain, int direction) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const Poly& q : chain) {
        if (q.is_zero()) { signs.push_back(0); continue; }
        int s = sgn(q.leading());
        if (direction < 0 && q.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return variations(signs);
}

int count_roots(const std::vector<Poly>& chain, const Rat& a, const Rat& b) {
    return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

int count_real_roots(const Poly& p) {
    Poly sf = squarefree_part(p);
    if (sf.degree() <= 0) return 0;
    auto chain = sturm_chain(sf);
    return sign_variations_at_inf(chain, -1) - sign_variations_at_inf(chain, +1);
}

int count_roots_in(const Poly& p, const Rat& a, const Rat& b) {
    Poly sf = squarefree_part(p);
    if (sf.degree() <= 0) return 0;
    return count_roots(sturm_chain(sf), a, b);
}

Rat root_bound(const Poly& p) {
    if (p.degree() <= 0) return Rat(1);
    Rat lead = abs(p.leading());
    Rat mx(0);
    for (int i = 0; i < p.degree(); ++i) {
        Rat v = abs(p[i]) / lead;
        if (v > mx) mx = v;
    }
    return mx + 1;
}

namespace {

// Recursive bisection on a squarefree polynomial whose value at any produced
// endpoint is nonzero (rational roots are split off on the fly).
void isolate_rec(const Poly& sf, const std::vector<Poly>& chain,
                 const Rat& lo, const Rat& hi, int nroots,
                 std::vector<RatInterval>& out) {
    if (nroots == 0) return;
    if (nroots == 1) {
        out.emplace_back(lo, hi);
        return;
    }
    Rat mid = (lo + hi) / 2;
    if (sgn(sf.eval(mid)) == 0) {
        // mid is an exact rational root: emit it degenerate, then carve out a
        // gap (mid-delta, mid+delta) free of other roots and recurse outside.
        Rat delta = (hi - lo) / 4;
        while (true) {
            Rat l = mid - delta, r = mid + delta;
            if (sgn(sf.eval(l)) != 0 && sgn(sf.eval(r)) != 0 &&
                count_roots(chain, l, r) == 1) {
                int left = count_roots(chain, lo, l);
                isolate_rec(sf, chain, lo, l, left, out);
                out.push_back(RatInterval::point(mid));
                isolate_rec(sf, chain, r, hi, nroots - 1 - left, out);
                return;
            }
            delta /= 3;
        }
    }
    int left = count_roots(chain, lo, mid);
    isolate_rec(sf, chain, lo, mid, left, out);
    isolate_rec(sf, chain, mid, hi, nroots - left, out);
}

} // namespace

std::vector<RatInterval> isolate_real_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("isolate_real_roots: zero polynomial");
    Poly sf = squarefree_part(p);
    if (sf.degree() <= 0) return {};
    auto chain = sturm_chain(sf);
    Rat b = root_bound(sf);
    // Endpoints +-b are not roots (strict bound).
    int total = count_roots(chain, -b, b);
    std::vector<RatInterval> out;
    isolate_rec(sf, chain, -b, b, total, out);
    return out;
}

std::optional<std::vector<Rat>> rational_roots(const Poly& p) {
    if (p.is_zero()) return std::nullopt;
    Poly q = primitive_integer(p);
    std::vector<Rat> roots;
    // Factor out x^k first.
    size_t low = 0;
    while (low < q.coeffs().size() && sgn(q[low]) == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    if (q.degree() == int(low)) {
        return roots; // q = c * x^low
    }
    Int a0 = q[low].get_num();
    Int an = q.leading().get_num();
    auto divisors = [](Int n) -> std::optional<std::vector<Int>> {
        if (n < 0) n = -n;
        std::vector<Int> ds;
        Int i(1);
        long steps = 0;
        for (; i * i <= n; ++i) {
            if (++steps > 2000000) return std::nullopt;
            if (n % i == 0) {
                ds.push_back(i);
                ds.push_back(n / i);
            }
        }
        return ds;
    };
    auto d0 = divisors(a0);
    auto dn = divisors(an);
    if (!d0 || !dn) return std::nullopt;
    for (const Int& num : *d0)
        for (const Int& den : *dn)
            for (int s : {1, -1}) {
                Rat cand = make_rat(s * num, den);
                if (sgn(q.eval(cand)) == 0) {
                    if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                        roots.push_back(cand);
                }
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Poly strip_rational_roots(const Poly& p, const std::vector<Rat>& roots) {
    Poly q = p;
    for (const Rat& r : roots) {
        Poly lin(std::vector<Rat>{-r, Rat(1)});
        while (q.degree() >= 1 && sgn(q.eval(r)) == 0) q = q.divexact(lin);
    }
    return q;
}

Poly poly_matrix_det(std::vector<std::vector<Poly>> m) {
    size_t n = m.size();
    if (n == 0) return Poly::constant(Rat(1));
    // Bareiss fraction-free elimination over the integral domain Q[x].
    Poly prev = Poly::constant(Rat(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return Poly(); // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = num.divexact(prev);
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    Poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

Poly resultant_lifted(const Poly& p, const std::vector<Poly>& q) {
    // Sylvester matrix of p (degree m, constant coefficients) and q (degree n
    // in y, coefficients in Q[x]); entries in Q[x], determinant via Bareiss.
    int m = p.degree();
    int n = int(q.size()) - 1;
    while (n >= 0 && q[n].is_zero()) --n;
    if (m < 0 || n < 0) return Poly();
    if (m == 0) {
        // res = p0^n
        Poly r = Poly::constant(Rat(1));
        for (int i = 0; i < n; ++i) r = r * Poly::constant(p.leading());
        return r;
    }
    if (n == 0) {
        Poly r = Poly::constant(Rat(1));
        for (int i = 0; i < m; ++i) r = r * q[0];
        return r;
    }
    size_t size = size_t(m + n);
    std::vector<std::vector<Poly>> syl(size, std::vector<Poly>(size, Poly()));
    for (int row = 0; row < n; ++row)
        for (int i = 0; i <= m; ++i)
            syl[row][row + i] = Poly::constant(p[m - i]);
    for (int row = 0; row < m; ++row)
        for (int i = 0; i <= n; ++i)
            syl[n + row][row + i] = q[n - i];
    return poly_matrix_det(std::move(syl));
}

} // namespace mcf

#include "mcf/density.hpp"

#include <algorithm>
#include <sstream>

namespace mcf {

namespace {

Int factorial(size_t n) {
    Int f(1);
    for (size_t i = 2; i <= n; ++i) f *= long(i);
    return f;
}

std::string form_str(const ExactVec& v) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!first) os << "+";
        if (!(v[i] == ExactScalar(1))) os << v[i].str() << "*";
        os << "x" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace

ExactScalar DensityExpr::eval(const ExactVec& x) const {
    ExactScalar acc(0);
    for (const auto& t : terms) {
        ExactScalar den(1);
        for (const auto& v : t.forms) den *= dot(v, x);
        acc += t.coeff / den;
    }
    return acc;
}

std::string DensityExpr::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& t : terms) {
        if (!first_term) os << " + ";
        os << t.coeff.str() << "/(";
        for (size_t k = 0; k < t.forms.size(); ++k) {
            os << "(" << form_str(t.forms[k]) << ")";
        }
        os << ")";
        first_term = false;
    }
    return os.str();
}

DensityExpr normalize_density(DensityExpr f) {
    std::vector<DensityTerm> out;
    for (auto& t : f.terms) {
        DensityTerm n;
        n.coeff = t.coeff;
        for (auto& v : t.forms) {
            ExactVec w = normalize_ray(v);
            // v = s * w for the scale s read off the first nonzero entry.
            size_t k = 0;
            while (k < v.size() && w[k].is_zero()) ++k;
            if (k < v.size()) n.coeff = n.coeff / (v[k] / w[k]);
            n.forms.push_back(std::move(w));
        }
        // Display order: descending lexicographic on the coefficients, which
        // puts the full sum x0+...+x_{d-1} first.
        std::sort(n.forms.begin(), n.forms.end(), [](const ExactVec& a, const ExactVec& b) {
            for (size_t i = 0; i < a.size(); ++i) {
                int c = a[i].compare(b[i]);
                if (c != 0) return c > 0;
            }
            return false;
        });
        if (n.coeff.is_zero()) continue;
        out.push_back(std::move(n));
    }
    // Merge identical form products.
    std::sort(out.begin(), out.end(), [](const DensityTerm& a, const DensityTerm& b) {
        std::string ka, kb;
        for (const auto& v : a.forms) ka += encode_vec(v) + ";";
        for (const auto& v : b.forms) kb += encode_vec(v) + ";";
        return ka < kb;
    });
    std::vector<DensityTerm> merged;
    for (auto& t : out) {
        if (!merged.empty()) {
            auto key = [](const DensityTerm& d) {
                std::string k;
                for (const auto& v : d.forms) k += encode_vec(v) + ";";
                return k;
            };
            if (key(merged.back()) == key(t)) {
                merged.back().coeff += t.coeff;
                if (merged.back().coeff.is_zero()) merged.pop_back();
                continue;
            }
        }
        merged.push_back(std::move(t));
    }
    f.terms = std::move(merged);
    return f;
}

DensityExpr veech_term(const ConeMatrix& m, bool canonical) {
    if (!m.is_simplicial())
        throw std::invalid_argument("veech_term: cone is not simplicial");
    ExactScalar d = det(m.matrix());
    if (d.is_zero()) throw std::domain_error("veech_term: singular matrix");
    if (d.sign() < 0) d = -d;
    DensityExpr f;
    f.dim = m.dim;
    f.canonical = canonical;
    DensityTerm t;
    t.coeff = canonical ? d : d / ExactScalar(Rat(Int(long(m.dim)) * factorial(m.dim)));
    t.forms = m.gens;
    f.terms.push_back(std::move(t));
    return normalize_density(std::move(f));
}

DensityExpr pieces_to_density(size_t dim, const std::vector<ConeMatrix>& pieces, bool canonical) {
    DensityExpr f;
    f.dim = dim;
    f.canonical = canonical;
    for (const auto& p : pieces) {
        if (p.empty()) continue;
        if (p.count() < dim)
            continue; // measure-zero piece contributes nothing
        for (const auto& simplex : p.triangulate()) {
            DensityExpr t = veech_term(simplex, canonical);
            for (auto& term : t.terms) f.terms.push_back(std::move(term));
        }
    }
    return normalize_density(std::move(f));
}

DensityExpr substitute_linear(const DensityExpr& f, const RatMat& a) {
    ExactMat at = to_exact(a.transpose());
    DensityExpr out;
    out.dim = f.dim;
    out.canonical = f.canonical;
    for (const auto& t : f.terms) {
        DensityTerm n;
        n.coeff = t.coeff;
        for (const auto& v : t.forms) n.forms.push_back(at.apply(v));
        out.terms.push_back(std::move(n));
    }
    return normalize_density(std::move(out));
}

DensityExpr scale_density(const DensityExpr& f, const ExactScalar& c) {
    DensityExpr out = f;
    for (auto& t : out.terms) t.coeff *= c;
    return normalize_density(std::move(out));
}

DensityExpr add_density(const DensityExpr& f, const DensityExpr& g) {
    DensityExpr out = f;
    if (out.dim == 0) out.dim = g.dim;
    for (const auto& t : g.terms) out.terms.push_back(t);
    return normalize_density(std::move(out));
}

namespace {

// Total count of linear-form factors: a safe bound on the degree of the
// cleared-denominator polynomial identity.
size_t form_count(const DensityExpr& f) {
    size_t n = 0;
    for (const auto& t : f.terms) n += t.forms.size();
    return n;
}

bool grid_zero(const DensityExpr& f, const DensityExpr& g, size_t dim, size_t degree_bound,
               ExactVec* witness) {
    // Evaluate f - g on the grid {1..B+1}^dim; all forms are nonnegative and
    // nonzero, so denominators never vanish there.
    size_t b = degree_bound + 1;
    std::vector<size_t> idx(dim, 0);
    while (true) {
        ExactVec x(dim);
        for (size_t i = 0; i < dim; ++i) x[i] = ExactScalar(Rat(long(idx[i] + 1)));
        ExactScalar diff = f.eval(x) - g.eval(x);
        if (!diff.is_zero()) {
            if (witness) *witness = x;
            return false;
        }
        size_t i = 0;
        while (i < dim && ++idx[i] == b) idx[i++] = 0;
        if (i == dim) break;
    }
    return true;
}

} // namespace

bool density_equal(const DensityExpr& f, const DensityExpr& g) {
    size_t dim = f.dim ? f.dim : g.dim;
    if (f.dim && g.dim && f.dim != g.dim) return false;
    size_t bound = form_count(f) + form_count(g);
    return grid_zero(f, g, dim, bound, nullptr);
}

FunctionalEquationResult check_functional_equation(const MatricesGraph& g,
                                                   const std::vector<DensityExpr>& f) {
    FunctionalEquationResult res;
    if (int(f.size()) != g.num_states())
        throw std::invalid_argument("check_functional_equation: wrong density count");
    for (int j = 0; j < g.num_states(); ++j) {
        DensityExpr rhs;
        rhs.dim = g.dim;
        rhs.canonical = f[size_t(j)].canonical;
        for (const auto& e : g.edges) {
            if (e.to != j) continue;
            Rat dm = abs(det(e.m));
            DensityExpr term = scale_density(substitute_linear(f[size_t(e.from)], e.m),
                                             ExactScalar(dm));
            rhs = add_density(rhs, term);
        }
        size_t bound = form_count(f[size_t(j)]) + form_count(rhs);
        ExactVec witness;
        if (!grid_zero(f[size_t(j)], rhs, g.dim, bound, &witness)) {
            res.ok = false;
            res.witness_state = j;
            res.witness_point = witness;
            return res;
        }
    }
    return res;
}

RatMat SeriesDensity::matrix_at(int n) const {
    RatMat m = mu;
    for (int i = 0; i < n; ++i) m = m * mv;
    return m * mw;
}

DensityTerm SeriesDensity::term_at(int n) const {
    RatMat m = matrix_at(n);
    Rat d = abs(det(m));
    DensityTerm t;
    t.coeff = canonical ? ExactScalar(d)
                        : ExactScalar(d / Rat(Int(long(dim)) * Int(2))); // d * d! with d = 2
    for (size_t j = 0; j < dim; ++j) {
        ExactVec col(dim);
        for (size_t i = 0; i < dim; ++i) col[i] = ExactScalar(m(i, j));
        t.forms.push_back(std::move(col));
    }
    return t;
}

std::string SeriesDensity::str() const {
    std::ostringstream os;
    auto mat = [](const RatMat& m) {
        std::ostringstream o;
        o << "[";
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i) o << ";";
            for (size_t j = 0; j < m.cols(); ++j) {
                if (j) o << ",";
                o << rat_str(m(i, j));
            }
        }
        o << "]";
        return o.str();
    };
    os << "sum_{n>=" << n_start << "} veech(" << mat(mu) << "*" << mat(mv) << "^n*" << mat(mw)
       << ")";
    return os.str();
}

SeriesValue eval_series(const SeriesDensity& s, const std::vector<Rat>& x, int n_terms) {
    if (s.dim != 2) throw unsupported_error("eval_series: only d = 2 series are evaluated");
    for (const Rat& c : x)
        if (sgn(c) <= 0) throw std::domain_error("eval_series: point must be strictly positive");
    SeriesValue out;
    out.value = Rat(0);
    Rat denom_const = s.canonical ? Rat(1) : Rat(4); // d * d! = 4
    auto form_at = [&](const RatMat& m, size_t col) {
        Rat acc(0);
        for (size_t i = 0; i < 2; ++i) acc += m(i, col) * x[i];
        return acc;
    };
    int n = s.n_start;
    for (int k = 0; k < n_terms; ++k, ++n) {
        RatMat m = s.matrix_at(n);
        Rat t = abs(det(m)) / (denom_const * form_at(m, 0) * form_at(m, 1));
        out.value += t;
    }
    // Tail bound from n onward.
    RatMat nil = s.mv - RatMat::identity(2);
    bool unipotent = true;
    {
        RatMat n2 = nil * nil;
        for (size_t i = 0; i < 2; ++i)
            for (size_t j = 0; j < 2; ++j)
                if (sgn(n2(i, j)) != 0) unipotent = false;
    }
    if (n_terms == 0 && s.n_start == n) {
        // fallthrough: bound computed below at n = n_start
    }
    if (unipotent) {
        // m(n) = mu (I + n N) mw = B + n C with constant |det|.
        RatMat B = s.mu * s.mw;
        RatMat C = s.mu * nil * s.mw;
        Rat dconst = abs(det(s.matrix_at(s.n_start)));
        Rat b0(0), b1(0);
        for (size_t i = 0; i < 2; ++i) {
            b0 += C(i, 0) * x[i];
            b1 += C(i, 1) * x[i];
        }
        if (sgn(b0) <= 0 || sgn(b1) <= 0)
            throw unsupported_error("eval_series: family does not decay quadratically");
        // term(k) <= dconst / (b0 b1 k^2) for k >= 1; sum_{k>=K} 1/k^2 <= 1/(K-1).
        long K = n; // first omitted index
        if (K < 2) {
            // Bound the first few terms directly, then use the integral bound.
            Rat extra(0);
            while (K < 2) {
                RatMat m = s.matrix_at(int(K));
                extra += abs(det(m)) / (denom_const * form_at(m, 0) * form_at(m, 1));
                ++K;
            }
            out.tail_bound = extra + dconst / (denom_const * b0 * b1 * Rat(K - 1));
        } else {
            out.tail_bound = dconst / (denom_const * b0 * b1 * Rat(K - 1));
        }
        return out;
    }
    // Expanding loop: forms grow at least geometrically with ratio
    // gamma = min_j (mv col_j | phi) / phi_j where phi = t(mu) x > 0.
    std::vector<Rat> phi(2, Rat(0));
    for (size_t j = 0; j < 2; ++j)
        for (size_t i = 0; i < 2; ++i) phi[j] += s.mu(i, j) * x[i];
    Rat gamma;
    bool first = true;
    for (size_t j = 0; j < 2; ++j) {
        Rat num(0);
        for (size_t i = 0; i < 2; ++i) num += s.mv(i, j) * phi[i];
        Rat r = num / phi[j];
        if (first || r < gamma) { gamma = r; first = false; }
    }
    if (gamma <= 1) throw unsupported_error("eval_series: loop matrix does not expand");
    Rat dv = abs(det(s.mv));
    Rat ratio = dv / (gamma * gamma);
    if (ratio >= 1) throw unsupported_error("eval_series: determinant growth dominates");
    RatMat mN = s.matrix_at(n);
    Rat tN = abs(det(mN)) / (denom_const * form_at(mN, 0) * form_at(mN, 1));
    // term(n + k) <= tN * ratio^k, so the tail is bounded by tN / (1 - ratio).
    out.tail_bound = tN / (Rat(1) - ratio);
    return out;
}

} // namespace mcf

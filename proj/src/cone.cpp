#include "mcf/cone.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mcf {

ExactVec normalize_ray(const ExactVec& v) {
    bool all_rat = true, all_zero = true;
    for (const auto& e : v) {
        if (!e.is_rational()) all_rat = false;
        if (!e.is_zero()) all_zero = false;
    }
    if (all_zero) return v;
    if (all_rat) {
        Int l(1);
        for (const auto& e : v)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.rat().get_den().get_mpz_t());
        Int g(0);
        std::vector<Int> nums;
        nums.reserve(v.size());
        for (const auto& e : v) {
            Rat s = e.rat() * Rat(l);
            nums.push_back(s.get_num());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), s.get_num().get_mpz_t());
        }
        ExactVec r(v.size());
        for (size_t i = 0; i < v.size(); ++i) r[i] = ExactScalar(make_rat(nums[i], g));
        return r;
    }
    return normalize_sum(v);
}

bool in_cone(const ExactVec& v, const std::vector<ExactVec>& gens) {
    size_t d = v.size();
    if (gens.empty()) {
        for (const auto& e : v)
            if (!e.is_zero()) return false;
        return true;
    }
    size_t n = gens.size();
    // Phase-1 simplex: minimize sum of artificials subject to G x + a = v,
    // x, a >= 0. RHS is nonnegative (rays live in R+^d).
    size_t cols = n + d;
    std::vector<std::vector<ExactScalar>> T(d, std::vector<ExactScalar>(cols + 1, ExactScalar(0)));
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < n; ++j) T[i][j] = gens[j][i];
        T[i][n + i] = ExactScalar(1);
        T[i][cols] = v[i];
        if (T[i][cols].sign() < 0)
            throw std::logic_error("in_cone: negative coordinate");
    }
    std::vector<size_t> basis(d);
    for (size_t i = 0; i < d; ++i) basis[i] = n + i;
    // Objective row: cost 1 on artificials, expressed in reduced form.
    std::vector<ExactScalar> z(cols + 1, ExactScalar(0));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j <= cols; ++j) z[j] -= T[i][j];
    // Artificial columns are dropped once they leave the basis; only
    // structural columns may enter (Bland's rule, no cycling).
    while (true) {
        size_t enter = cols;
        for (size_t j = 0; j < n; ++j) {
            bool basic = std::find(basis.begin(), basis.end(), j) != basis.end();
            if (!basic && z[j].sign() < 0) { enter = j; break; }
        }
        if (enter == cols) break;
        size_t leave = d;
        for (size_t i = 0; i < d; ++i) {
            if (T[i][enter].sign() <= 0) continue;
            if (leave == d) { leave = i; continue; }
            ExactScalar cand = T[i][cols] / T[i][enter];
            ExactScalar best = T[leave][cols] / T[leave][enter];
            int cc = cand.compare(best);
            if (cc < 0 || (cc == 0 && basis[i] < basis[leave])) leave = i;
        }
        if (leave == d) break; // unbounded direction: objective stays where it is
        // Pivot.
        ExactScalar piv = T[leave][enter];
        for (size_t j = 0; j <= cols; ++j) T[leave][j] = T[leave][j] / piv;
        for (size_t i = 0; i < d; ++i) {
            if (i == leave || T[i][enter].is_zero()) continue;
            ExactScalar f = T[i][enter];
            for (size_t j = 0; j <= cols; ++j) T[i][j] = T[i][j] - f * T[leave][j];
        }
        if (!z[enter].is_zero()) {
            ExactScalar f = z[enter];
            for (size_t j = 0; j <= cols; ++j) z[j] = z[j] - f * T[leave][j];
        }
        basis[leave] = enter;
    }
    // Feasible iff every artificial still in the basis sits at zero.
    for (size_t i = 0; i < d; ++i)
        if (basis[i] >= n && !T[i][cols].is_zero()) return false;
    return true;
}

namespace {

// Canonical key of the number fields a vector's entries live in (empty for
// all-rational vectors). Used to stage redundancy tests so that rays from
// unrelated fields are only ever mixed as a last resort.
std::string field_key(const ExactVec& v) {
    std::set<std::string> polys;
    for (const auto& e : v) {
        if (e.is_rational()) continue;
        polys.insert(e.rep_field());
    }
    std::string k;
    for (const auto& p : polys) k += p + "&";
    return k;
}

} // namespace

std::vector<ExactVec> extremal_reduce(std::vector<ExactVec> gens) {
    std::map<std::string, size_t> seen;
    std::vector<ExactVec> uniq;
    for (auto& g : gens) {
        ExactVec n = normalize_ray(g);
        std::string k = encode_vec(n);
        if (!seen.count(k)) {
            seen[k] = uniq.size();
            uniq.push_back(std::move(n));
        }
    }
    std::vector<std::string> fields;
    fields.reserve(uniq.size());
    for (const auto& v : uniq) fields.push_back(field_key(v));
    std::vector<bool> dropped(uniq.size(), false);
    for (size_t i = 0; i < uniq.size(); ++i) {
        auto gather = [&](bool same_field_only) {
            std::vector<ExactVec> others;
            for (size_t j = 0; j < uniq.size(); ++j) {
                if (j == i || dropped[j]) continue;
                if (same_field_only && !fields[j].empty() && fields[j] != fields[i]) continue;
                others.push_back(uniq[j]);
            }
            return others;
        };
        // Membership in a sub-cone implies membership in the full cone, so
        // the staged tests are sound and keep unrelated fields apart.
        std::vector<ExactVec> compatible = gather(true);
        try {
            if (in_cone(uniq[i], compatible)) {
                dropped[i] = true;
                continue;
            }
        } catch (const unsupported_error&) {
            // Ray kept; see below.
        }
        std::vector<ExactVec> all = gather(false);
        if (all.size() != compatible.size()) {
            try {
                if (in_cone(uniq[i], all)) dropped[i] = true;
            } catch (const unsupported_error&) {
                // Cross-field test out of reach: keep the ray (the cone is
                // unchanged, only minimality may suffer).
            }
        }
    }
    std::vector<ExactVec> out;
    for (size_t i = 0; i < uniq.size(); ++i)
        if (!dropped[i]) out.push_back(uniq[i]);
    return out;
}

ConeMatrix::ConeMatrix(size_t d, std::vector<ExactVec> g, bool reduce) : dim(d) {
    for (auto& v : g) {
        if (v.size() != d) throw std::logic_error("ConeMatrix: dimension mismatch");
        bool zero = true;
        for (auto& e : v) {
            if (e.sign() < 0) throw std::logic_error("ConeMatrix: negative entry");
            if (!e.is_zero()) zero = false;
        }
        if (!zero) gens.push_back(normalize_ray(v));
    }
    if (reduce) gens = extremal_reduce(std::move(gens));
    std::sort(gens.begin(), gens.end(), [](const ExactVec& a, const ExactVec& b) {
        return encode_vec(a) < encode_vec(b);
    });
    gens.erase(std::unique(gens.begin(), gens.end(), [](const ExactVec& a, const ExactVec& b) {
                   return encode_vec(a) == encode_vec(b);
               }),
               gens.end());
}

ConeMatrix ConeMatrix::from_int_cols(const std::vector<std::vector<long>>& cols) {
    if (cols.empty()) throw std::logic_error("from_int_cols: empty");
    std::vector<ExactVec> g;
    for (const auto& c : cols) {
        ExactVec v;
        for (long x : c) v.emplace_back(Rat(x));
        g.push_back(std::move(v));
    }
    return ConeMatrix(cols[0].size(), std::move(g));
}

ConeMatrix ConeMatrix::full(size_t d) {
    std::vector<ExactVec> g;
    for (size_t i = 0; i < d; ++i) {
        ExactVec e(d, ExactScalar(0));
        e[i] = ExactScalar(1);
        g.push_back(std::move(e));
    }
    return ConeMatrix(d, std::move(g), false);
}

ExactMat ConeMatrix::matrix() const {
    if (!is_simplicial()) throw std::logic_error("ConeMatrix::matrix: not simplicial");
    ExactMat m(dim, dim);
    for (size_t j = 0; j < gens.size(); ++j)
        for (size_t i = 0; i < dim; ++i) m(i, j) = gens[j][i];
    return m;
}

std::string ConeMatrix::encode() const {
    std::ostringstream os;
    os << dim << ";";
    for (const auto& g : gens) os << encode_vec(g) << ";";
    return os.str();
}

ConeMatrix ConeMatrix::image(const ExactMat& m) const {
    std::vector<ExactVec> g;
    for (const auto& v : gens) g.push_back(m.apply(v));
    return ConeMatrix(dim, std::move(g));
}

// --- section geometry -------------------------------------------------------

namespace {

SectionPoint project(const ExactVec& v) {
    ExactScalar s = vec_sum(v);
    if (v.size() == 2) return {v[0] / s, ExactScalar(0)};
    return {v[0] / s, v[1] / s};
}

int orient(const SectionPoint& o, const SectionPoint& a, const SectionPoint& b) {
    ExactScalar c = (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    return c.sign();
}

} // namespace

Polygon convex_hull(std::vector<SectionPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const SectionPoint& a, const SectionPoint& b) {
        int c = a.x.compare(b.x);
        if (c != 0) return c < 0;
        return a.y.compare(b.y) < 0;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const SectionPoint& a, const SectionPoint& b) {
                              return a.x == b.x && a.y == b.y;
                          }),
              pts.end());
    if (pts.size() <= 2) return pts;
    Polygon lower, upper;
    for (const auto& p : pts) {
        while (lower.size() >= 2 && orient(lower[lower.size() - 2], lower.back(), p) <= 0)
            lower.pop_back();
        lower.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (upper.size() >= 2 && orient(upper[upper.size() - 2], upper.back(), *it) <= 0)
            upper.pop_back();
        upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    lower.insert(lower.end(), upper.begin(), upper.end());
    if (lower.size() == 1 && pts.size() > 1) return pts; // collinear fallback
    if (lower.empty()) return pts;
    return lower;
}

ExactScalar polygon_area2(const Polygon& p) {
    if (p.size() < 3) return ExactScalar(0);
    ExactScalar a(0);
    for (size_t i = 0; i < p.size(); ++i) {
        const auto& u = p[i];
        const auto& v = p[(i + 1) % p.size()];
        a += u.x * v.y - v.x * u.y;
    }
    if (a.sign() < 0) a = -a;
    return a;
}

Polygon polygon_intersection(const Polygon& a, const Polygon& b) {
    if (a.empty() || b.empty()) return {};
    if (b.size() < 3) {
        // Degenerate clip region: intersection has measure zero anyway.
        Polygon out;
        for (const auto& p : b)
            if (point_in_polygon(p, a)) out.push_back(p);
        return out;
    }
    Polygon out = a;
    for (size_t i = 0; i < b.size() && !out.empty(); ++i) {
        const SectionPoint& e1 = b[i];
        const SectionPoint& e2 = b[(i + 1) % b.size()];
        Polygon in = std::move(out);
        out.clear();
        for (size_t j = 0; j < in.size(); ++j) {
            const SectionPoint& p = in[j];
            const SectionPoint& q = in[(j + 1) % in.size()];
            int sp = orient(e1, e2, p), sq = orient(e1, e2, q);
            if (sp >= 0) out.push_back(p);
            if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
                // Segment crosses the clip line: p + t (q - p).
                ExactScalar cp = (e2.x - e1.x) * (p.y - e1.y) - (e2.y - e1.y) * (p.x - e1.x);
                ExactScalar cq = (e2.x - e1.x) * (q.y - e1.y) - (e2.y - e1.y) * (q.x - e1.x);
                ExactScalar t = cp / (cp - cq);
                out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
            }
        }
        // Remove consecutive duplicates.
        Polygon ded;
        for (const auto& p : out) {
            if (!ded.empty() && ded.back().x == p.x && ded.back().y == p.y) continue;
            ded.push_back(p);
        }
        while (ded.size() > 1 && ded.front().x == ded.back().x && ded.front().y == ded.back().y)
            ded.pop_back();
        out = std::move(ded);
    }
    return out;
}

bool point_in_polygon(const SectionPoint& p, const Polygon& poly) {
    if (poly.size() < 3) {
        for (const auto& v : poly)
            if (v.x == p.x && v.y == p.y) return true;
        if (poly.size() == 2) {
            // On segment?
            if (orient(poly[0], poly[1], p) != 0) return false;
            return (p.x >= std::min(poly[0].x, poly[1].x) && p.x <= std::max(poly[0].x, poly[1].x) &&
                    p.y >= std::min(poly[0].y, poly[1].y) && p.y <= std::max(poly[0].y, poly[1].y));
        }
        return false;
    }
    for (size_t i = 0; i < poly.size(); ++i)
        if (orient(poly[i], poly[(i + 1) % poly.size()], p) < 0) return false;
    return true;
}

Polygon cone_section(const ConeMatrix& c) {
    if (c.dim > 3) throw unsupported_error("cone_section: dim > 3");
    std::vector<SectionPoint> pts;
    for (const auto& g : c.gens) pts.push_back(project(g));
    return convex_hull(std::move(pts));
}

bool cone_full_dim(const ConeMatrix& c) {
    if (c.dim == 2) {
        Polygon s = cone_section(c);
        if (s.size() < 2) return false;
        ExactScalar lo = s[0].x, hi = s[0].x;
        for (const auto& p : s) {
            if (p.x < lo) lo = p.x;
            if (p.x > hi) hi = p.x;
        }
        return lo < hi;
    }
    if (c.dim == 3) return polygon_area2(cone_section(c)).sign() > 0;
    throw unsupported_error("cone_full_dim: dim > 3");
}

bool cones_overlap(const ConeMatrix& a, const ConeMatrix& b) {
    if (a.dim != b.dim) throw std::logic_error("cones_overlap: dim mismatch");
    if (a.empty() || b.empty()) return false;
    if (a.dim == 2) {
        Polygon sa = cone_section(a), sb = cone_section(b);
        auto span = [](const Polygon& p) {
            ExactScalar lo = p[0].x, hi = p[0].x;
            for (const auto& q : p) {
                if (q.x < lo) lo = q.x;
                if (q.x > hi) hi = q.x;
            }
            return std::pair<ExactScalar, ExactScalar>(lo, hi);
        };
        auto [alo, ahi] = span(sa);
        auto [blo, bhi] = span(sb);
        ExactScalar lo = alo > blo ? alo : blo;
        ExactScalar hi = ahi < bhi ? ahi : bhi;
        return lo < hi;
    }
    if (a.dim == 3) {
        Polygon inter = polygon_intersection(cone_section(a), cone_section(b));
        return polygon_area2(inter).sign() > 0;
    }
    throw unsupported_error("cones_overlap: dim > 3");
}

bool cone_subset(const ConeMatrix& a, const ConeMatrix& b) {
    for (const auto& g : a.gens)
        if (!in_cone(g, b.gens)) return false;
    return true;
}

std::vector<ConeMatrix> ConeMatrix::triangulate() const {
    if (gens.size() <= dim) return {*this};
    if (dim == 2) {
        // Angular sort, take the extreme pair.
        Polygon s = cone_section(*this);
        // For d=2 every reduced cone has exactly 2 generators, handled above.
        return {*this};
    }
    if (dim != 3) throw unsupported_error("triangulate: dim > 3");
    // Generators on the section form a convex polygon; fan from the
    // canonically smallest generator.
    std::vector<SectionPoint> pts;
    for (const auto& g : gens) pts.push_back(project(g));
    Polygon hull = convex_hull(pts);
    // Map hull vertices back to generators.
    std::vector<size_t> order;
    for (const auto& h : hull) {
        for (size_t i = 0; i < gens.size(); ++i) {
            if (pts[i].x == h.x && pts[i].y == h.y) { order.push_back(i); break; }
        }
    }
    if (order.size() != hull.size())
        throw std::logic_error("triangulate: hull vertex mismatch");
    // Rotate so the canonically smallest generator comes first.
    size_t root = 0;
    for (size_t i = 1; i < order.size(); ++i)
        if (encode_vec(gens[order[i]]) < encode_vec(gens[order[root]])) root = i;
    std::rotate(order.begin(), order.begin() + long(root), order.end());
    std::vector<ConeMatrix> out;
    for (size_t i = 1; i + 1 < order.size(); ++i) {
        out.emplace_back(dim, std::vector<ExactVec>{gens[order[0]], gens[order[i]],
                                                    gens[order[i + 1]]});
    }
    return out;
}

std::vector<Polygon> polygon_difference(const Polygon& a, const Polygon& b) {
    std::vector<Polygon> out;
    if (a.size() < 3) return out;
    if (b.size() < 3) {
        out.push_back(a);
        return out;
    }
    // Progressive clipping: for each edge of b, the part of the remainder on
    // the outside is a convex piece of a \ b.
    auto clip_halfplane = [](const Polygon& poly, const SectionPoint& e1, const SectionPoint& e2,
                             bool keep_left) {
        Polygon out2;
        if (poly.empty()) return out2;
        auto side = [&](const SectionPoint& p) {
            ExactScalar c = (e2.x - e1.x) * (p.y - e1.y) - (e2.y - e1.y) * (p.x - e1.x);
            int s = c.sign();
            return keep_left ? s : -s;
        };
        for (size_t j = 0; j < poly.size(); ++j) {
            const SectionPoint& p = poly[j];
            const SectionPoint& q = poly[(j + 1) % poly.size()];
            int sp = side(p), sq = side(q);
            if (sp >= 0) out2.push_back(p);
            if ((sp > 0 && sq < 0) || (sp < 0 && sq > 0)) {
                ExactScalar cp = (e2.x - e1.x) * (p.y - e1.y) - (e2.y - e1.y) * (p.x - e1.x);
                ExactScalar cq = (e2.x - e1.x) * (q.y - e1.y) - (e2.y - e1.y) * (q.x - e1.x);
                ExactScalar t = cp / (cp - cq);
                out2.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
            }
        }
        Polygon ded;
        for (const auto& p : out2) {
            if (!ded.empty() && ded.back().x == p.x && ded.back().y == p.y) continue;
            ded.push_back(p);
        }
        while (ded.size() > 1 && ded.front().x == ded.back().x && ded.front().y == ded.back().y)
            ded.pop_back();
        return ded;
    };
    Polygon rest = a;
    for (size_t i = 0; i < b.size() && !rest.empty(); ++i) {
        const SectionPoint& e1 = b[i];
        const SectionPoint& e2 = b[(i + 1) % b.size()];
        Polygon outside = clip_halfplane(rest, e1, e2, false);
        if (polygon_area2(outside).sign() > 0) out.push_back(outside);
        rest = clip_halfplane(rest, e1, e2, true);
    }
    return out;
}

ConeMatrix cone_from_section(size_t dim, const Polygon& sec) {
    std::vector<ExactVec> gens;
    for (const auto& p : sec) {
        ExactVec v(dim);
        if (dim == 2) {
            v[0] = p.x;
            v[1] = ExactScalar(1) - p.x;
        } else {
            v[0] = p.x;
            v[1] = p.y;
            v[2] = ExactScalar(1) - p.x - p.y;
        }
        gens.push_back(std::move(v));
    }
    return ConeMatrix(dim, std::move(gens));
}

ConeMatrix cone_intersect(const ConeMatrix& a, const ConeMatrix& b) {
    if (a.dim != b.dim) throw std::logic_error("cone_intersect: dim mismatch");
    if (a.dim > 3) throw unsupported_error("cone_intersect: dim > 3");
    if (a.empty() || b.empty()) return ConeMatrix(a.dim, {});
    if (a.dim == 2) {
        Polygon sa = cone_section(a), sb = cone_section(b);
        auto span = [](const Polygon& s) {
            ExactScalar lo = s[0].x, hi = s[0].x;
            for (const auto& p : s) {
                if (p.x < lo) lo = p.x;
                if (p.x > hi) hi = p.x;
            }
            return std::make_pair(lo, hi);
        };
        auto [alo, ahi] = span(sa);
        auto [blo, bhi] = span(sb);
        ExactScalar lo = alo > blo ? alo : blo;
        ExactScalar hi = ahi < bhi ? ahi : bhi;
        if (lo > hi) return ConeMatrix(a.dim, {});
        Polygon sec{{lo, ExactScalar(0)}};
        if (hi > lo) sec.push_back({hi, ExactScalar(0)});
        return cone_from_section(2, sec);
    }
    Polygon inter = polygon_intersection(cone_section(a), cone_section(b));
    return cone_from_section(3, inter);
}

ExactVec cone_interior_point(const ConeMatrix& c) {
    if (c.empty()) throw std::domain_error("cone_interior_point: empty cone");
    ExactVec p(c.dim, ExactScalar(0));
    for (const auto& g : c.gens)
        for (size_t i = 0; i < c.dim; ++i) p[i] += g[i];
    return p;
}

PartitionReport cone_partition_check(const ConeMatrix& target,
                                     const std::vector<ConeMatrix>& pieces) {
    PartitionReport rep;
    if (target.dim > 3) throw unsupported_error("cone_partition_check: dim > 3");
    Polygon ts = cone_section(target);
    ExactScalar total = polygon_area2(ts);
    ExactScalar acc(0);
    auto seg_len = [](const Polygon& s) {
        if (s.size() < 2) return ExactScalar(0);
        ExactScalar lo = s[0].x, hi = s[0].x;
        for (const auto& p : s) {
            if (p.x < lo) lo = p.x;
            if (p.x > hi) hi = p.x;
        }
        return hi - lo;
    };
    if (target.dim == 2) total = seg_len(ts);
    for (size_t i = 0; i < pieces.size(); ++i) {
        if (pieces[i].empty()) continue;
        if (!cone_subset(pieces[i], target)) {
            rep.ok = false;
            rep.reason = "piece not contained in target";
            rep.witness_piece_a = int(i);
            return rep;
        }
        Polygon ps = cone_section(pieces[i]);
        acc += (target.dim == 2) ? seg_len(ps) : polygon_area2(ps);
        for (size_t j = i + 1; j < pieces.size(); ++j) {
            if (pieces[j].empty()) continue;
            if (cones_overlap(pieces[i], pieces[j])) {
                rep.ok = false;
                rep.reason = "pieces overlap on positive measure";
                rep.witness_piece_a = int(i);
                rep.witness_piece_b = int(j);
                return rep;
            }
        }
    }
    if (!(acc == total)) {
        rep.ok = false;
        rep.reason = "piece measures do not sum to the target measure";
        return rep;
    }
    return rep;
}

} // namespace mcf

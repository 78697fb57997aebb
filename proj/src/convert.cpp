#include "mcf/convert.hpp"

#include <algorithm>
#include <sstream>

namespace mcf {

std::vector<int> GeneralCFGraph::out_edges(int s) const {
    std::vector<int> out;
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].from == s) out.push_back(int(i));
    return out;
}

void validate_general(const GeneralCFGraph& g) {
    for (const auto& e : g.edges) {
        if (!is_nonnegative(e.m)) throw std::invalid_argument("general edge matrix has negative entries");
        if (sgn(det(e.m)) == 0) throw std::invalid_argument("general edge matrix singular");
        RatMat inv = inverse(e.m);
        for (const auto& gen : e.cone.gens) {
            ExactVec img = to_exact(inv).apply(gen);
            for (const auto& c : img)
                if (c.sign() < 0)
                    throw std::invalid_argument("m^-1 D has a negative entry");
        }
    }
    if (g.dim <= 3) {
        for (int s = 0; s < g.num_states(); ++s) {
            auto out = g.out_edges(s);
            for (size_t a = 0; a < out.size(); ++a)
                for (size_t b = a + 1; b < out.size(); ++b)
                    if (cones_overlap(g.edges[size_t(out[a])].cone, g.edges[size_t(out[b])].cone))
                        throw std::invalid_argument("general graph pieces overlap at a state");
        }
    }
}

ConvertResult to_matrices_graph(const GeneralCFGraph& g, int max_states) {
    validate_general(g);
    ConvertResult res;
    if (g.dim > 3) {
        res.failure_reason = "conversion needs exact cone sections (dim <= 3)";
        return res;
    }
    AnnotatedMatricesGraph& out = res.out;
    out.graph.dim = g.dim;

    std::map<std::string, int> ids; // (orig, chart encode) -> state
    auto state_key = [](int orig, const ConeMatrix& c) {
        return std::to_string(orig) + "|" + c.encode();
    };
    auto intern = [&](int orig, const ConeMatrix& c) {
        std::string k = state_key(orig, c);
        auto it = ids.find(k);
        if (it != ids.end()) return it->second;
        int id = int(out.graph.state_names.size());
        out.graph.state_names.push_back(g.state_names[size_t(orig)] + "#" +
                                        std::to_string(id));
        out.origin.push_back(orig);
        out.charts.push_back(c);
        ids.emplace(k, id);
        return id;
    };

    ConeMatrix full = ConeMatrix::full(g.dim);
    std::vector<int> worklist;
    for (int i = 0; i < g.num_states(); ++i) worklist.push_back(intern(i, full));
    for (size_t wi = 0; wi < worklist.size(); ++wi) {
        if (int(out.graph.state_names.size()) > max_states) {
            res.failure_reason = "state budget exceeded";
            return res;
        }
        int sid = worklist[size_t(wi)];
        int i = out.origin[size_t(sid)];
        ConeMatrix I = out.charts[size_t(sid)];
        ExactMat Iinv = inverse(I.matrix());
        for (int ei : g.out_edges(i)) {
            const GCFEdge& e = g.edges[size_t(ei)];
            ConeMatrix X = cone_intersect(e.cone, I);
            if (X.empty() || !cone_full_dim(X)) continue;
            RatMat minv = inverse(e.m);
            ConeMatrix Y = X.image(to_exact(minv));
            for (const ConeMatrix& J : Y.triangulate()) {
                int before = int(out.graph.state_names.size());
                int tid = intern(e.to, J);
                if (tid == before) worklist.push_back(tid); // freshly created

                ExactMat label = Iinv * to_exact(e.m) * J.matrix();
                RatMat M(g.dim, g.dim);
                for (size_t r = 0; r < g.dim; ++r)
                    for (size_t c = 0; c < g.dim; ++c) {
                        if (!label(r, c).is_rational())
                            throw std::logic_error("to_matrices_graph: irrational edge label");
                        if (label(r, c).sign() < 0)
                            throw std::logic_error("to_matrices_graph: negative edge label");
                        M(r, c) = label(r, c).rat();
                    }
                out.graph.edges.push_back({sid, tid, std::move(M)});
            }
        }
    }

    // Surjectivity hypothesis: m^-1 D R+^c subseteq union of the target
    // state's pieces, exact at d <= 3.
    res.hypothesis_holds = true;
    for (const auto& e : g.edges) {
        ConeMatrix pre = e.cone.image(to_exact(inverse(e.m)));
        Polygon ps = cone_section(pre);
        ExactScalar total = g.dim == 2 ? ExactScalar(0) : polygon_area2(ps);
        if (g.dim == 2) {
            ExactScalar lo = ps[0].x, hi = ps[0].x;
            for (const auto& p : ps) {
                if (p.x < lo) lo = p.x;
                if (p.x > hi) hi = p.x;
            }
            total = hi - lo;
        }
        ExactScalar covered(0);
        for (int ej : g.out_edges(e.to)) {
            ConeMatrix inter = cone_intersect(pre, g.edges[size_t(ej)].cone);
            if (inter.empty()) continue;
            Polygon is = cone_section(inter);
            if (g.dim == 2) {
                if (is.size() >= 2) {
                    ExactScalar lo = is[0].x, hi = is[0].x;
                    for (const auto& p : is) {
                        if (p.x < lo) lo = p.x;
                        if (p.x > hi) hi = p.x;
                    }
                    covered += hi - lo;
                }
            } else {
                covered += polygon_area2(is);
            }
        }
        if (!(covered == total)) {
            res.hypothesis_holds = false;
            break;
        }
    }

    if (res.hypothesis_holds) {
        // Remove identity-chart seed states whose out-cones do not tile R+^d;
        // the remaining graph is a matrices graph.
        std::vector<bool> drop(out.graph.state_names.size(), false);
        for (size_t s = 0; s < out.charts.size(); ++s) {
            if (!(out.charts[s] == full)) continue;
            std::vector<ConeMatrix> images;
            for (const auto& e : out.graph.edges)
                if (e.from == int(s)) images.push_back(full.image(to_exact(e.m)));
            auto rep = cone_partition_check(full, images);
            if (!rep.ok) drop[s] = true;
        }
        bool any = false;
        for (bool b : drop) any = any || b;
        if (any) {
            AnnotatedMatricesGraph kept;
            kept.graph.dim = g.dim;
            std::vector<int> remap(out.graph.state_names.size(), -1);
            for (size_t s = 0; s < out.graph.state_names.size(); ++s) {
                if (drop[s]) continue;
                remap[s] = int(kept.graph.state_names.size());
                kept.graph.state_names.push_back(out.graph.state_names[s]);
                kept.origin.push_back(out.origin[s]);
                kept.charts.push_back(out.charts[s]);
            }
            for (const auto& e : out.graph.edges)
                if (remap[size_t(e.from)] >= 0 && remap[size_t(e.to)] >= 0)
                    kept.graph.edges.push_back({remap[size_t(e.from)], remap[size_t(e.to)], e.m});
            res.out = std::move(kept);
        }
    }

    res.ok = true;
    return res;
}

SemiconjugacyResult semiconjugacy_check(const GeneralCFGraph& g,
                                        const AnnotatedMatricesGraph& out, int n, int samples,
                                        uint64_t seed) {
    SemiconjugacyResult res;
    SplitMix64 rng(seed);
    std::vector<RatMat> minv;
    minv.reserve(g.edges.size());
    for (const auto& e : g.edges) minv.push_back(inverse(e.m));
    std::vector<RatMat> outinv;
    outinv.reserve(out.graph.edges.size());
    for (const auto& e : out.graph.edges) outinv.push_back(inverse(e.m));
    for (int trial = 0; trial < samples; ++trial) {
        int sid = int(rng.next_below(uint64_t(out.graph.num_states())));
        std::vector<Rat> z;
        for (size_t i = 0; i < g.dim; ++i) z.push_back(rng.next_rat(1000, 997));
        // y = I z, the projected point.
        ExactVec ze;
        for (const Rat& c : z) ze.emplace_back(c);
        ExactMat Imat = out.charts[size_t(sid)].matrix();
        ExactVec ye = Imat.apply(ze);
        std::vector<Rat> y;
        for (const auto& c : ye) y.push_back(c.rat());
        int gi = out.origin[size_t(sid)];
        int fi = gi;
        int gs = sid;
        for (int step = 0; step < n; ++step) {
            // One G step.
            int gedge = -1;
            for (size_t ei = 0; ei < out.graph.edges.size(); ++ei) {
                const auto& e = out.graph.edges[ei];
                if (e.from != gs) continue;
                std::vector<Rat> w(g.dim, Rat(0));
                bool ok = true;
                for (size_t r = 0; r < g.dim && ok; ++r) {
                    Rat acc(0);
                    for (size_t c = 0; c < g.dim; ++c) acc += outinv[ei](r, c) * z[c];
                    if (sgn(acc) < 0) ok = false;
                    w[r] = acc;
                }
                if (ok) {
                    gedge = int(ei);
                    z = w;
                    break;
                }
            }
            if (gedge < 0) break; // boundary orbit; vacuous from here
            gs = out.graph.edges[size_t(gedge)].to;
            // One F step.
            int fedge = -1;
            ExactVec yv;
            for (const Rat& c : y) yv.emplace_back(c);
            for (int ei : g.out_edges(fi)) {
                if (g.edges[size_t(ei)].cone.contains(yv)) {
                    fedge = ei;
                    break;
                }
            }
            if (fedge < 0) {
                res.ok = false;
                res.witness_point = y;
                res.witness_state = fi;
                res.witness_step = step;
                return res;
            }
            std::vector<Rat> y2(g.dim, Rat(0));
            for (size_t r = 0; r < g.dim; ++r) {
                Rat acc(0);
                for (size_t c = 0; c < g.dim; ++c) acc += minv[size_t(fedge)](r, c) * y[c];
                y2[r] = acc;
            }
            y = y2;
            fi = g.edges[size_t(fedge)].to;
            // Compare phi(G^k) with F^k(phi).
            if (fi != out.origin[size_t(gs)]) {
                res.ok = false;
                res.witness_point = y;
                res.witness_state = fi;
                res.witness_step = step;
                return res;
            }
            ExactMat Jm = out.charts[size_t(gs)].matrix();
            for (size_t r = 0; r < g.dim; ++r) {
                ExactScalar acc(0);
                for (size_t c = 0; c < g.dim; ++c) acc += Jm(r, c) * ExactScalar(z[c]);
                if (!(acc == ExactScalar(y[r]))) {
                    res.ok = false;
                    res.witness_point = y;
                    res.witness_state = fi;
                    res.witness_step = step;
                    return res;
                }
            }
        }
    }
    return res;
}

PiecewiseDensity pushforward_density(const GeneralCFGraph& g, const AnnotatedMatricesGraph& mg,
                                     const std::vector<DensityExpr>& f) {
    if (g.dim > 3) throw unsupported_error("pushforward_density: dim > 3");
    if (f.size() != mg.graph.state_names.size())
        throw std::invalid_argument("pushforward_density: density count mismatch");
    // Common refinement of the charts via polygon intersection/difference.
    std::vector<Polygon> atoms{cone_section(ConeMatrix::full(g.dim))};
    std::set<std::string> chart_keys;
    std::vector<const ConeMatrix*> charts;
    for (const auto& c : mg.charts)
        if (chart_keys.insert(c.encode()).second) charts.push_back(&c);
    if (g.dim == 2) {
        // Split the base interval at every chart endpoint.
        std::vector<ExactScalar> cuts{ExactScalar(0), ExactScalar(1)};
        for (const auto* c : charts) {
            Polygon s = cone_section(*c);
            for (const auto& p : s) cuts.push_back(p.x);
        }
        std::sort(cuts.begin(), cuts.end(), [](const ExactScalar& a, const ExactScalar& b) {
            return a.compare(b) < 0;
        });
        cuts.erase(std::unique(cuts.begin(), cuts.end(),
                               [](const ExactScalar& a, const ExactScalar& b) { return a == b; }),
                   cuts.end());
        atoms.clear();
        for (size_t i = 0; i + 1 < cuts.size(); ++i)
            atoms.push_back(Polygon{{cuts[i], ExactScalar(0)}, {cuts[i + 1], ExactScalar(0)}});
    } else {
        for (const auto* c : charts) {
            Polygon cs = cone_section(*c);
            std::vector<Polygon> next;
            for (const auto& a : atoms) {
                Polygon inter = polygon_intersection(a, cs);
                if (polygon_area2(inter).sign() > 0) next.push_back(inter);
                for (auto& piece : polygon_difference(a, cs))
                    if (polygon_area2(piece).sign() > 0) next.push_back(std::move(piece));
            }
            atoms = std::move(next);
        }
    }
    PiecewiseDensity out;
    for (const auto& a : atoms) {
        ConeMatrix region = cone_from_section(g.dim, a);
        if (region.empty()) continue;
        ExactVec z = cone_interior_point(region);
        std::vector<DensityExpr> per_state(size_t(g.num_states()));
        for (auto& d : per_state) {
            d.dim = g.dim;
            d.canonical = f.empty() ? true : f[0].canonical;
        }
        for (size_t s = 0; s < mg.charts.size(); ++s) {
            if (!mg.charts[s].contains(z)) continue;
            RatMat I = to_rat(mg.charts[s].matrix());
            Rat di = abs(det(I));
            DensityExpr term =
                scale_density(substitute_linear(f[s], inverse(I)), ExactScalar(Rat(1) / di));
            per_state[size_t(mg.origin[s])] = add_density(per_state[size_t(mg.origin[s])], term);
        }
        out.regions.push_back(std::move(region));
        out.density.push_back(std::move(per_state));
    }
    return out;
}

} // namespace mcf

#include "mcf/domains.hpp"

#include "mcf/eigen.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mcf {

MinimizeResult minimize_graph(const MatricesGraph& g) {
    int n = g.num_states();
    // Deterministic partial automaton over the matrix alphabet, every state
    // final; refine classes by (defined letters, successor classes).
    std::vector<std::string> alpha;
    {
        std::set<std::string> toks;
        for (const auto& e : g.edges) toks.insert(encode_mat(e.m));
        alpha.assign(toks.begin(), toks.end());
    }
    auto sym = [&](const RatMat& m) {
        std::string k = encode_mat(m);
        return int(std::lower_bound(alpha.begin(), alpha.end(), k) - alpha.begin());
    };
    // delta[s][c] = target or -1
    std::vector<std::vector<int>> delta(size_t(n), std::vector<int>(alpha.size(), -1));
    for (const auto& e : g.edges) {
        int c = sym(e.m);
        if (delta[size_t(e.from)][size_t(c)] >= 0 && delta[size_t(e.from)][size_t(c)] != e.to)
            throw std::invalid_argument("minimize_graph: nondeterministic matrix labels");
        delta[size_t(e.from)][size_t(c)] = e.to;
    }
    std::vector<int> cls(size_t(n), 0);
    while (true) {
        std::map<std::vector<int>, int> ids;
        std::vector<int> next(size_t(n), 0);
        for (int s = 0; s < n; ++s) {
            std::vector<int> sig{cls[size_t(s)]};
            for (size_t c = 0; c < alpha.size(); ++c) {
                int t = delta[size_t(s)][c];
                sig.push_back(t < 0 ? -1 : cls[size_t(t)]);
            }
            auto it = ids.find(sig);
            if (it == ids.end()) it = ids.emplace(sig, int(ids.size())).first;
            next[size_t(s)] = it->second;
        }
        if (next == cls) break;
        cls = std::move(next);
    }
    int ncls = 1 + *std::max_element(cls.begin(), cls.end());
    MinimizeResult out;
    out.graph.dim = g.dim;
    out.state_map = cls;
    // Name each class by the set of original states it carries.
    std::vector<std::string> names(static_cast<size_t>(ncls));
    for (int s = 0; s < n; ++s) {
        auto& nm = names[size_t(cls[size_t(s)])];
        nm += (nm.empty() ? "" : "+") + g.state_names[size_t(s)];
    }
    out.graph.state_names = names;
    std::set<std::tuple<int, int, std::string>> seen;
    for (const auto& e : g.edges) {
        int a = cls[size_t(e.from)], b = cls[size_t(e.to)];
        auto key = std::make_tuple(a, b, encode_mat(e.m));
        if (seen.insert(key).second) out.graph.edges.push_back({a, b, e.m});
    }
    return out;
}

namespace {

// All simple loops (no repeated intermediate vertex) through each state,
// returned as (state, forward edge sequence).
std::vector<std::pair<int, std::vector<int>>> simple_loops(const MatricesGraph& g) {
    std::vector<std::pair<int, std::vector<int>>> out;
    int n = g.num_states();
    for (int start = 0; start < n; ++start) {
        std::vector<int> path;
        std::vector<bool> visited(size_t(n), false);
        std::function<void(int)> dfs = [&](int cur) {
            for (int ei : g.out_edges(cur)) {
                int to = g.edges[size_t(ei)].to;
                if (to == start) {
                    path.push_back(ei);
                    out.emplace_back(start, path);
                    path.pop_back();
                } else if (to > start && !visited[size_t(to)]) {
                    // Cycles are enumerated from their smallest vertex; the
                    // stabilization step recovers every rotation, since the
                    // edge image of a loop eigenvector is the eigenvector of
                    // the rotated loop.
                    visited[size_t(to)] = true;
                    path.push_back(ei);
                    dfs(to);
                    path.pop_back();
                    visited[size_t(to)] = false;
                }
            }
        };
        dfs(start);
    }
    return out;
}

std::string rays_key(const std::vector<ExactVec>& rays) {
    std::vector<std::string> ks;
    for (const auto& r : rays) ks.push_back(encode_vec(r));
    std::sort(ks.begin(), ks.end());
    std::string k;
    for (auto& s : ks) k += s + "#";
    return k;
}

} // namespace

DomainsResult polyhedral_domains(const MatricesGraph& g, int max_rounds, int max_vectors) {
    DomainsResult res;
    int n = g.num_states();
    std::vector<std::vector<ExactVec>> rays(static_cast<size_t>(n));
    bool skipped_loop = false;
    std::string skip_reason;
    try {
        for (const auto& [start, loop] : simple_loops(g)) {
            RatMat prod = RatMat::identity(g.dim);
            for (int ei : loop) prod = prod * g.edges[size_t(ei)].m;
            LimitCone lc = dominant_limit_cone(prod.transpose());
            if (!lc.ok) {
                skipped_loop = true;
                skip_reason = lc.reason;
                continue;
            }
            for (const auto& v : lc.rays) rays[size_t(start)].push_back(v);
        }
        for (auto& r : rays) r = extremal_reduce(std::move(r));

        // Stabilize: push every ray through every edge, prune to extremals.
        bool stable = false;
        for (int round = 0; round < max_rounds && !stable; ++round) {
            std::vector<std::string> before;
            for (const auto& r : rays) before.push_back(rays_key(r));
            std::vector<std::vector<ExactVec>> next = rays;
            for (const auto& e : g.edges) {
                ExactMat mt = to_exact(e.m.transpose());
                for (const auto& v : rays[size_t(e.from)])
                    next[size_t(e.to)].push_back(mt.apply(v));
            }
            for (auto& r : next) {
                r = extremal_reduce(std::move(r));
                if (int(r.size()) > max_vectors) {
                    res.failure_reason = "stabilization exceeded the extremal-point cap";
                    return res;
                }
            }
            stable = true;
            for (int s = 0; s < n; ++s)
                if (rays_key(next[size_t(s)]) != before[size_t(s)]) stable = false;
            rays = std::move(next);
        }
        if (!stable) {
            res.failure_reason = "stabilization did not converge within the round cap";
            return res;
        }

        // Step 4: exact partition verification per state.
        std::vector<ConeMatrix> cones;
        cones.reserve(size_t(n));
        for (int s = 0; s < n; ++s) cones.emplace_back(g.dim, rays[size_t(s)], false);
        for (int s = 0; s < n; ++s) {
            std::vector<ConeMatrix> images;
            for (const auto& e : g.edges) {
                if (e.to != s) continue;
                if (cones[size_t(e.from)].empty()) continue;
                images.push_back(cones[size_t(e.from)].image(to_exact(e.m.transpose())));
            }
            if (cones[size_t(s)].empty()) {
                for (const auto& im : images)
                    if (!im.empty()) {
                        res.failure_reason = "empty domain with nonempty incoming images";
                        return res;
                    }
                continue;
            }
            if (g.dim <= 3) {
                auto rep = cone_partition_check(cones[size_t(s)], images);
                if (!rep.ok) {
                    res.failure_reason = "step-4 verification failed at state " +
                                         g.state_names[size_t(s)] + ": " + rep.reason;
                    if (skipped_loop)
                        res.failure_reason += " (a loop had unsupported eigen-structure: " +
                                              skip_reason + ")";
                    return res;
                }
            } else {
                // Randomized: sampled points of each image land in the target
                // and in no other image.
                SplitMix64 rng(7);
                for (size_t a = 0; a < images.size(); ++a) {
                    for (int k = 0; k < 16; ++k) {
                        ExactVec p(g.dim, ExactScalar(0));
                        for (const auto& gen : images[a].gens) {
                            Rat w = rng.next_rat(20, 1);
                            for (size_t i = 0; i < g.dim; ++i)
                                p[i] += gen[i] * ExactScalar(w);
                        }
                        if (!cones[size_t(s)].contains(p)) {
                            res.failure_reason = "sampled image point escapes the domain";
                            return res;
                        }
                    }
                }
            }
        }

        res.ok = true;
        res.assignment.pieces.resize(size_t(n));
        res.assignment.families.resize(size_t(n));
        for (int s = 0; s < n; ++s)
            if (!cones[size_t(s)].empty())
                res.assignment.pieces[size_t(s)].push_back({cones[size_t(s)], {}});
        return res;
    } catch (const unsupported_error& e) {
        res.failure_reason = std::string("unsupported exact arithmetic: ") + e.what();
        return res;
    }
}

DomainAssignment extension_domains(const MatricesGraph& g, const MinimizeResult& minimized,
                                   const DomainAssignment& min_domains) {
    int n = g.num_states();
    DomainAssignment out;
    out.pieces.resize(size_t(n));
    out.families.resize(size_t(n));
    // Domain languages and their alphabet (shared between g and the quotient).
    auto alpha = domain_alphabet(g);
    if (alpha != domain_alphabet(minimized.graph))
        throw std::invalid_argument("extension_domains: alphabets differ");
    std::map<std::string, RatMat> token_mat;
    for (const auto& e : g.edges) {
        RatMat t = e.m.transpose();
        token_mat.emplace(encode_mat(t), t);
    }
    std::map<std::string, Fsa> targets;
    std::map<std::string, const ConeMatrix*> target_cone;
    for (int j = 0; j < minimized.graph.num_states(); ++j) {
        std::string name = "J" + std::to_string(j);
        targets.emplace(name, domain_language(minimized.graph, j).fsa);
        if (min_domains.pieces[size_t(j)].size() != 1)
            throw std::invalid_argument("extension_domains: minimized domains must be single cones");
        target_cone.emplace(name, &min_domains.pieces[size_t(j)][0].cone);
    }
    for (int i = 0; i < n; ++i) {
        Fsa di = domain_language(g, i).fsa;
        auto ws = residual_decomposition(di, targets);
        for (const auto& [name, w] : ws) {
            if (is_empty_language(w)) continue;
            const ConeMatrix& base = *target_cone.at(name);
            if (is_finite_language(w)) {
                Fsa wp = prune(w);
                for (const Word& word : wp.enumerate(wp.states == 0 ? 0 : wp.states)) {
                    RatMat m = RatMat::identity(g.dim);
                    std::vector<std::string> toks;
                    for (int c : word) {
                        const std::string& tok = w.alphabet[size_t(c)];
                        m = m * token_mat.at(tok);
                        toks.push_back(tok);
                    }
                    out.pieces[size_t(i)].push_back({base.image(to_exact(m)), toks});
                }
            } else {
                if (g.dim != 2)
                    throw infinite_decomposition_error(
                        "extension_domains: infinite residual language at dim != 2");
                // Decompose W into u v^n w families over a lasso-shaped
                // automaton (all cycles are single self-loops, one per path).
                Fsa wp = prune(determinize(w));
                struct Path {
                    Word prefix;
                    int loops = 0;
                    Word loop_letter;
                    Word suffix;
                };
                std::vector<Path> families;
                std::function<void(int, Path, std::vector<int>)> dfs = [&](int s, Path p,
                                                                           std::vector<int> seen) {
                    if (std::find(seen.begin(), seen.end(), s) != seen.end())
                        throw infinite_decomposition_error(
                            "extension_domains: W automaton has a non-self-loop cycle");
                    seen.push_back(s);
                    bool has_self = false;
                    Word self_letter;
                    for (const auto& [c, t] : wp.trans[size_t(s)])
                        if (t == s) {
                            if (has_self)
                                throw infinite_decomposition_error(
                                    "extension_domains: state with two self-loops");
                            has_self = true;
                            self_letter = {c};
                        }
                    if (has_self) {
                        if (p.loops > 0)
                            throw infinite_decomposition_error(
                                "extension_domains: path visits two loops");
                        p.loops = 1;
                        p.loop_letter = self_letter;
                    }
                    if (wp.is_final(s)) {
                        Path f = p;
                        families.push_back(f);
                    }
                    for (const auto& [c, t] : wp.trans[size_t(s)]) {
                        if (t == s) continue;
                        Path q = p;
                        if (q.loops == 1) q.suffix.push_back(c);
                        else q.prefix.push_back(c);
                        dfs(t, q, seen);
                    }
                };
                dfs(*wp.initial.begin(), Path{}, {});
                auto word_matrix = [&](const Word& word) {
                    RatMat m = RatMat::identity(g.dim);
                    for (int c : word) m = m * token_mat.at(wp.alphabet[size_t(c)]);
                    return m;
                };
                for (const auto& fam : families) {
                    if (fam.loops == 0) {
                        Word full = fam.prefix;
                        RatMat m = word_matrix(full);
                        std::vector<std::string> toks;
                        for (int c : full) toks.push_back(wp.alphabet[size_t(c)]);
                        out.pieces[size_t(i)].push_back({base.image(to_exact(m)), toks});
                    } else {
                        PieceFamily pf;
                        pf.mu = word_matrix(fam.prefix);
                        pf.mv = word_matrix(fam.loop_letter);
                        pf.mw = word_matrix(fam.suffix);
                        pf.base = base;
                        pf.n_start = 0; // u w itself (no loop pass) belongs to the family
                        out.families[size_t(i)].push_back(std::move(pf));
                    }
                }
            }
        }
    }
    return out;
}

ValidationReport verify_domains(const MatricesGraph& g, const DomainAssignment& d, int samples,
                                uint64_t seed) {
    ValidationReport rep;
    int n = g.num_states();
    if (int(d.pieces.size()) != n) {
        rep.ok = false;
        rep.reason = "assignment size mismatch";
        return rep;
    }
    if (d.has_families()) {
        rep.ok = false;
        rep.reason = "verify_domains: loop-parameterized families are not verified exactly";
        return rep;
    }
    if (g.dim > 3) {
        rep.probabilistic = true;
        // Sampled membership counting on each target piece.
        SplitMix64 rng(seed);
        (void)samples;
        for (int s = 0; s < n; ++s) {
            for (const auto& piece : d.pieces[size_t(s)]) {
                for (int k = 0; k < 8; ++k) {
                    ExactVec p(g.dim, ExactScalar(0));
                    for (const auto& gen : piece.cone.gens) {
                        Rat w = rng.next_rat(50, 1);
                        for (size_t i = 0; i < g.dim; ++i) p[i] += gen[i] * ExactScalar(w);
                    }
                    int hits = 0;
                    for (const auto& e : g.edges) {
                        if (e.to != s) continue;
                        ExactMat mt_inv = inverse(to_exact(e.m.transpose()));
                        ExactVec q = mt_inv.apply(p);
                        bool nonneg = true;
                        for (const auto& c : q)
                            if (c.sign() < 0) nonneg = false;
                        if (!nonneg) continue;
                        for (const auto& src : d.pieces[size_t(e.from)])
                            if (src.cone.contains(q)) { ++hits; break; }
                    }
                    if (hits != 1) {
                        rep.ok = false;
                        rep.reason = "sampled point not covered exactly once";
                        rep.witness_state = s;
                        return rep;
                    }
                }
            }
        }
        return rep;
    }
    for (int s = 0; s < n; ++s) {
        // Images of all in-edge domains.
        std::vector<ConeMatrix> images;
        for (const auto& e : g.edges) {
            if (e.to != s) continue;
            for (const auto& piece : d.pieces[size_t(e.from)])
                images.push_back(piece.cone.image(to_exact(e.m.transpose())));
        }
        std::vector<ConeMatrix> own;
        for (const auto& piece : d.pieces[size_t(s)]) own.push_back(piece.cone);
        // Both sides must tile the same set: pairwise disjointness on each
        // side, cross containment piece-by-piece via intersection measures,
        // and matching total measure.
        auto measure = [&](const ConeMatrix& c) -> ExactScalar {
            if (c.empty()) return ExactScalar(0);
            Polygon sec = cone_section(c);
            if (g.dim == 2) {
                if (sec.size() < 2) return ExactScalar(0);
                ExactScalar lo = sec[0].x, hi = sec[0].x;
                for (const auto& p : sec) {
                    if (p.x < lo) lo = p.x;
                    if (p.x > hi) hi = p.x;
                }
                return hi - lo;
            }
            return polygon_area2(sec);
        };
        auto overlap_measure = [&](const ConeMatrix& a, const ConeMatrix& b) -> ExactScalar {
            if (a.empty() || b.empty()) return ExactScalar(0);
            Polygon sa = cone_section(a), sb = cone_section(b);
            if (g.dim == 2) {
                auto span = [](const Polygon& s) {
                    ExactScalar lo = s[0].x, hi = s[0].x;
                    for (const auto& p : s) {
                        if (p.x < lo) lo = p.x;
                        if (p.x > hi) hi = p.x;
                    }
                    return std::make_pair(lo, hi);
                };
                if (sa.empty() || sb.empty()) return ExactScalar(0);
                auto [alo, ahi] = span(sa);
                auto [blo, bhi] = span(sb);
                ExactScalar lo = alo > blo ? alo : blo;
                ExactScalar hi = ahi < bhi ? ahi : bhi;
                return hi > lo ? hi - lo : ExactScalar(0);
            }
            return polygon_area2(polygon_intersection(sa, sb));
        };
        ExactScalar own_total(0), img_total(0);
        for (size_t a = 0; a < own.size(); ++a) {
            own_total += measure(own[a]);
            for (size_t b = a + 1; b < own.size(); ++b)
                if (!overlap_measure(own[a], own[b]).is_zero()) {
                    rep.ok = false;
                    rep.reason = "domain pieces overlap";
                    rep.witness_state = s;
                    return rep;
                }
        }
        for (size_t a = 0; a < images.size(); ++a) {
            img_total += measure(images[a]);
            for (size_t b = a + 1; b < images.size(); ++b)
                if (!overlap_measure(images[a], images[b]).is_zero()) {
                    rep.ok = false;
                    rep.reason = "incoming images overlap";
                    rep.witness_state = s;
                    return rep;
                }
            // Image must be covered by the state's own pieces.
            ExactScalar covered(0);
            for (const auto& o : own) covered += overlap_measure(images[a], o);
            if (!(covered == measure(images[a]))) {
                rep.ok = false;
                rep.reason = "incoming image escapes the domain";
                rep.witness_state = s;
                return rep;
            }
        }
        if (!(own_total == img_total)) {
            rep.ok = false;
            rep.reason = "domain measure does not match the incoming images";
            rep.witness_state = s;
            return rep;
        }
    }
    return rep;
}

DomainsResult compute_domains(const MatricesGraph& g, int max_rounds, int max_vectors) {
    MinimizeResult min = minimize_graph(g);
    DomainsResult base = polyhedral_domains(min.graph, max_rounds, max_vectors);
    if (!base.ok) return base;
    bool already_minimal = min.graph.num_states() == g.num_states();
    DomainsResult out;
    try {
        if (already_minimal) {
            out = base;
            // Present per-state pieces under the original state order.
            DomainAssignment remapped;
            remapped.pieces.resize(size_t(g.num_states()));
            remapped.families.resize(size_t(g.num_states()));
            for (int s = 0; s < g.num_states(); ++s)
                remapped.pieces[size_t(s)] =
                    base.assignment.pieces[size_t(min.state_map[size_t(s)])];
            out.assignment = remapped;
        } else {
            out.ok = true;
            out.assignment = extension_domains(g, min, base.assignment);
        }
    } catch (const infinite_decomposition_error& e) {
        out.ok = false;
        out.failure_reason = e.what();
        return out;
    } catch (const decomposition_error& e) {
        out.ok = false;
        out.failure_reason = e.what();
        return out;
    }
    if (!out.assignment.has_families()) {
        auto rep = verify_domains(g, out.assignment);
        if (!rep.ok) {
            out.ok = false;
            out.failure_reason = "domain verification failed: " + rep.reason;
        }
    }
    return out;
}

std::vector<DensityExpr> domains_to_density(const MatricesGraph& g, const DomainAssignment& d,
                                            bool canonical) {
    std::vector<DensityExpr> out;
    for (int s = 0; s < g.num_states(); ++s) {
        std::vector<ConeMatrix> cones;
        for (const auto& p : d.pieces[size_t(s)]) cones.push_back(p.cone);
        DensityExpr f = pieces_to_density(g.dim, cones, canonical);
        f.dim = g.dim;
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace mcf

#include "mcf/eigen.hpp"

#include "mcf/cone.hpp"

#include <numeric>

namespace mcf {

namespace {

void scc_dfs1(size_t u, const std::vector<std::vector<size_t>>& adj,
              std::vector<bool>& seen, std::vector<size_t>& order) {
    seen[u] = true;
    for (size_t v : adj[u])
        if (!seen[v]) scc_dfs1(v, adj, seen, order);
    order.push_back(u);
}

void scc_dfs2(size_t u, const std::vector<std::vector<size_t>>& radj,
              std::vector<int>& comp, int c) {
    comp[u] = c;
    for (size_t v : radj[u])
        if (comp[v] < 0) scc_dfs2(v, radj, comp, c);
}

} // namespace

unsigned long cyclicity_period(const RatMat& m) {
    size_t n = m.rows();
    std::vector<std::vector<size_t>> adj(n), radj(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (sgn(m(i, j)) != 0) {
                adj[i].push_back(j);
                radj[j].push_back(i);
            }
    std::vector<bool> seen(n, false);
    std::vector<size_t> order;
    for (size_t i = 0; i < n; ++i)
        if (!seen[i]) scc_dfs1(i, adj, seen, order);
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (comp[*it] < 0) scc_dfs2(*it, radj, comp, ncomp++);
    unsigned long p = 1;
    for (int c = 0; c < ncomp; ++c) {
        // BFS levels within the component; period = gcd over internal edges of
        // level(u) + 1 - level(v).
        std::vector<long> level(n, -1);
        size_t root = n;
        for (size_t i = 0; i < n; ++i)
            if (comp[i] == c) { root = i; break; }
        std::vector<size_t> queue{root};
        level[root] = 0;
        long g = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            size_t u = queue[qi];
            for (size_t v : adj[u]) {
                if (comp[v] != c) continue;
                if (level[v] < 0) {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                } else {
                    g = std::gcd(g, level[u] + 1 - level[v]);
                }
            }
        }
        if (g < 0) g = -g;
        if (g > 0) p = std::lcm(p, (unsigned long)(g));
    }
    return p;
}

LimitCone dominant_limit_cone(const RatMat& m) {
    LimitCone out;
    size_t d = m.rows();
    if (d != m.cols()) { out.reason = "not square"; return out; }
    if (!is_nonnegative(m)) { out.reason = "negative entry"; return out; }
    try {
        unsigned long p = cyclicity_period(m);
        RatMat M = RatMat::identity(d);
        for (unsigned long i = 0; i < p; ++i) M = M * m;

        Poly chi = charpoly(M);
        auto roots = isolate_real_roots(chi);
        if (roots.empty()) { out.reason = "no real eigenvalue"; return out; }
        Poly sf = squarefree_part(chi);
        ExactScalar lambda = ExactScalar::make_root(sf, roots.back());
        if (lambda.sign() <= 0) {
            // Nilpotent-ish power: the limit cone is trivial.
            out.ok = true;
            return out;
        }

        Poly mu = minpoly(M);
        // Split mu = (x - lambda)^k h with h(lambda) != 0 by synthetic division.
        std::vector<ExactScalar> cur;
        for (const Rat& c : mu.coeffs()) cur.emplace_back(c);
        auto divide_linear = [&lambda](const std::vector<ExactScalar>& c,
                                       std::vector<ExactScalar>& quot) -> ExactScalar {
            int n = int(c.size()) - 1;
            quot.assign(size_t(n), ExactScalar(0));
            ExactScalar carry = c[size_t(n)];
            for (int i = n - 1; i >= 0; --i) {
                quot[size_t(i)] = carry;
                carry = c[size_t(i)] + lambda * carry;
            }
            return carry; // value at lambda
        };
        int k = 0;
        while (cur.size() > 1) {
            std::vector<ExactScalar> quot;
            ExactScalar rem = divide_linear(cur, quot);
            if (!rem.is_zero()) break;
            cur = std::move(quot);
            ++k;
        }
        if (k == 0) { out.reason = "dominant eigenvalue not a root of the minimal polynomial"; return out; }
        // h(lambda)
        std::vector<ExactScalar> h = cur;
        ExactScalar h_at(0);
        for (auto it = h.rbegin(); it != h.rend(); ++it) h_at = h_at * lambda + *it;
        if (h_at.is_zero()) { out.reason = "degenerate spectral split"; return out; }

        ExactMat Me = to_exact(M);
        ExactMat I = ExactMat::identity(d);
        ExactMat P(d, d);
        for (auto it = h.rbegin(); it != h.rend(); ++it) {
            P = P * Me;
            for (size_t i = 0; i < d; ++i) P(i, i) += *it;
        }
        ExactScalar inv_h = ExactScalar(1) / h_at;
        P = P.scaled(inv_h);

        // N = M - lambda I on the lambda block; T = last nonzero N^s P.
        ExactMat N = Me - I.scaled(lambda);
        ExactMat T = P;
        for (int s = 1; s < k; ++s) {
            ExactMat T2 = N * T;
            bool zero = true;
            for (size_t i = 0; i < d && zero; ++i)
                for (size_t j = 0; j < d && zero; ++j)
                    if (!T2(i, j).is_zero()) zero = false;
            if (zero) break;
            T = T2;
        }
        // Columns of T generate the limit cone; the theory makes T >= 0.
        std::vector<ExactVec> rays;
        for (size_t j = 0; j < d; ++j) {
            ExactVec col = T.col(j);
            bool zero = true;
            for (const auto& e : col) {
                int s = e.sign();
                if (s < 0) {
                    out.reason = "projector column with mixed signs";
                    return out;
                }
                if (s != 0) zero = false;
            }
            if (!zero) rays.push_back(std::move(col));
        }
        rays = extremal_reduce(std::move(rays));
        for (auto& r : rays) out.rays.push_back(normalize_sum(r));
        out.ok = true;
        return out;
    } catch (const unsupported_error& e) {
        out.reason = e.what();
        return out;
    }
}

} // namespace mcf

#include "mcf/fsa.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace mcf {

int Fsa::add_state() {
    trans.emplace_back();
    return states++;
}

void Fsa::add_edge(int from, int symbol, int to) {
    if (from >= states || to >= states || symbol >= int(alphabet.size()))
        throw std::logic_error("Fsa::add_edge: out of range");
    auto& v = trans[size_t(from)];
    auto e = std::make_pair(symbol, to);
    auto it = std::lower_bound(v.begin(), v.end(), e);
    if (it == v.end() || *it != e) v.insert(it, e);
}

std::vector<int> Fsa::targets(int s, int symbol) const {
    std::vector<int> out;
    for (const auto& [c, t] : trans[size_t(s)])
        if (c == symbol) out.push_back(t);
    return out;
}

int Fsa::symbol_index(const std::string& tok) const {
    for (size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == tok) return int(i);
    return -1;
}

bool Fsa::accepts(const Word& w) const {
    std::set<int> cur = initial;
    for (int c : w) {
        std::set<int> next;
        for (int s : cur)
            for (const auto& [sym, t] : trans[size_t(s)])
                if (sym == c) next.insert(t);
        cur = std::move(next);
        if (cur.empty()) return false;
    }
    for (int s : cur)
        if (is_final(s)) return true;
    return false;
}

std::vector<Word> Fsa::enumerate(int maxlen) const {
    std::vector<Word> out;
    Word w;
    std::function<void(const std::set<int>&, int)> rec = [&](const std::set<int>& cur, int depth) {
        for (int s : cur)
            if (is_final(s)) {
                out.push_back(w);
                break;
            }
        if (depth == maxlen) return;
        for (int c = 0; c < int(alphabet.size()); ++c) {
            std::set<int> next;
            for (int s : cur)
                for (const auto& [sym, t] : trans[size_t(s)])
                    if (sym == c) next.insert(t);
            if (next.empty()) continue;
            w.push_back(c);
            rec(next, depth + 1);
            w.pop_back();
        }
    };
    rec(initial, 0);
    std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

Fsa Fsa::empty_language(std::vector<std::string> alphabet) {
    Fsa f;
    f.alphabet = std::move(alphabet);
    int s = f.add_state();
    f.initial = {s};
    for (int c = 0; c < int(f.alphabet.size()); ++c) f.add_edge(s, c, s);
    return f;
}

Fsa Fsa::sigma_star(std::vector<std::string> alphabet) {
    Fsa f = empty_language(std::move(alphabet));
    f.finals = {0};
    return f;
}

Fsa Fsa::single_word(std::vector<std::string> alphabet, const Word& w) {
    return from_words(std::move(alphabet), {w});
}

Fsa Fsa::from_words(std::vector<std::string> alphabet, const std::vector<Word>& ws) {
    Fsa f;
    f.alphabet = std::move(alphabet);
    int root = f.add_state();
    f.initial = {root};
    for (const Word& w : ws) {
        int cur = root;
        for (int c : w) {
            auto t = f.targets(cur, c);
            int next;
            if (t.empty()) {
                next = f.add_state();
                f.add_edge(cur, c, next);
            } else {
                next = t[0];
            }
            cur = next;
        }
        f.finals.insert(cur);
    }
    return f;
}

Fsa prune(const Fsa& a) {
    // Forward-reachable from initial.
    std::vector<bool> fwd(size_t(a.states), false);
    std::queue<int> q;
    for (int s : a.initial) {
        fwd[size_t(s)] = true;
        q.push(s);
    }
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        for (const auto& [c, t] : a.trans[size_t(s)])
            if (!fwd[size_t(t)]) {
                fwd[size_t(t)] = true;
                q.push(t);
            }
    }
    // Backward-reachable from finals.
    std::vector<std::vector<int>> rev(size_t(a.states));
    for (int s = 0; s < a.states; ++s)
        for (const auto& [c, t] : a.trans[size_t(s)]) rev[size_t(t)].push_back(s);
    std::vector<bool> bwd(size_t(a.states), false);
    for (int s : a.finals) {
        bwd[size_t(s)] = true;
        q.push(s);
    }
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        for (int p : rev[size_t(s)])
            if (!bwd[size_t(p)]) {
                bwd[size_t(p)] = true;
                q.push(p);
            }
    }
    std::vector<int> remap(size_t(a.states), -1);
    Fsa out;
    out.alphabet = a.alphabet;
    for (int s = 0; s < a.states; ++s)
        if (fwd[size_t(s)] && bwd[size_t(s)]) remap[size_t(s)] = out.add_state();
    for (int s = 0; s < a.states; ++s) {
        if (remap[size_t(s)] < 0) continue;
        for (const auto& [c, t] : a.trans[size_t(s)])
            if (remap[size_t(t)] >= 0) out.add_edge(remap[size_t(s)], c, remap[size_t(t)]);
    }
    for (int s : a.initial)
        if (remap[size_t(s)] >= 0) out.initial.insert(remap[size_t(s)]);
    for (int s : a.finals)
        if (remap[size_t(s)] >= 0) out.finals.insert(remap[size_t(s)]);
    return out;
}

Fsa determinize(const Fsa& a) {
    int nsym = int(a.alphabet.size());
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> subsets;
    Fsa out;
    out.alphabet = a.alphabet;
    auto intern = [&](std::vector<int> subset) {
        auto it = ids.find(subset);
        if (it != ids.end()) return it->second;
        int id = out.add_state();
        ids.emplace(subset, id);
        subsets.push_back(std::move(subset));
        return id;
    };
    std::vector<int> init(a.initial.begin(), a.initial.end());
    int start = intern(init);
    out.initial = {start};
    for (int i = 0; i < out.states; ++i) {
        const std::vector<int> subset = subsets[size_t(i)];
        bool fin = false;
        for (int s : subset)
            if (a.is_final(s)) fin = true;
        if (fin) out.finals.insert(i);
        for (int c = 0; c < nsym; ++c) {
            std::set<int> next;
            for (int s : subset)
                for (const auto& [sym, t] : a.trans[size_t(s)])
                    if (sym == c) next.insert(t);
            int tid = intern(std::vector<int>(next.begin(), next.end()));
            out.add_edge(i, c, tid);
        }
    }
    return out;
}

namespace {

// Moore partition refinement on a complete DFA with a single initial state,
// followed by BFS renumbering in alphabet order.
Fsa minimize_complete(const Fsa& d) {
    int n = d.states;
    int nsym = int(d.alphabet.size());
    std::vector<int> cls(static_cast<size_t>(n), 0);
    for (int s = 0; s < n; ++s) cls[size_t(s)] = d.is_final(s) ? 1 : 0;
    auto delta = [&](int s, int c) { return d.targets(s, c)[0]; };
    while (true) {
        std::map<std::vector<int>, int> sig_ids;
        std::vector<int> next(static_cast<size_t>(n), 0);
        for (int s = 0; s < n; ++s) {
            std::vector<int> sig{cls[size_t(s)]};
            for (int c = 0; c < nsym; ++c) sig.push_back(cls[size_t(delta(s, c))]);
            auto it = sig_ids.find(sig);
            if (it == sig_ids.end()) it = sig_ids.emplace(sig, int(sig_ids.size())).first;
            next[size_t(s)] = it->second;
        }
        bool changed = next != cls;
        cls = std::move(next);
        if (!changed) break;
    }
    int init_cls = cls[size_t(*d.initial.begin())];
    // BFS renumber classes from the initial class.
    std::map<int, int> order;
    order[init_cls] = 0;
    std::vector<int> bfs{init_cls};
    std::vector<int> rep(size_t(n), -1); // representative state of each class
    for (int s = 0; s < n; ++s)
        if (rep[size_t(cls[size_t(s)])] < 0) rep[size_t(cls[size_t(s)])] = s;
    for (size_t qi = 0; qi < bfs.size(); ++qi) {
        int c0 = bfs[qi];
        int s = rep[size_t(c0)];
        for (int c = 0; c < nsym; ++c) {
            int tc = cls[size_t(delta(s, c))];
            if (!order.count(tc)) {
                order[tc] = int(order.size());
                bfs.push_back(tc);
            }
        }
    }
    Fsa out;
    out.alphabet = d.alphabet;
    for (size_t i = 0; i < order.size(); ++i) out.add_state();
    out.initial = {0};
    for (int c0 : bfs) {
        int from = order[c0];
        int s = rep[size_t(c0)];
        if (d.is_final(s)) out.finals.insert(from);
        for (int c = 0; c < nsym; ++c) out.add_edge(from, c, order[cls[size_t(delta(s, c))]]);
    }
    return out;
}

} // namespace

Fsa determinize_minimize(const Fsa& a) {
    return minimize_complete(determinize(a));
}

bool equal_language(const Fsa& a, const Fsa& b) {
    if (a.alphabet != b.alphabet)
        throw alphabet_mismatch("equal_language: different alphabets");
    Fsa ca = determinize_minimize(a), cb = determinize_minimize(b);
    return ca.states == cb.states && ca.finals == cb.finals && ca.trans == cb.trans;
}

bool is_empty_language(const Fsa& a) {
    Fsa p = prune(a);
    return p.finals.empty();
}

bool is_finite_language(const Fsa& a) {
    Fsa p = prune(a);
    // Finite iff the live graph is acyclic.
    std::vector<int> color(size_t(p.states), 0);
    std::function<bool(int)> dfs = [&](int s) {
        color[size_t(s)] = 1;
        for (const auto& [c, t] : p.trans[size_t(s)]) {
            if (color[size_t(t)] == 1) return true;
            if (color[size_t(t)] == 0 && dfs(t)) return true;
        }
        color[size_t(s)] = 2;
        return false;
    };
    for (int s : p.initial)
        if (color[size_t(s)] == 0 && dfs(s)) return false;
    return true;
}

Fsa combine(BoolOp op, const Fsa& a, const Fsa& b) {
    if (a.alphabet != b.alphabet)
        throw alphabet_mismatch("combine: different alphabets");
    Fsa da = determinize(a), db = determinize(b);
    int nsym = int(a.alphabet.size());
    Fsa out;
    out.alphabet = a.alphabet;
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> pairs;
    auto intern = [&](int x, int y) {
        auto key = std::make_pair(x, y);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        int id = out.add_state();
        ids.emplace(key, id);
        pairs.push_back(key);
        return id;
    };
    int start = intern(*da.initial.begin(), *db.initial.begin());
    out.initial = {start};
    for (int i = 0; i < out.states; ++i) {
        auto [x, y] = pairs[size_t(i)];
        bool fa = da.is_final(x), fb = db.is_final(y);
        bool fin = op == BoolOp::Union          ? (fa || fb)
                   : op == BoolOp::Intersection ? (fa && fb)
                                                : (fa && !fb);
        if (fin) out.finals.insert(i);
        for (int c = 0; c < nsym; ++c)
            out.add_edge(i, c, intern(da.targets(x, c)[0], db.targets(y, c)[0]));
    }
    return minimize_complete(out);
}

Fsa complement(const Fsa& a) {
    Fsa d = determinize(a);
    std::set<int> flipped;
    for (int s = 0; s < d.states; ++s)
        if (!d.is_final(s)) flipped.insert(s);
    d.finals = std::move(flipped);
    return minimize_complete(d);
}

Fsa mirror(const Fsa& a) {
    Fsa rev;
    rev.alphabet = a.alphabet;
    for (int s = 0; s < a.states; ++s) rev.add_state();
    for (int s = 0; s < a.states; ++s)
        for (const auto& [c, t] : a.trans[size_t(s)]) rev.add_edge(t, c, s);
    rev.initial = a.finals;
    rev.finals = a.initial;
    return determinize_minimize(rev);
}

Fsa concat(const Fsa& a, const Fsa& b) {
    if (a.alphabet != b.alphabet)
        throw alphabet_mismatch("concat: different alphabets");
    Fsa out;
    out.alphabet = a.alphabet;
    for (int s = 0; s < a.states + b.states; ++s) out.add_state();
    int off = a.states;
    for (int s = 0; s < a.states; ++s)
        for (const auto& [c, t] : a.trans[size_t(s)]) out.add_edge(s, c, t);
    for (int s = 0; s < b.states; ++s)
        for (const auto& [c, t] : b.trans[size_t(s)]) out.add_edge(s + off, c, t + off);
    bool b_eps = false;
    for (int i : b.initial)
        if (b.is_final(i)) b_eps = true;
    bool a_eps = false;
    for (int i : a.initial)
        if (a.is_final(i)) a_eps = true;
    for (int f : a.finals)
        for (int i : b.initial)
            for (const auto& [c, t] : b.trans[size_t(i)]) out.add_edge(f, c, t + off);
    out.initial = a.initial;
    if (a_eps)
        for (int i : b.initial) out.initial.insert(i + off);
    for (int f : b.finals) out.finals.insert(f + off);
    if (b_eps)
        for (int f : a.finals) out.finals.insert(f);
    return determinize_minimize(out);
}

Fsa prefix_closure(const Fsa& a) {
    Fsa p = prune(a);
    if (p.finals.empty()) return determinize_minimize(p); // empty language
    for (int s = 0; s < p.states; ++s) p.finals.insert(s);
    return determinize_minimize(p);
}

Fsa prune_inf(const Fsa& a) {
    Fsa p = prune(a);
    // States sitting on a cycle.
    std::vector<int> color(size_t(p.states), 0);
    std::vector<bool> cyclic(size_t(p.states), false);
    std::function<void(int)> dfs = [&](int s) {
        color[size_t(s)] = 1;
        for (const auto& [c, t] : p.trans[size_t(s)]) {
            if (color[size_t(t)] == 1) cyclic[size_t(t)] = true;
            if (color[size_t(t)] == 0) dfs(t);
        }
        color[size_t(s)] = 2;
    };
    for (int s = 0; s < p.states; ++s)
        if (color[size_t(s)] == 0) dfs(s);
    // Keep states from which a cycle is reachable.
    std::vector<std::vector<int>> rev(size_t(p.states));
    for (int s = 0; s < p.states; ++s)
        for (const auto& [c, t] : p.trans[size_t(s)]) rev[size_t(t)].push_back(s);
    std::queue<int> q;
    std::vector<bool> keep(size_t(p.states), false);
    for (int s = 0; s < p.states; ++s)
        if (cyclic[size_t(s)]) {
            keep[size_t(s)] = true;
            q.push(s);
        }
    while (!q.empty()) {
        int s = q.front();
        q.pop();
        for (int r : rev[size_t(s)])
            if (!keep[size_t(r)]) {
                keep[size_t(r)] = true;
                q.push(r);
            }
    }
    Fsa out;
    out.alphabet = p.alphabet;
    std::vector<int> remap(size_t(p.states), -1);
    for (int s = 0; s < p.states; ++s)
        if (keep[size_t(s)]) remap[size_t(s)] = out.add_state();
    for (int s = 0; s < p.states; ++s) {
        if (remap[size_t(s)] < 0) continue;
        for (const auto& [c, t] : p.trans[size_t(s)])
            if (remap[size_t(t)] >= 0) out.add_edge(remap[size_t(s)], c, remap[size_t(t)]);
    }
    for (int s : p.initial)
        if (remap[size_t(s)] >= 0) out.initial.insert(remap[size_t(s)]);
    // Every surviving word is a prefix of arbitrarily long survivors; mark all
    // states final (a no-op on the prefix-stable languages of the boundary
    // pipeline, where every live state already accepts).
    for (int s = 0; s < out.states; ++s) out.finals.insert(s);
    return determinize_minimize(out);
}

Fsa lex_extremal(const Fsa& a, Extremal which) {
    Fsa m = determinize_minimize(prune(a));
    if (m.finals.empty()) throw empty_language_error("lex_extremal: empty language");
    // Restrict to live states, then follow the extremal path up to a loop.
    Fsa live = prune(m);
    int cur = *live.initial.begin();
    std::vector<int> path_states{cur};
    std::vector<int> path_syms;
    std::map<int, size_t> seen{{cur, 0}};
    int loop_start = -1;
    while (true) {
        int best_sym = -1, best_t = -1;
        for (const auto& [c, t] : live.trans[size_t(cur)]) {
            if (best_sym < 0 || (which == Extremal::Min ? c < best_sym : c > best_sym)) {
                best_sym = c;
                best_t = t;
            }
        }
        if (best_sym < 0) break; // dead end: the extremal word is finite
        path_syms.push_back(best_sym);
        cur = best_t;
        auto it = seen.find(cur);
        if (it != seen.end()) {
            loop_start = int(it->second);
            break;
        }
        seen[cur] = path_states.size();
        path_states.push_back(cur);
    }
    Fsa out;
    out.alphabet = a.alphabet;
    for (size_t i = 0; i < path_states.size(); ++i) out.add_state();
    out.initial = {0};
    for (size_t i = 0; i < path_states.size(); ++i) out.finals.insert(int(i));
    for (size_t i = 0; i + 1 < path_states.size(); ++i)
        out.add_edge(int(i), path_syms[i], int(i + 1));
    if (loop_start >= 0)
        out.add_edge(int(path_states.size() - 1), path_syms.back(), loop_start);
    return determinize_minimize(out);
}

std::vector<std::string> pair_alphabet(const std::vector<std::string>& base) {
    std::vector<std::string> out;
    for (const auto& x : base)
        for (const auto& y : base) out.push_back("(" + x + "," + y + ")");
    return out;
}

Fsa relations_product(const Fsa& a, const Fsa& b) {
    if (a.alphabet != b.alphabet)
        throw alphabet_mismatch("relations_product: different alphabets");
    if (a.alphabet.size() != 2)
        throw alphabet_mismatch("relations_product: needs a binary alphabet");
    Fsa da = determinize(a), db = determinize(b);
    // Relations automaton: 0 center, 1 right (entered on (0,1), loops (1,0)),
    // 2 left (entered on (1,0), loops (0,1)); every state final.
    auto rel_next = [](int r, int x, int y) -> int {
        if (r == 0) {
            if (x == y) return 0;
            return (x == 0) ? 1 : 2;
        }
        if (r == 1) return (x == 1 && y == 0) ? 1 : -1;
        return (x == 0 && y == 1) ? 2 : -1;
    };
    Fsa out;
    out.alphabet = pair_alphabet(a.alphabet);
    std::map<std::tuple<int, int, int>, int> ids;
    std::vector<std::tuple<int, int, int>> keys;
    auto intern = [&](int x, int y, int r) {
        auto key = std::make_tuple(x, y, r);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        int id = out.add_state();
        ids.emplace(key, id);
        keys.push_back(key);
        return id;
    };
    int start = intern(*da.initial.begin(), *db.initial.begin(), 0);
    out.initial = {start};
    for (int i = 0; i < out.states; ++i) {
        auto [x, y, r] = keys[size_t(i)];
        if (da.is_final(x) && db.is_final(y)) out.finals.insert(i);
        for (int cx = 0; cx < 2; ++cx)
            for (int cy = 0; cy < 2; ++cy) {
                int r2 = rel_next(r, cx, cy);
                if (r2 < 0) continue;
                out.add_edge(i, cx * 2 + cy, intern(da.targets(x, cx)[0], db.targets(y, cy)[0], r2));
            }
    }
    return determinize_minimize(prune(out));
}

Fsa project_first(const Fsa& p) {
    if (p.alphabet.size() != 4)
        throw alphabet_mismatch("project_first: expects a pair alphabet");
    // Pair symbols are ordered (0,0),(0,1),(1,0),(1,1): first letter = k / 2.
    Fsa out;
    out.alphabet = {"0", "1"};
    for (int s = 0; s < p.states; ++s) out.add_state();
    for (int s = 0; s < p.states; ++s)
        for (const auto& [c, t] : p.trans[size_t(s)]) out.add_edge(s, c / 2, t);
    out.initial = p.initial;
    out.finals = p.finals;
    return determinize_minimize(out);
}

ABDecomposition decompose_ab(const Fsa& l) {
    Fsa m = determinize_minimize(l);
    int nsym = int(m.alphabet.size());
    int full = -1;
    for (int s = 0; s < m.states; ++s) {
        if (!m.is_final(s)) continue;
        bool loops = true;
        for (int c = 0; c < nsym; ++c)
            if (m.targets(s, c)[0] != s) loops = false;
        if (loops) {
            full = s;
            break;
        }
    }
    ABDecomposition out;
    if (full < 0) {
        out.a = determinize_minimize(Fsa::empty_language(m.alphabet));
        out.b = m;
        out.has_full_state = false;
        return out;
    }
    out.has_full_state = true;
    // A: words reaching the full state for the first time (its out-edges cut).
    Fsa acut = m;
    acut.trans[size_t(full)].clear();
    acut.finals = {full};
    out.a = determinize_minimize(prune(acut));
    // B: L minus A Sigma*; in the minimal DFA, A Sigma* is exactly the set of
    // words whose run ends in the absorbing full state.
    Fsa b = m;
    b.finals.erase(full);
    out.b = determinize_minimize(prune(b));
    return out;
}

Fsa residual(const Fsa& a, int s) {
    Fsa r = a;
    r.initial = {s};
    return determinize_minimize(prune(r));
}

std::map<std::string, Fsa> residual_decomposition(const Fsa& di,
                                                  const std::map<std::string, Fsa>& targets) {
    Fsa m = determinize_minimize(prune(di));
    if (m.finals.empty()) throw decomposition_error("residual_decomposition: empty language");
    std::map<std::string, std::vector<int>> matched;
    std::set<int> cut_states;
    std::vector<bool> live(size_t(m.states), false);
    for (int s = 0; s < m.states; ++s) {
        Fsa rs = residual(m, s);
        if (rs.finals.empty()) continue; // dead sink
        live[size_t(s)] = true;
        for (const auto& [name, tgt] : targets) {
            if (equal_language(rs, tgt)) {
                matched[name].push_back(s);
                cut_states.insert(s);
            }
        }
    }
    for (const auto& [name, ss] : matched)
        if (ss.size() > 1)
            throw decomposition_error("residual_decomposition: residual matched twice");
    if (cut_states.empty())
        throw decomposition_error("residual_decomposition: no residual matches a target");
    Fsa cut = m;
    for (int s : cut_states) cut.trans[size_t(s)].clear();
    // Reachability condition: every live state is a residual state or reaches
    // one (first hits are unaffected by the cut).
    {
        std::vector<std::vector<int>> rev(size_t(cut.states));
        for (int s = 0; s < cut.states; ++s)
            for (const auto& [c, t] : cut.trans[size_t(s)]) rev[size_t(t)].push_back(s);
        std::vector<bool> reach(size_t(cut.states), false);
        std::queue<int> q;
        for (int s : cut_states) {
            reach[size_t(s)] = true;
            q.push(s);
        }
        while (!q.empty()) {
            int s = q.front();
            q.pop();
            for (int r : rev[size_t(s)])
                if (!reach[size_t(r)]) {
                    reach[size_t(r)] = true;
                    q.push(r);
                }
        }
        for (int s = 0; s < m.states; ++s)
            if (live[size_t(s)] && !reach[size_t(s)])
                throw decomposition_error(
                    "residual_decomposition: a live state cannot reach the residual states");
    }
    std::map<std::string, Fsa> out;
    for (const auto& [name, tgt] : targets) {
        auto it = matched.find(name);
        if (it == matched.end()) {
            out.emplace(name, determinize_minimize(Fsa::empty_language(m.alphabet)));
            continue;
        }
        Fsa w = cut;
        w.finals = {it->second[0]};
        out.emplace(name, determinize_minimize(prune(w)));
    }
    // Verify di = pref(union_J W_J target_J).
    Fsa acc = Fsa::empty_language(m.alphabet);
    for (const auto& [name, w] : out) {
        auto t = targets.find(name);
        acc = combine(BoolOp::Union, acc, concat(w, t->second));
    }
    if (!equal_language(prefix_closure(acc), m))
        throw decomposition_error("residual_decomposition: decomposition identity failed");
    return out;
}

std::string to_dot(const Fsa& a) {
    std::ostringstream os;
    os << "digraph fsa {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (int s : a.finals) os << "  " << s << " [shape=doublecircle];\n";
    for (int s : a.initial)
        os << "  start" << s << " [shape=point]; start" << s << " -> " << s << ";\n";
    for (int s = 0; s < a.states; ++s)
        for (const auto& [c, t] : a.trans[size_t(s)])
            os << "  " << s << " -> " << t << " [label=\"" << a.alphabet[size_t(c)] << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace mcf

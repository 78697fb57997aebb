#include "mcf/cfgraph.hpp"

#include <algorithm>
#include <sstream>

namespace mcf {

std::vector<int> MatricesGraph::out_edges(int s) const {
    std::vector<int> out;
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].from == s) out.push_back(int(i));
    return out;
}

std::vector<int> MatricesGraph::in_edges(int s) const {
    std::vector<int> out;
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].to == s) out.push_back(int(i));
    return out;
}

int MatricesGraph::find_state(const std::string& name) const {
    for (size_t i = 0; i < state_names.size(); ++i)
        if (state_names[i] == name) return int(i);
    return -1;
}

std::vector<int> WinLoseGraph::out_edges(int s) const {
    std::vector<int> out;
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].from == s) out.push_back(int(i));
    return out;
}

int WinLoseGraph::edge_on(int s, int letter) const {
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].from == s && edges[i].letter == letter) return int(i);
    return -1;
}

void validate_winlose(const WinLoseGraph& g) {
    for (const auto& e : g.edges) {
        if (e.letter < 0 || e.letter >= int(g.dim))
            throw std::invalid_argument("win-lose letter out of range");
        if (e.from < 0 || e.from >= g.num_states() || e.to < 0 || e.to >= g.num_states())
            throw std::invalid_argument("win-lose edge state out of range");
    }
    for (int s = 0; s < g.num_states(); ++s) {
        std::set<int> seen;
        for (int ei : g.out_edges(s)) {
            int l = g.edges[size_t(ei)].letter;
            if (!seen.insert(l).second)
                throw std::invalid_argument("two out-edges with the same letter");
        }
    }
}

MatricesGraph winlose_to_matrices(const WinLoseGraph& g) {
    validate_winlose(g);
    MatricesGraph out;
    out.dim = g.dim;
    out.state_names = g.state_names;
    for (int s = 0; s < g.num_states(); ++s) {
        std::vector<int> letters;
        for (int ei : g.out_edges(s)) letters.push_back(g.edges[size_t(ei)].letter);
        for (int ei : g.out_edges(s)) {
            const auto& e = g.edges[size_t(ei)];
            RatMat m = RatMat::identity(g.dim);
            for (int l : letters)
                if (l != e.letter) m(size_t(e.letter), size_t(l)) += 1;
            out.edges.push_back({e.from, e.to, std::move(m)});
        }
    }
    return out;
}

ValidationReport validate_cone_partition(const MatricesGraph& g, int samples, uint64_t seed) {
    ValidationReport rep;
    for (const auto& e : g.edges) {
        if (!is_nonnegative(e.m) || !is_integer(e.m)) {
            rep.ok = false;
            rep.reason = "edge matrix not a nonnegative integer matrix";
            rep.witness_state = e.from;
            return rep;
        }
        if (sgn(det(e.m)) == 0) {
            rep.ok = false;
            rep.reason = "edge matrix singular";
            rep.witness_state = e.from;
            return rep;
        }
    }
    if (g.dim <= 3) {
        ConeMatrix full = ConeMatrix::full(g.dim);
        for (int s = 0; s < g.num_states(); ++s) {
            auto out = g.out_edges(s);
            if (out.empty()) {
                rep.ok = false;
                rep.reason = "state without outgoing edges";
                rep.witness_state = s;
                return rep;
            }
            std::vector<ConeMatrix> images;
            for (int ei : out) images.push_back(full.image(to_exact(g.edges[size_t(ei)].m)));
            auto pr = cone_partition_check(full, images);
            if (!pr.ok) {
                rep.ok = false;
                rep.reason = "state " + g.state_names[size_t(s)] + ": " + pr.reason;
                rep.witness_state = s;
                return rep;
            }
        }
        return rep;
    }
    // d >= 4: randomized membership counting; membership itself is exact.
    rep.probabilistic = true;
    SplitMix64 rng(seed);
    std::vector<RatMat> inverses;
    inverses.reserve(g.edges.size());
    for (const auto& e : g.edges) inverses.push_back(inverse(e.m));
    for (int s = 0; s < g.num_states(); ++s) {
        auto out = g.out_edges(s);
        for (int k = 0; k < samples; ++k) {
            std::vector<Rat> x;
            for (size_t i = 0; i < g.dim; ++i) x.push_back(rng.next_rat(1000, 1));
            int hits = 0;
            for (int ei : out) {
                const RatMat& inv = inverses[size_t(ei)];
                bool inside = true;
                for (size_t i = 0; i < g.dim && inside; ++i) {
                    Rat acc(0);
                    for (size_t j = 0; j < g.dim; ++j) acc += inv(i, j) * x[j];
                    if (sgn(acc) < 0) inside = false;
                }
                if (inside) ++hits;
            }
            if (hits != 1) {
                rep.ok = false;
                rep.reason = hits == 0 ? "sample point uncovered" : "sample point covered twice";
                rep.witness_state = s;
                return rep;
            }
        }
    }
    return rep;
}

Expansion expand_point(const MatricesGraph& g, const ExactVec& x0, int s, int nmax) {
    Expansion out;
    ExactVec x = x0;
    int state = s;
    std::vector<RatMat> inverses;
    inverses.reserve(g.edges.size());
    for (const auto& e : g.edges) inverses.push_back(inverse(e.m));
    std::map<std::string, size_t> seen;
    for (int step = 0; step < nmax; ++step) {
        // Record the normalized (point, state) pair for cycle detection.
        try {
            ExactVec norm = normalize_sum(x);
            std::ostringstream key;
            key << state << "@" << encode_vec(norm);
            auto it = seen.find(key.str());
            if (it != seen.end()) {
                out.status = ExpansionStatus::Periodic;
                out.preperiod = it->second;
                out.period = size_t(step) - it->second;
                out.final_state = state;
                return out;
            }
            seen[key.str()] = size_t(step);
        } catch (const unsupported_error&) {
            // Mixed-field coordinates: skip cycle detection, keep iterating.
        }
        // Find the out-cones containing x.
        int chosen = -1;
        int hits = 0;
        ExactVec next;
        for (int ei : g.out_edges(state)) {
            ExactMat inv = to_exact(inverses[size_t(ei)]);
            ExactVec y = inv.apply(x);
            bool inside = true;
            for (const auto& c : y)
                if (c.sign() < 0) { inside = false; break; }
            if (inside) {
                ++hits;
                if (chosen < 0) {
                    chosen = ei;
                    next = std::move(y);
                }
            }
        }
        if (hits != 1) {
            out.status = ExpansionStatus::BoundaryHit;
            out.final_state = state;
            return out;
        }
        out.edge_seq.push_back(chosen);
        x = std::move(next);
        state = g.edges[size_t(chosen)].to;
    }
    out.status = ExpansionStatus::Truncated;
    out.final_state = state;
    return out;
}

std::vector<std::string> domain_alphabet(const MatricesGraph& g) {
    std::set<std::string> toks;
    for (const auto& e : g.edges) toks.insert(encode_mat(e.m.transpose()));
    return std::vector<std::string>(toks.begin(), toks.end());
}

DomainLanguage domain_language(const MatricesGraph& g, int i) {
    DomainLanguage out;
    auto alpha = domain_alphabet(g);
    for (const auto& e : g.edges) {
        RatMat t = e.m.transpose();
        out.token_matrix.emplace(encode_mat(t), t);
    }
    // Reversed-edge automaton from state i, all states final: a word
    // t(m1)...t(mn) is read along the path into i, last edge first.
    Fsa f;
    f.alphabet = alpha;
    for (int s = 0; s < g.num_states(); ++s) f.add_state();
    for (const auto& e : g.edges) {
        int sym = f.symbol_index(encode_mat(e.m.transpose()));
        f.add_edge(e.to, sym, e.from);
    }
    f.initial = {i};
    for (int s = 0; s < g.num_states(); ++s) f.finals.insert(s);
    out.fsa = determinize_minimize(f);
    return out;
}

std::string to_dot(const MatricesGraph& g) {
    std::ostringstream os;
    os << "digraph matrices {\n  rankdir=LR;\n";
    for (int s = 0; s < g.num_states(); ++s)
        os << "  " << s << " [label=\"" << g.state_names[size_t(s)] << "\"];\n";
    for (const auto& e : g.edges) {
        os << "  " << e.from << " -> " << e.to << " [label=\"";
        for (size_t i = 0; i < g.dim; ++i) {
            if (i) os << ";";
            for (size_t j = 0; j < g.dim; ++j) {
                if (j) os << ",";
                os << rat_str(e.m(i, j));
            }
        }
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string to_dot(const WinLoseGraph& g) {
    std::ostringstream os;
    os << "digraph winlose {\n  rankdir=LR;\n";
    for (int s = 0; s < g.num_states(); ++s)
        os << "  " << s << " [label=\"" << g.state_names[size_t(s)] << "\"];\n";
    for (const auto& e : g.edges)
        os << "  " << e.from << " -> " << e.to << " [label=\"" << e.letter << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace mcf

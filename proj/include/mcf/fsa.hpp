#pragma once

#include "mcf/rational.hpp"

#include <map>
#include <set>

namespace mcf {

struct alphabet_mismatch : std::invalid_argument {
    explicit alphabet_mismatch(const std::string& w) : std::invalid_argument(w) {}
};
struct empty_language_error : std::runtime_error {
    explicit empty_language_error(const std::string& w) : std::runtime_error(w) {}
};
struct decomposition_error : std::runtime_error {
    explicit decomposition_error(const std::string& w) : std::runtime_error(w) {}
};

using Word = std::vector<int>; // symbol indices into the alphabet

// Finite automaton over an ordered alphabet of opaque symbols. May be
// nondeterministic; most operations canonicalize through the minimal
// complete DFA (BFS-numbered from the initial state in alphabet order),
// which makes language equality a structural comparison.
struct Fsa {
    std::vector<std::string> alphabet;
    int states = 0;
    std::set<int> initial;
    std::set<int> finals;
    std::vector<std::vector<std::pair<int, int>>> trans; // per state: (symbol, target), sorted

    int add_state();
    void add_edge(int from, int symbol, int to);
    std::vector<int> targets(int s, int symbol) const;
    bool is_final(int s) const { return finals.count(s) > 0; }
    int symbol_index(const std::string& tok) const; // -1 when absent

    bool accepts(const Word& w) const;
    // All accepted words of length <= maxlen, lexicographic within length.
    std::vector<Word> enumerate(int maxlen) const;

    static Fsa empty_language(std::vector<std::string> alphabet);
    static Fsa sigma_star(std::vector<std::string> alphabet);
    static Fsa single_word(std::vector<std::string> alphabet, const Word& w);
    static Fsa from_words(std::vector<std::string> alphabet, const std::vector<Word>& ws);
};

// Keep only states on a path from an initial to a final state.
Fsa prune(const Fsa& a);
// Subset construction; output deterministic and complete (may have a sink).
Fsa determinize(const Fsa& a);
// Minimal complete DFA, BFS-canonical. This is the normal form all other
// operations return.
Fsa determinize_minimize(const Fsa& a);

bool equal_language(const Fsa& a, const Fsa& b);
bool is_empty_language(const Fsa& a);
bool is_finite_language(const Fsa& a);

enum class BoolOp { Union, Intersection, Difference };
Fsa combine(BoolOp op, const Fsa& a, const Fsa& b);
Fsa complement(const Fsa& a);
Fsa mirror(const Fsa& a);
Fsa concat(const Fsa& a, const Fsa& b);
Fsa prefix_closure(const Fsa& a);
// Remove the words that cannot be extended to arbitrarily longer words of
// the language (states from which no cycle is reachable).
Fsa prune_inf(const Fsa& a);

// Language of the lexicographically smallest (greatest) infinite path's
// prefixes; requires a prefix-stable language.
enum class Extremal { Min, Max };
Fsa lex_extremal(const Fsa& a, Extremal which);

// Pair alphabet used by the relations automaton; symbols ordered
// (0,0) < (0,1) < (1,0) < (1,1).
std::vector<std::string> pair_alphabet(const std::vector<std::string>& base);

// Synchronous product a x b intersected with the 3-state relations automaton
// over {0,1}^2 (central state loops (0,0),(1,1); right state entered on
// (0,1) with loop (1,0); left state entered on (1,0) with loop (0,1); all
// states final).
Fsa relations_product(const Fsa& a, const Fsa& b);
// Image under the first-coordinate projection of a pair-alphabet automaton.
Fsa project_first(const Fsa& p);

// L = A Sigma* u B with Lambda(A), Lambda(B) of measure zero: A reaches the
// unique all-accepting residual state (out-edges cut), B is the rest.
struct ABDecomposition {
    Fsa a, b;
    bool has_full_state = false;
};
ABDecomposition decompose_ab(const Fsa& l);

// For a prefix-stable di and residual targets, the W languages with
// di = pref(union_J W_J . target_J); errors with decomposition_error when
// the targets do not cover (the reachability condition fails).
std::map<std::string, Fsa> residual_decomposition(const Fsa& di,
                                                  const std::map<std::string, Fsa>& targets);

// Residual language of a state (the automaton re-rooted at s).
Fsa residual(const Fsa& a, int s);

std::string to_dot(const Fsa& a);

} // namespace mcf

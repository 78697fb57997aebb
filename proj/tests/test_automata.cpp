#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcf/fsa.hpp"

#include <set>

using namespace mcf;

namespace {

const std::vector<std::string> AB{"0", "1"};

std::set<Word> words_of(const Fsa& f, int maxlen) {
    auto v = f.enumerate(maxlen);
    return std::set<Word>(v.begin(), v.end());
}

// Random NFA generator for property checks.
Fsa random_nfa(SplitMix64& rng, int nstates, int nsym) {
    std::vector<std::string> alpha;
    for (int i = 0; i < nsym; ++i) alpha.push_back(std::to_string(i));
    Fsa f;
    f.alphabet = alpha;
    for (int i = 0; i < nstates; ++i) f.add_state();
    int nedges = nstates * nsym;
    for (int i = 0; i < nedges; ++i) {
        int s = int(rng.next_below(uint64_t(nstates)));
        int c = int(rng.next_below(uint64_t(nsym)));
        int t = int(rng.next_below(uint64_t(nstates)));
        f.add_edge(s, c, t);
    }
    f.initial = {0};
    for (int i = 0; i < nstates; ++i)
        if (rng.next_below(3) == 0) f.finals.insert(i);
    if (f.finals.empty()) f.finals.insert(int(rng.next_below(uint64_t(nstates))));
    return f;
}

Word W(std::initializer_list<int> w) { return Word(w); }

} // namespace

TEST_CASE("determinize_minimize: the two-state loop graph collapses to one state") {
    // Both states read both letters and every state is final, so both
    // residuals are Sigma*.
    Fsa f;
    f.alphabet = {"m0", "m1"};
    f.add_state();
    f.add_state();
    f.add_edge(0, 0, 0);
    f.add_edge(0, 1, 1);
    f.add_edge(1, 1, 1);
    f.add_edge(1, 0, 0);
    f.initial = {0};
    f.finals = {0, 1};
    Fsa m = determinize_minimize(f);
    CHECK(m.states == 1);
    CHECK(equal_language(m, Fsa::sigma_star({"m0", "m1"})));
}

TEST_CASE("determinize_minimize is stable on an already minimal DFA") {
    // (0|1)*1 minimal DFA: 2 states.
    Fsa f;
    f.alphabet = AB;
    f.add_state();
    f.add_state();
    f.add_edge(0, 0, 0);
    f.add_edge(0, 1, 1);
    f.add_edge(1, 0, 0);
    f.add_edge(1, 1, 1);
    f.initial = {0};
    f.finals = {1};
    Fsa m = determinize_minimize(f);
    CHECK(m.states == 2);
    CHECK(equal_language(f, m));
}

TEST_CASE("NFA for (0|1)*0 determinizes to 2 live states; language matches sampling") {
    Fsa f;
    f.alphabet = AB;
    f.add_state();
    f.add_state();
    f.add_edge(0, 0, 0);
    f.add_edge(0, 1, 0);
    f.add_edge(0, 0, 1);
    f.initial = {0};
    f.finals = {1};
    Fsa m = determinize_minimize(f);
    Fsa live = prune(m);
    CHECK(live.states == 2);
    for (const Word& w : m.enumerate(8)) {
        REQUIRE(!w.empty());
        CHECK(w.back() == 0);
    }
    CHECK(words_of(m, 8).size() == words_of(f, 8).size());
}

TEST_CASE("combine: boolean operations against enumeration") {
    SplitMix64 rng(777);
    for (int trial = 0; trial < 12; ++trial) {
        Fsa a = random_nfa(rng, 4, 2), b = random_nfa(rng, 4, 2);
        auto wa = words_of(a, 7), wb = words_of(b, 7);
        auto wu = words_of(combine(BoolOp::Union, a, b), 7);
        auto wi = words_of(combine(BoolOp::Intersection, a, b), 7);
        auto wd = words_of(combine(BoolOp::Difference, a, b), 7);
        std::set<Word> eu = wa, ei, ed;
        eu.insert(wb.begin(), wb.end());
        for (const auto& w : wa) {
            if (wb.count(w)) ei.insert(w);
            else ed.insert(w);
        }
        CHECK(wu == eu);
        CHECK(wi == ei);
        CHECK(wd == ed);
    }
}

TEST_CASE("combine: intersection with Sigma* and complement of empty") {
    Fsa l = Fsa::from_words(AB, {W({0, 1}), W({1})});
    CHECK(equal_language(combine(BoolOp::Intersection, Fsa::sigma_star(AB), l), l));
    CHECK(equal_language(complement(Fsa::empty_language(AB)), Fsa::sigma_star(AB)));
    CHECK(equal_language(complement(complement(l)), l));
}

TEST_CASE("alphabet mismatch is rejected") {
    CHECK_THROWS_AS(combine(BoolOp::Union, Fsa::sigma_star(AB), Fsa::sigma_star({"a", "b"})),
                    alphabet_mismatch);
}

TEST_CASE("mirror: {01} -> {10} and involution") {
    Fsa f = Fsa::single_word(AB, W({0, 1}));
    Fsa m = mirror(f);
    CHECK(words_of(m, 4) == std::set<Word>{W({1, 0})});
    SplitMix64 rng(42);
    for (int trial = 0; trial < 8; ++trial) {
        Fsa a = random_nfa(rng, 4, 2);
        CHECK(equal_language(mirror(mirror(a)), a));
    }
}

TEST_CASE("prefix closure examples and idempotence") {
    Fsa f = Fsa::single_word(AB, W({0, 1}));
    auto got = words_of(prefix_closure(f), 4);
    CHECK(got == std::set<Word>{W({}), W({0}), W({0, 1})});
    CHECK(equal_language(prefix_closure(Fsa::sigma_star(AB)), Fsa::sigma_star(AB)));
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 8; ++trial) {
        Fsa a = random_nfa(rng, 4, 2);
        Fsa p = prefix_closure(a);
        CHECK(equal_language(prefix_closure(p), p));
        // pref(L) contains L
        CHECK(is_empty_language(combine(BoolOp::Difference, a, p)));
    }
}

TEST_CASE("prune_inf drops branches that die") {
    // pref((01)*001) -> pref((01)*)
    Fsa f;
    f.alphabet = AB;
    for (int i = 0; i < 5; ++i) f.add_state();
    // states 0,1: the (01)* loop; 2,3,4: the 001 tail
    f.add_edge(0, 0, 1);
    f.add_edge(1, 1, 0);
    f.add_edge(0, 0, 2); // nondeterministic split toward 001
    f.add_edge(2, 0, 3);
    f.add_edge(3, 1, 4);
    f.initial = {0};
    f.finals = {0, 1, 2, 3, 4};
    Fsa pf = prefix_closure(f);
    Fsa pi = prune_inf(pf);
    // Expected: prefixes of (01)^omega.
    Fsa expect;
    expect.alphabet = AB;
    expect.add_state();
    expect.add_state();
    expect.add_edge(0, 0, 1);
    expect.add_edge(1, 1, 0);
    expect.initial = {0};
    expect.finals = {0, 1};
    CHECK(equal_language(pi, expect));

    // Finite language: nothing extendable.
    CHECK(is_empty_language(prune_inf(Fsa::from_words(AB, {W({0, 1}), W({1, 1, 0})}))));
}

TEST_CASE("prune_inf: 0*1 -> 0* (definition oracle to length 10)") {
    Fsa f;
    f.alphabet = AB;
    f.add_state();
    f.add_state();
    f.add_edge(0, 0, 0);
    f.add_edge(0, 1, 1);
    f.initial = {0};
    f.finals = {1};
    Fsa pi = prune_inf(f);
    for (const Word& w : pi.enumerate(10))
        for (int c : w) CHECK(c == 0);
    CHECK(words_of(pi, 10).size() == 11);
}

TEST_CASE("lex extremal paths") {
    SUBCASE("Sigma*: min 0*, max 1*") {
        Fsa mn = lex_extremal(Fsa::sigma_star(AB), Extremal::Min);
        Fsa mx = lex_extremal(Fsa::sigma_star(AB), Extremal::Max);
        for (const Word& w : mn.enumerate(6))
            for (int c : w) CHECK(c == 0);
        for (const Word& w : mx.enumerate(6))
            for (int c : w) CHECK(c == 1);
        CHECK(words_of(mn, 6).size() == 7);
        CHECK(words_of(mx, 6).size() == 7);
    }
    SUBCASE("pref(1(00)*): min = max = pref(10*)") {
        Fsa f;
        f.alphabet = AB;
        f.add_state();
        f.add_state();
        f.add_state();
        f.add_edge(0, 1, 1);
        f.add_edge(1, 0, 2);
        f.add_edge(2, 0, 1);
        f.initial = {0};
        f.finals = {0, 1, 2};
        Fsa mn = lex_extremal(f, Extremal::Min);
        Fsa mx = lex_extremal(f, Extremal::Max);
        CHECK(equal_language(mn, mx));
        // Breadth-first extremal oracle: the length-n word is 1 0^(n-1).
        auto ws = words_of(mn, 5);
        CHECK(ws.count(W({})) == 1);
        CHECK(ws.count(W({1})) == 1);
        CHECK(ws.count(W({1, 0})) == 1);
        CHECK(ws.count(W({1, 0, 0, 0})) == 1);
        CHECK(ws.size() == 6);
    }
    SUBCASE("empty language throws") {
        CHECK_THROWS_AS(lex_extremal(Fsa::empty_language(AB), Extremal::Min),
                        empty_language_error);
    }
}

TEST_CASE("relations product: membership simulation") {
    Fsa e = relations_product(Fsa::empty_language(AB), Fsa::sigma_star(AB));
    CHECK(is_empty_language(e));

    Fsa full = relations_product(Fsa::sigma_star(AB), Fsa::sigma_star(AB));
    // ((0,0)(0,1)(1,0)^n) accepted for n <= 5: direct simulation of the
    // 3-state relations automaton.
    int s00 = 0, s01 = 1, s10 = 2; // pair symbol order (0,0),(0,1),(1,0),(1,1)
    for (int n = 0; n <= 5; ++n) {
        Word w{s00, s01};
        for (int i = 0; i < n; ++i) w.push_back(s10);
        CHECK(full.accepts(w));
    }
    // (0,1)(0,1) leaves the relations automaton.
    CHECK(!full.accepts(Word{s01, s01}));
}

TEST_CASE("decompose_ab") {
    SUBCASE("Sigma*: A = {eps}, B = empty") {
        auto d = decompose_ab(Fsa::sigma_star(AB));
        CHECK(d.has_full_state);
        CHECK(words_of(d.a, 4) == std::set<Word>{W({})});
        CHECK(is_empty_language(d.b));
    }
    SUBCASE("finite language: A = empty, B = L") {
        Fsa l = Fsa::from_words(AB, {W({0}), W({1, 1})});
        auto d = decompose_ab(l);
        CHECK(!d.has_full_state);
        CHECK(is_empty_language(d.a));
        CHECK(equal_language(d.b, l));
    }
    SUBCASE("0 Sigma* u {1}: A = {0}") {
        Fsa zero_sig = concat(Fsa::single_word(AB, W({0})), Fsa::sigma_star(AB));
        Fsa l = combine(BoolOp::Union, zero_sig, Fsa::single_word(AB, W({1})));
        auto d = decompose_ab(l);
        CHECK(d.has_full_state);
        CHECK(words_of(d.a, 5) == std::set<Word>{W({0})});
        CHECK(words_of(d.b, 5) == std::set<Word>{W({1})});
    }
}

TEST_CASE("residual decomposition: prefix-anchored language") {
    // di = pref(0 Sigma*); target Sigma*: W = {0}.
    Fsa zero_sig = prefix_closure(concat(Fsa::single_word(AB, W({0})), Fsa::sigma_star(AB)));
    std::map<std::string, Fsa> targets{{"full", Fsa::sigma_star(AB)}};
    auto ws = residual_decomposition(zero_sig, targets);
    REQUIRE(ws.count("full") == 1);
    CHECK(words_of(ws.at("full"), 4) == std::set<Word>{W({0})});

    // di already equal to a target: W = {eps}.
    auto ws2 = residual_decomposition(Fsa::sigma_star(AB), targets);
    CHECK(words_of(ws2.at("full"), 4) == std::set<Word>{W({})});
}

TEST_CASE("residual decomposition failure is reported") {
    // 0*: no residual equals Sigma*.
    Fsa zeros;
    zeros.alphabet = AB;
    zeros.add_state();
    zeros.add_edge(0, 0, 0);
    zeros.initial = {0};
    zeros.finals = {0};
    std::map<std::string, Fsa> targets{{"full", Fsa::sigma_star(AB)}};
    CHECK_THROWS_AS(residual_decomposition(zeros, targets), decomposition_error);
}

TEST_CASE("language predicates") {
    CHECK(is_finite_language(Fsa::from_words(AB, {W({0, 1}), W({1})})));
    CHECK(!is_finite_language(Fsa::sigma_star(AB)));
    CHECK(is_empty_language(Fsa::empty_language(AB)));
}

#pragma once

#include "mcf/cone.hpp"
#include "mcf/fsa.hpp"

namespace mcf {

// Directed graph labeled by d x d nonnegative integer matrices; at every
// state the out-edge cones m R+^d quasi-partition R+^d.
struct MGEdge {
    int from, to;
    RatMat m;
};
struct MatricesGraph {
    size_t dim = 0;
    std::vector<std::string> state_names;
    std::vector<MGEdge> edges;

    int num_states() const { return int(state_names.size()); }
    std::vector<int> out_edges(int s) const;
    std::vector<int> in_edges(int s) const;
    int find_state(const std::string& name) const;
};

// Directed graph labeled by letters 0..d-1, at most one out-edge per letter
// per state.
struct WLEdge {
    int from, to;
    int letter;
};
struct WinLoseGraph {
    size_t dim = 0;
    std::vector<std::string> state_names;
    std::vector<WLEdge> edges;

    int num_states() const { return int(state_names.size()); }
    std::vector<int> out_edges(int s) const;
    int edge_on(int s, int letter) const; // -1 when absent
};

// Edge i -j-> k becomes I + sum over the other out-letters l of E_{j,l}.
MatricesGraph winlose_to_matrices(const WinLoseGraph& g);

struct ValidationReport {
    bool ok = true;
    bool probabilistic = false; // d >= 4 sampling path
    std::string reason;
    int witness_state = -1;
};

// Exact per-state partition check at d <= 3 (cross-section polygons);
// randomized membership counting at d >= 4.
ValidationReport validate_cone_partition(const MatricesGraph& g,
                                         int samples = 200, uint64_t seed = 1);

// Structural validity of a win-lose graph (letter range, one edge per
// letter); throws std::invalid_argument on violation.
void validate_winlose(const WinLoseGraph& g);

enum class ExpansionStatus { Truncated, Periodic, BoundaryHit };
struct Expansion {
    ExpansionStatus status = ExpansionStatus::Truncated;
    std::vector<int> edge_seq;    // indices into g.edges
    size_t preperiod = 0, period = 0; // set when Periodic
    int final_state = -1;
};

// Iterate F(x, s) = (m^-1 x, t) with exact arithmetic; detects eventual
// periodicity by exact recurrence of the (projective point, state) pair.
// A point on a face shared by two out-cones stops with BoundaryHit.
Expansion expand_point(const MatricesGraph& g, const ExactVec& x, int s, int nmax);

// Domain language D_i: words of transposed matrices t(m1)...t(mn) such that
// mn ... m1 labels a path toward i. Tokens are the canonical encodings of the
// transposed matrices; `token_matrix` maps token -> matrix.
struct DomainLanguage {
    Fsa fsa;
    std::map<std::string, RatMat> token_matrix;
};
DomainLanguage domain_language(const MatricesGraph& g, int i);

// The alphabet shared by all domain languages of g (sorted token encodings
// of the transposed edge matrices).
std::vector<std::string> domain_alphabet(const MatricesGraph& g);

std::string to_dot(const MatricesGraph& g);
std::string to_dot(const WinLoseGraph& g);

} // namespace mcf

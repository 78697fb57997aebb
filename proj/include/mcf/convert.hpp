#pragma once

#include "mcf/domains.hpp"

namespace mcf {

// Piecewise-linear continued fraction algorithm: edges carry a move matrix m
// and a cone D (nonnegative matrix with d rows, m^-1 D nonnegative); per
// state the cones D R+^c(D) are Lebesgue-disjoint.
struct GCFEdge {
    int from, to;
    RatMat m;
    ConeMatrix cone;
};
struct GeneralCFGraph {
    size_t dim = 0;
    std::vector<std::string> state_names;
    std::vector<GCFEdge> edges;

    int num_states() const { return int(state_names.size()); }
    std::vector<int> out_edges(int s) const;
};

void validate_general(const GeneralCFGraph& g);

// Matrices graph whose states remember (original state, cone I); I is kept
// for the density pushforward.
struct AnnotatedMatricesGraph {
    MatricesGraph graph;
    std::vector<int> origin;          // state -> original state
    std::vector<ConeMatrix> charts;   // state -> I (square, normalized)
};

struct ConvertResult {
    bool ok = false;
    AnnotatedMatricesGraph out;
    std::string failure_reason; // "state budget exceeded", etc.
    bool hypothesis_holds = false; // the surjectivity hypothesis, checked at d <= 3
};

ConvertResult to_matrices_graph(const GeneralCFGraph& g, int max_states = 10000);

struct SemiconjugacyResult {
    bool ok = true;
    std::vector<Rat> witness_point;
    int witness_state = -1;
    int witness_step = -1;
};

// For random rational points and all k <= n, exact equality of
// F^k(phi(x,i,I)) and phi(G^k(x,i,I)).
SemiconjugacyResult semiconjugacy_check(const GeneralCFGraph& g,
                                        const AnnotatedMatricesGraph& out, int n, int samples,
                                        uint64_t seed);

// Piecewise density of the input algorithm: on each region of the common
// refinement of the charts, f_i(x) = sum over charts I containing x of
// |det I^-1| f_(i,I)(I^-1 x).
struct PiecewiseDensity {
    std::vector<ConeMatrix> regions;
    std::vector<std::vector<DensityExpr>> density; // [region][original state]
};
PiecewiseDensity pushforward_density(const GeneralCFGraph& g, const AnnotatedMatricesGraph& mg,
                                     const std::vector<DensityExpr>& f);

} // namespace mcf

#pragma once

#include "mcf/density.hpp"

namespace mcf {

struct infinite_decomposition_error : std::runtime_error {
    explicit infinite_decomposition_error(const std::string& w) : std::runtime_error(w) {}
};

// One simplicial-or-polyhedral piece of a domain, with the token word that
// produced it when it came from the extension step.
struct DomainPiece {
    ConeMatrix cone;
    std::vector<std::string> word; // domain-language tokens, may be empty
};

// A loop-parameterized family of pieces m_u m_v^n m_w . base, n >= n_start
// (returned instead of finite pieces when a W language is infinite, d = 2).
struct PieceFamily {
    RatMat mu, mv, mw;
    ConeMatrix base;
    int n_start = 0;
};

struct DomainAssignment {
    std::vector<std::vector<DomainPiece>> pieces;   // per state
    std::vector<std::vector<PieceFamily>> families; // per state, usually empty
    bool has_families() const {
        for (const auto& f : families)
            if (!f.empty()) return true;
        return false;
    }
};

struct MinimizeResult {
    MatricesGraph graph;
    std::vector<int> state_map; // original state -> minimized state
};

// Quotient of the graph seen as a deterministic automaton with every state
// final (states merge when their matrix-word languages agree).
MinimizeResult minimize_graph(const MatricesGraph& g);

struct DomainsResult {
    bool ok = false;
    DomainAssignment assignment;
    std::string failure_reason;
};

// The stabilization search for convex polyhedral domains (one cone per
// state). Failure is inconclusive, never a proof of non-existence.
DomainsResult polyhedral_domains(const MatricesGraph& g, int max_rounds = 50,
                                 int max_vectors = 64);

// Lift minimized domains to the original graph through the residual
// decomposition of the domain languages. Infinite W languages yield piece
// families at d = 2 and infinite_decomposition_error otherwise.
DomainAssignment extension_domains(const MatricesGraph& g, const MinimizeResult& minimized,
                                   const DomainAssignment& min_domains);

// Exact verification of D_i = disjoint-union over edges j -m-> i of tm D_j
// at d <= 3; randomized point checks at d >= 4.
ValidationReport verify_domains(const MatricesGraph& g, const DomainAssignment& d,
                                int samples = 200, uint64_t seed = 1);

// Full pipeline: minimize, search polyhedral domains, lift, verify.
DomainsResult compute_domains(const MatricesGraph& g, int max_rounds = 50, int max_vectors = 64);

// Density of each state from its domain pieces (families contribute series
// separately; see winlose2 for the d = 2 route).
std::vector<DensityExpr> domains_to_density(const MatricesGraph& g, const DomainAssignment& d,
                                            bool canonical = true);

} // namespace mcf

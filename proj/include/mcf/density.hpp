#pragma once

#include "mcf/cfgraph.hpp"

namespace mcf {

// Formal sum of terms c / prod_k (V_k | x). In canonical form the global
// 1/(d * d!) of the Veech formula is dropped, so a single simplex with
// primitive generator columns V and |det V| = D reads D / prod (V_k|x),
// matching the displayed densities. Exact form keeps the constant.
struct DensityTerm {
    ExactScalar coeff;
    std::vector<ExactVec> forms;
};
struct DensityExpr {
    size_t dim = 0;
    bool canonical = true;
    std::vector<DensityTerm> terms;

    bool is_zero() const { return terms.empty(); }
    ExactScalar eval(const ExactVec& x) const;
    std::string str() const; // x0..x{d-1} variables
};

// Canonicalize: normalize forms (folding scale into the coefficient), sort,
// merge identical form products.
DensityExpr normalize_density(DensityExpr f);

// Veech term of a simplicial cone: lambda({y in mR+^d : (y|x) <= 1}).
DensityExpr veech_term(const ConeMatrix& m, bool canonical = true);

// Sum of Veech terms over pieces (triangulating non-simplicial cones).
DensityExpr pieces_to_density(size_t dim, const std::vector<ConeMatrix>& pieces,
                              bool canonical = true);

// f(A x) as a DensityExpr (forms become tA V; no determinant factor).
DensityExpr substitute_linear(const DensityExpr& f, const RatMat& a);
DensityExpr scale_density(const DensityExpr& f, const ExactScalar& c);
DensityExpr add_density(const DensityExpr& f, const DensityExpr& g);

// Exact rational-function equality via evaluation on an integer grid larger
// than the cleared-denominator degree bound. All forms are nonnegative, so
// the grid {1..B+1}^d avoids every pole.
bool density_equal(const DensityExpr& f, const DensityExpr& g);

struct FunctionalEquationResult {
    bool ok = true;
    int witness_state = -1;
    ExactVec witness_point; // exact counterexample when !ok
};

// Certifies f_j(x) = sum over edges i -m-> j of |det m| f_i(m x).
FunctionalEquationResult check_functional_equation(const MatricesGraph& g,
                                                   const std::vector<DensityExpr>& f);

// Countable family of Veech terms: term(n) over the matrix m_u m_v^n m_w,
// n >= n_start. Terms decay quadratically (unipotent loop) or geometrically
// (expanding loop).
struct SeriesDensity {
    size_t dim = 2;
    bool canonical = true;
    RatMat mu, mv, mw;
    int n_start = 0;

    RatMat matrix_at(int n) const;
    DensityTerm term_at(int n) const;
    std::string str() const;
};

struct SeriesValue {
    Rat value;      // partial sum of the first n_terms terms
    Rat tail_bound; // rigorous bound on the omitted tail
};
SeriesValue eval_series(const SeriesDensity& s, const std::vector<Rat>& x, int n_terms);

} // namespace mcf

#pragma once

#include "mcf/convert.hpp"

namespace mcf {

// The worked examples: 1-state matrices graphs.
MatricesGraph cassaigne_matrices();
MatricesGraph poincare_matrices();
MatricesGraph reverse_matrices();
MatricesGraph dim1_example_matrices(); // one vertex, [[1,0],[1,2]] and [[1,1],[1,0]]
RatMat multiplicative_euclid_matrix(long n); // [[1,1],[n+1,n]]

// Two-state extension whose quotient is the Cassaigne graph.
MatricesGraph section31_example();

// Win-lose graphs.
WinLoseGraph fully_subtractive_winlose(size_t d);
WinLoseGraph cassaigne_winlose();        // 3-state slowdown of Cassaigne
WinLoseGraph nonrational_example_winlose(); // 4 states, two non-rational densities
WinLoseGraph worked_example_winlose();   // the 3-state boundary-computation example
WinLoseGraph cantor_example_winlose();   // Cantor set of boundary singularities
WinLoseGraph accumulation_example_winlose(); // mirror construction demo

// Piecewise-linear inputs for the conversion algorithm.
GeneralCFGraph brun_general();
GeneralCFGraph poincare_general();
GeneralCFGraph cassaigne_general();
GeneralCFGraph arnoux_rauzy_poincare_general();
GeneralCFGraph jacobi_perron_general();
GeneralCFGraph symmetric_jacobi_perron_general();

// CLI lookup: "cassaigne", "brun", "poincare", ... Throws parse_error on an
// unknown name. Kind is "matrices", "winlose", or "general".
struct CatalogueEntry {
    std::string kind;
    MatricesGraph matrices;
    WinLoseGraph winlose;
    GeneralCFGraph general;
};
CatalogueEntry catalogue_lookup(const std::string& name);
std::vector<std::string> catalogue_names();

} // namespace mcf

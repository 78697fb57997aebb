#pragma once

#include "mcf/matrix.hpp"

namespace mcf {

// Result of a limit-cone computation: the extremal directions (coordinate
// sum 1) of the closure of lim_n m^n (R+*)^d, or a reason it was not computed.
struct LimitCone {
    bool ok = false;
    std::vector<ExactVec> rays; // each normalized to coordinate sum 1
    std::string reason;         // set when !ok
};

// Cyclicity period p of the support digraph of m: lcm over strongly connected
// components of the gcd of their cycle lengths.
unsigned long cyclicity_period(const RatMat& m);

// Extremal rays (sum-normalized) of the closure of lim_n m^n (R+*)^d for a
// nonnegative matrix m. The computation passes to the cyclicity-adjusted
// power M = m^p, extracts the spectral radius lambda as the largest real
// root of the characteristic polynomial, forms the spectral projector P onto
// the generalized lambda-eigenspace from the minimal polynomial, and takes
// the last nonzero T = N^s P (N = M - lambda I). T is a nonnegative matrix
// whose column rays generate the limit cone.
LimitCone dominant_limit_cone(const RatMat& m);

} // namespace mcf

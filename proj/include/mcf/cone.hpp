#pragma once

#include "mcf/matrix.hpp"

namespace mcf {

// Canonical scaling of a ray in R+^d: primitive integer vector when all
// entries are rational, coordinate sum 1 otherwise.
ExactVec normalize_ray(const ExactVec& v);

// Exact feasibility of v in cone(gens): exists x >= 0 with G x = v.
// Phase-1 simplex with Bland's rule over the exact scalars.
bool in_cone(const ExactVec& v, const std::vector<ExactVec>& gens);

// Drop every generator that is a nonnegative combination of the others.
std::vector<ExactVec> extremal_reduce(std::vector<ExactVec> gens);

// Polyhedral cone in R+^d given by generator columns, normalized, sorted by
// canonical encoding and deduplicated.
struct ConeMatrix {
    size_t dim = 0;
    std::vector<ExactVec> gens;

    ConeMatrix() = default;
    ConeMatrix(size_t d, std::vector<ExactVec> g, bool reduce = true);
    static ConeMatrix from_int_cols(const std::vector<std::vector<long>>& cols);
    static ConeMatrix full(size_t d); // R+^d

    bool empty() const { return gens.empty(); }
    size_t count() const { return gens.size(); }
    bool is_simplicial() const { return gens.size() == dim; }
    // d x d matrix with the generators as columns (simplicial cones only).
    ExactMat matrix() const;
    std::string encode() const;
    bool operator==(const ConeMatrix& o) const { return encode() == o.encode(); }

    // Image under a linear map (d x d), generators re-normalized.
    ConeMatrix image(const ExactMat& m) const;
    // Fan triangulation from the canonically smallest generator; every piece
    // is simplicial. Requires dim <= 3 (section machinery).
    std::vector<ConeMatrix> triangulate() const;
    bool contains(const ExactVec& v) const { return in_cone(v, gens); }
};

// --- exact cross-section geometry -----------------------------------------
// d = 3: cones meet the plane x0+x1+x2 = 1 in convex polygons, handled in the
// affine chart (x0, x1). d = 2: segments on the line x0+x1 = 1 (chart x0).
// All predicates are exact.

struct SectionPoint {
    ExactScalar x, y;
};

using Polygon = std::vector<SectionPoint>; // convex, CCW, no duplicate vertices

Polygon convex_hull(std::vector<SectionPoint> pts);
ExactScalar polygon_area2(const Polygon& p); // twice the area, >= 0 for CCW
Polygon polygon_intersection(const Polygon& a, const Polygon& b);
bool point_in_polygon(const SectionPoint& p, const Polygon& poly);

// Cross-section of a cone: polygon for d = 3, segment (2-point polygon, or
// 1-point) for d = 2. Throws unsupported_error for d >= 4.
Polygon cone_section(const ConeMatrix& c);

struct PartitionReport {
    bool ok = true;
    std::string reason;
    int witness_piece_a = -1, witness_piece_b = -1;
};

// Exact check that the pieces partition the target cone up to measure zero:
// every piece contained in the target, pairwise intersections of measure
// zero, and section measures summing to the target's. dim <= 3.
PartitionReport cone_partition_check(const ConeMatrix& target,
                                     const std::vector<ConeMatrix>& pieces);

// Measure-zero overlap test for two cones (dim <= 3).
bool cones_overlap(const ConeMatrix& a, const ConeMatrix& b);

// Containment a subseteq b, exact, dim <= 3 (uses in_cone on generators).
bool cone_subset(const ConeMatrix& a, const ConeMatrix& b);

// Full-dimensionality of the section (dim d cone), exact, dim <= 3.
bool cone_full_dim(const ConeMatrix& c);

// Convex pieces partitioning a \ b (both convex, CCW).
std::vector<Polygon> polygon_difference(const Polygon& a, const Polygon& b);

// Exact cone intersection / rebuild from a section, dim <= 3.
ConeMatrix cone_intersect(const ConeMatrix& a, const ConeMatrix& b);
ConeMatrix cone_from_section(size_t dim, const Polygon& sec);

// Rational interior point of a full-dimensional cone (generator average).
ExactVec cone_interior_point(const ConeMatrix& c);

} // namespace mcf

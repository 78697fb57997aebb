#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mcf/eigen.hpp"
#include "mcf/cone.hpp"

using namespace mcf;

namespace {

Poly P(std::initializer_list<long> coeffs) { return Poly::from_ints(std::vector<long>(coeffs)); }

// Independent cofactor-expansion determinant used as the charpoly oracle.
Rat cofactor_det(const std::vector<std::vector<Rat>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    Rat acc(0);
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Rat>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Rat> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(row);
        }
        Rat term = m[0][j] * cofactor_det(minor);
        acc += (j % 2) ? -term : term;
    }
    return acc;
}

} // namespace

TEST_CASE("poly arithmetic and gcd") {
    Poly a = P({-2, 0, 1});  // x^2 - 2
    Poly b = P({-1, 1});     // x - 1
    CHECK((a * b).degree() == 3);
    auto [q, r] = a.divmod(b);
    CHECK(q == P({1, 1}));
    CHECK(r == P({-1}));
    CHECK(gcd(a * b, b * b) == b.monic());
    CHECK(squarefree_part(b * b * a) == (b * a).monic());
}

TEST_CASE("root isolation: x^2-2 isolates the two square roots") {
    Poly p = P({-2, 0, 1});
    auto ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == 2);
    // One sign change across each interval, one root apiece, ordered.
    for (const auto& iv : ivs) {
        CHECK(sgn(p.eval(iv.lo)) * sgn(p.eval(iv.hi)) < 0);
        CHECK(count_roots_in(p, iv.lo, iv.hi) == 1);
    }
    CHECK(ivs[0].hi <= ivs[1].lo);
    CHECK(ivs[0].hi <= 0);
    CHECK(ivs[1].lo >= 0);
}

TEST_CASE("root isolation: x^2+1 has none, x^2-x-1 has the golden pair") {
    CHECK(isolate_real_roots(P({1, 0, 1})).empty());
    auto ivs = isolate_real_roots(P({-1, -1, 1}));
    REQUIRE(ivs.size() == 2);
    auto phi = ExactScalar::make_root(P({-1, -1, 1}), ivs[1]);
    // phi = (1+sqrt(5))/2
    auto expect = ExactScalar::from_quad(1, 1, 2, 5);
    CHECK(phi == expect);
}

TEST_CASE("root isolation handles exact rational roots") {
    // (x-1)(x+1)(2x-3)
    Poly p = P({-1, 0, 1}) * P({-3, 2});
    auto ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == 3);
    auto rr = rational_roots(p);
    REQUIRE(rr.has_value());
    CHECK(rr->size() == 3);
    CHECK((*rr)[2] == make_rat(3, 2));
}

TEST_CASE("sturm count equals isolated interval count on random polynomials") {
    SplitMix64 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        int deg = 1 + int(rng.next_below(6));
        std::vector<Rat> c(size_t(deg) + 1);
        for (auto& v : c) v = Rat(long(rng.next_below(21)) - 10);
        c[size_t(deg)] = Rat(long(rng.next_below(9)) + 1);
        Poly p(std::move(c));
        CHECK(int(isolate_real_roots(p).size()) == count_real_roots(p));
    }
}

TEST_CASE("algebraic arithmetic round trips") {
    auto s2 = ExactScalar::sqrt_of(Rat(2));
    auto s3 = ExactScalar::sqrt_of(Rat(3));
    SUBCASE("same field") {
        auto a = s2 + ExactScalar(Rat(1));
        CHECK(((a + s2) - s2) == a);
        CHECK(((a * s2) / s2) == a);
        CHECK((s2 * s2) == ExactScalar(Rat(2))); // demotes
        CHECK((s2 * s2).is_rational());
    }
    SUBCASE("signs") {
        CHECK((s2 - ExactScalar(Rat(1))).sign() == 1);
        CHECK((s2 * s2 - ExactScalar(Rat(2))).sign() == 0);
        // 3 - 2*sqrt(2) > 0
        CHECK((ExactScalar(Rat(3)) - ExactScalar(Rat(2)) * s2).sign() == 1);
    }
    SUBCASE("mixed quadratic fields compose") {
        auto sum = s2 + s3;
        CHECK(sum.value_degree() == 4);
        CHECK(sum > s3);
        auto prod = s2 * s3;
        CHECK(prod == ExactScalar::sqrt_of(Rat(6)));
        // Quartic op quadratic is outside the supported tower.
        CHECK_THROWS_AS(sum * s3, unsupported_error);
    }
    SUBCASE("cross-field comparison") {
        auto phi = ExactScalar::from_quad(1, 1, 2, 5);
        CHECK(phi > s2);
        CHECK(s2 < phi);
        CHECK(phi.compare(phi) == 0);
    }
}

TEST_CASE("quadratic view printing") {
    auto v = ExactScalar::from_quad(1, -1, 3, 8); // (1 - 2*sqrt(2))/3
    auto qv = v.quad_view();
    REQUIRE(qv.has_value());
    CHECK(qv->str() == "(1-2*sqrt(2))/3");
    CHECK(ExactScalar(make_rat(-5, 3)).str() == "-5/3");
}

TEST_CASE("charpoly matches the cofactor oracle") {
    auto fib = RatMat::from_int_rows({{1, 1}, {1, 0}});
    CHECK(charpoly(fib) == P({-1, -1, 1}));
    CHECK(charpoly(RatMat::identity(3)) == P({-1, 1}) * P({-1, 1}) * P({-1, 1}));

    auto m0 = RatMat::from_int_rows({{0, 1, 0}, {1, 0, 0}, {0, 1, 1}});
    Poly expected = P({-1, 1}) * P({-1, 1}) * P({1, 1}); // (x-1)^2 (x+1)
    CHECK(charpoly(m0) == expected);
    // Cross-check a few evaluation points against det(xI - m).
    for (long t : {2, 3, 7}) {
        std::vector<std::vector<Rat>> a(3, std::vector<Rat>(3));
        for (size_t i = 0; i < 3; ++i)
            for (size_t j = 0; j < 3; ++j)
                a[i][j] = (i == j ? Rat(t) : Rat(0)) - m0(i, j);
        CHECK(charpoly(m0).eval(Rat(t)) == cofactor_det(a));
    }
}

TEST_CASE("minpoly of the Cassaigne loop square") {
    auto m0t = RatMat::from_int_rows({{0, 1, 0}, {1, 0, 1}, {0, 0, 1}});
    RatMat sq = m0t * m0t;
    // (x-1)^2
    CHECK(minpoly(sq) == P({1, -2, 1}));
    CHECK(minpoly(RatMat::identity(2)) == P({-1, 1}));
}

TEST_CASE("dominant limit cone: Cassaigne loop gives (1/2, 1/2, 0)") {
    auto m0 = RatMat::from_int_rows({{0, 1, 0}, {1, 0, 0}, {0, 1, 1}});
    auto lc = dominant_limit_cone(m0.transpose());
    REQUIRE(lc.ok);
    REQUIRE(lc.rays.size() == 1);
    CHECK(lc.rays[0][0] == ExactScalar(make_rat(1, 2)));
    CHECK(lc.rays[0][1] == ExactScalar(make_rat(1, 2)));
    CHECK(lc.rays[0][2] == ExactScalar(Rat(0)));
}

TEST_CASE("dominant limit cone: [[2,1],[1,1]] gives the golden ray") {
    auto m = RatMat::from_int_rows({{2, 1}, {1, 1}});
    auto lc = dominant_limit_cone(m);
    REQUIRE(lc.ok);
    REQUIRE(lc.rays.size() == 1);
    // Ray of (phi, 1): ratio of coordinates is phi.
    auto phi = ExactScalar::from_quad(1, 1, 2, 5);
    CHECK(lc.rays[0][0] / lc.rays[0][1] == phi);
}

TEST_CASE("dominant limit cone: identity fixes the cone") {
    auto lc = dominant_limit_cone(RatMat::identity(2));
    REQUIRE(lc.ok);
    REQUIRE(lc.rays.size() == 2);
}

TEST_CASE("eigenvector property of single-ray limit cones") {
    // m v = lambda v componentwise after normalization.
    auto m = RatMat::from_int_rows({{1, 1}, {1, 0}});
    auto lc = dominant_limit_cone(m);
    REQUIRE(lc.ok);
    REQUIRE(lc.rays.size() == 1);
    ExactVec v = lc.rays[0];
    ExactVec mv = to_exact(m).apply(v);
    // mv proportional to v: cross product vanishes.
    CHECK((mv[0] * v[1] - mv[1] * v[0]).is_zero());
}

TEST_CASE("cone membership and extremal reduction") {
    ExactVec e0{ExactScalar(1), ExactScalar(0), ExactScalar(0)};
    ExactVec e1{ExactScalar(0), ExactScalar(1), ExactScalar(0)};
    ExactVec e2{ExactScalar(0), ExactScalar(0), ExactScalar(1)};
    ExactVec ones{ExactScalar(1), ExactScalar(1), ExactScalar(1)};
    CHECK(in_cone(ones, {e0, e1, e2}));
    CHECK(!in_cone(e0, {e1, e2, ones}));
    auto red = extremal_reduce({e0, e1, e2, ones});
    CHECK(red.size() == 3);
}

TEST_CASE("cone partition check on the quadrant halves") {
    auto full = ConeMatrix::from_int_cols({{1, 0}, {0, 1}});
    auto lower = ConeMatrix::from_int_cols({{1, 0}, {1, 1}});
    auto upper = ConeMatrix::from_int_cols({{1, 1}, {0, 1}});
    CHECK(cone_partition_check(full, {lower, upper}).ok);
    CHECK(!cone_partition_check(full, {lower}).ok);
    CHECK(!cone_partition_check(full, {lower, upper, lower}).ok);
}

TEST_CASE("triangulation covers a square cone") {
    auto c = ConeMatrix::from_int_cols({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
    // (1,1,1) is interior, so the reduced cone is simplicial already.
    CHECK(c.count() == 3);
    auto wide = ConeMatrix::from_int_cols({{2, 1, 0}, {0, 1, 2}, {1, 0, 2}, {2, 0, 1}});
    auto tris = wide.triangulate();
    CHECK(tris.size() == wide.count() - 2);
    auto rep = cone_partition_check(wide, tris);
    CHECK(rep.ok);
}

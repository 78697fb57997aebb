#include "mcf/catalogue.hpp"

namespace mcf {

namespace {

RatMat M3(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<long>> r;
    for (auto& row : rows) r.emplace_back(row);
    return RatMat::from_int_rows(r);
}

ConeMatrix C(std::initializer_list<std::initializer_list<long>> cols) {
    std::vector<std::vector<long>> c;
    for (auto& col : cols) c.emplace_back(col);
    return ConeMatrix::from_int_cols(c);
}

} // namespace

MatricesGraph cassaigne_matrices() {
    MatricesGraph g;
    g.dim = 3;
    g.state_names = {"0"};
    g.edges.push_back({0, 0, M3({{0, 1, 0}, {1, 0, 0}, {0, 1, 1}})});
    g.edges.push_back({0, 0, M3({{1, 1, 0}, {0, 0, 1}, {0, 1, 0}})});
    return g;
}

MatricesGraph section31_example() {
    MatricesGraph g;
    g.dim = 3;
    g.state_names = {"0", "1"};
    RatMat m0 = M3({{0, 1, 0}, {1, 0, 0}, {0, 1, 1}});
    RatMat m1 = M3({{1, 1, 0}, {0, 0, 1}, {0, 1, 0}});
    g.edges.push_back({0, 0, m0});
    g.edges.push_back({0, 1, m1});
    g.edges.push_back({1, 1, m1});
    g.edges.push_back({1, 0, m0});
    return g;
}

MatricesGraph poincare_matrices() {
    MatricesGraph g;
    g.dim = 3;
    g.state_names = {"0"};
    g.edges.push_back({0, 0, M3({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}})});
    g.edges.push_back({0, 0, M3({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}})});
    g.edges.push_back({0, 0, M3({{1, 0, 0}, {1, 1, 1}, {1, 0, 1}})});
    g.edges.push_back({0, 0, M3({{1, 1, 0}, {0, 1, 0}, {1, 1, 1}})});
    g.edges.push_back({0, 0, M3({{1, 0, 1}, {1, 1, 1}, {0, 0, 1}})});
    g.edges.push_back({0, 0, M3({{1, 1, 1}, {0, 1, 0}, {0, 1, 1}})});
    return g;
}

MatricesGraph reverse_matrices() {
    MatricesGraph g;
    g.dim = 3;
    g.state_names = {"0"};
    g.edges.push_back({0, 0, M3({{1, 0, 0}, {0, 1, 0}, {1, 1, 1}})});
    g.edges.push_back({0, 0, M3({{1, 0, 0}, {1, 1, 1}, {0, 0, 1}})});
    g.edges.push_back({0, 0, M3({{1, 1, 1}, {0, 1, 0}, {0, 0, 1}})});
    g.edges.push_back({0, 0, M3({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})});
    return g;
}

MatricesGraph dim1_example_matrices() {
    MatricesGraph g;
    g.dim = 2;
    g.state_names = {"0"};
    g.edges.push_back({0, 0, RatMat::from_int_rows({{1, 0}, {1, 2}})});
    g.edges.push_back({0, 0, RatMat::from_int_rows({{1, 1}, {1, 0}})});
    return g;
}

RatMat multiplicative_euclid_matrix(long n) {
    return RatMat::from_int_rows({{1, 1}, {n + 1, n}});
}

WinLoseGraph fully_subtractive_winlose(size_t d) {
    WinLoseGraph g;
    g.dim = d;
    g.state_names = {"0"};
    for (size_t l = 0; l < d; ++l) g.edges.push_back({0, 0, int(l)});
    return g;
}

WinLoseGraph cassaigne_winlose() {
    // Three-state slowdown of the Cassaigne algorithm: from state i on
    // letter j, move to the remaining index k with {i,j,k} = {0,1,2}. This
    // is the unique three-state two-letter-per-state graph whose domain
    // equations are solved by the cones of the three displayed densities.
    WinLoseGraph g;
    g.dim = 3;
    g.state_names = {"0", "1", "2"};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            g.edges.push_back({i, 3 - i - j, j});
        }
    return g;
}

WinLoseGraph nonrational_example_winlose() {
    WinLoseGraph g;
    g.dim = 2;
    g.state_names = {"0", "1", "2", "3"};
    g.edges.push_back({0, 0, 0});
    g.edges.push_back({0, 3, 1});
    g.edges.push_back({1, 0, 0});
    g.edges.push_back({1, 2, 1});
    g.edges.push_back({2, 2, 1});
    g.edges.push_back({2, 1, 0});
    g.edges.push_back({3, 3, 1});
    g.edges.push_back({3, 1, 0});
    return g;
}

WinLoseGraph worked_example_winlose() {
    // State 0 carries the 0-loop; state 1 is the center, state 2 the right
    // state with the 1-loop.
    WinLoseGraph g;
    g.dim = 2;
    g.state_names = {"0", "1", "2"};
    g.edges.push_back({0, 0, 0});
    g.edges.push_back({0, 1, 1});
    g.edges.push_back({1, 0, 0});
    g.edges.push_back({1, 2, 1});
    g.edges.push_back({2, 1, 0});
    g.edges.push_back({2, 2, 1});
    return g;
}

WinLoseGraph cantor_example_winlose() {
    // A two-letter win-lose graph whose domain boundaries are Cantor sets;
    // reconstructed to satisfy the two-sided neighbor condition at every
    // state (the figure carrying the original is not part of this corpus).
    WinLoseGraph g;
    g.dim = 2;
    g.state_names = {"0", "1", "2"};
    g.edges.push_back({0, 1, 0});
    g.edges.push_back({0, 2, 1});
    g.edges.push_back({1, 2, 0});
    g.edges.push_back({1, 0, 1});
    g.edges.push_back({2, 0, 0});
    g.edges.push_back({2, 1, 1});
    return g;
}

WinLoseGraph accumulation_example_winlose() {
    // Mirror of pref(0*10*11 Sigma*): boundaries with infinitely many
    // accumulation points.
    WinLoseGraph g;
    g.dim = 2;
    g.state_names = {"0", "1", "2", "3"};
    g.edges.push_back({0, 0, 0});
    g.edges.push_back({0, 1, 1});
    g.edges.push_back({1, 1, 0});
    g.edges.push_back({1, 2, 1});
    g.edges.push_back({2, 3, 1});
    g.edges.push_back({3, 3, 0});
    g.edges.push_back({3, 3, 1});
    return g;
}

namespace {

GeneralCFGraph one_state(size_t dim) {
    GeneralCFGraph g;
    g.dim = dim;
    g.state_names = {"0"};
    return g;
}

// Sorted cone {x_a <= x_b <= x_c} for the permutation (a, b, c).
ConeMatrix sorted_cone(int a, int b, int c) {
    std::vector<std::vector<long>> cols(3, std::vector<long>(3, 0));
    cols[0][size_t(c)] = 1;
    cols[1][size_t(b)] = 1;
    cols[1][size_t(c)] = 1;
    cols[2][size_t(a)] = 1;
    cols[2][size_t(b)] = 1;
    cols[2][size_t(c)] = 1;
    return ConeMatrix::from_int_cols(cols);
}

std::vector<std::array<int, 3>> perms3() {
    return {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
}

} // namespace

GeneralCFGraph brun_general() {
    GeneralCFGraph g = one_state(3);
    for (auto [a, b, c] : perms3()) {
        RatMat m = RatMat::identity(3);
        m(size_t(c), size_t(b)) += 1; // subtract the 2nd greatest from the greatest
        g.edges.push_back({0, 0, m, sorted_cone(a, b, c)});
    }
    return g;
}

GeneralCFGraph poincare_general() {
    GeneralCFGraph g = one_state(3);
    for (auto [a, b, c] : perms3()) {
        RatMat m = RatMat::identity(3);
        m(size_t(b), size_t(a)) += 1;
        m(size_t(c), size_t(a)) += 1;
        m(size_t(c), size_t(b)) += 1;
        g.edges.push_back({0, 0, m, sorted_cone(a, b, c)});
    }
    return g;
}

GeneralCFGraph cassaigne_general() {
    GeneralCFGraph g = one_state(3);
    // x0 >= x2: (x0, x1, x2) -> (x0 - x2, x2, x1)
    g.edges.push_back({0, 0, M3({{1, 1, 0}, {0, 0, 1}, {0, 1, 0}}),
                       C({{1, 0, 0}, {0, 1, 0}, {1, 0, 1}})});
    // x2 >= x0: (x0, x1, x2) -> (x1, x0, x2 - x0)
    g.edges.push_back({0, 0, M3({{0, 1, 0}, {1, 0, 0}, {0, 1, 1}}),
                       C({{0, 1, 0}, {0, 0, 1}, {1, 0, 1}})});
    return g;
}

GeneralCFGraph arnoux_rauzy_poincare_general() {
    GeneralCFGraph g = one_state(3);
    // Arnoux-Rauzy pieces: x_j >= sum of the others.
    for (int j = 0; j < 3; ++j) {
        int k = (j + 1) % 3, l = (j + 2) % 3;
        RatMat m = RatMat::identity(3);
        m(size_t(j), size_t(k)) += 1;
        m(size_t(j), size_t(l)) += 1;
        std::vector<std::vector<long>> cols(3, std::vector<long>(3, 0));
        cols[0][size_t(j)] = 1;
        cols[1][size_t(j)] = 1;
        cols[1][size_t(k)] = 1;
        cols[2][size_t(j)] = 1;
        cols[2][size_t(l)] = 1;
        g.edges.push_back({0, 0, m, ConeMatrix::from_int_cols(cols)});
    }
    // Poincare pieces on the complement: sorted and c <= a + b.
    for (auto [a, b, c] : perms3()) {
        RatMat m = RatMat::identity(3);
        m(size_t(b), size_t(a)) += 1;
        m(size_t(c), size_t(a)) += 1;
        m(size_t(c), size_t(b)) += 1;
        std::vector<std::vector<long>> cols(3, std::vector<long>(3, 0));
        // vertices (1,1,1), (0,1,1)_sigma, (1,1,2)_sigma
        cols[0] = {1, 1, 1};
        cols[1][size_t(b)] = 1;
        cols[1][size_t(c)] = 1;
        cols[2][size_t(a)] = 1;
        cols[2][size_t(b)] = 1;
        cols[2][size_t(c)] = 2;
        g.edges.push_back({0, 0, m, ConeMatrix::from_int_cols(cols)});
    }
    return g;
}

GeneralCFGraph jacobi_perron_general() {
    // Additive slowdown: subtract x0 from the larger coordinates, then
    // rotate once both are below x0.
    GeneralCFGraph g = one_state(3);
    {
        RatMat m = RatMat::identity(3);
        m(1, 0) += 1;
        m(2, 0) += 1;
        g.edges.push_back({0, 0, m, C({{0, 1, 0}, {0, 0, 1}, {1, 1, 1}})}); // x0<=x1, x0<=x2
    }
    {
        RatMat m = RatMat::identity(3);
        m(1, 0) += 1;
        g.edges.push_back({0, 0, m, C({{0, 1, 0}, {1, 1, 0}, {1, 1, 1}})}); // x2<=x0<=x1
    }
    {
        RatMat m = RatMat::identity(3);
        m(2, 0) += 1;
        g.edges.push_back({0, 0, m, C({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}})}); // x1<=x0<=x2
    }
    {
        // rotate: (x0, x1, x2) -> (x1, x2, x0)
        RatMat m(3, 3);
        m(0, 2) = 1;
        m(1, 0) = 1;
        m(2, 1) = 1;
        g.edges.push_back({0, 0, m, C({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}})}); // x1,x2 <= x0
    }
    return g;
}

GeneralCFGraph symmetric_jacobi_perron_general() {
    // Subtract the first coordinate from each larger one for as long as it
    // fits, then bring the new smallest coordinate to the front. Two states
    // track which coordinate is being reduced; phase changes are folded into
    // the next move so that no edge carries the identity.
    GeneralCFGraph g = one_state(3);
    {
        // Both coordinates still exceed x0: subtract it from each.
        RatMat m = RatMat::identity(3);
        m(1, 0) += 1;
        m(2, 0) += 1;
        g.edges.push_back({0, 0, m, C({{0, 1, 0}, {0, 0, 1}, {1, 1, 1}})}); // x0 <= x1, x0 <= x2
    }
    {
        // Only x1 still exceeds x0.
        RatMat m = RatMat::identity(3);
        m(1, 0) += 1;
        g.edges.push_back({0, 0, m, C({{0, 1, 0}, {1, 1, 0}, {1, 1, 1}})}); // x2 <= x0 <= x1
    }
    {
        // Only x2 still exceeds x0.
        RatMat m = RatMat::identity(3);
        m(2, 0) += 1;
        g.edges.push_back({0, 0, m, C({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}})}); // x1 <= x0 <= x2
    }
    {
        // Both reduced: bring the new smallest coordinate to the front.
        RatMat swap01(3, 3);
        swap01(0, 1) = 1;
        swap01(1, 0) = 1;
        swap01(2, 2) = 1;
        g.edges.push_back({0, 0, swap01, C({{1, 0, 0}, {1, 0, 1}, {1, 1, 1}})}); // x1 <= x2 <= x0
        RatMat swap02(3, 3);
        swap02(0, 2) = 1;
        swap02(1, 1) = 1;
        swap02(2, 0) = 1;
        g.edges.push_back({0, 0, swap02, C({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}})}); // x2 <= x1 <= x0
    }
    return g;
}

CatalogueEntry catalogue_lookup(const std::string& name) {
    CatalogueEntry e;
    if (name == "cassaigne") { e.kind = "matrices"; e.matrices = cassaigne_matrices(); return e; }
    if (name == "cassaigne-extension") { e.kind = "matrices"; e.matrices = section31_example(); return e; }
    if (name == "poincare") { e.kind = "matrices"; e.matrices = poincare_matrices(); return e; }
    if (name == "reverse") { e.kind = "matrices"; e.matrices = reverse_matrices(); return e; }
    if (name == "dim1") { e.kind = "matrices"; e.matrices = dim1_example_matrices(); return e; }
    if (name == "cassaigne-winlose") { e.kind = "winlose"; e.winlose = cassaigne_winlose(); return e; }
    if (name == "fully-subtractive-2") { e.kind = "winlose"; e.winlose = fully_subtractive_winlose(2); return e; }
    if (name == "fully-subtractive-3") { e.kind = "winlose"; e.winlose = fully_subtractive_winlose(3); return e; }
    if (name == "nonrational") { e.kind = "winlose"; e.winlose = nonrational_example_winlose(); return e; }
    if (name == "boundary-example") { e.kind = "winlose"; e.winlose = worked_example_winlose(); return e; }
    if (name == "cantor") { e.kind = "winlose"; e.winlose = cantor_example_winlose(); return e; }
    if (name == "accumulation") { e.kind = "winlose"; e.winlose = accumulation_example_winlose(); return e; }
    if (name == "brun") { e.kind = "general"; e.general = brun_general(); return e; }
    if (name == "poincare-general") { e.kind = "general"; e.general = poincare_general(); return e; }
    if (name == "cassaigne-general") { e.kind = "general"; e.general = cassaigne_general(); return e; }
    if (name == "arp") { e.kind = "general"; e.general = arnoux_rauzy_poincare_general(); return e; }
    if (name == "jacobi-perron") { e.kind = "general"; e.general = jacobi_perron_general(); return e; }
    if (name == "symmetric-jacobi-perron") { e.kind = "general"; e.general = symmetric_jacobi_perron_general(); return e; }
    throw parse_error("unknown catalogue name: " + name);
}

std::vector<std::string> catalogue_names() {
    return {"cassaigne", "cassaigne-extension", "poincare", "reverse", "dim1",
            "cassaigne-winlose", "fully-subtractive-2", "fully-subtractive-3",
            "nonrational", "boundary-example", "cantor", "accumulation",
            "brun", "poincare-general", "cassaigne-general", "arp",
            "jacobi-perron", "symmetric-jacobi-perron"};
}

} // namespace mcf

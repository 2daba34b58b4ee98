#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "starlex/charpoly.hpp"
#include "starlex/quotient.hpp"
#include "starlex/spectra.hpp"
#include "starlex/verify.hpp"
#include "test_helpers.hpp"

using namespace starlex;

namespace {

const std::vector<Rat> kAlphas = {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4)};

struct Shape {
    int a, b, s;
};

const std::vector<Shape> kShapes = {{1, 0, 3}, {2, 1, 3}, {3, 0, 2}, {2, 0, 4},
                                    {1, 2, 2}, {3, 2, 3}, {2, 1, 1}, {4, 1, 2}};

Partition shape_partition(const Shape& sh) {
    std::vector<int> parts(static_cast<std::size_t>(sh.s), sh.a);
    if (sh.b > 0) parts.push_back(sh.b);
    return Partition::sorted(parts);
}

}  // namespace

TEST_CASE("check_equitable accepts a textbook equitable split of P_3") {
    const RatMatrix a = to_rational(adjacency_matrix(path_graph(3)));
    const EquitableCheck ok = check_equitable(a, {{0, 2}, {1}});
    CHECK(ok.equitable);
}

TEST_CASE("check_equitable checks ordered block pairs, not just upper ones") {
    // Edges 0-2 and 1-2 with cells {0,1}, {2,3}: every block pair (i, j)
    // with i <= j has constant row sums, so an upper-triangle-only checker
    // would wrongly accept. The (1, 0) block has row sums 2 and 0.
    WeightedGraph g(4);
    g.set_weight(0, 2, SqrtRat(1));
    g.set_weight(1, 2, SqrtRat(1));
    const EquitableCheck bad = check_equitable(to_rational(adjacency_matrix(g)), {{0, 1}, {2, 3}});
    CHECK_FALSE(bad.equitable);
    CHECK(bad.row_cell == 1);
    CHECK(bad.col_cell == 0);
    CHECK_FALSE(bad.describe().empty());

    // the same defect is caught regardless of cell listing order
    const EquitableCheck swapped = check_equitable(to_rational(adjacency_matrix(g)), {{2, 3}, {0, 1}});
    CHECK_FALSE(swapped.equitable);
}

TEST_CASE("check_equitable validates the cell cover") {
    const RatMatrix a = to_rational(adjacency_matrix(path_graph(3)));
    CHECK_THROWS_AS(check_equitable(a, {{0, 1}}), std::invalid_argument);          // missing index
    CHECK_THROWS_AS(check_equitable(a, {{0, 1}, {1, 2}}), std::invalid_argument);  // overlap
    CHECK_THROWS_AS(check_equitable(a, {{0, 1, 2}, {}}), std::invalid_argument);   // empty cell
    CHECK_THROWS_AS(check_equitable(a, {{0, 1, 3}}), std::invalid_argument);       // out of range
}

TEST_CASE("star quotient: K_1 with three unit paths") {
    const RootedGraph base(trivial_graph(), 0);
    const RootedGraph h = attach_paths(base, Partition({1, 1, 1}));
    const Cells cells = pendant_path_cells(h, 1, 0, 3);
    REQUIRE(cells.size() == 2);
    CHECK(cells[0].size() == 3);  // the three leaves
    CHECK(cells[1] == std::vector<int>{0});

    for (const Rat& alpha : kAlphas) {
        const QuotientPair qp = quotients(alpha_matrix(h.graph, alpha), cells);
        REQUIRE(qp.symmetric.rows() == 2);
        CHECK(qp.symmetric(0, 0) == SqrtRat(alpha));
        CHECK(qp.symmetric(1, 1) == SqrtRat(3 * alpha));
        CHECK(qp.symmetric(0, 1) == (1 - alpha) * SqrtRat::sqrt_of(3));
        CHECK(qp.symmetric(0, 1) == qp.symmetric(1, 0));
        // left quotient of the same cells is rational with matching row sums
        CHECK(qp.left(0, 0) == alpha);
        CHECK(qp.left(0, 1) == 1 - alpha);
        CHECK(qp.left(1, 0) == 3 * (1 - alpha));
    }
}

TEST_CASE("pendant path cells are equitable for every base in the family") {
    for (const auto& named : acceptance_family()) {
        for (const Shape& sh : kShapes) {
            const RootedGraph h = attach_paths(named.rooted, shape_partition(sh));
            const Cells cells = pendant_path_cells(h, sh.a, sh.b, sh.s);
            for (const Rat& alpha : kAlphas) {
                CAPTURE(named.name);
                CAPTURE(sh.a);
                CAPTURE(sh.b);
                CAPTURE(sh.s);
                const EquitableCheck chk = check_equitable(alpha_matrix(h.graph, alpha), cells);
                CHECK_MESSAGE(chk.equitable, chk.describe());
            }
        }
    }
}

TEST_CASE("left and symmetric quotients share their largest eigenvalue") {
    for (const auto& named : acceptance_family()) {
        for (const Shape& sh : kShapes) {
            const RootedGraph h = attach_paths(named.rooted, shape_partition(sh));
            const Cells cells = pendant_path_cells(h, sh.a, sh.b, sh.s);
            const QuotientPair qp = quotients(alpha_matrix(h.graph, Rat(1) / 2), cells);
            const double rho_s = radius_symmetric(to_dense(qp.symmetric)).value;
            const double rho_l = testing::poly_largest_root(char_poly(qp.left), rho_s);
            CAPTURE(named.name);
            CHECK(std::abs(rho_s - rho_l) <= 1e-12);
        }
    }
}

TEST_CASE("perfect-square cell ratios make the symmetric quotient rational") {
    // s = 4 unit paths on K_1: cell sizes 4 and 1, so sqrt factors are exact
    const RootedGraph base(trivial_graph(), 0);
    const RootedGraph h = attach_paths(base, Partition({1, 1, 1, 1}));
    const QuotientPair qp = quotients(alpha_matrix(h.graph, Rat(1) / 4), pendant_path_cells(h, 1, 0, 4));
    const RatMatrix qs = to_rational(qp.symmetric);  // throws if any radicand survived
    CHECK(char_poly(qs) == char_poly(qp.left));      // similar, so exactly equal charpolys
}

TEST_CASE("quotient radius equals the full-graph radius across the family") {
    int instances = 0;
    for (const auto& named : acceptance_family()) {
        for (const Shape& sh : kShapes) {
            const RootedGraph h = attach_paths(named.rooted, shape_partition(sh));
            const Cells cells = pendant_path_cells(h, sh.a, sh.b, sh.s);
            for (const Rat& alpha : {Rat(0), Rat(1, 2)}) {
                const QuotientPair qp = quotients(alpha_matrix(h.graph, alpha), cells);
                const double direct = radius_symmetric(to_dense(alpha_matrix(h.graph, alpha))).value;
                const double via = radius_symmetric(to_dense(qp.symmetric)).value;
                CAPTURE(named.name);
                CHECK(std::abs(direct - via) <= 1e-10);
                ++instances;
            }
        }
    }
    CHECK(instances == 5 * 8 * 2);
}

TEST_CASE("quotient_path structure") {
    const WeightedGraph p = quotient_path(3, 2, 5);
    REQUIRE(p.order() == 6);
    // unit path except the sqrt(s) edge entering the coalescing vertex
    CHECK(p.weight(0, 1) == SqrtRat(1));
    CHECK(p.weight(1, 2) == SqrtRat(1));
    CHECK(p.weight(2, 3) == SqrtRat::sqrt_of(5));
    CHECK(p.weight(3, 4) == SqrtRat(1));
    CHECK(p.weight(4, 5) == SqrtRat(1));
    const RatMatrix d = degree_matrix(p);
    CHECK(d(0, 0) == 1);
    for (int i = 1; i < 5; ++i) CHECK(d(i, i) == 2);
    CHECK(d(5, 5) == 1);

    CHECK(quotient_path(1, 0, 2).order() == 2);
    CHECK_THROWS_AS(quotient_path(0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(quotient_path(2, 1, 0), std::invalid_argument);
}

TEST_CASE("root_bumped_matrix raises only the root degree") {
    const RootedGraph base(cycle_graph(3), 0);
    const Rat alpha = Rat(1) / 3;
    const RatMatrix m = root_bumped_matrix(base, alpha, 3);
    CHECK(m(0, 0) == Rat(4) / 3);  // alpha * (2 + s - 1)
    CHECK(m(1, 1) == Rat(2) / 3);
    CHECK(m(0, 1) == Rat(2) / 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(m(i, j) == m(j, i));
}

TEST_CASE("build_quotient_graph equals the matrix quotient entry-exactly") {
    for (const auto& named : acceptance_family()) {
        for (const Shape& sh : kShapes) {
            const RootedGraph h = attach_paths(named.rooted, shape_partition(sh));
            for (const Rat& alpha : kAlphas) {
                const QuotientPair qp =
                    quotients(alpha_matrix(h.graph, alpha), pendant_path_cells(h, sh.a, sh.b, sh.s));
                const RootedGraph built = build_quotient_graph(named.rooted, alpha, sh.a, sh.b, sh.s);
                const WeightMatrix got = adjacency_matrix(built.graph);
                const auto vmap =
                    quotient_vertex_map(named.rooted.graph.order(), named.rooted.root, sh.a, sh.b, sh.s);
                REQUIRE(static_cast<int>(vmap.size()) == qp.symmetric.rows());
                REQUIRE(got.rows() == qp.symmetric.rows());
                for (int i = 0; i < got.rows(); ++i)
                    for (int j = 0; j < got.cols(); ++j) {
                        CAPTURE(named.name);
                        CAPTURE(i);
                        CAPTURE(j);
                        CHECK(qp.symmetric(i, j) == got(vmap[i], vmap[j]));
                    }
            }
        }
    }
}

TEST_CASE("pendant_path_cells validates the graph shape") {
    const RootedGraph base(cycle_graph(3), 0);
    const RootedGraph h = attach_paths(base, Partition({1, 2, 2, 2}));
    CHECK_THROWS_AS(pendant_path_cells(h, 3, 1, 3), std::invalid_argument);  // wrong span lengths
    CHECK_THROWS_AS(pendant_path_cells(h, 2, 1, 2), std::invalid_argument);  // wrong multiplicity
    const RootedGraph plain(cycle_graph(3), 0);
    CHECK_THROWS_AS(pendant_path_cells(plain, 1, 0, 1), std::invalid_argument);  // no pendant vertices
}

TEST_CASE("quotients rejects non-equitable cells") {
    WeightedGraph g(4);
    g.set_weight(0, 2, SqrtRat(1));
    g.set_weight(1, 2, SqrtRat(1));
    CHECK_THROWS_AS(quotients(to_rational(adjacency_matrix(g)), {{0, 1}, {2, 3}}),
                    std::invalid_argument);
}

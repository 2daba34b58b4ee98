#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "starlex/verify.hpp"
#include "test_helpers.hpp"

using namespace starlex;

namespace {

const Tolerances kTol;

NamedRootedGraph family_member(const char* name) {
    for (auto& g : acceptance_family())
        if (g.name == name) return g;
    throw std::logic_error("unknown family member");
}

}  // namespace

TEST_CASE("builtin_graph covers the documented names and rejects others") {
    CHECK(builtin_graph("k1").order() == 1);
    CHECK(builtin_graph("p2").order() == 2);
    CHECK(builtin_graph("p9").order() == 9);
    CHECK(builtin_graph("c3").order() == 3);
    CHECK(builtin_graph("c9").order() == 9);
    const WeightedGraph k4e = builtin_graph("k4e");
    CHECK(k4e.order() == 4);
    CHECK(k4e.edges().size() == 5);
    CHECK(k4e.degree(0) == 3);  // default root has full degree

    CHECK_THROWS_AS(builtin_graph("p1"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_graph("p10"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_graph("c2"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_graph("k2"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_graph("p3x"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_graph(""), std::invalid_argument);
}

TEST_CASE("acceptance_family fixes the five bases with their roots") {
    const auto family = acceptance_family();
    REQUIRE(family.size() == 5);
    CHECK(family[0].name == "k1");
    CHECK(family[1].name == "p3-end");
    CHECK(family[1].rooted.root == 0);
    CHECK(family[2].name == "p3-center");
    CHECK(family[2].rooted.root == 1);
    CHECK(family[3].name == "c3");
    CHECK(family[4].name == "k4e");
    CHECK(family[4].rooted.graph.degree(family[4].rooted.root) == 3);
}

TEST_CASE("pendant_shape recognizes quotient-eligible partitions") {
    const auto shape = [](std::initializer_list<int> parts) {
        return pendant_shape(Partition::sorted(parts));
    };
    auto s = shape({2, 2, 2, 1});
    REQUIRE(s.has_value());
    CHECK(s->a == 2);
    CHECK(s->b == 1);
    CHECK(s->s == 3);

    s = shape({3, 3});
    REQUIRE(s.has_value());
    CHECK(s->a == 3);
    CHECK(s->b == 0);
    CHECK(s->s == 2);

    s = shape({5});
    REQUIRE(s.has_value());
    CHECK(s->a == 5);
    CHECK(s->b == 0);
    CHECK(s->s == 1);

    s = shape({1, 1, 4});  // the lone large part is the stray one
    REQUIRE(s.has_value());
    CHECK(s->a == 1);
    CHECK(s->b == 4);
    CHECK(s->s == 2);

    CHECK_FALSE(shape({1, 2, 3}).has_value());
    CHECK_FALSE(shape({1, 1, 2, 2}).has_value());
}

TEST_CASE("rebalance_growth_margin closed form") {
    CHECK(rebalance_growth_margin(7, 2) == 2);   // q=3, r=1: (2)(1) + 1 - 1
    CHECK(rebalance_growth_margin(9, 3) == 4);   // q=3, r=0: (2)(2) + 0 - 0
    CHECK(rebalance_growth_margin(5, 5) == 0);
    CHECK(rebalance_growth_margin(5, 1) == 0);
    for (int n = 1; n <= 30; ++n)
        for (int k = 1; k <= n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(rebalance_growth_margin(n, k) >= 0);
        }
    CHECK_THROWS_AS(rebalance_growth_margin(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(rebalance_growth_margin(3, 4), std::invalid_argument);
}

TEST_CASE("cross_radius pairs the two solvers") {
    const DenseMatrix star = to_dense(adjacency_matrix(starlike_tree(Partition({1, 1, 1})).graph));
    const CrossRadius r = cross_radius(star, kTol);
    CHECK(r.ok);
    CHECK(r.value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(r.gap <= kTol.cross_solver);
}

TEST_CASE("shortlex ordering on the trivial base ties exactly on short partitions") {
    const auto report = verify_shortlex_ordering(family_member("k1"), 4, Rat(0), kTol);
    CHECK(report.pass);
    REQUIRE(report.items.size() == 5);
    // [4], [1,3], [2,2] are all P_5: one tie class, then strict growth
    CHECK(report.items[0].group == 1);
    CHECK(report.items[1].group == 1);
    CHECK(report.items[2].group == 1);
    CHECK(report.items[3].group == 2);
    CHECK(report.items[4].group == 3);
    CHECK(report.items[0].primary == doctest::Approx(testing::path_radius(5)).epsilon(1e-12));
    CHECK(report.items[4].primary == doctest::Approx(2.0).epsilon(1e-12));  // the star K_{1,4}
    for (const auto& [key, value] : report.params)
        if (key == "tie_classes") CHECK(value == "3");
}

TEST_CASE("shortlex ordering is fully strict on a nontrivial base") {
    const auto report = verify_shortlex_ordering(family_member("c3"), 5, Rat(1) / 2, kTol);
    CHECK(report.pass);
    REQUIRE(report.items.size() == 7);
    for (std::size_t i = 0; i < report.items.size(); ++i)
        CHECK(report.items[i].group == static_cast<int>(i) + 1);
    for (std::size_t i = 0; i + 1 < report.items.size(); ++i)
        CHECK(report.items[i].margin > kTol.strict_gap);
}

TEST_CASE("shortlex ordering attaches quotient radii where the shape applies") {
    const auto report = verify_shortlex_ordering(family_member("p3-center"), 6, Rat(1) / 4, kTol);
    CHECK(report.pass);
    int with_quotient = 0;
    for (const auto& item : report.items)
        if (!std::isnan(item.secondary)) {
            ++with_quotient;
            CHECK(std::abs(item.secondary - item.primary) <= kTol.quotient_agree);
        }
    // partitions of 6 with at most one distinct repeated part value
    CHECK(with_quotient == 9);
    for (const auto& [key, value] : report.params)
        if (key == "quotient_instances") CHECK(value == "9");
}

TEST_CASE("verify_shortlex_ordering validates input") {
    CHECK_THROWS_AS(verify_shortlex_ordering(family_member("k1"), 0, Rat(0), kTol),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_shortlex_ordering(family_member("k1"), 3, Rat(1), kTol),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_shortlex_ordering(family_member("k1"), 3, Rat(-1) / 2, kTol),
                    std::invalid_argument);
}

TEST_CASE("path rebalance: mirror parameters tie only on the trivial base at alpha 0") {
    // (4,0) -> (1,3) with s = 2 is the mirror shape: exact tie at alpha = 0
    auto tie = verify_path_rebalance(family_member("k1"), 4, 0, 1, 3, 2, Rat(0), kTol);
    CHECK(tie.pass);
    CHECK(std::abs(tie.items[0].margin) <= kTol.tie_gap);

    // same parameters at alpha = 1/4: strictly ordered
    auto strict = verify_path_rebalance(family_member("k1"), 4, 0, 1, 3, 2, Rat(1) / 4, kTol);
    CHECK(strict.pass);
    CHECK(strict.items[0].margin > 1e-6);

    // same parameters on a nontrivial base: strict even at alpha = 0
    auto based = verify_path_rebalance(family_member("c3"), 4, 0, 1, 3, 2, Rat(0), kTol);
    CHECK(based.pass);
    CHECK(based.items[0].margin > kTol.strict_gap);
}

TEST_CASE("path rebalance: non-mirror parameters are strict even at alpha 0 on K_1") {
    // (3,0) vs (2,1) with s = 2: S(3,3) against S(1,2,2); the closed forms
    // are 2 cos(pi/8) and sqrt(2 + sqrt(3))
    const auto report = verify_path_rebalance(family_member("k1"), 3, 0, 2, 1, 2, Rat(0), kTol);
    CHECK(report.pass);
    CHECK(report.items[0].secondary == doctest::Approx(2.0 * std::cos(M_PI / 8)).epsilon(1e-12));
    CHECK(report.items[0].primary ==
          doctest::Approx(std::sqrt(2.0 + std::sqrt(3.0))).epsilon(1e-12));
    CHECK(report.items[0].margin > kTol.strict_gap);
}

TEST_CASE("path rebalance: single path ties at every alpha on the trivial base") {
    for (const Rat& alpha : {Rat(0), Rat(1, 4), Rat(1, 2), Rat(3, 4)}) {
        const auto report = verify_path_rebalance(family_member("k1"), 4, 1, 3, 2, 1, alpha, kTol);
        CAPTURE(pretty_string(alpha));
        CHECK(report.pass);
        CHECK(std::abs(report.items[0].margin) <= kTol.tie_gap);
    }
}

TEST_CASE("verify_path_rebalance validates parameters") {
    const auto g = family_member("k1");
    CHECK_THROWS_AS(verify_path_rebalance(g, 4, 0, 1, 2, 2, Rat(0), kTol), std::invalid_argument);
    CHECK_THROWS_AS(verify_path_rebalance(g, 3, 1, 4, 0, 2, Rat(0), kTol), std::invalid_argument);
    CHECK_THROWS_AS(verify_path_rebalance(g, 4, 0, 1, 3, 0, Rat(0), kTol), std::invalid_argument);
    CHECK_THROWS_AS(verify_path_rebalance(g, 4, 0, 1, 3, 2, Rat(1), kTol), std::invalid_argument);
}

TEST_CASE("pair rebalance strictly prefers the balanced pair") {
    for (const char* name : {"p3-end", "p3-center", "c3", "k4e"}) {
        for (const Rat& alpha : {Rat(0), Rat(1, 2)}) {
            const auto report = verify_pair_rebalance(family_member(name), 3, 2, alpha, kTol);
            CAPTURE(name);
            CHECK(report.pass);
            CHECK(report.items[0].margin > kTol.strict_gap);
        }
    }
    CHECK_THROWS_AS(verify_pair_rebalance(family_member("k1"), 3, 2, Rat(0), kTol),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_pair_rebalance(family_member("c3"), 2, 3, Rat(0), kTol),
                    std::invalid_argument);
}

TEST_CASE("successor chains hold for every consecutive pair at n = 6 on c3") {
    const auto parts = enumerate_partitions(6);
    const auto g = family_member("c3");
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
        const auto report = verify_successor_chain(parts[i], parts[i + 1], g, Rat(1) / 2, kTol);
        CAPTURE(parts[i].str());
        CAPTURE(parts[i + 1].str());
        CHECK_MESSAGE(report.pass, report.to_json().dump());
    }
}

TEST_CASE("successor chains on the trivial base allow only the path ties") {
    const auto parts = enumerate_partitions(5);
    const auto g = family_member("k1");
    for (const Rat& alpha : {Rat(0), Rat(1, 2)}) {
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            const auto report = verify_successor_chain(parts[i], parts[i + 1], g, alpha, kTol);
            CAPTURE(parts[i].str());
            CHECK_MESSAGE(report.pass, report.to_json().dump());
        }
    }
}

TEST_CASE("verify_successor_chain rejects non-consecutive pairs") {
    CHECK_THROWS_AS(verify_successor_chain(Partition({1, 1, 4}), Partition({2, 2, 2}),
                                           family_member("c3"), Rat(0), kTol),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_successor_chain(Partition({6}), Partition({3, 3}), family_member("c3"),
                                           Rat(0), kTol),
                    std::invalid_argument);
}

TEST_CASE("worked example verifies at rational alpha values including zero") {
    for (const Rat& alpha : {Rat(0), Rat(1, 3), Rat(1, 2), Rat(3, 4)}) {
        const auto report = verify_worked_example(alpha, kTol);
        CAPTURE(pretty_string(alpha));
        CHECK_MESSAGE(report.pass, report.to_json().dump());
        CHECK(report.items.size() == 8);
    }
    CHECK_THROWS_AS(verify_worked_example(Rat(1), kTol), std::invalid_argument);
}

TEST_CASE("identity suites pass at reduced sizes") {
    const auto reports = run_identity_suites(8, 77);
    REQUIRE(reports.size() == 8);
    for (const auto& report : reports) {
        CAPTURE(report.claim);
        CHECK_MESSAGE(report.pass, report.to_json().dump());
    }
}

TEST_CASE("report serialization shapes") {
    const auto report = verify_shortlex_ordering(family_member("k1"), 3, Rat(0), kTol);

    const auto j = report.to_json();
    CHECK(j["claim"] == "shortlex-ordering");
    CHECK(j["verdict"] == "pass");
    CHECK(j["params"]["graph"] == "k1");
    CHECK(j["items"].size() == 3);
    CHECK(j.contains("generated_at"));
    CHECK_FALSE(j.contains("elapsed_seconds"));  // kept out for byte-stable goldens

    std::ostringstream csv;
    report.write_csv(csv);
    std::istringstream lines(csv.str());
    std::string header;
    std::getline(lines, header);
    CHECK(header == "claim,label,primary,secondary,margin,group,pass,note");

    std::ostringstream order;
    write_order_csv(report, order);
    std::istringstream order_lines(order.str());
    std::getline(order_lines, header);
    CHECK(header == "partition,rho_direct,rho_quotient,rank,tie_class,margin_to_next");
    int rows = 0;
    std::string line;
    while (std::getline(order_lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 3);
}

TEST_CASE("standard_alphas is the pinned grid") {
    const auto alphas = standard_alphas();
    REQUIRE(alphas.size() == 4);
    CHECK(alphas[0] == Rat(0));
    CHECK(alphas[1] == Rat(1) / 4);
    CHECK(alphas[2] == Rat(1) / 2);
    CHECK(alphas[3] == Rat(3) / 4);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "starlex/partition.hpp"
#include "test_helpers.hpp"

using namespace starlex;

TEST_CASE("Partition construction and accessors") {
    const Partition p({1, 2, 2, 5});
    CHECK(p.length() == 4);
    CHECK(p.sum() == 10);
    CHECK(p[0] == 1);
    CHECK(p.last() == 5);
    CHECK(p.str() == "[1,2,2,5]");

    CHECK(Partition::sorted({3, 1, 2}).parts() == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(Partition({2, 1}), std::invalid_argument);   // not nondecreasing
    CHECK_THROWS_AS(Partition({0, 1}), std::invalid_argument);   // nonpositive part
    CHECK_THROWS_AS(Partition({}), std::invalid_argument);       // empty
}

TEST_CASE("Partition::parse round-trips str() and rejects junk") {
    CHECK(Partition::parse("[1,2,2,5]").parts() == std::vector<int>{1, 2, 2, 5});
    CHECK(Partition::parse(Partition({1, 1, 3}).str()).str() == "[1,1,3]");
    CHECK_THROWS_AS(Partition::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[1,x]"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("[2,1]"), std::invalid_argument);  // not nondecreasing
}

TEST_CASE("enumerate_partitions counts match the pentagonal-number recurrence") {
    const auto counts = testing::partition_counts(30);
    for (int n = 1; n <= 30; ++n) {
        CAPTURE(n);
        CHECK(static_cast<long>(enumerate_partitions(n).size()) == counts[n]);
    }
    CHECK_THROWS_AS(enumerate_partitions(0), std::invalid_argument);
}

TEST_CASE("enumerate_partitions for n = 5 lists the exact shortlex sequence") {
    const auto parts = enumerate_partitions(5);
    const std::vector<std::vector<int>> expected = {
        {5}, {1, 4}, {2, 3}, {1, 1, 3}, {1, 2, 2}, {1, 1, 1, 2}, {1, 1, 1, 1, 1}};
    REQUIRE(parts.size() == expected.size());
    for (std::size_t i = 0; i < parts.size(); ++i) CHECK(parts[i].parts() == expected[i]);
}

TEST_CASE("enumeration is strictly increasing under shortlex_cmp") {
    for (int n = 1; n <= 12; ++n) {
        const auto parts = enumerate_partitions(n);
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            CAPTURE(n);
            CAPTURE(parts[i].str());
            CHECK(shortlex_cmp(parts[i], parts[i + 1]) == std::strong_ordering::less);
            CHECK(shortlex_cmp(parts[i + 1], parts[i]) == std::strong_ordering::greater);
        }
        for (const auto& p : parts) CHECK(shortlex_cmp(p, p) == std::strong_ordering::equal);
    }
}

TEST_CASE("shortlex_cmp compares length before parts") {
    CHECK(shortlex_cmp(Partition({9}), Partition({1, 1})) == std::strong_ordering::less);
    CHECK(shortlex_cmp(Partition({1, 4}), Partition({2, 3})) == std::strong_ordering::less);
    CHECK(shortlex_cmp(Partition({2, 2}), Partition({1, 9})) == std::strong_ordering::greater);
}

TEST_CASE("shortlex_cmp is a total order on random triples") {
    std::vector<Partition> pool;
    for (int n = 4; n <= 8; ++n)
        for (const auto& p : enumerate_partitions(n)) pool.push_back(p);

    std::mt19937 gen(42);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        const Partition& a = pool[pick(gen)];
        const Partition& b = pool[pick(gen)];
        const Partition& c = pool[pick(gen)];
        const auto ab = shortlex_cmp(a, b);
        const auto ba = shortlex_cmp(b, a);
        const auto bc = shortlex_cmp(b, c);
        const auto ac = shortlex_cmp(a, c);

        // trichotomy: exactly one relation, equality iff identical parts
        CHECK((ab == std::strong_ordering::equal) == (a.parts() == b.parts()));
        // antisymmetry
        if (ab == std::strong_ordering::less) CHECK(ba == std::strong_ordering::greater);
        if (ab == std::strong_ordering::greater) CHECK(ba == std::strong_ordering::less);
        // transitivity
        if (ab != std::strong_ordering::greater && bc != std::strong_ordering::greater)
            CHECK(ac != std::strong_ordering::greater);
    }
}

TEST_CASE("classify_consecutive recognizes the documented pivot example") {
    const ConsecutiveClass cls = classify_consecutive(Partition({1, 1, 3}), Partition({1, 2, 2}));
    CHECK(cls.kind == StepKind::pivot_step);
    CHECK(cls.pivot == 2);  // b_3 = 3 + (1 - 1 - 1) = 2
}

TEST_CASE("classify_consecutive accepts exactly the adjacent pairs") {
    for (int n = 2; n <= 10; ++n) {
        const auto parts = enumerate_partitions(n);
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            CAPTURE(parts[i].str());
            CAPTURE(parts[i + 1].str());
            const ConsecutiveClass cls = classify_consecutive(parts[i], parts[i + 1]);
            CHECK(cls.kind != StepKind::not_consecutive);
            if (parts[i].length() == parts[i + 1].length())
                CHECK(cls.kind == StepKind::pivot_step);
            else
                CHECK(cls.kind == StepKind::length_step);
        }
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = 0; j < parts.size(); ++j) {
                if (j == i + 1) continue;
                CAPTURE(parts[i].str());
                CAPTURE(parts[j].str());
                CHECK(classify_consecutive(parts[i], parts[j]).kind == StepKind::not_consecutive);
            }
    }
}

TEST_CASE("classify_consecutive rejects a non-maximal pivot rebalance") {
    // [2,2,2] is a valid pivot-1 completion of [1,1,4], but the true
    // successor [1,2,3] uses the larger pivot, so this pair is not adjacent.
    CHECK(classify_consecutive(Partition({1, 1, 4}), Partition({2, 2, 2})).kind ==
          StepKind::not_consecutive);
    CHECK(classify_consecutive(Partition({1, 1, 4}), Partition({1, 2, 3})).kind ==
          StepKind::pivot_step);
    CHECK(classify_consecutive(Partition({1, 2, 3}), Partition({2, 2, 2})).kind ==
          StepKind::pivot_step);
}

TEST_CASE("classify_consecutive throws on different sums") {
    CHECK_THROWS_AS(classify_consecutive(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("length steps connect the balanced maximum to the all-ones minimum") {
    const ConsecutiveClass cls = classify_consecutive(Partition({3, 4}), Partition({1, 1, 5}));
    CHECK(cls.kind == StepKind::length_step);
    CHECK(classify_consecutive(Partition({2, 5}), Partition({1, 1, 5})).kind ==
          StepKind::not_consecutive);  // predecessor not balanced
}

TEST_CASE("last_part_bound_holds on every pivot pair through n = 12") {
    for (int n = 2; n <= 12; ++n) {
        const auto parts = enumerate_partitions(n);
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            const ConsecutiveClass cls = classify_consecutive(parts[i], parts[i + 1]);
            if (cls.kind != StepKind::pivot_step) continue;
            CAPTURE(parts[i].str());
            CHECK(last_part_bound_holds(parts[i], parts[i + 1], cls.pivot));
        }
    }
    CHECK_THROWS_AS(last_part_bound_holds(Partition({2, 2}), Partition({1, 1, 2}), 1),
                    std::invalid_argument);
}

TEST_CASE("concat and repeat build part lists") {
    CHECK(concat({1, 2}, {3}) == std::vector<int>{1, 2, 3});
    CHECK(repeat({2}, 3) == std::vector<int>{2, 2, 2});
    CHECK(repeat({1, 2}, 0).empty());
    CHECK_THROWS_AS(repeat({1}, -1), std::invalid_argument);
}

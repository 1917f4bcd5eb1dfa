#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cslab/partition.hpp"
#include "oracles.hpp"

using namespace cslab;

TEST_CASE("enumerate_partitions lists partitions in reverse lexicographic order") {
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    const std::vector<Partition> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(enumerate_partitions(4) == four);
    CHECK(enumerate_partitions(10).size() == 42);
}

TEST_CASE("partition counts match the pentagonal recurrence") {
    const auto p = oracle::partition_numbers(40);
    for (int n = 0; n <= 40; ++n)
        CHECK(partition_count(n) == p[static_cast<std::size_t>(n)]);
    for (int n = 0; n <= 15; ++n)
        CHECK(Integer(static_cast<long>(enumerate_partitions(n).size())) == p[static_cast<std::size_t>(n)]);
}

TEST_CASE("enumeration is strictly increasing under RevLexLess") {
    const auto all = enumerate_partitions(9);
    for (std::size_t i = 1; i < all.size(); ++i) {
        CHECK(RevLexLess{}(all[i - 1], all[i]));
        CHECK_FALSE(RevLexLess{}(all[i], all[i - 1]));
    }
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(Partition{2, 2}) == Partition{2, 2});
    CHECK(conjugate(Partition{}) == Partition{});
    for (const auto& p : enumerate_partitions(8))
        CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("factorials") {
    auto f = factorials(Partition{2, 1, 1});
    CHECK(f.part_factorial == 2);
    CHECK(f.multiplicity_factorial == 2);
    f = factorials(Partition{3, 1});
    CHECK(f.part_factorial == 6);
    CHECK(f.multiplicity_factorial == 1);
    f = factorials(Partition{2, 2});
    CHECK(f.part_factorial == 4);
    CHECK(f.multiplicity_factorial == 2);
}

TEST_CASE("semigroup membership for {k, k+1}") {
    CHECK_FALSE(numerical_semigroup_gap(3, 5));
    CHECK(numerical_semigroup_gap(3, 6));
    // 13 is neither 5x nor 5x + 6y for nonnegative x, y.
    CHECK_FALSE(numerical_semigroup_gap(5, 13));
    for (int k = 2; k <= 12; ++k)
        for (int n = 1; n <= 200; ++n)
            CHECK_MESSAGE(numerical_semigroup_gap(k, n) == oracle::semigroup_brute(k, n), "k=" << k << " n=" << n);
}

TEST_CASE("dominance and merge") {
    CHECK(dominates(Partition{3, 1}, Partition{2, 2}));
    CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
    CHECK_FALSE(dominates(Partition{3, 3}, Partition{4, 1, 1}));
    CHECK(merge(Partition{3, 1}, Partition{2, 2}) == Partition{3, 2, 2, 1});
}

TEST_CASE("parse and format") {
    CHECK(parse_partition("4,2,1") == Partition{4, 2, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK(format_partition(Partition{4, 2, 1}) == "4,2,1");
    CHECK(Partition{3, 1}.to_string() == "(3,1)");
    CHECK_THROWS_AS(parse_partition("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition::from_unsorted({1, 0, 3, 1}) == Partition{3, 1, 1});
}

TEST_CASE("multiplicity form round trip") {
    const Partition p{4, 2, 2, 1, 1, 1};
    const auto m = MultiplicityForm::of(p);
    CHECK(m.mult.at(1) == 3);
    CHECK(m.mult.at(2) == 2);
    CHECK(m.mult.at(4) == 1);
    CHECK(m.to_partition() == p);
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.multiplicity(3) == 0);
}

TEST_CASE("binomials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(factorial(10) == 3628800);
}

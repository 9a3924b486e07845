#include <catch2/catch_amalgamated.hpp>

#include "hurwitz/partition.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/set_partition.hpp"

using namespace hurwitz;

TEST_CASE("partition parsing and ordering") {
    Partition p = Partition::parse("4,2,1");
    CHECK(p.parts() == std::vector<int>{4, 2, 1});
    CHECK(p.degree() == 7);
    CHECK(p.length() == 3);
    CHECK(Partition::parse("1,2,4") == p);  // stored sorted
    CHECK(p.str() == "4,2,1");
    CHECK_THROWS_AS(Partition::parse("3,0"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
}

TEST_CASE("aut size") {
    CHECK(aut_size(Partition({3, 1})) == 1);
    CHECK(aut_size(Partition({1, 1, 1})) == 6);
    CHECK(aut_size(Partition({2, 2, 1})) == 2);
}

TEST_CASE("aut size divides length factorial") {
    for (int d = 1; d <= 7; ++d)
        for (const auto& parts : partitions_of(d)) {
            Partition p(parts);
            CHECK(factorial(p.length()) % aut_size(p) == 0);
        }
}

TEST_CASE("subset sum") {
    Partition p({4, 2, 1});
    CHECK(subset_sum(p, {2, 3}) == 3);
    CHECK(subset_sum(p, {}) == 0);
    CHECK(subset_sum(Partition({5, 2}), {1, 2}) == 7);
    CHECK_THROWS_AS(subset_sum(p, {4}), std::out_of_range);
    CHECK_THROWS_AS(subset_sum(p, {0}), std::out_of_range);
}

TEST_CASE("subset sum complements add to degree") {
    Partition p({5, 3, 3, 1});
    for (int mask = 0; mask < 16; ++mask) {
        std::vector<int> in, out;
        for (int i = 1; i <= 4; ++i) ((mask >> (i - 1)) & 1 ? in : out).push_back(i);
        CHECK(subset_sum(p, in) + subset_sum(p, out) == p.degree());
    }
}

TEST_CASE("hurwitz pair riemann-hurwitz count") {
    HurwitzPair pair(Partition({3, 1}), Partition({2, 1, 1}));
    CHECK(pair.d == 4);
    CHECK(pair.r == 3);
    CHECK_THROWS_AS(HurwitzPair(Partition({3}), Partition({2, 2})), std::invalid_argument);
}

TEST_CASE("set partitions match bell numbers") {
    CHECK(set_partitions({2, 3}).size() == 2);
    CHECK(set_partitions({2, 3, 4}).size() == 5);
    for (int s = 1; s <= 6; ++s) {
        std::vector<int> items;
        for (int i = 1; i <= s; ++i) items.push_back(i);
        CHECK(Int(set_partitions(items).size()) == bell_number(s));
    }
}

TEST_CASE("anchored set partitions pin the first item") {
    auto parts = set_partitions({1, 2, 3}, true);
    REQUIRE(parts.size() == 2);
    for (const auto& blocks : parts) {
        CHECK(blocks.front() == std::vector<int>{1});
    }
}

TEST_CASE("rational helpers") {
    CHECK(rat_pow(Rat(2), -2) == Rat(1, 4));
    CHECK(rat_pow(Rat(3, 2), 3) == Rat(27, 8));
    CHECK(rat_str(Rat(-1, 2)) == "-1/2");
    CHECK(parse_rational("7") == Rat(7));
    CHECK(parse_rational("6/4") == Rat(3, 2));
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 5) == 0);
    CHECK(factorial(6) == 720);
}

TEST_CASE("class sizes and signs") {
    CHECK(conjugacy_class_size({2, 1}) == 3);
    CHECK(conjugacy_class_size({3}) == 2);
    CHECK(conjugacy_class_size({1, 1, 1}) == 1);
    CHECK(permutation_sign(Partition({2, 1})) == -1);
    CHECK(permutation_sign(Partition({3})) == 1);
}

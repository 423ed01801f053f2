#include "hurwitz/core.hpp"

#include <doctest.h>

using namespace hurwitz;

TEST_CASE("rationals print as p/q in lowest terms") {
    CHECK(to_string(ExactRational(100)) == "100/1");
    CHECK(to_string(ExactRational(6, 4)) == "3/2");  // canonicalized on output
    CHECK(to_string(ExactRational(-1, 2)) == "-1/2");
    CHECK(parse_rational("10/4") == ExactRational(5, 2));
    CHECK(to_string(parse_rational(to_string(ExactRational(7, 3)))) == "7/3");
    CHECK_THROWS_AS(parse_rational("abc"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("partitions validate and keep their order") {
    Partition p({1, 3, 2});
    CHECK(p.degree() == 6);
    CHECK(p.length() == 3);
    CHECK(p[0] == 1);
    CHECK(p.sorted_desc().parts() == std::vector<int>{3, 2, 1});
    CHECK(p.sub({2, 0}).parts() == std::vector<int>{2, 1});
    CHECK(Partition::ones(3).parts() == std::vector<int>{1, 1, 1});
    CHECK_THROWS_AS(Partition(std::vector<int>{}), ParseError);
    CHECK_THROWS_AS(Partition({2, 0}), ParseError);
    CHECK_THROWS_AS(Partition({-1}), ParseError);
}

TEST_CASE("types require equal degrees") {
    CHECK_NOTHROW(HurwitzType(1, Partition({5}), Partition({4, 1})));
    CHECK_THROWS_AS(HurwitzType(0, Partition({2}), Partition({3})), ParseError);
    CHECK_THROWS_AS(HurwitzType(-1, Partition({2}), Partition({2})), ParseError);
    HurwitzType t(0, Partition({1, 2}), Partition({1, 1, 1}), PrunedSide::right);
    auto n = t.normalized();
    CHECK(n.mu.parts() == std::vector<int>{2, 1});
    CHECK(n.pruned_side == PrunedSide::right);
}

TEST_CASE("branch count") {
    CHECK(branch_count(1, 1, 2) == 3);
    CHECK(branch_count(2, 3, 1) == 6);
    CHECK(branch_count(0, 1, 1) == 0);
    CHECK(branch_count(HurwitzType(0, Partition({2, 2}), Partition({3, 1}))) == 2);
}

TEST_CASE("text form of types round-trips") {
    auto t = parse_type("g=1;mu=5;nu=4,1");
    CHECK(t.genus == 1);
    CHECK(t.mu.parts() == std::vector<int>{5});
    CHECK(t.nu.parts() == std::vector<int>{4, 1});
    CHECK(to_string(t) == "g=1;mu=5;nu=4,1");
    CHECK(to_string(parse_type("mu=1,2;nu=3;g=0")) == "g=0;mu=1,2;nu=3");
    for (auto bad : {"", "g=1", "g=1;mu=5", "g=1;mu=5;nu=4,1;x=2", "g=a;mu=5;nu=5", "g=1;mu=5,;nu=5",
                     "g=1;mu=5;nu=4", "g=1;g=1;mu=5", "g=1;mu=;nu=1"})
        CHECK_THROWS_AS(parse_type(bad), ParseError);
}

TEST_CASE("automorphisms and factorials") {
    CHECK(partition_automorphisms(std::vector<int>{1, 1, 1}) == 6);
    CHECK(partition_automorphisms(std::vector<int>{2, 1, 2, 1}) == 4);
    CHECK(partition_automorphisms(std::vector<int>{3}) == 1);
    CHECK(factorial(0) == 1);
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(join_ints({1, 2, 3}) == "1,2,3");
}

TEST_CASE("partitions of d") {
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(8).size() == 22);
    CHECK(partitions_of(6, 3).size() == 3);
    CHECK(partitions_of(4, 2) == std::vector<std::vector<int>>{{3, 1}, {2, 2}});
    for (auto& p : partitions_of(7)) {
        CHECK(std::is_sorted(p.rbegin(), p.rend()));
        CHECK(Partition(p).degree() == 7);
    }
}

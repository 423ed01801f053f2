#include "brute_force.hpp"
#include "hurwitz/oracle.hpp"

#include <doctest.h>

using namespace hurwitz;

namespace {
HurwitzType T(int g, std::vector<int> mu, std::vector<int> nu, PrunedSide s = PrunedSide::none) {
    return HurwitzType(g, Partition(std::move(mu)), Partition(std::move(nu)), s);
}
}  // namespace

TEST_CASE("permutation basics") {
    auto p = Permutation::of_cycle_type({3, 2});
    CHECK(p.cycle_type() == std::vector<int>{3, 2});
    CHECK(p.cycles().size() == 2);
    CHECK(p.support().size() == 5);
    CHECK(p * p.inverse() == Permutation::identity(5));
    auto t = Permutation::transposition(4, 0, 3);
    CHECK(t.cycle_type() == std::vector<int>{2, 1, 1});
    CHECK(t * t == Permutation::identity(4));
    // (a*b)(i) = a(b(i))
    auto a = Permutation::transposition(3, 0, 1), b = Permutation::transposition(3, 1, 2);
    CHECK((a * b).images[2] == 0);
    CHECK(conjugacy_class_size({2, 1}) == 3);
    CHECK(conjugacy_class_size({2, 2}) == 3);
    CHECK(conjugacy_class_size({4}) == 6);
}

TEST_CASE("genus-one value H_1((5),(4,1))") {
    CHECK(double_hurwitz(T(1, {5}, {4, 1})) == 100);
}

TEST_CASE("pruned genus-two value") { CHECK(pruned_double_hurwitz_oracle(T(2, {1, 1, 1}, {3})) == 450); }

TEST_CASE("frozen values from full symmetric-group enumeration") {
    // computed by brute::hurwitz_number, which walks all of S_d
    struct Row {
        int g;
        std::vector<int> mu, nu;
        ExactRational h, ph;
    };
    std::vector<Row> rows{
        {0, {2}, {1, 1}, 1, 1},         {0, {2, 1}, {2, 1}, 4, 2},        {0, {3}, {1, 1, 1}, 6, 6},
        {0, {2, 2}, {2, 1, 1}, 48, 48}, {1, {2}, {2}, ExactRational(1, 2), ExactRational(1, 2)},
        {1, {3}, {2, 1}, 9, 9},         {0, {2, 2}, {3, 1}, 6, 2},        {0, {2, 1, 1}, {4}, 8, 0},
        {1, {2, 1}, {3}, 9, 6},         {0, {1, 1, 1}, {3}, 6, 0},        {1, {4}, {4}, 5, 5},
    };
    for (auto& r : rows) {
        auto t = T(r.g, r.mu, r.nu);
        CAPTURE(to_string(t));
        CHECK(double_hurwitz(t) == r.h);
        CHECK(pruned_double_hurwitz_oracle(t) == r.ph);
    }
}

TEST_CASE("oracle matches brute force on all small types") {
    for (int d = 1; d <= 4; ++d)
        for (auto& mu : partitions_of(d))
            for (auto& nu : partitions_of(d))
                for (int g = 0; g <= 1; ++g) {
                    int b = branch_count(g, static_cast<int>(mu.size()), static_cast<int>(nu.size()));
                    if (b < 0 || b > 4) continue;
                    auto t = T(g, mu, nu);
                    CAPTURE(to_string(t));
                    CHECK(double_hurwitz(t) == brute::hurwitz_number(g, mu, nu, false));
                    CHECK(pruned_double_hurwitz_oracle(t) == brute::hurwitz_number(g, mu, nu, true));
                }
}

TEST_CASE("serial and parallel kernels count the same tuples") {
    for (auto [g, mu, nu] : {std::tuple{1, std::vector<int>{5}, std::vector<int>{4, 1}},
                             std::tuple{0, std::vector<int>{3, 2}, std::vector<int>{2, 2, 1}},
                             std::tuple{2, std::vector<int>{1, 1, 1}, std::vector<int>{3}}})
        for (bool prune : {false, true}) {
            auto s = count_factorizations_serial(g, Partition(mu), Partition(nu), prune);
            auto p = count_factorizations_parallel(g, Partition(mu), Partition(nu), prune);
            CHECK(s.count == p.count);
        }
}

TEST_CASE("symmetry and pruning properties") {
    for (int d = 2; d <= 5; ++d)
        for (auto& mu : partitions_of(d))
            for (auto& nu : partitions_of(d)) {
                int b = branch_count(0, static_cast<int>(mu.size()), static_cast<int>(nu.size()));
                if (b < 0 || b > 4) continue;
                auto t = T(0, mu, nu);
                auto h = double_hurwitz(t);
                CHECK(h == double_hurwitz(T(0, nu, mu)));
                auto ph = pruned_double_hurwitz_oracle(t);
                CHECK(ph >= 0);
                CHECK(ph <= h);
                // pruning the nu side of (mu, nu) is pruning the mu side of (nu, mu)
                CHECK(pruned_double_hurwitz_oracle(T(0, mu, nu, PrunedSide::right)) ==
                      pruned_double_hurwitz_oracle(T(0, nu, mu)));
            }
}

TEST_CASE("single Hurwitz numbers") {
    for (auto& mu : partitions_of(4)) {
        Partition p(mu);
        auto t = T(0, mu, {1, 1, 1, 1});
        CHECK(single_hurwitz(0, p, false) * 24 == double_hurwitz(t));
        t.pruned_side = PrunedSide::right;
        CHECK(single_hurwitz(0, p, true) * 24 == pruned_double_hurwitz_oracle(t));
    }
    CHECK(single_hurwitz(0, Partition({2}), false) == ExactRational(1, 2));
    CHECK(single_hurwitz(0, Partition({2, 1}), false) == 4);
}

TEST_CASE("budgets") {
    OracleConfig small;
    small.max_steps = 10;
    CHECK_THROWS_AS(double_hurwitz(T(1, {5}, {4, 1}), small), BudgetExceeded);
    OracleConfig deg;
    deg.max_degree = 3;
    CHECK_THROWS_AS(double_hurwitz(T(0, {4}, {2, 2}), deg), BudgetExceeded);
    try {
        double_hurwitz(T(1, {5}, {4, 1}), small);
    } catch (const BudgetExceeded& e) {
        CHECK(e.module == "symgroup_oracle");
    }
    std::uint64_t steps = 0;
    double_hurwitz(T(1, {5}, {4, 1}), {}, &steps);
    CHECK(steps > 0);
}

#include "hurwitz/oracle.hpp"
#include "hurwitz/pruned_recursion.hpp"
#include "hurwitz/trop_pruned.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace hurwitz;

namespace {
HurwitzType T(int g, std::vector<int> mu, std::vector<int> nu, PrunedSide s = PrunedSide::none) {
    return HurwitzType(g, Partition(std::move(mu)), Partition(std::move(nu)), s);
}
}  // namespace

TEST_CASE("eight pruned graphs for the genus-two example") {
    auto graphs = enumerate_pruned_monodromy_graphs(T(2, {1, 1, 1}, {3}));
    REQUIRE(graphs.size() == 8);
    std::vector<ExactRational> w;
    for (auto& G : graphs) w.push_back(G.weight);
    std::sort(w.begin(), w.end());
    CHECK(w == std::vector<ExactRational>{12, 24, 30, 36, 72, 72, 96, 108});
    CHECK(tropical_pruned(T(2, {1, 1, 1}, {3})) == 450);
}

TEST_CASE("secondary vertex multiplicities") {
    ComponentStats c{2, 0, 3};
    CHECK(vertex_multiplicity(PrunedKind::cut, 0, c) == 1);
    CHECK(vertex_multiplicity(PrunedKind::cut, 1, c) == 6);            // 3!/2! * 2!
    CHECK(vertex_multiplicity(PrunedKind::connected_join, 1, c) == 6);  // 3!/2! * 2
    ComponentStats big{2, 1, 2}, small{1, 0, 2};
    CHECK(vertex_multiplicity(PrunedKind::disconnected_join, 0, big, big) == 6);  // 4!/(2!2!)
    CHECK(vertex_multiplicity(PrunedKind::disconnected_join, 0, big, small) == 0);  // degenerate side
    CHECK_THROWS(vertex_multiplicity(PrunedKind::initial, 0, c));
    CHECK(vertex_multiplicity(PrunedKind::cut, 1, c).get_den() == 1);
}

TEST_CASE("initial vertex multiplicities are genus-zero base values") {
    MemoCache c;
    CHECK(initial_multiplicity({5}, 2, 3, c) == 1);
    CHECK(initial_multiplicity({2, 2}, 1, 3, c) == 2);
    CHECK(initial_multiplicity({3, 4}, 3, 4, c) == 6);
}

TEST_CASE("pruned tropical count equals the recursion") {
    for (int d = 1; d <= 5; ++d)
        for (auto& mu : partitions_of(d))
            for (auto& nu : partitions_of(d))
                for (int g = 0; g <= 2; ++g) {
                    int b = branch_count(g, static_cast<int>(mu.size()), static_cast<int>(nu.size()));
                    if (b <= 0 || b > 4) continue;
                    auto t = T(g, mu, nu);
                    CAPTURE(to_string(t));
                    CHECK(tropical_pruned(t) == pruned_recursion(t));
                }
}

TEST_CASE("labelled enumeration sums to the same total") {
    PrunedTropConfig lab;
    lab.labelled = true;
    for (auto s : {"g=0;mu=3,3;nu=1,2,3", "g=1;mu=2,1;nu=2,1", "g=2;mu=1,1,1;nu=3", "g=0;mu=2,2,1;nu=2,2,1"}) {
        auto t = parse_type(s);
        ExactRational sum = 0;
        for (auto& G : enumerate_pruned_monodromy_graphs(t, lab)) {
            CHECK(G.labelled);
            sum += G.weight;
        }
        CHECK(sum == tropical_pruned(t));
    }
}

TEST_CASE("graph invariants") {
    for (auto t : {T(2, {1, 1, 1}, {3}), T(0, {2, 2, 1}, {2, 2, 1}), T(1, {2, 1}, {2, 1})}) {
        std::set<std::string> canon;
        auto graphs = enumerate_pruned_monodromy_graphs(t);
        for (auto& G : graphs) {
            canon.insert(G.canonical);
            CHECK(G.weight != 0);
            CHECK(G.betti_number() == t.genus);
            CHECK(G.initial_count() >= 1);
            for (auto& e : G.edges)
                if (e.coloured) CHECK(e.from == -1);
            int left = 0;
            for (auto& e : G.edges) left += e.from < 0;
            CHECK(left == t.mu.length());  // every mu part is a regular or coloured end
        }
        CHECK(canon.size() == graphs.size());
    }
}

TEST_CASE("pruned side and base cases") {
    CHECK(tropical_pruned(T(2, {3}, {1, 1, 1}, PrunedSide::right)) == 450);
    CHECK_THROWS_AS(enumerate_pruned_monodromy_graphs(T(0, {4}, {1, 3})), Inapplicable);
    CHECK(tropical_pruned(T(0, {4}, {1, 3})) == 1);  // routed to the base value
    PrunedTropConfig tiny;
    tiny.max_states = 1;
    CHECK_THROWS_AS(enumerate_pruned_monodromy_graphs(T(2, {1, 1, 1}, {3}), tiny), BudgetExceeded);
}

TEST_CASE("DOT output marks coloured ends and multiplicities") {
    bool coloured = false;
    for (auto& G : enumerate_pruned_monodromy_graphs(T(2, {1, 1, 1}, {3}))) {
        auto dot = to_dot(G);
        CHECK(dot.find("m=") != std::string::npos);
        coloured = coloured || dot.find("coloured") != std::string::npos;
    }
    CHECK(coloured);
}

#include "hurwitz/oracle.hpp"
#include "hurwitz/poly_lab.hpp"
#include "hurwitz/trop_pruned.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace hurwitz;

TEST_CASE("resonance walls") {
    auto H = hyperplanes(2, 2, false);
    CHECK(H.size() == 7);
    CHECK(hyperplanes(2, 2, true).size() > H.size());
    std::set<std::string> names;
    for (auto& h : H) names.insert(h.to_string());
    CHECK(names.size() == H.size());
    CHECK(names.count("mu1 - nu1"));
    Hyperplane w{{1, 0}, {1, 0}};
    CHECK(w.value({3, 2, 1, 4}) == 2);
    CHECK(w.I() == std::vector<int>{0});
    CHECK(w.J() == std::vector<int>{0});
    CHECK(!chamber_signature(H, {2, 2, 2, 2}));  // on mu1 = nu1
    CHECK(chamber_signature(H, {3, 2, 1, 4}));
    CHECK_THROWS(hyperplanes(0, 2, false));
}

TEST_CASE("lattice points") {
    auto pts = lattice_points(2, 2, 12);
    CHECK(pts.size() == 1156);
    for (auto& p : pts) {
        CHECK(p[0] + p[1] == p[2] + p[3]);
        for (int x : p) CHECK((x >= 1 && x <= 12));
    }
    CHECK(lattice_points(1, 1, 5).size() == 5);
}

TEST_CASE("polynomial arithmetic") {
    MultivariatePolynomial p(3);
    p.add_term({1, 0, 0}, 2);
    p.add_term({0, 2, 0}, ExactRational(1, 2));
    CHECK(p.total_degree() == 2);
    CHECK(p.evaluate({3, 2, 5}) == 8);
    CHECK(p.coefficient({1, 0, 0}) == 2);
    p.add_term({1, 0, 0}, -2);
    CHECK(p.terms().size() == 1);
    CHECK((p - p).is_zero());
    CHECK((p - p).total_degree() == -1);
    CHECK((p + p).evaluate({0, 2, 0}) == 4);
    CHECK(p.to_string(2) == "1/2*mu2^2");
    CHECK_THROWS(p.add_term({1}, 1));
}

TEST_CASE("exact fit recovers a known polynomial") {
    // in free coordinates (mu1, mu2, nu1); nu2 is eliminated
    auto f = [](const LatticePoint& p) { return ExactRational(3 * p[0] * p[0] - p[1] * p[2] + 1); };
    auto pts = lattice_points(2, 2, 8);
    std::vector<ExactRational> vals;
    for (auto& p : pts) vals.push_back(f(p));
    auto fit = fit_polynomial(pts, vals, 2, 2, 2, 20);
    CHECK(fit.interpolation.size() == 10);
    CHECK(fit.heldout.size() >= 20);
    CHECK(fit.poly.coefficient({2, 0, 0, 0}) == 3);
    CHECK(fit.poly.coefficient({0, 1, 1, 0}) == -1);
    CHECK(fit.poly.coefficient({0, 0, 0, 0}) == 1);

    vals.back() += 1;
    CHECK_THROWS_AS(fit_polynomial(pts, vals, 2, 2, 2, 20), FitMismatch);
    std::vector<LatticePoint> few(pts.begin(), pts.begin() + 3);
    std::vector<ExactRational> fv(vals.begin(), vals.begin() + 3);
    CHECK_THROWS_AS(fit_polynomial(few, fv, 2, 2, 2, 0), SingularSystem);
}

TEST_CASE("chamber polynomials of the genus-zero (2,2) family") {
    auto reports = fit_all_chambers(engine_pruned_hurwitz(), 0, 2, 2, 12);
    REQUIRE(reports.size() == 4);
    std::set<std::string> polys;
    for (auto& r : reports) {
        CHECK(r.pass);
        CHECK(r.fit.poly.total_degree() <= 1);
        polys.insert(r.fit.poly.to_string(2));
    }
    CHECK(polys == std::set<std::string>{"2/1*nu1", "2/1*mu1", "2/1*mu2", "2/1*mu1 + 2/1*mu2 + -2/1*nu1"});
    for (auto& r : fit_all_chambers(engine_hurwitz(), 0, 2, 2, 12)) CHECK(r.pass);
    for (auto& r : fit_all_chambers(engine_hurwitz(), 0, 1, 3, 12)) CHECK(r.pass);
}

TEST_CASE("genus-zero wall-crossing matches the product formula") {
    auto checks = check_genus0_wall_crossing(2, 2, 12, 8);
    CHECK(!checks.empty());
    for (auto& c : checks) {
        CAPTURE(c.wall.to_string());
        CHECK(c.points > 0);
        CHECK(c.failures == 0);
    }
    CHECK(wall_crossing(MultivariatePolynomial(2), MultivariatePolynomial(2)).is_zero());
}

namespace {

// two initial vertices joined by a disconnected join:
//   {mu0} -> {nu0, e}, {mu1} -> {nu1, f}, {e, f} -> {nu2}
PrunedMonodromyGraph two_trees() {
    PrunedMonodromyGraph G;
    G.type = parse_type("g=0;mu=4,4;nu=2,2,4");
    G.labelled = true;
    int l0 = G.add_edge({-1, -1, 0, false, 0, -1}), l1 = G.add_edge({-1, -1, 0, false, 1, -1});
    int r0 = G.add_edge({-1, -1, 0, false, -1, 0}), r1 = G.add_edge({-1, -1, 0, false, -1, 1});
    int r2 = G.add_edge({-1, -1, 0, false, -1, 2});
    int e = G.add_edge({}), f = G.add_edge({});
    G.add_vertex({1, PrunedKind::initial, {l0}, {r0, e}, {}, 1});
    G.add_vertex({2, PrunedKind::initial, {l1}, {r1, f}, {}, 1});
    G.add_vertex({3, PrunedKind::disconnected_join, {e, f}, {r2}, {}, 1});
    return G;
}

}  // namespace

TEST_CASE("per-graph contributions") {
    auto G = two_trees();
    // each initial vertex is PH_0((a),(x,y)) = 1; the join of two single-vertex
    // components is degenerate, so the contribution vanishes
    CHECK(per_graph_contribution(G, {4, 4, 2, 2, 4}) == 0);
    CHECK_THROWS_AS(per_graph_contribution(G, {2, 6, 3, 1, 4}), TypeNotRealized);  // e = 2 - 3
    CHECK_THROWS(per_graph_contribution(G, {4, 4, 2}));

    // summing labelled graphs reproduces the tropical total at a point
    for (auto s : {"g=0;mu=3,3;nu=1,2,3", "g=0;mu=4,3;nu=2,2,3", "g=0;mu=2,2,1;nu=2,2,1"}) {
        auto t = parse_type(s);
        LatticePoint p = t.mu.parts();
        for (int x : t.nu.parts()) p.push_back(x);
        PrunedTropConfig lab;
        lab.labelled = true;
        ExactRational sum = 0;
        for (auto& g : enumerate_pruned_monodromy_graphs(t, lab)) {
            auto c = per_graph_contribution(g, p);
            CHECK(c == g.weight);
            sum += c;
        }
        CHECK(sum == tropical_pruned(t));
    }
}

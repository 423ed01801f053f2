// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance                 run all criteria
//   acceptance --criterion N   run one; exit status reflects it
#include "hurwitz/core.hpp"
#include "hurwitz/dyck_mobile.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/poly_lab.hpp"
#include "hurwitz/pruned_recursion.hpp"
#include "hurwitz/trop_classical.hpp"
#include "hurwitz/trop_pruned.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hurwitz;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

HurwitzType T(int g, std::vector<int> mu, std::vector<int> nu, PrunedSide side = PrunedSide::none) {
    return HurwitzType(g, Partition(std::move(mu)), Partition(std::move(nu)), side);
}

std::vector<long> sorted_ints(std::vector<ExactRational> v) {
    std::vector<long> out;
    for (auto& q : v) out.push_back(q.get_den() == 1 ? q.get_num().get_si() : -1);
    std::sort(out.begin(), out.end());
    return out;
}

std::string list(const std::vector<long>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

Outcome oracle_genus_one() {
    auto v = double_hurwitz(T(1, {5}, {4, 1}));
    return {v == 100, "H_1((5),(4,1)) = " + to_string(v)};
}

Outcome tropical_genus_one() {
    auto t = T(1, {5}, {4, 1});
    auto graphs = enumerate_monodromy_graphs(t);
    std::vector<ExactRational> w;
    for (auto& G : graphs) w.push_back(graph_weight(G));
    auto total = tropical_double_hurwitz(t);
    auto got = sorted_ints(w);
    std::vector<long> want{20, 8, 12, 12, 30, 12, 6};
    std::sort(want.begin(), want.end());
    return {total == 100 && got == want,
            "total " + to_string(total) + ", " + std::to_string(graphs.size()) + " graphs " + list(got)};
}

Outcome pruned_genus_two() {
    auto t = T(2, {1, 1, 1}, {3});
    auto o = pruned_double_hurwitz_oracle(t);
    auto r = pruned_recursion(t);
    auto graphs = enumerate_pruned_monodromy_graphs(t);
    std::vector<ExactRational> w;
    ExactRational sum = 0;
    for (auto& G : graphs) w.push_back(G.weight), sum += G.weight;
    auto got = sorted_ints(w);
    std::vector<long> want{72, 24, 12, 72, 36, 108, 96, 30};
    std::sort(want.begin(), want.end());
    bool ok = o == 450 && r == 450 && sum == 450 && got == want;
    return {ok, "oracle " + to_string(o) + ", recursion " + to_string(r) + ", tropical " + to_string(sum) + ", " +
                    std::to_string(graphs.size()) + " graphs " + list(got)};
}

Outcome base_cases() {
    int checked = 0, bad = 0;
    std::string first;
    auto expect = [&](const HurwitzType& t, const ExactRational& want) {
        ++checked;
        auto o = pruned_double_hurwitz_oracle(t);
        auto r = pruned_recursion(t);
        if (o != want || r != want) {
            if (!bad++) first = to_string(t) + " oracle " + to_string(o) + " recursion " + to_string(r);
        }
    };
    for (int d = 2; d <= 8; ++d)
        for (int b = 1; b < d; ++b) expect(T(0, {d}, {b, d - b}), 1);
    for (int d = 2; d <= 8; ++d)
        for (int a = 1; a < d; ++a)
            for (int c = 1; c < d; ++c)
                expect(T(0, {a, d - a}, {c, d - c}), 2 * std::min({a, d - a, c, d - c}));
    for (int d = 1; d <= 6; ++d)
        for (int l = 1; l <= 3; ++l)
            for (auto& mu : partitions_of(d, l)) expect(T(0, mu, {d}), 0);
    return {bad == 0, std::to_string(checked) + " base types, " + std::to_string(bad) + " mismatches" +
                          (bad ? " (first: " + first + ")" : "")};
}

Outcome cross_engine_sweep() {
    int types = 0, skipped = 0, h_bad = 0, pt_bad = 0, rec_bad = 0;
    std::string first;
    for (int d = 1; d <= 5; ++d)
        for (auto& mu : partitions_of(d))
            for (auto& nu : partitions_of(d))
                for (int g = 0;; ++g) {
                    int b = branch_count(g, static_cast<int>(mu.size()), static_cast<int>(nu.size()));
                    if (b > 4) break;
                    if (b <= 0) continue;
                    ++types;
                    auto t = T(g, mu, nu);
                    try {
                        if (tropical_double_hurwitz(t) != double_hurwitz(t)) ++h_bad;
                        auto o = pruned_double_hurwitz_oracle(t);
                        auto r = pruned_recursion(t);
                        auto p = tropical_pruned(t);
                        if (p != r) ++pt_bad;
                        if (r != o) {
                            if (!rec_bad++) first = to_string(t) + " recursion " + to_string(r) + " oracle " + to_string(o);
                        }
                    } catch (const BudgetExceeded&) {
                        ++skipped;
                    }
                }
    std::ostringstream s;
    s << types << " types (" << skipped << " over budget); tropical!=oracle " << h_bad << ", pruned-tropical!=recursion "
      << pt_bad << ", recursion!=oracle " << rec_bad;
    if (rec_bad) s << " (first: " << first << ")";
    return {h_bad == 0 && pt_bad == 0 && rec_bad == 0, s.str()};
}

Outcome dyck_identities() {
    int checked = 0, bad = 0;
    std::string first;
    for (int d = 1; d <= 4; ++d)
        for (auto& parts : partitions_of(d)) {
            Partition mu(parts);
            if (branch_count(0, mu.length(), d) <= 0) continue;
            auto paths = enumerate_hurwitz_dyck_paths(mu);
            long pruned = std::count_if(paths.begin(), paths.end(), is_pruned_dyck);
            ++checked;
            ExactRational h = ExactRational(d) * single_hurwitz(0, mu, false);
            ExactRational ph = ExactRational(d) * single_hurwitz(0, mu, true);
            if (ExactRational(static_cast<long>(paths.size())) != h || ExactRational(pruned) != ph) {
                if (!bad++)
                    first = join_ints(parts) + ": |D|=" + std::to_string(paths.size()) + " vs " + to_string(h) +
                            ", pruned " + std::to_string(pruned) + " vs " + to_string(ph);
            }
        }
    return {bad == 0 && checked > 0,
            std::to_string(checked) + " partitions, " + std::to_string(bad) + " mismatches" + (bad ? " (" + first + ")" : "")};
}

Outcome mobile_identities() {
    int checked = 0, bad = 0;
    std::size_t total = 0;
    for (int d = 1; d <= 3; ++d)
        for (auto& parts : partitions_of(d)) {
            Partition mu(parts);
            int b = branch_count(0, mu.length(), d);
            if (b <= 0) continue;
            ++checked;
            auto mobiles = enumerate_mobiles(mu, Partition::ones(d));
            auto paths = enumerate_hurwitz_dyck_paths(mu);
            total += mobiles.size();
            bool ok = mobiles.size() == static_cast<std::size_t>(b + 1) * paths.size();
            for (auto& M : mobiles) {
                Mobile x = M;
                for (int i = 0; i <= b; ++i) x = shift(x);
                ok = ok && x == M && M.invariants_hold();
            }
            if (!ok) ++bad;
        }
    return {bad == 0 && checked > 0, std::to_string(checked) + " partitions, " + std::to_string(total) +
                                         " mobiles, " + std::to_string(bad) + " failures"};
}

Outcome polynomiality() {
    std::ostringstream s;
    bool ok = true;
    for (auto [m, n] : {std::pair{2, 2}, std::pair{1, 3}})
        for (auto [name, engine] : {std::pair{"H", engine_hurwitz()}, std::pair{"PH", engine_pruned_hurwitz()}}) {
            auto reports = fit_all_chambers(engine, 0, m, n, 12);
            int pass = 0;
            for (auto& r : reports) pass += r.pass;
            ok = ok && pass == static_cast<int>(reports.size()) && !reports.empty();
            s << name << "(0," << m << "," << n << ") " << pass << "/" << reports.size() << " chambers; ";
            for (auto& r : reports)
                if (!r.pass) s << "[" << r.error << "] ";
        }
    return {ok, s.str()};
}

Outcome wall_crossing_genus0() {
    auto checks = check_genus0_wall_crossing(2, 2, 12, 8);
    std::size_t points = 0, failures = 0;
    for (auto& c : checks) points += c.points, failures += c.failures;
    return {!checks.empty() && failures == 0 && points > 0,
            std::to_string(checks.size()) + " oriented walls, " + std::to_string(points) + " points, " +
                std::to_string(failures) + " failures"};
}

// initial vertex {mu1, mu2} -> {nu1, e}; then e is cut into {nu2, nu3}
PrunedMonodromyGraph two_in_three_out() {
    PrunedMonodromyGraph G;
    G.type = T(0, {3, 3}, {1, 2, 3});
    G.labelled = true;
    int l0 = G.add_edge({-1, -1, 0, false, 0, -1});
    int l1 = G.add_edge({-1, -1, 0, false, 1, -1});
    int r0 = G.add_edge({-1, -1, 0, false, -1, 0});
    int e = G.add_edge({-1, -1, 0, false, -1, -1});
    int r1 = G.add_edge({-1, -1, 0, false, -1, 1});
    int r2 = G.add_edge({-1, -1, 0, false, -1, 2});
    G.add_vertex({1, PrunedKind::initial, {l0, l1}, {r0, e}, {}, 1});
    G.add_vertex({2, PrunedKind::cut, {e}, {r1, r2}, {}, 1});
    return G;
}

Outcome per_graph() {
    auto G = two_in_three_out();
    int checked = 0, bad = 0;
    for (auto& p : lattice_points(2, 3, 12)) {
        int lo = std::min(p[0], p[1]), hi = std::max({p[2], p[3], p[4]});
        if (lo <= hi) continue;
        ++checked;
        ExactRational want = 2 * p[2] * (p[0] + p[1] - p[2]);
        if (per_graph_contribution(G, p) != want) ++bad;
    }
    return {bad == 0 && checked > 0,
            std::to_string(checked) + " chamber points, " + std::to_string(bad) + " mismatches"};
}

struct Criterion {
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> c{
        {"oracle H_1((5),(4,1)) = 100", 10, oracle_genus_one},
        {"tropical count and 7 graph weights", 5, tropical_genus_one},
        {"pruned engines agree on (2,(1,1,1),(3)) with 8 graphs", 30, pruned_genus_two},
        {"pruned base-case grid", 120, base_cases},
        {"cross-engine sweep d<=5, b<=4", 600, cross_engine_sweep},
        {"Dyck counting identities d<=4", 120, dyck_identities},
        {"mobile identities d<=3", 120, mobile_identities},
        {"chamber polynomiality", 300, polynomiality},
        {"genus-0 wall-crossing (2,2)", 300, wall_crossing_genus0},
        {"per-graph contribution of the two-in/three-out type", 60, per_graph},
    };
    return c;
}

bool run_one(int n) {
    const auto& c = criteria().at(n - 1);
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = c.run();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.pass && secs < c.limit_s;
    std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << " — " << c.name << ": " << o.detail << " ["
              << std::fixed << std::setprecision(2) << secs << " s, limit " << c.limit_s << " s]" << std::endl;
    return pass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int which = 0;
    app.add_option("--criterion", which, "criterion number (1-10); all when omitted")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);
    bool ok = true;
    if (which) return run_one(which) ? 0 : 1;
    for (int n = 1; n <= static_cast<int>(criteria().size()); ++n) ok = run_one(n) && ok;
    return ok ? 0 : 1;
}

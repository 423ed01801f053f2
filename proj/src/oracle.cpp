#include "hurwitz/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>

#include <omp.h>

namespace hurwitz {

Permutation Permutation::identity(int d) {
    Permutation p;
    p.images.resize(d);
    std::iota(p.images.begin(), p.images.end(), 0);
    return p;
}

Permutation Permutation::of_cycle_type(const std::vector<int>& parts) {
    int d = std::accumulate(parts.begin(), parts.end(), 0);
    Permutation p = identity(d);
    int s = 0;
    for (int m : parts) {
        for (int k = 0; k < m; ++k) p.images[s + k] = s + (k + 1) % m;
        s += m;
    }
    return p;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images.size(), 0);
    for (int i = 0; i < size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        for (int j = i; !seen[j]; j = images[j]) {
            seen[j] = 1;
            c.push_back(j);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> t;
    for (auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
    std::sort(t.begin(), t.end(), std::greater<>());
    return t;
}

std::vector<int> Permutation::support() const {
    std::vector<int> s;
    for (int i = 0; i < size(); ++i)
        if (images[i] != i) s.push_back(i);
    return s;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images.resize(images.size());
    for (int i = 0; i < size(); ++i) r.images[images[i]] = i;
    return r;
}

Permutation Permutation::operator*(const Permutation& o) const {
    Permutation r;
    r.images.resize(images.size());
    for (int i = 0; i < size(); ++i) r.images[i] = images[o.images[i]];
    return r;
}

Permutation Permutation::transposition(int d, int a, int b) {
    Permutation p = identity(d);
    std::swap(p.images[a], p.images[b]);
    return p;
}

BigInt conjugacy_class_size(const std::vector<int>& parts) {
    int d = std::accumulate(parts.begin(), parts.end(), 0);
    BigInt r = factorial(d);
    for (int m : parts) r /= m;
    return r / partition_automorphisms(parts);
}

namespace {

// Depth-first search over transposition tuples. p is sigma_1 tau_1...tau_k
// kept in place; right-multiplying by (a c) swaps p[a] and p[c], and changes
// the cycle count by +1 if a, c share a cycle of p, otherwise by -1.
struct Search {
    int d, b, target_cycles;
    std::vector<int> target_type;
    std::vector<std::pair<int, int>> trans;
    std::vector<int> cycle_of;  // sigma_1 cycle index of each point
    int n_sigma1_cycles;
    bool prune;
    std::uint64_t max_steps;
    std::atomic<std::uint64_t>* global_steps;

    std::vector<int> p;
    std::vector<int> chosen;
    std::uint64_t count = 0;
    std::uint64_t steps = 0;

    bool same_cycle(int a, int c) const {
        for (int x = p[a]; x != a; x = p[x])
            if (x == c) return true;
        return false;
    }

    bool accept() const {
        std::vector<int> type;
        std::vector<char> seen(d, 0);
        for (int i = 0; i < d; ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = p[j]) seen[j] = 1, ++len;
            type.push_back(len);
        }
        std::sort(type.begin(), type.end(), std::greater<>());
        if (type != target_type) return false;

        // transitivity of <sigma_1, taus>: union-find over sigma_1 cycles
        std::vector<int> parent(n_sigma1_cycles);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
        int comps = n_sigma1_cycles;
        for (int t : chosen) {
            int x = find(cycle_of[trans[t].first]), y = find(cycle_of[trans[t].second]);
            if (x != y) parent[x] = y, --comps;
        }
        if (comps != 1) return false;

        if (prune) {
            std::vector<int> hits(n_sigma1_cycles, 0);
            for (int t : chosen) {
                ++hits[cycle_of[trans[t].first]];
                ++hits[cycle_of[trans[t].second]];
            }
            for (int h : hits)
                if (h < 2) return false;
        }
        return true;
    }

    void tick() {
        if (++steps % 4096 == 0) {
            auto total = global_steps->fetch_add(4096) + 4096;
            if (total > max_steps) throw BudgetExceeded("symgroup_oracle", "step budget exceeded");
        }
    }

    void dfs(int depth, int cycles) {
        int remaining = b - depth;
        if (std::abs(cycles - target_cycles) > remaining || ((cycles - target_cycles - remaining) & 1)) return;
        if (remaining == 0) {
            if (accept()) ++count;
            return;
        }
        for (int t = 0; t < static_cast<int>(trans.size()); ++t) {
            tick();
            auto [a, c] = trans[t];
            int delta = same_cycle(a, c) ? 1 : -1;
            std::swap(p[a], p[c]);
            chosen.push_back(t);
            dfs(depth + 1, cycles + delta);
            chosen.pop_back();
            std::swap(p[a], p[c]);
        }
    }
};

Search make_search(int g, const Partition& mu, const Partition& nu, bool prune, const OracleConfig& cfg,
                   std::atomic<std::uint64_t>* steps) {
    int d = mu.degree();
    int b = branch_count(g, mu.length(), nu.length());
    if (d != nu.degree()) throw Inapplicable("degrees of mu and nu differ");
    if (d > cfg.max_degree || b > cfg.max_branch)
        throw BudgetExceeded("symgroup_oracle", "type exceeds degree/branch bound (d=" + std::to_string(d) +
                                                    ", b=" + std::to_string(b) + ")");
    Search s;
    s.d = d;
    s.b = b;
    s.target_type = nu.sorted_desc().parts();
    s.target_cycles = nu.length();
    for (int a = 0; a < d; ++a)
        for (int c = a + 1; c < d; ++c) s.trans.emplace_back(a, c);
    auto sigma1 = Permutation::of_cycle_type(mu.sorted_desc().parts());
    s.p = sigma1.images;
    s.cycle_of.assign(d, 0);
    auto cyc = sigma1.cycles();
    s.n_sigma1_cycles = static_cast<int>(cyc.size());
    for (int i = 0; i < s.n_sigma1_cycles; ++i)
        for (int x : cyc[i]) s.cycle_of[x] = i;
    s.prune = prune;
    s.max_steps = cfg.max_steps;
    s.global_steps = steps;
    return s;
}

}  // namespace

FactorizationCount count_factorizations_serial(int g, const Partition& mu, const Partition& nu, bool prune_sigma1,
                                               const OracleConfig& cfg) {
    std::atomic<std::uint64_t> steps{0};
    int b = branch_count(g, mu.length(), nu.length());
    if (b < 0) return {};
    auto s = make_search(g, mu, nu, prune_sigma1, cfg, &steps);
    s.dfs(0, mu.length());
    if (s.steps > cfg.max_steps) throw BudgetExceeded("symgroup_oracle", "step budget exceeded");
    return {s.count, s.steps};
}

FactorizationCount count_factorizations_parallel(int g, const Partition& mu, const Partition& nu, bool prune_sigma1,
                                                 const OracleConfig& cfg) {
    std::atomic<std::uint64_t> steps{0};
    int b = branch_count(g, mu.length(), nu.length());
    if (b < 0) return {};
    auto root = make_search(g, mu, nu, prune_sigma1, cfg, &steps);
    if (b == 0) {
        root.dfs(0, mu.length());
        if (root.steps > cfg.max_steps) throw BudgetExceeded("symgroup_oracle", "step budget exceeded");
        return {root.count, root.steps};
    }
    const int n = static_cast<int>(root.trans.size());
    std::uint64_t total = 0, spent = 0;
    bool overflow = false;
#pragma omp parallel for schedule(dynamic) reduction(+ : total, spent)
    for (int t = 0; t < n; ++t) {
        if (overflow) continue;
        Search s = root;
        auto [a, c] = s.trans[t];
        int delta = s.same_cycle(a, c) ? 1 : -1;
        std::swap(s.p[a], s.p[c]);
        s.chosen.push_back(t);
        try {
            s.dfs(1, mu.length() + delta);
        } catch (const BudgetExceeded&) {
#pragma omp atomic write
            overflow = true;
        }
        total += s.count;
        spent += s.steps;
    }
    if (overflow || spent > cfg.max_steps) throw BudgetExceeded("symgroup_oracle", "step budget exceeded");
    return {total, spent};
}

namespace {

ExactRational normalise(std::uint64_t count, const Partition& mu, const Partition& nu) {
    BigInt n = BigInt(static_cast<unsigned long>(count)) * conjugacy_class_size(mu.parts()) *
               partition_automorphisms(mu) * partition_automorphisms(nu);
    ExactRational q(n, factorial(mu.degree()));
    q.canonicalize();
    return q;
}

}  // namespace

ExactRational double_hurwitz(const HurwitzType& t, const OracleConfig& cfg, std::uint64_t* steps) {
    if (branch_count(t) < 0) return 0;
    auto c = count_factorizations_parallel(t.genus, t.mu, t.nu, false, cfg);
    if (steps) *steps = c.steps;
    return normalise(c.count, t.mu, t.nu);
}

ExactRational pruned_double_hurwitz_oracle(const HurwitzType& t, const OracleConfig& cfg, std::uint64_t* steps) {
    if (branch_count(t) < 0) return 0;
    // Inverting a factorization swaps the roles of sigma_1 and sigma_2.
    if (t.pruned_side == PrunedSide::right) {
        auto c = count_factorizations_parallel(t.genus, t.nu, t.mu, true, cfg);
        if (steps) *steps = c.steps;
        return normalise(c.count, t.nu, t.mu);
    }
    auto c = count_factorizations_parallel(t.genus, t.mu, t.nu, true, cfg);
    if (steps) *steps = c.steps;
    return normalise(c.count, t.mu, t.nu);
}

ExactRational single_hurwitz(int g, const Partition& mu, bool pruned, const OracleConfig& cfg) {
    int d = mu.degree();
    HurwitzType t(g, mu, Partition::ones(d), pruned ? PrunedSide::right : PrunedSide::none);
    ExactRational v = pruned ? pruned_double_hurwitz_oracle(t, cfg) : double_hurwitz(t, cfg);
    return v / ExactRational(factorial(d));
}

}  // namespace hurwitz

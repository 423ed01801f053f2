#include "hurwitz/pruned_recursion.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <mutex>

namespace hurwitz {

std::optional<ExactRational> MemoCache::get(const std::string& key) const {
    std::shared_lock lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void MemoCache::put(const std::string& key, const ExactRational& v) {
    std::unique_lock lock(mu_);
    map_[key] = v;
}

std::size_t MemoCache::size() const {
    std::shared_lock lock(mu_);
    return map_.size();
}

void MemoCache::clear() {
    std::unique_lock lock(mu_);
    map_.clear();
}

std::map<std::string, ExactRational> MemoCache::snapshot() const {
    std::shared_lock lock(mu_);
    return map_;
}

void MemoCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;
    std::string line;
    const std::string arrow = kCacheArrow;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto pos = line.find(arrow);
        if (pos == std::string::npos) throw ParseError("malformed cache line: " + line);
        put(line.substr(0, pos), parse_rational(line.substr(pos + arrow.size())));
    }
}

void MemoCache::save(const std::string& path) const {
    auto snap = snapshot();
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write cache file " + tmp);
        for (auto& [k, v] : snap) out << k << kCacheArrow << to_string(v) << '\n';
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) throw std::runtime_error("cannot rename cache file onto " + path);
}

MemoCache& default_recursion_cache() {
    static MemoCache cache;
    return cache;
}

namespace {

// (b-1)!/(b-1-k)! as a product of k factors; vanishes once k >= b.
BigInt falling(int b, int k) {
    BigInt r = 1;
    for (int t = 0; t < k; ++t) r *= (b - 1 - t);
    return r;
}

std::vector<int> pick(const std::vector<int>& v, const std::vector<int>& idx) {
    std::vector<int> out;
    for (int i : idx) out.push_back(v[i]);
    return out;
}

struct Recursion {
    MemoCache& cache;
    const RecursionConfig& cfg;

    ExactRational ph(int g, std::vector<int> mu, std::vector<int> nu) {
        std::sort(mu.begin(), mu.end(), std::greater<>());
        std::sort(nu.begin(), nu.end(), std::greater<>());
        HurwitzType t(g, Partition(mu), Partition(nu));
        std::string key = to_string(t);
        if (auto v = cache.get(key)) return *v;
        ExactRational v = evaluate(g, mu, nu);
        cache.put(key, v);
        return v;
    }

    ExactRational evaluate(int g, const std::vector<int>& mu, const std::vector<int>& nu) {
        const int m = static_cast<int>(mu.size()), n = static_cast<int>(nu.size());
        const int b = branch_count(g, m, n);
        if (b <= 0) return 0;
        if (g == 0 && n == 1) return 0;
        if (g == 0 && n == 2) {
            if (m == 1) return 1;
            if (m == 2) return 2 * std::min({mu[0], mu[1], nu[0], nu[1]});
            return pruned_double_hurwitz_oracle(HurwitzType(0, Partition(mu), Partition(nu)), cfg.oracle);
        }

        ExactRational total = 0;
        const int subsets = 1 << m;
        auto split = [&](int mask, std::vector<int>& in, std::vector<int>& out) {
            in.clear();
            out.clear();
            for (int k = 0; k < m; ++k) (mask >> k & 1 ? in : out).push_back(k);
        };
        std::vector<int> I, Ic;

        // cut: strands i<j merge into alpha plus the coloured parts mu_{I^c}
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> rest;
                for (int k = 0; k < n; ++k)
                    if (k != i && k != j) rest.push_back(nu[k]);
                for (int mask = 1; mask < subsets; ++mask) {
                    split(mask, I, Ic);
                    int sIc = 0;
                    BigInt prod = 1;
                    for (int k : Ic) sIc += mu[k], prod *= mu[k];
                    int alpha = nu[i] + nu[j] - sIc;
                    if (alpha < 1) continue;
                    const int k = static_cast<int>(Ic.size());
                    BigInt w = alpha * falling(b, k) * factorial(k + 1) * prod;
                    if (w == 0) continue;
                    auto nn = rest;
                    nn.push_back(alpha);
                    total += ExactRational(w) * ph(g, pick(mu, I), nn);
                }
            }

        // connected join: nu_i splits into alpha + beta + |mu_{I^c}|, genus drops
        if (g >= 1)
            for (int i = 0; i < n; ++i) {
                std::vector<int> rest;
                for (int k = 0; k < n; ++k)
                    if (k != i) rest.push_back(nu[k]);
                for (int mask = 1; mask < subsets; ++mask) {
                    split(mask, I, Ic);
                    int sIc = 0;
                    BigInt prod = 1;
                    for (int k : Ic) sIc += mu[k], prod *= mu[k];
                    const int k = static_cast<int>(Ic.size());
                    BigInt comb = falling(b, k) * (k + 1) * prod;
                    if (comb == 0) continue;
                    for (int alpha = 1; alpha < nu[i]; ++alpha) {
                        int beta = nu[i] - sIc - alpha;
                        if (beta < 1) continue;
                        auto nn = rest;
                        nn.push_back(alpha);
                        nn.push_back(beta);
                        total += ExactRational(comb * alpha * beta) / 2 * ph(g - 1, pick(mu, I), nn);
                    }
                }
            }

        // disconnected join over stable splittings
        for (int i = 0; i < n; ++i) {
            std::vector<int> rest_idx;
            for (int k = 0; k < n; ++k)
                if (k != i) rest_idx.push_back(k);
            const int r = static_cast<int>(rest_idx.size());
            for (int g1 = 0; g1 <= g; ++g1) {
                const int g2 = g - g1;
                for (int jmask = 0; jmask < (1 << r); ++jmask) {
                    std::vector<int> nu1, nu2;
                    for (int k = 0; k < r; ++k) (jmask >> k & 1 ? nu1 : nu2).push_back(nu[rest_idx[k]]);
                    auto unstable = [](int gi, std::size_t ji) { return gi == 0 && (ji == 1 || ji == 2); };
                    if (unstable(g1, nu1.size()) || unstable(g2, nu2.size())) continue;
                    // each mu index goes to I_1, I_2 or the coloured set
                    std::vector<int> assign(m, 0);
                    while (true) {
                        std::vector<int> mu1, mu2;
                        int sIc = 0, k = 0;
                        BigInt prod = 1;
                        for (int x = 0; x < m; ++x) {
                            if (assign[x] == 1) mu1.push_back(mu[x]);
                            else if (assign[x] == 2) mu2.push_back(mu[x]);
                            else sIc += mu[x], prod *= mu[x], ++k;
                        }
                        if (!mu1.empty() && !mu2.empty()) {
                            int b1 = branch_count(g1, static_cast<int>(mu1.size()), static_cast<int>(nu1.size()) + 1);
                            int b2 = branch_count(g2, static_cast<int>(mu2.size()), static_cast<int>(nu2.size()) + 1);
                            if (b1 >= 0 && b2 >= 0) {
                                ExactRational comb(factorial(b - 1) * factorial(k + 1) * prod,
                                                   2 * factorial(b1) * factorial(b2));
                                comb.canonicalize();
                                // degrees balance on each side, which fixes alpha
                                int alpha = 0;
                                for (int x : mu1) alpha += x;
                                for (int x : nu1) alpha -= x;
                                int beta = nu[i] - sIc - alpha;
                                if (alpha >= 1 && beta >= 1) {
                                    auto n1 = nu1, n2 = nu2;
                                    n1.push_back(alpha);
                                    n2.push_back(beta);
                                    ExactRational p1 = ph(g1, mu1, n1);
                                    if (p1 != 0) total += comb * alpha * beta * p1 * ph(g2, mu2, n2);
                                }
                            }
                        }
                        int x = 0;
                        while (x < m && assign[x] == 2) assign[x++] = 0;
                        if (x == m) break;
                        ++assign[x];
                    }
                }
            }
        }
        return total;
    }
};

}  // namespace

ExactRational pruned_recursion(const HurwitzType& t, MemoCache& cache, const RecursionConfig& cfg) {
    Recursion r{cache, cfg};
    if (t.pruned_side == PrunedSide::right) return r.ph(t.genus, t.nu.parts(), t.mu.parts());
    return r.ph(t.genus, t.mu.parts(), t.nu.parts());
}

ExactRational pruned_recursion(const HurwitzType& t) { return pruned_recursion(t, default_recursion_cache()); }

}  // namespace hurwitz

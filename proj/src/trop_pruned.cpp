#include "hurwitz/trop_pruned.hpp"

#include "hurwitz/trop_classical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace hurwitz {

const char* to_string(PrunedKind k) {
    switch (k) {
        case PrunedKind::initial: return "initial";
        case PrunedKind::cut: return "cut";
        case PrunedKind::connected_join: return "connected_join";
        case PrunedKind::disconnected_join: return "disconnected_join";
    }
    return "?";
}

int PrunedMonodromyGraph::add_edge(PrunedEdge e) {
    edges.push_back(e);
    return static_cast<int>(edges.size()) - 1;
}

int PrunedMonodromyGraph::add_vertex(PrunedVertex v) {
    int id = static_cast<int>(vertices.size());
    for (int e : v.in) edges[e].to = id;
    for (int e : v.coloured) edges[e].to = id;
    for (int e : v.out) edges[e].from = id;
    vertices.push_back(std::move(v));
    return id;
}

int PrunedMonodromyGraph::initial_count() const {
    return static_cast<int>(std::count_if(vertices.begin(), vertices.end(),
                                          [](auto& v) { return v.kind == PrunedKind::initial; }));
}

int PrunedMonodromyGraph::secondary_count() const { return static_cast<int>(vertices.size()) - initial_count(); }

int PrunedMonodromyGraph::coloured_count() const {
    return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](auto& e) { return e.coloured; }));
}

int PrunedMonodromyGraph::betti_number() const {
    int ends = 0;
    for (auto& e : edges) ends += (e.from < 0) + (e.to < 0);
    return static_cast<int>(edges.size()) - (static_cast<int>(vertices.size()) + ends) + 1;
}

std::string PrunedMonodromyGraph::hash() const { return stable_hash(canonical); }

ExactRational vertex_multiplicity(PrunedKind kind, int k, const ComponentStats& c1, const ComponentStats& c2) {
    ExactRational m;
    switch (kind) {
        case PrunedKind::cut:
            m = ExactRational(factorial(c1.A + k) * factorial(k + 1), factorial(c1.A));
            break;
        case PrunedKind::connected_join:
            m = ExactRational(factorial(c1.A + k) * (k + 1), factorial(c1.A));
            break;
        case PrunedKind::disconnected_join: {
            auto degenerate = [](const ComponentStats& c) { return c.betti == 0 && c.live <= 3; };
            if (degenerate(c1) || degenerate(c2)) return 0;
            m = ExactRational(factorial(c1.A + c2.A + k) * factorial(k + 1), factorial(c1.A) * factorial(c2.A));
            break;
        }
        case PrunedKind::initial:
            throw std::invalid_argument("initial vertices use initial_multiplicity");
    }
    m.canonicalize();
    return m;
}

ExactRational initial_multiplicity(const std::vector<int>& block, int w1, int w2, MemoCache& cache,
                                   const RecursionConfig& cfg) {
    return pruned_recursion(HurwitzType(0, Partition(block), Partition({w1, w2})), cache, cfg);
}

namespace {

// A left end. Ends with equal tokens are interchangeable: in unlabelled mode
// the token is the weight, in labelled mode the mu index.
struct Item {
    int token;
    int weight;
    bool operator<(const Item& o) const { return token < o.token; }
    bool operator==(const Item& o) const { return token == o.token; }
};

struct Strand {
    std::string term;
    int weight;
    int edge;
};

struct Comp {
    std::string hist;  // serialized history of the component
    std::vector<Strand> strands;
    int A = 0;
    int betti = 0;
};

struct PState {
    std::vector<Comp> comps;
    std::vector<Item> pool;  // unused coloured ends, sorted
    ExactRational fac = 1;
    PrunedMonodromyGraph graph;
};

std::string token_str(const Item& it, bool labelled) {
    return labelled ? "m" + std::to_string(it.token) : std::to_string(it.token);
}

std::string items_str(const std::vector<Item>& v, bool labelled) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + token_str(v[i], labelled);
    return s;
}

std::string comp_key(const Comp& c) {
    std::string k = c.hist + "{";
    for (auto& s : c.strands) k += s.term + ";";
    return k + "}" + std::to_string(c.A) + "/" + std::to_string(c.betti);
}

std::string state_key(const PState& s, bool labelled) {
    std::vector<std::string> keys;
    for (auto& c : s.comps) keys.push_back(comp_key(c));
    std::sort(keys.begin(), keys.end());
    std::string k;
    for (auto& x : keys) k += x + "\n";
    return k + "pool:" + items_str(s.pool, labelled);
}

void sort_strands(Comp& c) {
    std::sort(c.strands.begin(), c.strands.end(), [](auto& a, auto& b) { return a.term < b.term; });
}

// Aut of a multiset of tokens.
BigInt token_aut(const std::vector<Item>& v) {
    std::vector<int> t;
    for (auto& i : v) t.push_back(i.token);
    return partition_automorphisms(t);
}

// All sub-multisets of a sorted item list (each distinct once).
std::vector<std::vector<Item>> sub_multisets(const std::vector<Item>& pool) {
    std::vector<std::pair<Item, int>> groups;
    for (auto& it : pool) {
        if (!groups.empty() && groups.back().first == it) ++groups.back().second;
        else groups.push_back({it, 1});
    }
    std::vector<std::vector<Item>> out{{}};
    for (auto& [it, c] : groups) {
        std::vector<std::vector<Item>> next;
        for (auto& base : out)
            for (int k = 0; k <= c; ++k) {
                auto v = base;
                v.insert(v.end(), k, it);
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<Item> minus(const std::vector<Item>& a, const std::vector<Item>& b) {
    std::vector<Item> out;
    std::multiset<int> rm;
    for (auto& x : b) rm.insert(x.token);
    for (auto& x : a) {
        auto it = rm.find(x.token);
        if (it != rm.end()) rm.erase(it);
        else out.push_back(x);
    }
    return out;
}

void set_partitions(int n, const std::function<void(const std::vector<std::vector<int>>&)>& f) {
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) return f(blocks);
        for (auto& bl : blocks) {
            bl.push_back(i);
            rec(i + 1);
            bl.pop_back();
        }
        blocks.push_back({i});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

struct Enumerator {
    const HurwitzType& t;
    const PrunedTropConfig& cfg;
    MemoCache& cache;
    bool labelled;
    std::uint64_t states = 0;

    void count_state() {
        if (++states > cfg.max_states) throw BudgetExceeded("trop_pruned", "partial state cap exceeded");
    }

    std::vector<PState> initial_states() {
        const int m = t.mu.length();
        std::vector<Item> ends;
        for (int i = 0; i < m; ++i) ends.push_back({labelled ? i : t.mu[i], t.mu[i]});
        std::sort(ends.begin(), ends.end());

        std::map<std::string, PState> out;
        for (auto& col : sub_multisets(ends)) {
            if (static_cast<int>(col.size()) == m) continue;  // coloured set must be proper
            auto reg = minus(ends, col);
            std::set<std::vector<std::vector<int>>> seen;
            set_partitions(static_cast<int>(reg.size()), [&](const std::vector<std::vector<int>>& part) {
                std::vector<std::vector<Item>> blocks;
                for (auto& bl : part) {
                    std::vector<Item> b;
                    for (int i : bl) b.push_back(reg[i]);
                    std::sort(b.begin(), b.end());
                    blocks.push_back(b);
                }
                std::sort(blocks.begin(), blocks.end(), [](auto& x, auto& y) {
                    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
                });
                std::vector<std::vector<int>> tok;
                for (auto& b : blocks) {
                    tok.emplace_back();
                    for (auto& it : b) tok.back().push_back(it.token);
                }
                if (!seen.insert(tok).second) return;
                // choose the split (w1 <= w2) of every block
                std::vector<int> split(blocks.size(), 1);
                std::vector<int> total(blocks.size(), 0);
                for (std::size_t i = 0; i < blocks.size(); ++i)
                    for (auto& it : blocks[i]) total[i] += it.weight;
                for (std::size_t i = 0; i < blocks.size(); ++i)
                    if (total[i] < 2) return;
                while (true) {
                    PState s;
                    s.pool = col;
                    s.graph.type = t;
                    s.graph.labelled = labelled;
                    for (std::size_t i = 0; i < blocks.size(); ++i) {
                        int w1 = split[i], w2 = total[i] - w1;
                        std::vector<int> bw;
                        for (auto& it : blocks[i]) bw.push_back(it.weight);
                        ExactRational mult = initial_multiplicity(bw, w1, w2, cache, cfg.recursion);
                        s.fac *= mult / ExactRational(token_aut(blocks[i]));
                        std::string H = "I(" + items_str(blocks[i], labelled) + ";" + std::to_string(w1) + "," +
                                        std::to_string(w2) + ")";
                        PrunedVertex v;
                        v.position = static_cast<int>(i) + 1;
                        v.kind = PrunedKind::initial;
                        v.multiplicity = mult;
                        for (auto& it : blocks[i])
                            v.in.push_back(s.graph.add_edge({-1, -1, it.weight, false, labelled ? it.token : -1}));
                        int e1 = s.graph.add_edge({-1, -1, w1}), e2 = s.graph.add_edge({-1, -1, w2});
                        v.out = {e1, e2};
                        s.graph.add_vertex(std::move(v));
                        Comp c{H, {{H + "#" + std::to_string(w1), w1, e1}, {H + "#" + std::to_string(w2), w2, e2}},
                               static_cast<int>(blocks[i].size()), 0};
                        sort_strands(c);
                        s.comps.push_back(std::move(c));
                    }
                    if (s.fac != 0) {
                        count_state();
                        out.try_emplace(state_key(s, labelled), std::move(s));
                    }
                    std::size_t i = 0;
                    while (i < split.size() && split[i] == total[i] / 2) split[i++] = 1;
                    if (i == split.size()) break;
                    ++split[i];
                }
            });
        }
        std::vector<PState> v;
        for (auto& [k, s] : out) v.push_back(std::move(s));
        return v;
    }

    // attach coloured ends `cc` as edges; returns their edge ids
    std::vector<int> attach(PState& s, const std::vector<Item>& cc) {
        std::vector<int> ids;
        for (auto& it : cc) ids.push_back(s.graph.add_edge({-1, -1, it.weight, true, labelled ? it.token : -1}));
        return ids;
    }

    std::vector<PrunedMonodromyGraph> run() {
        const int b = branch_count(t);
        const int n = t.nu.length();
        if (b <= 0 || (t.genus == 0 && n <= 2))
            throw Inapplicable("pruned graphs are not enumerated for base-case types");
        const int s_count = b - t.mu.length();
        if (s_count < 0) return {};

        auto level = initial_states();
        for (int step = 0; step < s_count; ++step) {
            std::map<std::string, PState> next;
            auto push = [&](PState&& s) {
                if (s.fac == 0) return;
                count_state();
                next.try_emplace(state_key(s, labelled), std::move(s));
            };
            for (auto& st : level) {
                const int position = st.graph.initial_count() + step + 1;
                for (auto& cc : sub_multisets(st.pool)) {
                    auto rest_pool = minus(st.pool, cc);
                    const int k = static_cast<int>(cc.size());
                    int csum = 0;
                    BigInt cprod = 1;
                    for (auto& it : cc) csum += it.weight, cprod *= it.weight;
                    const ExactRational cw = ExactRational(cprod) / ExactRational(token_aut(cc));
                    const std::string ccs = items_str(cc, labelled);

                    for (std::size_t ci = 0; ci < st.comps.size(); ++ci) {
                        const Comp& C = st.comps[ci];
                        const ComponentStats stats{C.A, C.betti, static_cast<int>(C.strands.size())};
                        // cut
                        for (std::size_t si = 0; si < C.strands.size(); ++si) {
                            if (si > 0 && C.strands[si].term == C.strands[si - 1].term) continue;
                            const Strand& x = C.strands[si];
                            const int tot = x.weight + csum;
                            const ExactRational mv = vertex_multiplicity(PrunedKind::cut, k, stats);
                            for (int w1 = 1; w1 <= tot / 2; ++w1) {
                                int w2 = tot - w1;
                                PState s = st;
                                s.pool = rest_pool;
                                Comp& N = s.comps[ci];
                                N.hist = C.hist + "|cut(" + x.term + ";" + ccs + ";" + std::to_string(w1) + "," +
                                         std::to_string(w2) + ")";
                                int e1 = s.graph.add_edge({-1, -1, w1}), e2 = s.graph.add_edge({-1, -1, w2});
                                PrunedVertex v{position, PrunedKind::cut, {x.edge}, {e1, e2}, attach(s, cc), mv};
                                s.graph.add_vertex(std::move(v));
                                N.strands.erase(N.strands.begin() + si);
                                N.strands.push_back({N.hist + "#" + std::to_string(w1), w1, e1});
                                N.strands.push_back({N.hist + "#" + std::to_string(w2), w2, e2});
                                sort_strands(N);
                                N.A = C.A + 1 + k;
                                s.fac *= mv * cw * x.weight;
                                push(std::move(s));
                            }
                        }
                        // connected join
                        const ExactRational mcj = vertex_multiplicity(PrunedKind::connected_join, k, stats);
                        for (std::size_t i = 0; i < C.strands.size(); ++i)
                            for (std::size_t j = i + 1; j < C.strands.size(); ++j) {
                                const Strand &x = C.strands[i], &y = C.strands[j];
                                PState s = st;
                                s.pool = rest_pool;
                                Comp& N = s.comps[ci];
                                N.hist = C.hist + "|cj(" + x.term + "," + y.term + ";" + ccs + ")";
                                const int tot = x.weight + y.weight + csum;
                                int e = s.graph.add_edge({-1, -1, tot});
                                PrunedVertex v{position, PrunedKind::connected_join, {x.edge, y.edge}, {e},
                                               attach(s, cc), mcj};
                                s.graph.add_vertex(std::move(v));
                                N.strands.erase(N.strands.begin() + j);
                                N.strands.erase(N.strands.begin() + i);
                                N.strands.push_back({N.hist + "#" + std::to_string(tot), tot, e});
                                sort_strands(N);
                                N.A = C.A + 1 + k;
                                N.betti = C.betti + 1;
                                s.fac *= mcj * cw * x.weight * y.weight;
                                if (x.term == y.term) s.fac /= 2;  // wiener
                                push(std::move(s));
                            }
                    }
                    // disconnected join
                    for (std::size_t ci = 0; ci < st.comps.size(); ++ci)
                        for (std::size_t cj = ci + 1; cj < st.comps.size(); ++cj) {
                            const Comp &C1 = st.comps[ci], &C2 = st.comps[cj];
                            const ComponentStats s1{C1.A, C1.betti, static_cast<int>(C1.strands.size())};
                            const ComponentStats s2{C2.A, C2.betti, static_cast<int>(C2.strands.size())};
                            const ExactRational mv = vertex_multiplicity(PrunedKind::disconnected_join, k, s1, s2);
                            if (mv == 0) continue;
                            for (std::size_t i = 0; i < C1.strands.size(); ++i)
                                for (std::size_t j = 0; j < C2.strands.size(); ++j) {
                                    const Strand &x = C1.strands[i], &y = C2.strands[j];
                                    std::string d1 = C1.hist + "@" + x.term, d2 = C2.hist + "@" + y.term;
                                    if (d2 < d1) std::swap(d1, d2);
                                    const int tot = x.weight + y.weight + csum;
                                    PState s = st;
                                    s.pool = rest_pool;
                                    Comp N;
                                    N.hist = "dj(" + d1 + ";" + d2 + ";" + ccs + ")";
                                    for (std::size_t a = 0; a < C1.strands.size(); ++a)
                                        if (a != i) N.strands.push_back(C1.strands[a]);
                                    for (std::size_t a = 0; a < C2.strands.size(); ++a)
                                        if (a != j) N.strands.push_back(C2.strands[a]);
                                    int e = s.graph.add_edge({-1, -1, tot});
                                    PrunedVertex v{position, PrunedKind::disconnected_join, {x.edge, y.edge}, {e},
                                                   attach(s, cc), mv};
                                    s.graph.add_vertex(std::move(v));
                                    N.strands.push_back({N.hist + "#" + std::to_string(tot), tot, e});
                                    sort_strands(N);
                                    N.A = C1.A + C2.A + 1 + k;
                                    N.betti = C1.betti + C2.betti;
                                    s.fac *= mv * cw * x.weight * y.weight;
                                    if (d1 == d2) s.fac /= 2;  // the two joined components are isomorphic
                                    s.comps.erase(s.comps.begin() + cj);
                                    s.comps.erase(s.comps.begin() + ci);
                                    s.comps.push_back(std::move(N));
                                    push(std::move(s));
                                }
                        }
                }
            }
            level.clear();
            for (auto& [key, s] : next) level.push_back(std::move(s));
        }
        return finish(level);
    }

    std::vector<PrunedMonodromyGraph> finish(std::vector<PState>& level) {
        const auto target = t.nu.sorted_desc().parts();
        std::map<std::string, PrunedMonodromyGraph> out;
        for (auto& st : level) {
            if (!st.pool.empty() || st.comps.size() != 1) continue;
            const Comp& C = st.comps[0];
            if (C.betti != t.genus) continue;
            std::vector<int> w;
            for (auto& s : C.strands) w.push_back(s.weight);
            std::sort(w.begin(), w.end(), std::greater<>());
            if (w != target) continue;

            if (!labelled) {
                int right_forks = 0;
                for (std::size_t i = 0; i + 1 < C.strands.size(); ++i)
                    if (C.strands[i].term == C.strands[i + 1].term) ++right_forks;
                BigInt den = 1;
                den <<= right_forks;
                auto G = std::move(st.graph);
                G.canonical = C.hist;
                G.weight = st.fac * ExactRational(partition_automorphisms(t.mu) * partition_automorphisms(t.nu)) /
                           ExactRational(den);
                out.try_emplace(G.canonical, std::move(G));
                continue;
            }
            // labelled: every weight-compatible assignment of nu indices to the
            // final strands, identified when it gives the same (index, term) set
            const int n = t.nu.length();
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            do {
                bool ok = true;
                for (int i = 0; i < n && ok; ++i) ok = C.strands[i].weight == t.nu[perm[i]];
                if (!ok) continue;
                std::vector<std::string> parts;
                for (int i = 0; i < n; ++i) parts.push_back(std::to_string(perm[i]) + ":" + C.strands[i].term);
                std::sort(parts.begin(), parts.end());
                std::string canon = C.hist + "|";
                for (auto& p : parts) canon += p + ";";
                if (out.count(canon)) continue;
                auto G = st.graph;
                for (int i = 0; i < n; ++i) G.edges[C.strands[i].edge].right_label = perm[i];
                G.canonical = canon;
                G.weight = st.fac;
                out.emplace(canon, std::move(G));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        std::vector<PrunedMonodromyGraph> v;
        for (auto& [k, G] : out) v.push_back(std::move(G));
        return v;
    }
};

}  // namespace

std::vector<PrunedMonodromyGraph> enumerate_pruned_monodromy_graphs(const HurwitzType& t,
                                                                    const PrunedTropConfig& cfg) {
    if (t.pruned_side == PrunedSide::right) {
        HurwitzType swapped(t.genus, t.nu, t.mu, PrunedSide::left);
        return enumerate_pruned_monodromy_graphs(swapped, cfg);
    }
    Enumerator e{t, cfg, default_recursion_cache(), cfg.labelled};
    return e.run();
}

ExactRational tropical_pruned(const HurwitzType& t, const PrunedTropConfig& cfg) {
    HurwitzType u = t;
    if (t.pruned_side == PrunedSide::right) u = HurwitzType(t.genus, t.nu, t.mu, PrunedSide::left);
    const int b = branch_count(u);
    if (b <= 0 || (u.genus == 0 && u.nu.length() <= 2))
        return pruned_recursion(u, default_recursion_cache(), cfg.recursion);
    ExactRational total = 0;
    for (auto& G : enumerate_pruned_monodromy_graphs(u, cfg)) total += G.weight;
    return total;
}

std::string to_dot(const PrunedMonodromyGraph& G) {
    std::ostringstream o;
    o << "digraph pruned_monodromy {\n  rankdir=LR;\n  label=\"" << to_string(G.type) << " weight=" << to_string(G.weight)
      << "\";\n";
    for (std::size_t v = 0; v < G.vertices.size(); ++v)
        o << "  v" << v << " [label=\"" << to_string(G.vertices[v].kind) << " @" << G.vertices[v].position
          << "\\nm=" << to_string(G.vertices[v].multiplicity) << "\"];\n";
    for (std::size_t i = 0; i < G.edges.size(); ++i) {
        auto& e = G.edges[i];
        std::string from = e.from < 0 ? "s" + std::to_string(i) : "v" + std::to_string(e.from);
        std::string to = e.to < 0 ? "t" + std::to_string(i) : "v" + std::to_string(e.to);
        if (e.from < 0) o << "  s" << i << " [shape=point,label=\"\"];\n";
        if (e.to < 0) o << "  t" << i << " [shape=point,label=\"\"];\n";
        o << "  " << from << " -> " << to << " [label=\"w=" << e.weight;
        if (e.coloured) o << " coloured\",style=dashed];\n";
        else o << "\"];\n";
    }
    o << "}\n";
    return o.str();
}

}  // namespace hurwitz

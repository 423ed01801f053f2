#include "hurwitz/trop_classical.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace hurwitz {

std::string stable_hash(const std::string& s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string MonodromyGraph::hash() const { return stable_hash(canonical); }

int MonodromyGraph::betti_number() const {
    // ends count as vertices of valence one
    int ends = 0;
    for (auto& e : edges) ends += (e.from < 0) + (e.to < 0);
    int V = static_cast<int>(vertices.size()) + ends;
    int E = static_cast<int>(edges.size());
    return E - V + 1;
}

namespace {

// A live strand: `term` describes its whole history, so the sorted multiset
// of live terms determines the partial graph up to isomorphism.
struct Live {
    std::string term;
    int weight;
    int edge;
    int comp;
};

struct State {
    std::vector<Live> live;
    MonodromyGraph graph;
    int components = 0;
};

std::string state_key(const std::vector<Live>& live) {
    std::vector<const std::string*> terms;
    for (auto& l : live) terms.push_back(&l.term);
    std::sort(terms.begin(), terms.end(), [](auto a, auto b) { return *a < *b; });
    std::string k;
    for (auto* t : terms) k += *t, k += '\n';
    return k;
}

int add_edge(MonodromyGraph& G, int from, int weight) {
    G.edges.push_back({from, -1, weight});
    return static_cast<int>(G.edges.size()) - 1;
}

}  // namespace

std::vector<MonodromyGraph> enumerate_monodromy_graphs(const HurwitzType& t, const TropConfig& cfg) {
    const int b = branch_count(t);
    if (b <= 0) throw Inapplicable("tropical enumeration needs b > 0");
    const int n = t.nu.length();
    const auto target = t.nu.sorted_desc().parts();

    State init;
    init.graph.type = t;
    for (int w : t.mu.parts()) {
        int e = add_edge(init.graph, -1, w);
        init.live.push_back({"L" + std::to_string(w), w, e, init.components++});
    }
    std::map<std::string, State> level;
    level.emplace(state_key(init.live), std::move(init));
    std::uint64_t states = 0;

    for (int pos = 1; pos <= b; ++pos) {
        const int remaining = b - pos;  // steps after this one
        std::map<std::string, State> next;
        auto push = [&](State&& s) {
            int c = static_cast<int>(s.live.size());
            if (std::abs(n - c) > remaining || ((n - c - remaining) & 1)) return;
            int joins_left = (remaining - (n - c)) / 2;
            if (s.components - 1 > joins_left) return;
            if (++states > cfg.max_states) throw BudgetExceeded("trop_classical", "partial state cap exceeded");
            auto key = state_key(s.live);
            next.try_emplace(std::move(key), std::move(s));
        };
        for (auto& [key, st] : level) {
            const int L = static_cast<int>(st.live.size());
            // cuts
            for (int i = 0; i < L; ++i) {
                const Live& x = st.live[i];
                for (int w1 = 1; w1 <= x.weight / 2; ++w1) {
                    int w2 = x.weight - w1;
                    State s = st;
                    auto& G = s.graph;
                    int v = static_cast<int>(G.vertices.size());
                    G.edges[x.edge].to = v;
                    int e1 = add_edge(G, v, w1), e2 = add_edge(G, v, w2);
                    G.vertices.push_back({pos, VertexKind::cut, {x.edge}, {e1, e2}});
                    std::string base = "C" + std::to_string(pos) + "(" + x.term + ")#";
                    int comp = x.comp;
                    s.live.erase(s.live.begin() + i);
                    s.live.push_back({base + std::to_string(w1), w1, e1, comp});
                    s.live.push_back({base + std::to_string(w2), w2, e2, comp});
                    push(std::move(s));
                }
            }
            // joins
            for (int i = 0; i < L; ++i)
                for (int j = i + 1; j < L; ++j) {
                    const Live &x = st.live[i], &y = st.live[j];
                    State s = st;
                    auto& G = s.graph;
                    int v = static_cast<int>(G.vertices.size());
                    G.edges[x.edge].to = v;
                    G.edges[y.edge].to = v;
                    int w = x.weight + y.weight;
                    int e = add_edge(G, v, w);
                    G.vertices.push_back({pos, VertexKind::join, {x.edge, y.edge}, {e}});
                    auto [lo, hi] = std::minmax(x.term, y.term);
                    std::string term = "J" + std::to_string(pos) + "(" + lo + "," + hi + ")#" + std::to_string(w);
                    int cx = x.comp, cy = y.comp;
                    s.live.erase(s.live.begin() + j);
                    s.live.erase(s.live.begin() + i);
                    if (cx != cy) {
                        for (auto& l : s.live)
                            if (l.comp == cy) l.comp = cx;
                        --s.components;
                    }
                    s.live.push_back({std::move(term), w, e, cx});
                    push(std::move(s));
                }
        }
        level = std::move(next);
    }

    std::vector<MonodromyGraph> out;
    for (auto& [key, st] : level) {
        if (st.components != 1) continue;
        std::vector<int> w;
        for (auto& l : st.live) w.push_back(l.weight);
        std::sort(w.begin(), w.end(), std::greater<>());
        if (w != target) continue;
        st.graph.canonical = key;
        out.push_back(std::move(st.graph));
    }
    std::sort(out.begin(), out.end(), [](auto& a, auto& b) { return a.canonical < b.canonical; });
    return out;
}

ForkCounts count_forks(const MonodromyGraph& G) {
    ForkCounts f;
    for (auto& v : G.vertices) {
        if (v.kind == VertexKind::join) {
            auto &a = G.edges[v.in[0]], &c = G.edges[v.in[1]];
            if (a.weight != c.weight) continue;
            if (a.from < 0 && c.from < 0) ++f.left_forks;
            else if (a.from >= 0 && a.from == c.from && G.vertices[a.from].kind == VertexKind::cut) ++f.wieners;
        } else {
            auto &a = G.edges[v.out[0]], &c = G.edges[v.out[1]];
            if (a.weight == c.weight && a.to < 0 && c.to < 0) ++f.right_forks;
        }
    }
    return f;
}

ExactRational graph_automorphism_factor(const MonodromyGraph& G) {
    auto f = count_forks(G);
    BigInt den = 1;
    den <<= f.left_forks + f.right_forks + f.wieners;
    return ExactRational(1, den);
}

ExactRational graph_weight(const MonodromyGraph& G) {
    BigInt prod = partition_automorphisms(G.type.mu) * partition_automorphisms(G.type.nu);
    for (int e = 0; e < static_cast<int>(G.edges.size()); ++e)
        if (G.is_inner(e)) prod *= G.edges[e].weight;
    return ExactRational(prod) * graph_automorphism_factor(G);
}

ExactRational tropical_double_hurwitz(const HurwitzType& t, const TropConfig& cfg) {
    ExactRational total = 0;
    for (auto& G : enumerate_monodromy_graphs(t, cfg)) total += graph_weight(G);
    return total;
}

std::string to_dot(const MonodromyGraph& G) {
    std::ostringstream o;
    o << "digraph monodromy {\n  rankdir=LR;\n  label=\"" << to_string(G.type) << "\";\n";
    for (std::size_t v = 0; v < G.vertices.size(); ++v)
        o << "  v" << v << " [label=\"" << (G.vertices[v].kind == VertexKind::cut ? "cut" : "join") << " @"
          << G.vertices[v].position << "\"];\n";
    int l = 0, r = 0;
    for (auto& e : G.edges) {
        std::string from = e.from < 0 ? "l" + std::to_string(l) : "v" + std::to_string(e.from);
        std::string to = e.to < 0 ? "r" + std::to_string(r) : "v" + std::to_string(e.to);
        if (e.from < 0) o << "  l" << l++ << " [shape=point,label=\"\"];\n";
        if (e.to < 0) o << "  r" << r++ << " [shape=point,label=\"\"];\n";
        o << "  " << from << " -> " << to << " [label=\"w=" << e.weight << "\"];\n";
    }
    o << "}\n";
    return o.str();
}

}  // namespace hurwitz

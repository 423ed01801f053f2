#include "hurwitz/dyck_mobile.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace hurwitz {

// ---------------------------------------------------------------- Dyck paths

std::vector<int> HurwitzDyckPath::heights() const {
    std::vector<int> h{0};
    for (char c : steps) h.push_back(h.back() + (c == 'U' ? 1 : -1));
    return h;
}

namespace {

int essential_ups(const std::string& steps, const std::vector<std::pair<int, int>>& pairs, std::size_t i) {
    auto [v, w] = pairs[i];
    int ess = 0;
    for (int t = v; t < w; ++t) {
        if (steps[t] != 'U') continue;
        bool inner = false;
        for (std::size_t j = 0; j < pairs.size() && !inner; ++j) {
            if (j == i) continue;
            auto [a, c] = pairs[j];
            if (v <= a && c <= w && a <= t && t < c) inner = true;
        }
        if (!inner) ++ess;
    }
    return ess;
}

bool crossing(std::pair<int, int> p, std::pair<int, int> q) {
    return (p.first < q.first && q.first < p.second && p.second < q.second) ||
           (q.first < p.first && p.first < q.second && q.second < p.second);
}

// b-Dyck paths of length 2bd with up-runs of length a multiple of b and a single return.
void b_dyck_paths(int b, int d, const std::function<void(const std::string&)>& f) {
    const int n = b * d;
    std::string path;
    std::function<void(int, int, int)> rec = [&](int h, int ups, int downs) {
        if (ups == n && downs == n) return f(path);
        if ((path.empty() || path.back() == 'D') && ups < n)
            for (int k = 1; k <= (n - ups) / b; ++k) {
                path.append(k * b, 'U');
                rec(h + k * b, ups + k * b, downs);
                path.resize(path.size() - k * b);
            }
        if (!path.empty() && h > 0 && downs < n) {
            if (h == 1 && downs + 1 < n) return;
            path.push_back('D');
            rec(h - 1, ups, downs + 1);
            path.pop_back();
        }
    };
    rec(0, 0, 0);
}

std::vector<int> distinguished_vertices(const std::string& steps, int b) {
    std::vector<int> out;
    int ups = 0;
    for (int v = 0; v < static_cast<int>(steps.size()); ++v) {
        if (ups % b == 0 && steps[v] == 'U') out.push_back(v);
        ups += steps[v] == 'U';
    }
    return out;
}

}  // namespace

int HurwitzDyckPath::degree(int i) const { return essential_ups(steps, marked, i) / b; }

std::string HurwitzDyckPath::serialize() const {
    std::ostringstream o;
    o << steps << " marks=[";
    for (std::size_t i = 0; i < marked.size(); ++i)
        o << (i ? " " : "") << i << ":(" << marked[i].first << "," << marked[i].second << ")";
    o << "] dist=[" << join_ints(distinguished, " ") << "]";
    return o.str();
}

std::vector<HurwitzDyckPath> enumerate_hurwitz_dyck_paths(const Partition& mu, const DyckConfig& cfg) {
    const int d = mu.degree(), m = mu.length();
    if (d > cfg.max_degree) throw BudgetExceeded("dyck_mobile", "Dyck enumeration limited to d <= " + std::to_string(cfg.max_degree));
    const int b = m + d - 2;
    std::vector<HurwitzDyckPath> out;
    if (b <= 0) return out;
    const auto target = mu.sorted_desc().parts();

    b_dyck_paths(b, d, [&](const std::string& steps) {
        const int N = static_cast<int>(steps.size());
        std::vector<int> h{0};
        for (char c : steps) h.push_back(h.back() + (c == 'U' ? 1 : -1));
        auto dist = distinguished_vertices(steps, b);
        std::set<int> dres;
        for (int v : dist) dres.insert(h[v] % (b + 1));
        if (static_cast<int>(dres.size()) != d) return;

        std::vector<int> cand;
        for (int v = 1; v < N; ++v)
            if (steps[v - 1] == 'D' || steps[v] == 'D') cand.push_back(v);
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i < cand.size(); ++i)
            for (std::size_t j = i + 1; j < cand.size(); ++j)
                if (h[cand[i]] == h[cand[j]]) pairs.emplace_back(cand[i], cand[j]);

        std::vector<std::pair<int, int>> chosen{{0, N}};
        std::vector<char> used(N + 1, 0);
        used[0] = used[N] = 1;
        std::set<int> mres{0};
        std::function<void(std::size_t)> rec = [&](std::size_t start) {
            if (static_cast<int>(chosen.size()) == m) {
                std::vector<int> degs;
                for (std::size_t i = 0; i < chosen.size(); ++i) {
                    int e = essential_ups(steps, chosen, i);
                    if (e % b) return;
                    degs.push_back(e / b);
                }
                auto sorted = degs;
                std::sort(sorted.begin(), sorted.end(), std::greater<>());
                if (sorted != target) return;
                // every labelling of the pairs compatible with the degrees
                std::vector<int> assign(m, -1);
                std::vector<char> taken(m, 0);
                std::function<void(int)> label = [&](int i) {
                    if (i == m) {
                        HurwitzDyckPath D;
                        D.mu = mu;
                        D.b = b;
                        D.steps = steps;
                        D.distinguished = dist;
                        for (int k = 0; k < m; ++k) D.marked.push_back(chosen[assign[k]]);
                        out.push_back(std::move(D));
                        return;
                    }
                    for (int p = 0; p < m; ++p)
                        if (!taken[p] && degs[p] == mu[i]) {
                            taken[p] = 1;
                            assign[i] = p;
                            label(i + 1);
                            taken[p] = 0;
                        }
                };
                label(0);
                return;
            }
            for (std::size_t k = start; k < pairs.size(); ++k) {
                auto pr = pairs[k];
                if (used[pr.first] || used[pr.second]) continue;
                int r = h[pr.first] % (b + 1);
                if (mres.count(r) || dres.count(r)) continue;  // residues distinct, nonzero ones disjoint
                bool ok = true;
                for (auto& c : chosen) ok = ok && !crossing(c, pr);
                if (!ok) continue;
                chosen.push_back(pr);
                used[pr.first] = used[pr.second] = 1;
                mres.insert(r);
                rec(k + 1);
                mres.erase(r);
                used[pr.first] = used[pr.second] = 0;
                chosen.pop_back();
            }
        };
        rec(0);
    });
    std::sort(out.begin(), out.end(), [](auto& a, auto& c) { return a.serialize() < c.serialize(); });
    return out;
}

bool is_pruned_dyck(const HurwitzDyckPath& D) {
    const int N = D.length(), b = D.b;
    const auto h = D.heights();
    std::set<int> marked;
    for (auto [v, w] : D.marked) marked.insert(v), marked.insert(w);
    // descent condition: every run of b down-steps from a peak holds a marked vertex
    for (int v = 1; v < N; ++v) {
        if (D.steps[v - 1] != 'U' || D.steps[v] != 'D' || v + b > N) continue;
        bool run = true;
        for (int t = v; t < v + b && run; ++t) run = D.steps[t] == 'D';
        if (!run) continue;
        auto it = marked.lower_bound(v);
        if (it == marked.end() || *it > v + b) return false;
    }
    // lowest distinguished vertex condition
    int best = -1;
    for (int v : D.distinguished)
        if (h[v] > 0 && (best < 0 || h[v] < h[best])) best = v;
    if (best >= 0 && D.distinguished.size() > 1 && D.distinguished[1] == best) {
        bool left = std::any_of(marked.begin(), marked.end(), [&](int x) { return 0 < x && x < best; });
        if (!left) return false;
    }
    return true;
}

std::vector<std::set<int>> gluing_lines(const HurwitzDyckPath& D) {
    const auto h = D.heights();
    const int N = D.length();
    std::vector<std::set<int>> classes;
    std::map<int, int> last_at;  // height -> index of the class holding the last vertex seen at that height
    for (int v = 0; v <= N; ++v) {
        int y = h[v];
        auto it = last_at.find(y);
        bool joined = false;
        if (it != last_at.end()) {
            int u = *classes[it->second].rbegin();
            int lo = *std::min_element(h.begin() + u, h.begin() + v + 1);
            if (lo >= y) {
                classes[it->second].insert(v);
                joined = true;
            }
        }
        if (!joined) {
            classes.push_back({v});
            last_at[y] = static_cast<int>(classes.size()) - 1;
        }
    }
    return classes;
}

bool dyck_invariants_hold(const HurwitzDyckPath& D) {
    const int N = D.length(), b = D.b, m = D.mu.length(), d = D.mu.degree();
    if (N != 2 * b * d || b != m + d - 2) return false;
    auto h = D.heights();
    for (int v = 1; v < N; ++v)
        if (h[v] <= 0) return false;
    if (h[N] != 0) return false;
    for (int v = 0; v < N;) {
        if (D.steps[v] != 'U') {
            ++v;
            continue;
        }
        int r = 0;
        while (v < N && D.steps[v] == 'U') ++r, ++v;
        if (r % b) return false;
    }
    if (static_cast<int>(D.marked.size()) != m) return false;
    std::set<int> mres, dres, verts;
    bool has_outer = false;
    for (auto [v, w] : D.marked) {
        if (v == 0 && w == N) has_outer = true;
        if (h[v] != h[w] || !verts.insert(v).second || !verts.insert(w).second) return false;
        mres.insert(h[v] % (b + 1));
    }
    for (int v : D.distinguished) dres.insert(h[v] % (b + 1));
    if (!has_outer || static_cast<int>(mres.size()) != m || static_cast<int>(dres.size()) != d) return false;
    for (int r : mres)
        if (r != 0 && dres.count(r)) return false;
    for (std::size_t i = 0; i < D.marked.size(); ++i)
        for (std::size_t j = i + 1; j < D.marked.size(); ++j)
            if (crossing(D.marked[i], D.marked[j])) return false;
    for (int i = 0; i < m; ++i) {
        int e = essential_ups(D.steps, D.marked, i);
        if (e % b || e / b != D.mu[i]) return false;
    }
    return true;
}

// ------------------------------------------------------------------- mobiles

int Mobile::black_polygon_count() const {
    return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](auto& e) { return e.weight == 1; }));
}

std::string Mobile::canonical() const {
    const int m = mu.length();
    std::vector<int> rot(m, 0);
    std::string best;
    bool first = true;
    while (true) {
        std::string rep;
        for (auto& e : edges) {
            std::vector<std::pair<int, int>> ends;
            for (auto [p, n] : e.white_ends) ends.emplace_back(p, ((n - rot[p]) % mu[p] + mu[p]) % mu[p]);
            std::sort(ends.begin(), ends.end());
            rep += std::to_string(e.label) + "w" + std::to_string(e.weight) + ":";
            for (auto [p, n] : ends) rep += std::to_string(p) + "." + std::to_string(n) + ",";
            rep += ";";
        }
        if (first || rep < best) best = rep, first = false;
        int i = 0;
        while (i < m && rot[i] == mu[i] - 1) rot[i++] = 0;
        if (i == m) break;
        ++rot[i];
    }
    return best;
}

bool Mobile::invariants_hold() const {
    const int m = mu.length(), d = mu.degree();
    if (static_cast<int>(edges.size()) != b + 1 || b != m + d - 2) return false;
    std::vector<int> load(m, 0);
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    int comps = m;
    for (int l = 0; l <= b; ++l) {
        auto& e = edges[l];
        if (e.label != l) return false;
        for (auto [p, n] : e.white_ends)
            if (p < 0 || p >= m || n < 0 || n >= mu[p]) return false;
        if (e.weight == 1) {
            if (e.white_ends.size() != 1) return false;
            ++load[e.white_ends[0].first];
        } else if (e.weight == 0) {
            if (e.white_ends.size() != 2) return false;
            int x = find(e.white_ends[0].first), y = find(e.white_ends[1].first);
            if (x == y) return false;
            parent[x] = y;
            --comps;
        } else {
            return false;
        }
    }
    if (comps != 1) return false;
    for (int i = 0; i < m; ++i)
        if (load[i] != mu[i]) return false;  // weight sum around every white i-gon is i
    return black_polygon_count() == d;       // and every black 1-gon carries weight 1
}

std::vector<Mobile> enumerate_mobiles(const Partition& mu, const Partition& nu, const MobileConfig& cfg) {
    const int d = mu.degree(), m = mu.length();
    if (nu != Partition::ones(d)) throw Inapplicable("mobiles are implemented for type (mu, 1^d) only");
    if (d > cfg.max_degree) throw BudgetExceeded("dyck_mobile", "mobile enumeration limited to d <= " + std::to_string(cfg.max_degree));
    const int b = m + d - 2, L = b + 1;
    std::map<std::string, Mobile> out;

    // zero-weight labels: every (m-1)-subset
    std::vector<char> is_zero(L, 0);
    std::fill(is_zero.end() - (m - 1), is_zero.end(), 1);
    do {
        std::vector<int> zl, bl;
        for (int l = 0; l < L; ++l) (is_zero[l] ? zl : bl).push_back(l);
        // assign black labels to polygons, polygon i receiving mu[i] of them
        std::vector<int> polys;
        for (int i = 0; i < m; ++i) polys.insert(polys.end(), mu[i], i);
        do {
            // zero edges: ordered list of polygon pairs forming a spanning tree
            std::vector<std::pair<int, int>> pairs;
            for (int a = 0; a < m; ++a)
                for (int c = a + 1; c < m; ++c) pairs.emplace_back(a, c);
            std::vector<int> zp(m - 1, 0);
            while (true) {
                std::vector<int> parent(m);
                std::iota(parent.begin(), parent.end(), 0);
                std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
                int comps = m;
                for (int k : zp) {
                    int x = find(pairs[k].first), y = find(pairs[k].second);
                    if (x != y) parent[x] = y, --comps;
                }
                if (comps == 1) {
                    // node choices for every white endpoint
                    Mobile M;
                    M.mu = mu;
                    M.b = b;
                    M.edges.resize(L);
                    for (std::size_t k = 0; k < bl.size(); ++k) {
                        M.edges[bl[k]] = {bl[k], 1, {{polys[k], 0}}};
                    }
                    for (std::size_t k = 0; k < zl.size(); ++k)
                        M.edges[zl[k]] = {zl[k], 0, {{pairs[zp[k]].first, 0}, {pairs[zp[k]].second, 0}}};
                    std::vector<std::pair<int, int>*> ends;
                    for (auto& e : M.edges)
                        for (auto& we : e.white_ends) ends.push_back(&we);
                    std::function<void(std::size_t)> rec = [&](std::size_t i) {
                        if (i == ends.size()) {
                            out.try_emplace(M.canonical(), M);
                            return;
                        }
                        for (int n = 0; n < mu[ends[i]->first]; ++n) {
                            ends[i]->second = n;
                            rec(i + 1);
                        }
                    };
                    rec(0);
                }
                int i = 0;
                while (i < m - 1 && zp[i] == static_cast<int>(pairs.size()) - 1) zp[i++] = 0;
                if (i >= m - 1) break;
                ++zp[i];
            }
        } while (std::next_permutation(polys.begin(), polys.end()));
    } while (std::next_permutation(is_zero.begin(), is_zero.end()));

    std::vector<Mobile> v;
    for (auto& [k, M] : out) v.push_back(std::move(M));
    return v;
}

Mobile shift(const Mobile& M) {
    Mobile r = M;
    for (auto& e : M.edges) {
        MobileEdge ne = e;
        if (e.label == M.b)
            for (auto& [p, n] : ne.white_ends) n = (n + 1) % M.mu[p];
        ne.label = (e.label + 1) % (M.b + 1);
        r.edges[ne.label] = ne;
    }
    return r;
}

int shift_orbit_size(const Mobile& M) {
    const std::string c = M.canonical();
    Mobile x = shift(M);
    int k = 1;
    while (x.canonical() != c) x = shift(x), ++k;
    return k;
}

namespace {

// Edges incident to each white node, sorted by label. Around a node the
// cyclic order is: incoming arc, edges by increasing label, outgoing arc.
std::map<std::pair<int, int>, std::vector<int>> node_edges(const Mobile& M) {
    std::map<std::pair<int, int>, std::vector<int>> at;
    for (auto& e : M.edges)
        for (auto we : e.white_ends) at[we].push_back(e.label);
    for (auto& [k, v] : at) std::sort(v.begin(), v.end());
    return at;
}

// Walks the contour from the weight-1 edge y. Calls `visit(edge, white, black)`
// for every edge met; stops when it returns true or after one full contour.
void walk(const Mobile& M, int y, const std::function<bool(int, int, int)>& visit) {
    auto at = node_edges(M);
    std::pair<int, int> node = M.edges[y].white_ends.at(0);
    int white = 0, black = 1;  // the arc of y's own black polygon
    auto index_in = [&](std::pair<int, int> nd, int label) {
        auto& v = at[nd];
        return static_cast<int>(std::find(v.begin(), v.end(), label) - v.begin());
    };
    int pos = index_in(node, y);
    const int limit = 4 * (M.b + 1) + 4 * M.mu.degree() + 8;
    for (int guard = 0; guard < limit; ++guard) {
        auto& list = at[node];
        if (pos + 1 >= static_cast<int>(list.size())) {
            ++white;
            node = {node.first, (node.second + 1) % M.mu[node.first]};
            pos = -1;
            continue;
        }
        int e = list[++pos];
        if (e == y) return;
        if (visit(e, white, black)) return;
        const MobileEdge& E = M.edges[e];
        if (E.weight == 1) {
            ++black;
        } else {
            node = E.white_ends[0] == node ? E.white_ends[1] : E.white_ends[0];
            pos = index_in(node, e);
        }
    }
}

}  // namespace

std::pair<int, int> mobile_distances(const Mobile& M, int y, int z) {
    std::pair<int, int> r{-1, -1};
    walk(M, y, [&](int e, int w, int b) {
        if (e != z) return false;
        r = {w, b};
        return true;
    });
    return r;
}

bool interrupts(const Mobile& M, int y, int z) {
    auto [w, b] = mobile_distances(M, y, z);
    if (w < 0) return false;
    return w < b || (w == b && y < z);
}

int next_labelled_edge(const Mobile& M, int y) {
    int r = -1;
    walk(M, y, [&](int e, int, int) {
        r = e;
        return true;
    });
    return r;
}

bool is_pruned_mobile_standard(const Mobile& M) {
    for (auto& e : M.edges) {
        if (e.weight != 1) continue;
        const int y = e.label;
        const int z = next_labelled_edge(M, y);
        if (y != 0) {
            if (z < 0 || !interrupts(M, y, z)) return false;
            continue;
        }
        if (z < 0) return false;
        if (M.edges[z].weight == 0) continue;
        bool some = false;
        for (auto& f : M.edges)
            if (f.label != 0 && f.label != z && !interrupts(M, z, f.label)) some = true;
        if (!some) return false;
    }
    return true;
}

MobileDiagnostic pruned_mobile_diagnostic(const Partition& mu) {
    MobileDiagnostic r;
    auto all = enumerate_mobiles(mu, Partition::ones(mu.degree()));
    std::set<std::string> seen;
    for (auto& M : all) {
        if (seen.count(M.canonical())) continue;
        ++r.classes;
        bool any = false;
        Mobile x = M;
        for (int k = 0; k <= M.b; ++k) {
            seen.insert(x.canonical());
            any = any || is_pruned_mobile_standard(x);
            x = shift(x);
        }
        r.classes_with_predicate += any;
    }
    for (auto& D : enumerate_hurwitz_dyck_paths(mu)) r.pruned_dyck += is_pruned_dyck(D);
    return r;
}

std::string to_dot(const Mobile& M) {
    std::ostringstream o;
    o << "graph mobile {\n  label=\"mu=" << join_ints(M.mu.parts()) << "\";\n";
    for (int p = 0; p < M.mu.length(); ++p) {
        o << "  subgraph cluster_w" << p << " {\n    label=\"white " << p << "\";\n";
        for (int n = 0; n < M.mu[p]; ++n) o << "    w" << p << "_" << n << " [shape=circle,label=\"\"];\n";
        for (int n = 0; n < M.mu[p]; ++n)
            o << "    w" << p << "_" << n << " -- w" << p << "_" << (n + 1) % M.mu[p] << " [style=bold];\n";
        o << "  }\n";
    }
    for (auto& e : M.edges) {
        auto [p, n] = e.white_ends[0];
        if (e.weight == 1) {
            o << "  k" << e.label << " [shape=circle,style=filled,fillcolor=black,label=\"\"];\n";
            o << "  w" << p << "_" << n << " -- k" << e.label;
        } else {
            auto [q, l] = e.white_ends[1];
            o << "  w" << p << "_" << n << " -- w" << q << "_" << l;
        }
        o << " [label=\"(" << e.label << ", " << e.weight << ")\"];\n";
    }
    o << "}\n";
    return o.str();
}

}  // namespace hurwitz

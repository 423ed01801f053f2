#include "hurwitz/poly_lab.hpp"

#include "hurwitz/oracle.hpp"
#include "hurwitz/pruned_recursion.hpp"
#include "hurwitz/trop_classical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace hurwitz {

// ---------------------------------------------------------------- hyperplanes

long Hyperplane::value(const LatticePoint& p) const {
    long v = 0;
    const std::size_t m = a.size();
    for (std::size_t i = 0; i < m; ++i) v += static_cast<long>(a[i]) * p[i];
    for (std::size_t j = 0; j < b.size(); ++j) v -= static_cast<long>(b[j]) * p[m + j];
    return v;
}

std::string Hyperplane::to_string() const {
    std::string s;
    auto term = [&](int c, const std::string& var) {
        if (c == 0) return;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        s += var;
    };
    for (std::size_t i = 0; i < a.size(); ++i) term(a[i], "mu" + std::to_string(i + 1));
    for (std::size_t j = 0; j < b.size(); ++j) term(-b[j], "nu" + std::to_string(j + 1));
    return s;
}

std::vector<int> Hyperplane::I() const {
    std::vector<int> r;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) r.push_back(static_cast<int>(i));
    return r;
}

std::vector<int> Hyperplane::J() const {
    std::vector<int> r;
    for (std::size_t j = 0; j < b.size(); ++j)
        if (b[j]) r.push_back(static_cast<int>(j));
    return r;
}

namespace {

// Coefficients after eliminating nu_n = sum(mu) - sum_{j<n} nu_j, sign-normalized.
std::vector<int> reduced(const Hyperplane& h) {
    const int bn = h.b.back();
    std::vector<int> r;
    for (int ai : h.a) r.push_back(ai - bn);
    for (std::size_t j = 0; j + 1 < h.b.size(); ++j) r.push_back(-h.b[j] + bn);
    for (int x : r)
        if (x != 0) {
            if (x < 0)
                for (int& y : r) y = -y;
            break;
        }
    return r;
}

}  // namespace

std::vector<Hyperplane> hyperplanes(int m, int n, bool refined) {
    if (m < 1 || n < 1) throw std::invalid_argument("hyperplanes need m, n >= 1");
    std::vector<Hyperplane> out;
    std::set<std::vector<int>> seen;
    const int k = m + n;
    std::vector<int> c(k, refined ? -1 : 0);
    const int lo = refined ? -1 : 0;
    while (true) {
        Hyperplane h;
        h.a.assign(c.begin(), c.begin() + m);
        h.b.assign(c.begin() + m, c.end());
        auto r = reduced(h);
        if (std::any_of(r.begin(), r.end(), [](int x) { return x != 0; }) && seen.insert(r).second) out.push_back(h);
        int i = 0;
        while (i < k && c[i] == 1) c[i++] = lo;
        if (i == k) break;
        ++c[i];
    }
    return out;
}

std::optional<ChamberSignature> chamber_signature(const std::vector<Hyperplane>& H, const LatticePoint& p) {
    ChamberSignature s;
    for (auto& h : H) {
        long v = h.value(p);
        if (v == 0) return std::nullopt;
        s.push_back(v > 0 ? 1 : -1);
    }
    return s;
}

// ---------------------------------------------------------------- polynomials

void MultivariatePolynomial::add_term(const Exponent& e, const ExactRational& c) {
    if (static_cast<int>(e.size()) != vars_) throw std::invalid_argument("exponent length mismatch");
    auto& x = terms_[e];
    x += c;
    if (x == 0) terms_.erase(e);
}

ExactRational MultivariatePolynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ExactRational(0) : it->second;
}

ExactRational MultivariatePolynomial::evaluate(const LatticePoint& p) const {
    ExactRational v = 0;
    for (auto& [e, c] : terms_) {
        BigInt mon = 1;
        for (int i = 0; i < vars_; ++i)
            for (int t = 0; t < e[i]; ++t) mon *= p[i];
        v += c * ExactRational(mon);
    }
    return v;
}

int MultivariatePolynomial::total_degree() const {
    int d = -1;
    for (auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

MultivariatePolynomial MultivariatePolynomial::operator-(const MultivariatePolynomial& o) const {
    MultivariatePolynomial r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultivariatePolynomial MultivariatePolynomial::operator+(const MultivariatePolynomial& o) const {
    MultivariatePolynomial r = *this;
    for (auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

std::string MultivariatePolynomial::to_string(int m) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, ExactRational>> sorted(terms_.begin(), terms_.end());
    std::sort(sorted.begin(), sorted.end(), [](auto& x, auto& y) {
        int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
        int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
        return dx != dy ? dx > dy : x.first > y.first;
    });
    std::string s;
    for (auto& [e, c] : sorted) {
        if (!s.empty()) s += " + ";
        s += hurwitz::to_string(c);
        for (int i = 0; i < vars_; ++i) {
            if (!e[i]) continue;
            s += "*" + (i < m ? "mu" + std::to_string(i + 1) : "nu" + std::to_string(i - m + 1));
            if (e[i] > 1) s += "^" + std::to_string(e[i]);
        }
    }
    return s;
}

MultivariatePolynomial wall_crossing(const MultivariatePolynomial& P1, const MultivariatePolynomial& P2) {
    return P1 - P2;
}

// -------------------------------------------------------------------- fitting

std::vector<LatticePoint> lattice_points(int m, int n, int box) {
    std::vector<LatticePoint> out;
    LatticePoint p(m + n, 1);
    const int free = m + n - 1;
    while (true) {
        int smu = 0, snu = 0;
        for (int i = 0; i < m; ++i) smu += p[i];
        for (int j = m; j < free; ++j) snu += p[j];
        int last = smu - snu;
        if (last >= 1 && last <= box) {
            p[free] = last;
            out.push_back(p);
        }
        int i = 0;
        while (i < free && p[i] == box) p[i++] = 1;
        if (i == free) break;
        ++p[i];
    }
    std::sort(out.begin(), out.end(), [](auto& x, auto& y) {
        int dx = std::accumulate(x.begin(), x.end(), 0), dy = std::accumulate(y.begin(), y.end(), 0);
        return dx != dy ? dx < dy : x < y;
    });
    return out;
}

namespace {

std::vector<MultivariatePolynomial::Exponent> monomials(int free_vars, int total_vars, int degree) {
    std::vector<MultivariatePolynomial::Exponent> out;
    MultivariatePolynomial::Exponent e(total_vars, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == free_vars) {
            out.push_back(e);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(0, degree);
    return out;
}

std::vector<ExactRational> row(const std::vector<MultivariatePolynomial::Exponent>& mons, const LatticePoint& p) {
    std::vector<ExactRational> r;
    for (auto& e : mons) {
        BigInt v = 1;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int t = 0; t < e[i]; ++t) v *= p[i];
        r.emplace_back(v);
    }
    return r;
}

}  // namespace

FitResult fit_polynomial(const std::vector<LatticePoint>& points, const std::vector<ExactRational>& values, int m,
                         int n, int degree, std::size_t min_heldout) {
    const auto mons = monomials(m + n - 1, m + n, degree);
    const std::size_t N = mons.size();

    // rank-greedy selection: keep a point when it enlarges the row space
    std::vector<std::vector<ExactRational>> basis;  // reduced rows
    std::vector<std::size_t> pivots;
    std::vector<std::size_t> chosen, rest;
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (basis.size() == N) {
            rest.push_back(k);
            continue;
        }
        auto r = row(mons, points[k]);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (r[pivots[b]] == 0) continue;
            ExactRational f = r[pivots[b]] / basis[b][pivots[b]];
            for (std::size_t c = 0; c < N; ++c) r[c] -= f * basis[b][c];
        }
        auto piv = std::find_if(r.begin(), r.end(), [](auto& x) { return x != 0; });
        if (piv == r.end()) {
            rest.push_back(k);
            continue;
        }
        pivots.push_back(static_cast<std::size_t>(piv - r.begin()));
        basis.push_back(std::move(r));
        chosen.push_back(k);
    }
    if (basis.size() < N)
        throw SingularSystem("only " + std::to_string(basis.size()) + " independent points for " + std::to_string(N) +
                             " monomials");
    if (rest.size() < min_heldout)
        throw SingularSystem("only " + std::to_string(rest.size()) + " held-out points, need " +
                             std::to_string(min_heldout));

    // solve the square system by Gauss-Jordan elimination
    std::vector<std::vector<ExactRational>> A;
    for (std::size_t k : chosen) {
        auto r = row(mons, points[k]);
        r.push_back(values[k]);
        A.push_back(std::move(r));
    }
    for (std::size_t col = 0; col < N; ++col) {
        std::size_t piv = col;
        while (piv < N && A[piv][col] == 0) ++piv;
        if (piv == N) throw SingularSystem("interpolation matrix is singular");
        std::swap(A[piv], A[col]);
        ExactRational inv = 1 / A[col][col];
        for (auto& x : A[col]) x *= inv;
        for (std::size_t r = 0; r < N; ++r) {
            if (r == col || A[r][col] == 0) continue;
            ExactRational f = A[r][col];
            for (std::size_t c = col; c <= N; ++c) A[r][c] -= f * A[col][c];
        }
    }
    FitResult res;
    res.poly = MultivariatePolynomial(m + n);
    for (std::size_t i = 0; i < N; ++i) res.poly.add_term(mons[i], A[i][N]);
    for (std::size_t k : chosen) res.interpolation.push_back(points[k]);
    for (std::size_t k : rest) {
        if (res.poly.evaluate(points[k]) != values[k]) {
            std::string where;
            for (int x : points[k]) where += std::to_string(x) + " ";
            throw FitMismatch("held-out point (" + where + ") disagrees with the fit");
        }
        res.heldout.push_back(points[k]);
    }
    return res;
}

namespace {

HurwitzType type_at(int g, int m, const LatticePoint& p) {
    std::vector<int> mu(p.begin(), p.begin() + m), nu(p.begin() + m, p.end());
    return HurwitzType(g, Partition(mu), Partition(nu));
}

std::vector<ExactRational> evaluate_all(const Engine& engine, int g, int m, const std::vector<LatticePoint>& pts) {
    std::vector<ExactRational> vals(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) vals[i] = engine(type_at(g, m, pts[i]));
    return vals;
}

}  // namespace

Engine engine_hurwitz() {
    return [](const HurwitzType& t) { return tropical_double_hurwitz(t); };
}

Engine engine_pruned_hurwitz() {
    return [](const HurwitzType& t) { return pruned_recursion(t); };
}

FitResult fit_chamber_polynomial(const Engine& engine, int g, int m, int n, const ChamberSignature& signature,
                                 const std::vector<Hyperplane>& H, int degree, int box) {
    std::vector<LatticePoint> pts;
    for (auto& p : lattice_points(m, n, box)) {
        auto s = chamber_signature(H, p);
        if (s && *s == signature) pts.push_back(p);
    }
    const std::size_t N = monomials(m + n - 1, m + n, degree).size();
    return fit_polynomial(pts, evaluate_all(engine, g, m, pts), m, n, degree, 2 * N);
}

std::vector<ChamberReport> fit_all_chambers(const Engine& engine, int g, int m, int n, int box,
                                            std::optional<int> degree) {
    const int deg = degree.value_or(4 * g - 3 + m + n);
    const auto H = hyperplanes(m, n, false);
    std::map<ChamberSignature, std::vector<LatticePoint>> chambers;
    for (auto& p : lattice_points(m, n, box))
        if (auto s = chamber_signature(H, p)) chambers[*s].push_back(p);
    const std::size_t N = monomials(m + n - 1, m + n, deg).size();
    std::vector<ChamberReport> out;
    for (auto& [sig, pts] : chambers) {
        ChamberReport r;
        r.signature = sig;
        r.points = pts.size();
        try {
            r.fit = fit_polynomial(pts, evaluate_all(engine, g, m, pts), m, n, deg, 2 * N);
            r.pass = r.fit.poly.total_degree() <= deg;
        } catch (const std::exception& e) {
            r.error = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<WallCheck> check_genus0_wall_crossing(int m, int n, int box, int max_degree) {
    const auto H = hyperplanes(m, n, false);
    const int deg = m + n - 3;
    auto reports = fit_all_chambers(engine_hurwitz(), 0, m, n, box, deg);
    std::map<ChamberSignature, const ChamberReport*> by_sig;
    for (auto& r : reports)
        if (r.pass) by_sig[r.signature] = &r;

    std::map<ChamberSignature, std::vector<LatticePoint>> pts;
    for (auto& p : lattice_points(m, n, box)) {
        int d = std::accumulate(p.begin(), p.begin() + m, 0);
        if (d > max_degree) continue;
        if (auto s = chamber_signature(H, p)) pts[*s].push_back(p);
    }

    std::vector<WallCheck> out;
    for (auto& [s1, r1] : by_sig)
        for (std::size_t w = 0; w < H.size(); ++w) {
            auto s2 = s1;
            s2[w] = -s2[w];
            auto it = by_sig.find(s2);
            if (it == by_sig.end()) continue;
            // orient the wall so that it is positive on the first chamber
            Hyperplane h = H[w];
            if (s1[w] < 0) {
                for (auto& x : h.a) x = 1 - x;
                for (auto& x : h.b) x = 1 - x;
            }
            WallCheck wc{h, s1, s2, 0, 0};
            const auto I = h.I(), J = h.J();
            std::vector<int> Ic, Jc;
            for (int i = 0; i < m; ++i)
                if (!h.a[i]) Ic.push_back(i);
            for (int j = 0; j < n; ++j)
                if (!h.b[j]) Jc.push_back(j);
            const auto WC = wall_crossing(r1->fit.poly, it->second->fit.poly);
            const BigInt binom = binomial(m + n - 2, static_cast<int>(I.size() + J.size()) - 1);
            for (auto& p : pts[s1]) {
                const int delta = static_cast<int>(h.value(p));
                std::vector<int> muI, nuJ, muIc, nuJc;
                for (int i : I) muI.push_back(p[i]);
                for (int j : J) nuJ.push_back(p[m + j]);
                for (int i : Ic) muIc.push_back(p[i]);
                for (int j : Jc) nuJc.push_back(p[m + j]);
                nuJ.push_back(delta);
                muIc.push_back(delta);
                ExactRational rhs = 0;
                if (!muI.empty() && !nuJc.empty())
                    rhs = ExactRational(binom) * delta * double_hurwitz(HurwitzType(0, Partition(muI), Partition(nuJ))) *
                          double_hurwitz(HurwitzType(0, Partition(muIc), Partition(nuJc)));
                ++wc.points;
                if (WC.evaluate(p) != rhs) ++wc.failures;
            }
            out.push_back(std::move(wc));
        }
    return out;
}

// ------------------------------------------------------ per-graph contribution

ExactRational per_graph_contribution(const PrunedMonodromyGraph& G, const LatticePoint& point) {
    const int m = G.type.mu.length(), n = G.type.nu.length();
    if (static_cast<int>(point.size()) != m + n) throw std::invalid_argument("point has the wrong arity");
    if (!G.labelled) throw std::invalid_argument("per-graph contributions need a labelled graph");
    if (G.betti_number() != 0) throw std::invalid_argument("per-graph contributions are genus 0 only");
    const int V = static_cast<int>(G.vertices.size()), E = static_cast<int>(G.edges.size());

    auto end_value = [&](const PrunedEdge& e) -> long {
        if (e.from < 0) return point.at(e.left_label);
        return -static_cast<long>(point.at(m + e.right_label));
    };
    // weight of an edge: flow out of the side containing its tail
    std::vector<long> w(E, 0);
    for (int k = 0; k < E; ++k) {
        const auto& e = G.edges[k];
        if (e.from < 0) {
            w[k] = point.at(e.left_label);
            continue;
        }
        if (e.to < 0) {
            w[k] = point.at(m + e.right_label);
            continue;
        }
        std::vector<char> seen(V, 0);
        std::vector<int> stack{e.from};
        seen[e.from] = 1;
        long flow = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int j = 0; j < E; ++j) {
                if (j == k) continue;
                const auto& f = G.edges[j];
                if (f.from != v && f.to != v) continue;
                if (f.from < 0 || f.to < 0) {
                    flow += end_value(f);
                    continue;
                }
                int u = f.from == v ? f.to : f.from;
                if (!seen[u]) seen[u] = 1, stack.push_back(u);
            }
        }
        w[k] = flow;
    }
    for (int k = 0; k < E; ++k)
        if (w[k] <= 0) throw TypeNotRealized("edge weight " + std::to_string(w[k]) + " is not positive");

    ExactRational total = 1;
    std::vector<int> comp(V, -1);
    std::vector<ComponentStats> stats;
    auto find_comp = [&](int edge) { return comp[G.edges[edge].from]; };
    for (int v = 0; v < V; ++v) {
        const auto& x = G.vertices[v];
        const int k = static_cast<int>(x.coloured.size());
        for (int e : x.coloured) total *= w[e];
        if (x.kind == PrunedKind::initial) {
            std::vector<int> block;
            for (int e : x.in) block.push_back(static_cast<int>(w[e]));
            total *= initial_multiplicity(block, static_cast<int>(w[x.out[0]]), static_cast<int>(w[x.out[1]]),
                                          default_recursion_cache());
            comp[v] = static_cast<int>(stats.size());
            stats.push_back({static_cast<int>(x.in.size()), 0, 2});
            continue;
        }
        for (int e : x.in) total *= w[e];  // inputs of secondary vertices are inner edges
        if (x.kind == PrunedKind::disconnected_join) {
            int c1 = find_comp(x.in[0]), c2 = find_comp(x.in[1]);
            total *= vertex_multiplicity(x.kind, k, stats[c1], stats[c2]);
            ComponentStats merged{stats[c1].A + stats[c2].A + 1 + k, stats[c1].betti + stats[c2].betti,
                                  stats[c1].live + stats[c2].live - 1};
            for (int u = 0; u < v; ++u)
                if (comp[u] == c2) comp[u] = c1;
            stats[c1] = merged;
            comp[v] = c1;
        } else {
            int c = find_comp(x.in[0]);
            total *= vertex_multiplicity(x.kind, k, stats[c]);
            stats[c].A += 1 + k;
            if (x.kind == PrunedKind::cut) ++stats[c].live;
            else --stats[c].live, ++stats[c].betti;
            comp[v] = c;
        }
    }
    return total;
}

}  // namespace hurwitz

#pragma once

#include "hurwitz/core.hpp"
#include "hurwitz/trop_pruned.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hurwitz {

struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FitMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TypeNotRealized : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A point (mu, nu) with sum(mu) == sum(nu), stored as mu followed by nu.
using LatticePoint = std::vector<int>;

// sum_i a_i mu_i - sum_j b_j nu_j with a_i, b_j in {-1, 0, 1}. Walls are
// deduplicated modulo the relation sum(mu) = sum(nu) and a global sign.
struct Hyperplane {
    std::vector<int> a, b;
    long value(const LatticePoint& p) const;
    std::string to_string() const;
    // For unrefined walls: the index sets I, J.
    std::vector<int> I() const;
    std::vector<int> J() const;
};

std::vector<Hyperplane> hyperplanes(int m, int n, bool refined);

using ChamberSignature = std::vector<int>;  // entries +1 / -1
// nullopt when the point lies on a wall.
std::optional<ChamberSignature> chamber_signature(const std::vector<Hyperplane>& H, const LatticePoint& p);

// Exact polynomial in m+n variables (mu_1..mu_m, nu_1..nu_n).
class MultivariatePolynomial {
public:
    using Exponent = std::vector<int>;
    MultivariatePolynomial() = default;
    explicit MultivariatePolynomial(int vars) : vars_(vars) {}

    int vars() const { return vars_; }
    void add_term(const Exponent& e, const ExactRational& c);
    ExactRational coefficient(const Exponent& e) const;
    ExactRational evaluate(const LatticePoint& p) const;
    int total_degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponent, ExactRational>& terms() const { return terms_; }

    MultivariatePolynomial operator-(const MultivariatePolynomial& o) const;
    MultivariatePolynomial operator+(const MultivariatePolynomial& o) const;
    bool operator==(const MultivariatePolynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    // Sorted monomials, e.g. "2/1*mu1 + -2/1*nu1 + 3/1".
    std::string to_string(int m) const;

private:
    int vars_ = 0;
    std::map<Exponent, ExactRational> terms_;
};

// Every (mu, nu) with parts in [1, box] and equal sums; deterministic order.
std::vector<LatticePoint> lattice_points(int m, int n, int box);

using Engine = std::function<ExactRational(const HurwitzType&)>;
Engine engine_hurwitz();         // tropical count (classical)
Engine engine_pruned_hurwitz();  // cut-and-join recursion

struct FitResult {
    MultivariatePolynomial poly;
    std::vector<LatticePoint> interpolation;
    std::vector<LatticePoint> heldout;
};

// Fits the unique polynomial of total degree <= `degree` in the free
// coordinates (nu_n eliminated) through rank-greedily chosen chamber points,
// then checks it on held-out chamber points. `points` must all lie in the
// chamber. Throws SingularSystem / FitMismatch.
FitResult fit_polynomial(const std::vector<LatticePoint>& points, const std::vector<ExactRational>& values, int m,
                         int n, int degree, std::size_t min_heldout);

FitResult fit_chamber_polynomial(const Engine& engine, int g, int m, int n, const ChamberSignature& signature,
                                 const std::vector<Hyperplane>& H, int degree, int box = 12);

MultivariatePolynomial wall_crossing(const MultivariatePolynomial& P1, const MultivariatePolynomial& P2);

struct ChamberReport {
    ChamberSignature signature;
    std::size_t points = 0;
    bool pass = false;
    std::string error;
    FitResult fit;
};

// Fits every chamber of the (unrefined) arrangement met in the box.
std::vector<ChamberReport> fit_all_chambers(const Engine& engine, int g, int m, int n, int box = 12,
                                            std::optional<int> degree = std::nullopt);

struct WallCheck {
    Hyperplane wall;  // oriented so that it is positive on the first chamber
    ChamberSignature c1, c2;
    std::size_t points = 0;
    std::size_t failures = 0;
};

// Genus-0 classical wall-crossing: compares P^{C1} - P^{C2} with
// binom(m+n-2, |I|+|J|-1) delta H_0(mu_I, (nu_J, delta)) H_0((mu_{I^c}, delta), nu_{J^c})
// (oracle) at every point of C1 with degree <= max_degree.
std::vector<WallCheck> check_genus0_wall_crossing(int m, int n, int box = 12, int max_degree = 8);

// Contribution of a labelled genus-0 pruned graph at (mu, nu): edge weights
// are recomputed by balancing, then prod inner w * prod coloured w * prod m(v).
ExactRational per_graph_contribution(const PrunedMonodromyGraph& gamma, const LatticePoint& point);

}  // namespace hurwitz

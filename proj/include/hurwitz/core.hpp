#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitz {

// All counting results are exact rationals backed by GMP.
using ExactRational = mpq_class;
using BigInt = mpz_class;

// Always "p/q", including integers ("100/1").
std::string to_string(const ExactRational& q);
ExactRational parse_rational(const std::string& s);

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a query would exceed its configured search budget. `module`
// names the component whose cap tripped.
struct BudgetExceeded : std::runtime_error {
    std::string module;
    BudgetExceeded(std::string mod, const std::string& what)
        : std::runtime_error(mod + ": " + what), module(std::move(mod)) {}
};

// The engine cannot evaluate this kind of type (e.g. b <= 0 for tropical).
struct Inapplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ordered, labelled parts. The order matters: part i is "the i-th end".
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int degree() const;
    int operator[](std::size_t i) const { return parts_[i]; }

    // Subsequence by index set.
    Partition sub(const std::vector<int>& idx) const;
    Partition sorted_desc() const;
    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    static Partition ones(int d);

private:
    std::vector<int> parts_;
};

enum class PrunedSide { none, left, right };

struct HurwitzType {
    int genus = 0;
    Partition mu;
    Partition nu;
    PrunedSide pruned_side = PrunedSide::none;

    HurwitzType() = default;
    HurwitzType(int g, Partition m, Partition n, PrunedSide side = PrunedSide::none);

    int degree() const { return mu.degree(); }
    // Sorts both partitions descending; pruned_side is kept.
    HurwitzType normalized() const;
    bool operator==(const HurwitzType&) const = default;
};

int branch_count(const HurwitzType& t);
int branch_count(int g, int len_mu, int len_nu);

// prod over distinct values v of (multiplicity of v)!
BigInt partition_automorphisms(const std::vector<int>& parts);
inline BigInt partition_automorphisms(const Partition& p) { return partition_automorphisms(p.parts()); }

BigInt factorial(int n);
BigInt binomial(int n, int k);

// "g=G;mu=a,b,c;nu=x,y,z". The pruned side is not part of the text form.
std::string to_string(const HurwitzType& t);
HurwitzType parse_type(const std::string& s);

std::string join_ints(const std::vector<int>& v, const char* sep = ",");

// All partitions of d into exactly k parts, each sorted descending, in
// lexicographically decreasing order.
std::vector<std::vector<int>> partitions_of(int d, int k);
std::vector<std::vector<int>> partitions_of(int d);

}  // namespace hurwitz

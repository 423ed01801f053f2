#pragma once

#include "hurwitz/core.hpp"

#include <cstdint>
#include <vector>

namespace hurwitz {

// A bijection of {0..d-1}; images[i] is the image of i.
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int d);
    // Canonical representative of cycle type `parts`: consecutive blocks
    // 0..p0-1, p0..p0+p1-1, ... each cycled forward.
    static Permutation of_cycle_type(const std::vector<int>& parts);

    int size() const { return static_cast<int>(images.size()); }
    std::vector<std::vector<int>> cycles() const;
    std::vector<int> cycle_type() const;  // sorted descending
    std::vector<int> support() const;     // points not fixed
    Permutation inverse() const;
    // (a*b)(i) = a(b(i)).
    Permutation operator*(const Permutation& o) const;
    static Permutation transposition(int d, int a, int b);
    bool operator==(const Permutation&) const = default;
};

struct OracleConfig {
    int max_degree = 8;
    int max_branch = 6;
    std::uint64_t max_steps = 1'000'000'000ULL;
};

struct FactorizationCount {
    std::uint64_t count = 0;  // tuples (tau_1..tau_b) for a fixed sigma_1
    std::uint64_t steps = 0;  // composition steps spent
};

// Counts transposition tuples tau with sigma_1 tau_1...tau_b of cycle type
// nu, transitive, and (if `prune_sigma1`) every sigma_1 cycle meeting the
// taus at least twice. sigma_1 is the fixed representative of cycle type mu.
FactorizationCount count_factorizations_serial(int g, const Partition& mu, const Partition& nu,
                                               bool prune_sigma1, const OracleConfig& cfg = {});
// Same count, split over the first transposition across OpenMP threads.
FactorizationCount count_factorizations_parallel(int g, const Partition& mu, const Partition& nu,
                                                 bool prune_sigma1, const OracleConfig& cfg = {});

// `steps`, when given, receives the composition steps spent.
ExactRational double_hurwitz(const HurwitzType& t, const OracleConfig& cfg = {}, std::uint64_t* steps = nullptr);
// pruned_side none/left imposes the support condition on sigma_1 (mu side),
// right on sigma_2 (nu side).
ExactRational pruned_double_hurwitz_oracle(const HurwitzType& t, const OracleConfig& cfg = {},
                                           std::uint64_t* steps = nullptr);
// H_g(mu) = H_g(mu, 1^d) / d!; the pruned variant prunes the 1^d side.
ExactRational single_hurwitz(int g, const Partition& mu, bool pruned, const OracleConfig& cfg = {});

// Number of permutations of cycle type `parts`.
BigInt conjugacy_class_size(const std::vector<int>& parts);

}  // namespace hurwitz

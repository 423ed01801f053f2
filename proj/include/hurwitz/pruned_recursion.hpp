#pragma once

#include "hurwitz/core.hpp"
#include "hurwitz/oracle.hpp"

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

namespace hurwitz {

// Thread-safe get-or-compute map from normalized type keys to exact values.
// Duplicate concurrent computation is allowed; equal values make the race benign.
class MemoCache {
public:
    std::optional<ExactRational> get(const std::string& key) const;
    void put(const std::string& key, const ExactRational& v);
    std::size_t size() const;
    void clear();

    // Text form: one "key → p/q" per line. Missing file loads as empty.
    void load(const std::string& path);
    // Writes to a temporary file then renames it over `path`.
    void save(const std::string& path) const;
    std::map<std::string, ExactRational> snapshot() const;

private:
    mutable std::shared_mutex mu_;
    std::map<std::string, ExactRational> map_;
};

inline constexpr const char* kCacheArrow = " → ";

struct RecursionConfig {
    OracleConfig oracle;  // for the (0,2) base with three or more mu parts
};

// PH_g(mu, nu) via the pruned cut-and-join recursion. Pruning is on the mu
// side; a type with pruned_side == right is evaluated as PH_g(nu, mu).
ExactRational pruned_recursion(const HurwitzType& t, MemoCache& cache, const RecursionConfig& cfg = {});
ExactRational pruned_recursion(const HurwitzType& t);  // process-wide cache

MemoCache& default_recursion_cache();

}  // namespace hurwitz

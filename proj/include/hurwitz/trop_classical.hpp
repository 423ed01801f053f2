#pragma once

#include "hurwitz/core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hurwitz {

enum class VertexKind { cut, join };

// from == -1: a left end over 0. to == -1: a right end over b+1.
struct TropEdge {
    int from = -1;
    int to = -1;
    int weight = 0;
};

struct TropVertex {
    int position = 0;  // 1..b
    VertexKind kind = VertexKind::cut;
    std::vector<int> in;   // edge indices
    std::vector<int> out;  // edge indices
};

struct MonodromyGraph {
    HurwitzType type;
    std::vector<TropVertex> vertices;  // ordered by position
    std::vector<TropEdge> edges;
    std::string canonical;  // isomorphism-class serialization

    bool is_inner(int e) const { return edges[e].from >= 0 && edges[e].to >= 0; }
    int betti_number() const;
    std::string hash() const;  // hex digest of `canonical`
};

struct TropConfig {
    std::uint64_t max_states = 10'000'000ULL;
};

std::vector<MonodromyGraph> enumerate_monodromy_graphs(const HurwitzType& t, const TropConfig& cfg = {});

// 1 / 2^(balanced left forks + balanced right forks + balanced wieners)
ExactRational graph_automorphism_factor(const MonodromyGraph& G);
struct ForkCounts {
    int left_forks = 0, right_forks = 0, wieners = 0;
};
ForkCounts count_forks(const MonodromyGraph& G);

// |Aut mu| |Aut nu| * automorphism factor * product of inner edge weights.
ExactRational graph_weight(const MonodromyGraph& G);

ExactRational tropical_double_hurwitz(const HurwitzType& t, const TropConfig& cfg = {});

std::string to_dot(const MonodromyGraph& G);

// FNV-1a, hex. Stable across platforms; used for export file names.
std::string stable_hash(const std::string& s);

}  // namespace hurwitz

#pragma once

#include "hurwitz/core.hpp"
#include "hurwitz/pruned_recursion.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hurwitz {

enum class PrunedKind { initial, cut, connected_join, disconnected_join };
const char* to_string(PrunedKind k);

// from == -1: an end over 0 (regular or coloured). to == -1: a right end.
struct PrunedEdge {
    int from = -1;
    int to = -1;
    int weight = 0;
    bool coloured = false;
    int left_label = -1;   // mu index, labelled graphs only
    int right_label = -1;  // nu index, labelled graphs only
};

struct PrunedVertex {
    int position = 0;
    PrunedKind kind = PrunedKind::initial;
    std::vector<int> in;        // regular incoming edges (left ends for initial vertices)
    std::vector<int> out;       // regular outgoing edges
    std::vector<int> coloured;  // coloured ends attached here
    ExactRational multiplicity = 1;
};

struct PrunedMonodromyGraph {
    HurwitzType type;
    bool labelled = false;
    std::vector<PrunedVertex> vertices;  // initial vertices first, then secondary
    std::vector<PrunedEdge> edges;
    std::string canonical;
    ExactRational weight = 0;  // full contribution to the tropical count

    int add_edge(PrunedEdge e);
    int add_vertex(PrunedVertex v);  // sets edge endpoints from in/out/coloured
    int initial_count() const;
    int secondary_count() const;
    int coloured_count() const;
    int betti_number() const;
    std::string hash() const;
};

struct PrunedTropConfig {
    std::uint64_t max_states = 10'000'000ULL;
    // Labelled mode: left ends keep their mu index and right ends receive nu
    // indices; no automorphism factors appear.
    bool labelled = false;
    RecursionConfig recursion;
};

// Pre: b > 0 and (g, l(nu)) not in {(0,1),(0,2)}. Graphs of weight 0
// (degenerate joins) are not returned.
std::vector<PrunedMonodromyGraph> enumerate_pruned_monodromy_graphs(const HurwitzType& t,
                                                                    const PrunedTropConfig& cfg = {});

// Statistics of the component(s) feeding a secondary vertex.
struct ComponentStats {
    int A = 0;  // sum(val(v_i) - 2) over initial vertices + secondary count + coloured count
    int betti = 0;
    int live = 0;  // live strands just before the vertex
};

// m(v) for secondary vertices; `coloured` is |c_v|. For a disconnected join
// pass both components, otherwise only the first is used.
ExactRational vertex_multiplicity(PrunedKind kind, int coloured, const ComponentStats& c1,
                                  const ComponentStats& c2 = {});
// m(v) for an initial vertex: PH_0(block, (w1, w2)).
ExactRational initial_multiplicity(const std::vector<int>& block, int w1, int w2, MemoCache& cache,
                                   const RecursionConfig& cfg = {});

// Sum of graph weights; base cases route to the recursion.
ExactRational tropical_pruned(const HurwitzType& t, const PrunedTropConfig& cfg = {});

std::string to_dot(const PrunedMonodromyGraph& G);

}  // namespace hurwitz

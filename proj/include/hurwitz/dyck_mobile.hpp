#pragma once

#include "hurwitz/core.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

struct DyckConfig {
    int max_degree = 4;
};

// Primitive l(mu)-marked b-Dyck path of length 2bd, b = l(mu) + d - 2.
// Vertices are indexed 0..2bd by the number of steps before them.
struct HurwitzDyckPath {
    Partition mu;
    int b = 0;
    std::string steps;                           // over {U, D}
    std::vector<std::pair<int, int>> marked;     // marked[i] is the pair labelled i (degree mu_i)
    std::vector<int> distinguished;              // left to right; labels are forced by the order

    int length() const { return static_cast<int>(steps.size()); }
    std::vector<int> heights() const;
    // Number of up-steps in the essential interval of pair i, divided by b.
    int degree(int i) const;
    // "UUDD... [marks] [dist]"
    std::string serialize() const;
};

std::vector<HurwitzDyckPath> enumerate_hurwitz_dyck_paths(const Partition& mu, const DyckConfig& cfg = {});
bool is_pruned_dyck(const HurwitzDyckPath& D);
// Vertex classes identified along horizontal gluing lines (singletons included).
std::vector<std::set<int>> gluing_lines(const HurwitzDyckPath& D);
// Sanity check of every structural condition; used by tests.
bool dyck_invariants_hold(const HurwitzDyckPath& D);

struct MobileConfig {
    int max_degree = 3;
};

// A genus-0 single Hurwitz mobile of type (mu, 1^d): b + 1 labelled edges.
// White polygon i has mu[i] nodes in cyclic orientation order; black
// polygons are 1-gons, each carrying exactly one weight-1 edge.
struct MobileEdge {
    int label = 0;
    int weight = 0;  // 1: white node -> black 1-gon, 0: between two white polygons
    std::vector<std::pair<int, int>> white_ends;  // (polygon, node); one or two entries
};

struct Mobile {
    Partition mu;
    int b = 0;
    std::vector<MobileEdge> edges;  // edges[l].label == l

    int black_polygon_count() const;
    // Canonical form: each white polygon rotated to its lexicographically least presentation.
    std::string canonical() const;
    bool invariants_hold() const;
    bool operator==(const Mobile& o) const { return canonical() == o.canonical(); }
};

// Only nu == 1^d is supported (genus-0 single mobiles).
std::vector<Mobile> enumerate_mobiles(const Partition& mu, const Partition& nu, const MobileConfig& cfg = {});
Mobile shift(const Mobile& M);
int shift_orbit_size(const Mobile& M);

// Walk distances from the weight-1 edge y to edge z: (white arcs, black arcs).
std::pair<int, int> mobile_distances(const Mobile& M, int y, int z);
bool interrupts(const Mobile& M, int y, int z);  // "y is interrupted by z"
// First labelled edge reached walking from y.
int next_labelled_edge(const Mobile& M, int y);
// The classification predicate; only meaningful for mobiles in standard form.
bool is_pruned_mobile_standard(const Mobile& M);

struct MobileDiagnostic {
    int classes = 0;
    int classes_with_predicate = 0;  // shift classes containing an element satisfying the predicate
    int pruned_dyck = 0;
};
MobileDiagnostic pruned_mobile_diagnostic(const Partition& mu);

std::string to_dot(const Mobile& M);

}  // namespace hurwitz

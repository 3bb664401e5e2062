#pragma once

#include <cstdint>
#include <utility>

#include "stabkit/graph.hpp"
#include "stabkit/representation.hpp"

namespace stabkit {

struct BuiltRep {
    Graph graph;
    StabbedRepresentation rep;
};

// (h,w)-grid, vertex (i,j) labelled "r<i>c<j>"; min{h,w} stab lines.
Graph grid_graph(int h, int w);
BuiltRep grid_rep(int h, int w);

// r is any rectangle representation of g (stabs ignored). Throws
// std::invalid_argument when g is not split or r does not realize g.
StabbedRepresentation split_to_3esrig(const Graph& g, const StabbedRepresentation& r);

// Random split graph with a box representation it was generated from: the
// clique rects all contain the origin, the independent rects are disjoint.
BuiltRep planted_split(int clique, int independent, std::uint64_t seed);

// Clique c1..c4 plus one independent vertex per subset of size 1 to 3,
// with the box representation it came from (no stab lines).
BuiltRep split_fixture();

struct Fixtures {
    BuiltRep k33;  // 3 stab lines, exactly stabbed
    BuiltRep k44;  // 4 stab lines, some rects meet several
};
Fixtures fixture_reps();

// Stab lines y = 0..k-1 with k = max{1, ceil(log2 m)} for m blocks.
StabbedRepresentation block_graph_rep(const Graph& g);
int block_bound(long m);

// Checks of the recursion invariants, on by default in debug builds.
void set_block_rep_checks(bool on);

}  // namespace stabkit

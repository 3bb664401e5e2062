#pragma once

#include <string>
#include <vector>

#include "stabkit/graph.hpp"
#include "stabkit/representation.hpp"

namespace stabkit {

struct RootedTree {
    Graph graph;
    int root = 0;
    std::vector<int> parent;  // -1 at the root
    // True when a lies on the path from the root to v (a == v included).
    bool is_ancestor(int a, int v) const;
};

RootedTree rooted_at(const Graph& tree, int root);

// G_1 is a single vertex; G_l joins three copies of G_{l-1} through a K_{1,3}.
// D_l does the same with seven copies of G_{l-1} and a K_{1,7}. F_l and J_l
// hang two copies of G_l (resp. D_l) off a new centre by paths of length two.
RootedTree gen_G(int l);
RootedTree gen_F(int l);
RootedTree gen_D(int l);
RootedTree gen_J(int l);

enum class FMode { PathOnTop, RootsOnly };

StabbedRepresentation rep_G(int l);
StabbedRepresentation rep_F(int l, FMode mode);
StabbedRepresentation rep_D(int l);
StabbedRepresentation rep_J(int l);

// Block graph that has no asteroidal triple of non-2-SRIG subgraphs yet is
// not 3-SRIG. Exposes vertices labelled w, w', v, u, a, b.
Graph gen_block_counterexample();

// Tree with no asteroidal triple of non-(k-1)-ESRIG subtrees that is not
// k-SRIG (k >= 4).
Graph gen_tree_not_k_srig(int k);

struct GapTree {
    Graph graph;
    StabbedRepresentation rep;  // k stab lines, SRIG
};
// Tree that is k-SRIG; for k >= 10 it is known not to be k-ESRIG.
GapTree gen_gap_tree(int k);

// Labels of the rects meeting stab line j (0 = bottom).
std::vector<std::string> on_stab(const StabbedRepresentation& r, int j);

}  // namespace stabkit

#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stabkit/graph.hpp"
#include "stabkit/representation.hpp"

namespace stabkit {

// Membership test for a class closed under vertex addition.
struct ClassPredicate {
    std::string name;
    std::function<bool(const Graph&)> contains;
};

ClassPredicate non_interval();
// Block graphs only; throws std::invalid_argument on anything else.
ClassPredicate non_2esrig();

struct ColoredBlockTree {
    BlockTree tree;
    std::vector<BlockTreeEdge> edges;
    std::vector<VertexSet> side;  // side[i] = V(G_e) for edges[i]
    std::vector<char> red_edge;
    std::vector<char> red_node;  // indexed by tree node

    std::optional<int> edge_index(BlockTreeEdge e) const;
};

ColoredBlockTree color_block_tree(const Graph& g, const ClassPredicate& c);

struct RedShape {
    enum Kind { Empty, Path, Branch } kind = Empty;
    std::vector<int> path;  // tree nodes in order, for Path
    int branch = -1;        // tree node with >= 3 red neighbours, for Branch
};
RedShape red_shape(const ColoredBlockTree& t);

struct AsteroidalCertificate {
    std::string class_name;
    std::array<VertexSet, 3> parts;
    // paths[i][j], i != j: from a vertex of parts[i] to one of parts[j],
    // avoiding the closed neighbourhood of the third part.
    std::array<std::array<std::vector<int>, 3>, 3> paths;
    // Evidence that each part is in the class, when it has the same form.
    std::array<std::shared_ptr<AsteroidalCertificate>, 3> nested;
};

AsteroidalCertificate extract_certificate(const Graph& g, const ClassPredicate& c, const ColoredBlockTree& t,
                                          int branch_node);
bool verify_certificate(const Graph& g, const ClassPredicate& c, const AsteroidalCertificate& cert);

// Throws std::invalid_argument when the red shape branches.
VertexSet select_S(const Graph& g, const ClassPredicate& c, const ColoredBlockTree& t);

struct Recognition {
    std::optional<StabbedRepresentation> rep;
    std::optional<AsteroidalCertificate> cert;
    bool yes() const { return rep.has_value(); }
};

Recognition recognize_block_2esrig(const Graph& g);
Recognition recognize_tree_3esrig(const Graph& g);

}  // namespace stabkit

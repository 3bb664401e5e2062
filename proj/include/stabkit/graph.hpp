#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace stabkit {

using VertexSet = std::vector<int>;  // kept sorted

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int add_vertex(std::string label = {});
    // Idempotent; self-loops are rejected.
    void add_edge(int u, int v);

    int n() const { return static_cast<int>(adj_.size()); }
    std::size_t m() const { return m_; }
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbours(int u) const { return adj_[u]; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    const std::string& label(int u) const { return labels_[u]; }
    std::optional<int> find(std::string_view label) const;
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::size_t m_ = 0;
};

struct Subgraph {
    Graph graph;
    std::vector<int> to_parent;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& vs);
Subgraph remove_vertices(const Graph& g, const VertexSet& vs);

// Components ordered by smallest vertex id; each component sorted.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, int s);
VertexSet closed_neighbourhood(const Graph& g, const VertexSet& vs);

// Edge list: one "u v" pair per line, a lone token declares an isolated
// vertex, '#' starts a comment. Integer labels are numbered in numeric order,
// other labels in order of first appearance.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_string(const std::string& text);
std::string to_edge_list(const Graph& g);

struct BlockTreeEdge {
    int block;  // index into BlockTree::blocks
    int cut;    // vertex id of the cut-vertex
    bool operator==(const BlockTreeEdge&) const = default;
};

// Tree nodes: blocks are 0..B-1, cut-vertex nodes B..B+C-1.
struct BlockTree {
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
    std::vector<std::vector<int>> tree_adj;
    std::vector<int> cut_node;                    // vertex -> node, or -1
    std::vector<std::vector<int>> blocks_of;      // vertex -> block indices

    int block_count() const { return static_cast<int>(blocks.size()); }
    int node_count() const { return static_cast<int>(tree_adj.size()); }
    bool is_block_node(int node) const { return node < block_count(); }
    int cut_vertex_of(int node) const { return cut_vertices[node - block_count()]; }
    std::vector<BlockTreeEdge> edges() const;
    bool has_edge(BlockTreeEdge e) const;
};

// Maximal 2-connected blocks of any graph; isolated vertices are singleton
// blocks. Works on disconnected graphs.
std::vector<VertexSet> biconnected_blocks(const Graph& g);
BlockTree block_tree(const Graph& g);

VertexSet pendant_vertices(const Graph& g, const BlockTree& t, BlockTreeEdge e);
Subgraph pendant_subgraph(const Graph& g, const BlockTree& t, BlockTreeEdge e);

bool neighbour_disjoint(const Graph& g, const VertexSet& a, const VertexSet& b);

// Shortest path s..t avoiding N[h]; throws std::invalid_argument if s or t lies in N[h].
std::optional<std::vector<int>> path_missing(const Graph& g, int s, int t, const VertexSet& h);
bool exists_path_missing(const Graph& g, int s, int t, const VertexSet& h);

struct SplitPartition {
    VertexSet clique;
    VertexSet independent;
};

bool is_tree(const Graph& g);
bool is_block_graph(const Graph& g);
bool is_chordal(const Graph& g);
std::optional<SplitPartition> split_partition(const Graph& g);
inline bool is_split(const Graph& g) { return split_partition(g).has_value(); }
int clique_number(const Graph& g);

std::vector<int> lex_bfs(const Graph& g);
// Reverse of a LexBFS order when it is a perfect elimination ordering.
std::optional<std::vector<int>> perfect_elimination_order(const Graph& g);
// Some chordless cycle of length >= 4, if g is not chordal.
std::optional<std::vector<int>> chordless_cycle(const Graph& g);

}  // namespace stabkit

#include "stabkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "stabkit/error.hpp"

namespace stabkit {

Graph::Graph(int n) {
    for (int i = 0; i < n; ++i) add_vertex();
}

int Graph::add_vertex(std::string label) {
    int id = n();
    if (label.empty()) label = std::to_string(id);
    if (index_.count(label)) throw std::invalid_argument("duplicate vertex label '" + label + "'");
    index_.emplace(label, id);
    labels_.push_back(std::move(label));
    adj_.emplace_back();
    return id;
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop at '" + labels_.at(u) + "'");
    if (u < 0 || v < 0 || u >= n() || v >= n()) throw std::out_of_range("add_edge: vertex out of range");
    auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), v);
    if (it != a.end() && *it == v) return;
    a.insert(it, v);
    auto& b = adj_[v];
    b.insert(std::lower_bound(b.begin(), b.end(), u), u);
    ++m_;
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int x = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), x);
}

std::optional<int> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& vs) {
    Subgraph s;
    std::vector<int> local(g.n(), -1);
    for (int v : vs) {
        local[v] = s.graph.add_vertex(g.label(v));
        s.to_parent.push_back(v);
    }
    for (int v : vs)
        for (int w : g.neighbours(v))
            if (local[w] >= 0 && v < w) s.graph.add_edge(local[v], local[w]);
    return s;
}

Subgraph remove_vertices(const Graph& g, const VertexSet& vs) {
    std::vector<char> drop(g.n(), 0);
    for (int v : vs) drop[v] = 1;
    VertexSet keep;
    for (int v = 0; v < g.n(); ++v)
        if (!drop[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    std::vector<VertexSet> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        VertexSet c{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            for (int w : g.neighbours(c[i]))
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    c.push_back(w);
                }
        std::sort(c.begin(), c.end());
        out.push_back(std::move(c));
    }
    return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || connected_components(g).size() == 1; }

std::vector<int> bfs_distances(const Graph& g, int s) {
    std::vector<int> dist(g.n(), -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int w : g.neighbours(queue[i]))
            if (dist[w] < 0) {
                dist[w] = dist[queue[i]] + 1;
                queue.push_back(w);
            }
    return dist;
}

VertexSet closed_neighbourhood(const Graph& g, const VertexSet& vs) {
    std::vector<char> mark(g.n(), 0);
    for (int v : vs) {
        mark[v] = 1;
        for (int w : g.neighbours(v)) mark[w] = 1;
    }
    VertexSet out;
    for (int v = 0; v < g.n(); ++v)
        if (mark[v]) out.push_back(v);
    return out;
}

// ---------------------------------------------------------------- edge lists

namespace {

bool is_integer_token(const std::string& s) {
    std::size_t i = (s.size() > 1 && s[0] == '-') ? 1 : 0;
    if (i == s.size() || s.size() - i > 18) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::vector<std::string> order;
    std::unordered_map<std::string, int> seen;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    int lineno = 0;
    auto note = [&](const std::string& tok) {
        if (seen.emplace(tok, static_cast<int>(order.size())).second) order.push_back(tok);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks.size() > 2) throw FormatError("expected 'u v', got " + std::to_string(toks.size()) + " tokens", lineno);
        if (toks.size() == 2 && toks[0] == toks[1]) throw FormatError("self-loop at '" + toks[0] + "'", lineno);
        note(toks[0]);
        if (toks.size() == 2) {
            note(toks[1]);
            pairs.emplace_back(toks[0], toks[1]);
        }
    }
    if (!order.empty() && std::all_of(order.begin(), order.end(), is_integer_token))
        std::stable_sort(order.begin(), order.end(),
                         [](const std::string& a, const std::string& b) { return std::stoll(a) < std::stoll(b); });
    Graph g;
    for (const auto& name : order) g.add_vertex(name);
    for (const auto& [a, b] : pairs) g.add_edge(*g.find(a), *g.find(b));
    return g;
}

Graph parse_edge_list_string(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) out << g.label(v) << "\n";
    for (auto [u, v] : g.edges()) out << g.label(u) << " " << g.label(v) << "\n";
    return out.str();
}

// ---------------------------------------------------------------- blocks

std::vector<VertexSet> biconnected_blocks(const Graph& g) {
    int n = g.n();
    std::vector<int> disc(n, -1), low(n, 0), iter(n, 0), parent(n, -1);
    std::vector<int> stack;
    std::vector<VertexSet> blocks;
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            blocks.push_back({root});
            continue;
        }
        std::vector<int> dfs{root};
        disc[root] = low[root] = timer++;
        stack.push_back(root);
        while (!dfs.empty()) {
            int v = dfs.back();
            const auto& nb = g.neighbours(v);
            if (iter[v] < static_cast<int>(nb.size())) {
                int w = nb[iter[v]++];
                if (disc[w] < 0) {
                    parent[w] = v;
                    disc[w] = low[w] = timer++;
                    stack.push_back(w);
                    dfs.push_back(w);
                } else if (w != parent[v]) {
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            dfs.pop_back();
            int p = parent[v];
            if (p < 0) {
                stack.clear();
                continue;
            }
            low[p] = std::min(low[p], low[v]);
            if (low[v] >= disc[p]) {
                VertexSet b;
                while (true) {
                    int x = stack.back();
                    stack.pop_back();
                    b.push_back(x);
                    if (x == v) break;
                }
                b.push_back(p);
                std::sort(b.begin(), b.end());
                blocks.push_back(std::move(b));
            }
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

BlockTree block_tree(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.size() > 1)
        throw std::invalid_argument("block_tree: graph is disconnected (components containing '" +
                                    g.label(comps[0][0]) + "' and '" + g.label(comps[1][0]) + "')");
    BlockTree t;
    t.blocks = biconnected_blocks(g);
    t.blocks_of.assign(g.n(), {});
    for (int b = 0; b < t.block_count(); ++b)
        for (int v : t.blocks[b]) t.blocks_of[v].push_back(b);
    t.cut_node.assign(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (t.blocks_of[v].size() >= 2) t.cut_vertices.push_back(v);
    int nb = t.block_count();
    t.tree_adj.assign(nb + t.cut_vertices.size(), {});
    for (std::size_t i = 0; i < t.cut_vertices.size(); ++i) {
        int v = t.cut_vertices[i];
        int node = nb + static_cast<int>(i);
        t.cut_node[v] = node;
        for (int b : t.blocks_of[v]) {
            t.tree_adj[node].push_back(b);
            t.tree_adj[b].push_back(node);
        }
    }
    for (auto& a : t.tree_adj) std::sort(a.begin(), a.end());
    return t;
}

std::vector<BlockTreeEdge> BlockTree::edges() const {
    std::vector<BlockTreeEdge> out;
    for (int b = 0; b < block_count(); ++b)
        for (int node : tree_adj[b]) out.push_back({b, cut_vertex_of(node)});
    return out;
}

bool BlockTree::has_edge(BlockTreeEdge e) const {
    if (e.block < 0 || e.block >= block_count() || e.cut < 0 || e.cut >= static_cast<int>(cut_node.size()))
        return false;
    int node = cut_node[e.cut];
    if (node < 0) return false;
    return std::binary_search(tree_adj[e.block].begin(), tree_adj[e.block].end(), node);
}

VertexSet pendant_vertices(const Graph& g, const BlockTree& t, BlockTreeEdge e) {
    if (!t.has_edge(e)) throw std::invalid_argument("pendant_subgraph: not an edge of the block tree");
    std::vector<char> seen(g.n(), 0);
    seen[e.cut] = 1;
    VertexSet out;
    for (int v : t.blocks[e.block])
        if (v != e.cut) {
            seen[v] = 1;
            out.push_back(v);
        }
    for (std::size_t i = 0; i < out.size(); ++i)
        for (int w : g.neighbours(out[i]))
            if (!seen[w]) {
                seen[w] = 1;
                out.push_back(w);
            }
    std::sort(out.begin(), out.end());
    return out;
}

Subgraph pendant_subgraph(const Graph& g, const BlockTree& t, BlockTreeEdge e) {
    return induced_subgraph(g, pendant_vertices(g, t, e));
}

bool neighbour_disjoint(const Graph& g, const VertexSet& a, const VertexSet& b) {
    std::vector<char> in_b(g.n(), 0);
    for (int v : b) in_b[v] = 1;
    for (int v : a) {
        if (in_b[v]) return false;
        for (int w : g.neighbours(v))
            if (in_b[w]) return false;
    }
    return true;
}

std::optional<std::vector<int>> path_missing(const Graph& g, int s, int t, const VertexSet& h) {
    std::vector<char> blocked(g.n(), 0);
    for (int v : closed_neighbourhood(g, h)) blocked[v] = 1;
    if (blocked[s] || blocked[t])
        throw std::invalid_argument("path_missing: endpoint '" + g.label(blocked[s] ? s : t) +
                                    "' lies in the closed neighbourhood of the avoided set");
    std::vector<int> prev(g.n(), -2);
    std::vector<int> queue{s};
    prev[s] = -1;
    for (std::size_t i = 0; i < queue.size() && prev[t] == -2; ++i)
        for (int w : g.neighbours(queue[i]))
            if (!blocked[w] && prev[w] == -2) {
                prev[w] = queue[i];
                queue.push_back(w);
            }
    if (prev[t] == -2) return std::nullopt;
    std::vector<int> path;
    for (int x = t; x != -1; x = prev[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

bool exists_path_missing(const Graph& g, int s, int t, const VertexSet& h) {
    return path_missing(g, s, t, h).has_value();
}

// ---------------------------------------------------------------- predicates

bool is_tree(const Graph& g) { return g.n() >= 1 && g.m() == static_cast<std::size_t>(g.n() - 1) && is_connected(g); }

bool is_block_graph(const Graph& g) {
    for (const auto& b : biconnected_blocks(g))
        if (b.size() * (b.size() - 1) / 2 != [&] {
                std::size_t e = 0;
                for (std::size_t i = 0; i < b.size(); ++i)
                    for (std::size_t j = i + 1; j < b.size(); ++j) e += g.adjacent(b[i], b[j]);
                return e;
            }())
            return false;
    return true;
}

std::vector<int> lex_bfs(const Graph& g) {
    int n = g.n();
    // Partition refinement over a linked list of classes.
    struct Cls {
        int prev = -1, next = -1, head = -1, tail = -1, size = 0, stamp = -1, split = -1;
    };
    std::vector<Cls> cls;
    std::vector<int> vprev(n, -1), vnext(n, -1), vcls(n, -1);
    std::vector<char> done(n, 0);
    int first = -1;
    auto unlink_vertex = [&](int v) {
        Cls& c = cls[vcls[v]];
        if (vprev[v] >= 0) vnext[vprev[v]] = vnext[v]; else c.head = vnext[v];
        if (vnext[v] >= 0) vprev[vnext[v]] = vprev[v]; else c.tail = vprev[v];
        --c.size;
        vprev[v] = vnext[v] = -1;
    };
    auto drop_class_if_empty = [&](int ci) {
        Cls& c = cls[ci];
        if (c.size > 0) return;
        if (c.prev >= 0) cls[c.prev].next = c.next; else first = c.next;
        if (c.next >= 0) cls[c.next].prev = c.prev;
    };
    auto append = [&](int ci, int v) {
        Cls& c = cls[ci];
        vcls[v] = ci;
        vprev[v] = c.tail;
        vnext[v] = -1;
        if (c.tail >= 0) vnext[c.tail] = v; else c.head = v;
        c.tail = v;
        ++c.size;
    };
    if (n == 0) return {};
    cls.push_back({});
    first = 0;
    for (int v = 0; v < n; ++v) append(0, v);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int ci = first;
        int v = cls[ci].head;
        unlink_vertex(v);
        drop_class_if_empty(ci);
        done[v] = 1;
        order.push_back(v);
        for (int w : g.neighbours(v)) {
            if (done[w]) continue;
            int c = vcls[w];
            if (cls[c].stamp != step) {
                cls[c].stamp = step;
                Cls nc;
                nc.next = c;
                nc.prev = cls[c].prev;
                int id = static_cast<int>(cls.size());
                cls.push_back(nc);
                if (cls[id].prev >= 0) cls[cls[id].prev].next = id; else first = id;
                cls[c].prev = id;
                cls[c].split = id;
            }
            int target = cls[c].split;
            unlink_vertex(w);
            append(target, w);
            drop_class_if_empty(c);
        }
    }
    return order;
}

std::optional<std::vector<int>> perfect_elimination_order(const Graph& g) {
    auto order = lex_bfs(g);
    std::vector<int> pos(g.n());
    for (int i = 0; i < g.n(); ++i) pos[order[i]] = i;
    for (int v : order) {
        int parent = -1;
        for (int w : g.neighbours(v))
            if (pos[w] < pos[v] && (parent < 0 || pos[w] > pos[parent])) parent = w;
        if (parent < 0) continue;
        for (int w : g.neighbours(v))
            if (pos[w] < pos[v] && w != parent && !g.adjacent(parent, w)) return std::nullopt;
    }
    std::reverse(order.begin(), order.end());
    return order;
}

bool is_chordal(const Graph& g) { return perfect_elimination_order(g).has_value(); }

std::optional<std::vector<int>> chordless_cycle(const Graph& g) {
    if (is_chordal(g)) return std::nullopt;
    for (int v = 0; v < g.n(); ++v) {
        const auto& nb = g.neighbours(v);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int p = nb[i], w = nb[j];
                if (g.adjacent(p, w)) continue;
                std::vector<char> blocked(g.n(), 0);
                blocked[v] = 1;
                for (int x : nb) blocked[x] = 1;
                blocked[p] = blocked[w] = 0;
                std::vector<int> prev(g.n(), -2);
                std::vector<int> queue{p};
                prev[p] = -1;
                for (std::size_t q = 0; q < queue.size() && prev[w] == -2; ++q)
                    for (int x : g.neighbours(queue[q]))
                        if (!blocked[x] && prev[x] == -2) {
                            prev[x] = queue[q];
                            queue.push_back(x);
                        }
                if (prev[w] == -2) continue;
                std::vector<int> cycle{v};
                std::vector<int> path;
                for (int x = w; x != -1; x = prev[x]) path.push_back(x);
                cycle.insert(cycle.end(), path.rbegin(), path.rend());
                return cycle;
            }
    }
    throw InternalError("chordless_cycle: non-chordal graph without a detectable hole");
}

std::optional<SplitPartition> split_partition(const Graph& g) {
    int n = g.n();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    int m = 0;
    for (int i = 0; i < n; ++i)
        if (g.degree(order[i]) >= i) m = i + 1;
    long long lhs = 0, rhs = static_cast<long long>(m) * (m - 1);
    for (int i = 0; i < n; ++i) (i < m ? lhs : rhs) += g.degree(order[i]);
    if (lhs != rhs) return std::nullopt;
    SplitPartition p;
    p.clique.assign(order.begin(), order.begin() + m);
    p.independent.assign(order.begin() + m, order.end());
    std::sort(p.clique.begin(), p.clique.end());
    std::sort(p.independent.begin(), p.independent.end());
    return p;
}

namespace {

void max_clique_rec(const std::vector<std::uint64_t>& adj, std::uint64_t cand, int size, int& best) {
    if (cand == 0) {
        best = std::max(best, size);
        return;
    }
    while (cand) {
        if (size + std::popcount(cand) <= best) return;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        max_clique_rec(adj, cand & adj[v], size + 1, best);
    }
}

}  // namespace

int clique_number(const Graph& g) {
    if (g.n() == 0) return 0;
    if (auto peo = perfect_elimination_order(g)) {
        std::vector<int> pos(g.n());
        for (int i = 0; i < g.n(); ++i) pos[(*peo)[i]] = i;
        int best = 1;
        for (int v = 0; v < g.n(); ++v) {
            int later = 0;
            for (int w : g.neighbours(v)) later += pos[w] > pos[v];
            best = std::max(best, later + 1);
        }
        return best;
    }
    if (g.n() > 64) throw std::invalid_argument("clique_number: non-chordal input above 64 vertices");
    std::vector<std::uint64_t> adj(g.n(), 0);
    for (int v = 0; v < g.n(); ++v)
        for (int w : g.neighbours(v)) adj[v] |= std::uint64_t{1} << w;
    int best = 0;
    std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
    max_clique_rec(adj, all, 0, best);
    return best;
}

}  // namespace stabkit

#include "stabkit/recognizers.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "stabkit/error.hpp"
#include "stabkit/interval.hpp"

namespace stabkit {

namespace {

bool block_2esrig_decide(const Graph& g);

bool contains_vertex(const VertexSet& s, int v) { return std::binary_search(s.begin(), s.end(), v); }

int cut_node_of(const BlockTree& t, const BlockTreeEdge& e) { return t.cut_node[e.cut]; }

std::vector<int> red_edges_at_cut(const ColoredBlockTree& t, int cut_vertex) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(t.edges.size()); ++i)
        if (t.red_edge[i] && t.edges[i].cut == cut_vertex) out.push_back(i);
    return out;
}

// Smallest red edge at cut vertex c other than the one towards block b.
int smallest_other_red(const ColoredBlockTree& t, int c, int b) {
    int best = -1;
    for (int i : red_edges_at_cut(t, c)) {
        if (t.edges[i].block == b) continue;
        if (best < 0 || t.side[i].size() < t.side[best].size()) best = i;
    }
    if (best < 0) throw InternalError("extract_certificate: red cut vertex lacks a second red edge");
    return best;
}

int neighbour_in(const Graph& g, int u, const VertexSet& h) {
    for (int v : g.neighbours(u))
        if (contains_vertex(h, v)) return v;
    throw InternalError("extract_certificate: cut vertex has no neighbour in its pendant part");
}

ClassPredicate predicate_by_name(const std::string& name) {
    if (name == non_interval().name) return non_interval();
    if (name == non_2esrig().name) return non_2esrig();
    throw std::invalid_argument("unknown class predicate: " + name);
}

AsteroidalCertificate to_parent_ids(const AsteroidalCertificate& c, const std::vector<int>& to_parent) {
    AsteroidalCertificate out;
    out.class_name = c.class_name;
    for (int i = 0; i < 3; ++i) {
        for (int v : c.parts[i]) out.parts[i].push_back(to_parent[v]);
        std::sort(out.parts[i].begin(), out.parts[i].end());
        for (int j = 0; j < 3; ++j)
            for (int v : c.paths[i][j]) out.paths[i][j].push_back(to_parent[v]);
        if (c.nested[i]) out.nested[i] = std::make_shared<AsteroidalCertificate>(to_parent_ids(*c.nested[i], to_parent));
    }
    return out;
}

std::optional<AsteroidalCertificate> to_local_ids(const AsteroidalCertificate& c, const std::vector<int>& local) {
    AsteroidalCertificate out;
    out.class_name = c.class_name;
    auto map = [&](int v) { return v >= 0 && v < static_cast<int>(local.size()) ? local[v] : -1; };
    for (int i = 0; i < 3; ++i) {
        for (int v : c.parts[i]) {
            if (map(v) < 0) return std::nullopt;
            out.parts[i].push_back(map(v));
        }
        std::sort(out.parts[i].begin(), out.parts[i].end());
        for (int j = 0; j < 3; ++j)
            for (int v : c.paths[i][j]) {
                if (map(v) < 0) return std::nullopt;
                out.paths[i][j].push_back(map(v));
            }
        if (c.nested[i]) {
            auto n = to_local_ids(*c.nested[i], local);
            if (!n) return std::nullopt;
            out.nested[i] = std::make_shared<AsteroidalCertificate>(*n);
        }
    }
    return out;
}

struct Attachment {
    std::vector<VertexSet> comps;  // components of G - S, parent ids, by smallest id
    std::vector<int> owner;        // the single S-vertex adjacent to each
};

Attachment attach(const Graph& g, const VertexSet& s) {
    Attachment a;
    auto rest = remove_vertices(g, s);
    for (const auto& comp : connected_components(rest.graph)) {
        VertexSet p;
        for (int v : comp) p.push_back(rest.to_parent[v]);
        std::sort(p.begin(), p.end());
        a.comps.push_back(std::move(p));
    }
    std::sort(a.comps.begin(), a.comps.end(), [](const VertexSet& x, const VertexSet& y) { return x[0] < y[0]; });
    for (const auto& comp : a.comps) {
        VertexSet owners;
        for (int v : comp)
            for (int u : g.neighbours(v))
                if (contains_vertex(s, u)) owners.push_back(u);
        std::sort(owners.begin(), owners.end());
        owners.erase(std::unique(owners.begin(), owners.end()), owners.end());
        if (owners.size() != 1) throw InternalError("select_S: a component of G - S attaches to " + std::to_string(owners.size()) + " vertices of S");
        a.owner.push_back(owners[0]);
    }
    return a;
}

// Integer ranks 1..2n with all endpoints distinct; ties put left ends first so
// touching intervals still meet.
std::vector<std::pair<long, long>> distinct_ranks(const IntervalRepresentation& rep) {
    struct Ev {
        Rational x;
        int side, v;
    };
    std::vector<Ev> ev;
    for (int v = 0; v < static_cast<int>(rep.size()); ++v) {
        ev.push_back({rep[v].lo, 0, v});
        ev.push_back({rep[v].hi, 1, v});
    }
    std::sort(ev.begin(), ev.end(), [](const Ev& a, const Ev& b) {
        if (a.x != b.x) return a.x < b.x;
        if (a.side != b.side) return a.side < b.side;
        return a.v < b.v;
    });
    std::vector<std::pair<long, long>> out(rep.size());
    for (std::size_t i = 0; i < ev.size(); ++i) {
        if (ev[i].side == 0) out[ev[i].v].first = static_cast<long>(i) + 1;
        else out[ev[i].v].second = static_cast<long>(i) + 1;
    }
    return out;
}

struct BottomLayout {
    std::vector<Rational> c, d, t;  // by parent vertex id, only for S
    Rational eps;
};

BottomLayout bottom_layout(const Graph& g, const VertexSet& s) {
    auto sub = induced_subgraph(g, s);
    auto res = is_interval(sub.graph);
    if (!res.yes()) throw InternalError("select_S: G[S] is not an interval graph");
    auto ranks = distinct_ranks(*res.rep);
    BottomLayout b;
    b.c.resize(g.n());
    b.d.resize(g.n());
    b.t.resize(g.n());
    b.eps = rat(1, 2);
    long lo = std::numeric_limits<long>::max(), hi = std::numeric_limits<long>::min();
    for (const auto& [x, y] : ranks) lo = std::min(lo, x), hi = std::max(hi, y);
    Rational L(lo - 1), R(hi + 1);
    for (int i = 0; i < sub.graph.n(); ++i) {
        int u = sub.to_parent[i];
        b.c[u] = Rational(ranks[i].first);
        b.d[u] = Rational(ranks[i].second);
        b.t[u] = (b.c[u] - L) / (R - L);
    }
    return b;
}

StabbedRepresentation empty_rep(const Graph& g, int k) {
    StabbedRepresentation r;
    for (int i = 0; i < k; ++i) r.stabs.push_back(Rational(i));
    r.labels.resize(g.n());
    r.rects.resize(g.n());
    for (int v = 0; v < g.n(); ++v) r.labels[v] = g.label(v);
    return r;
}

StabbedRepresentation build_2esrig(const Graph& g, const VertexSet& s) {
    auto b = bottom_layout(g, s);
    auto a = attach(g, s);
    auto r = empty_rep(g, 2);
    for (int u : s) r.rects[u] = Rect{b.c[u], b.d[u], Rational(0), b.t[u]};
    for (int u : s) {
        std::vector<int> mine;
        long total = 0;
        for (int i = 0; i < static_cast<int>(a.comps.size()); ++i)
            if (a.owner[i] == u) mine.push_back(i), total += 2 * static_cast<long>(a.comps[i].size()) + 1;
        long pos = 0;
        for (int i : mine) {
            auto sub = induced_subgraph(g, a.comps[i]);
            auto res = is_interval(sub.graph);
            if (!res.yes()) throw InternalError("recognize_block_2esrig: pendant component is not an interval graph");
            auto ranks = distinct_ranks(*res.rep);
            auto x = [&](long q) -> Rational { return b.c[u] + b.eps * rat(pos + q, total + 1); };
            for (int j = 0; j < sub.graph.n(); ++j) {
                int v = sub.to_parent[j];
                Rational lo = g.adjacent(u, v) ? b.t[u] : Rational(1);
                r.rects[v] = Rect{x(ranks[j].first), x(ranks[j].second), lo, Rational(1)};
            }
            pos += 2 * static_cast<long>(sub.graph.n()) + 1;
        }
    }
    require_valid(r, g, Mode::ESRIG, "recognize_block_2esrig");
    return r;
}

StabbedRepresentation build_3esrig(const Graph& g, const VertexSet& s) {
    auto b = bottom_layout(g, s);
    auto a = attach(g, s);
    auto r = empty_rep(g, 3);
    for (int u : s) r.rects[u] = Rect{b.c[u], b.d[u], Rational(0), b.t[u]};
    std::vector<Subgraph> subs(a.comps.size());
    std::vector<StabbedRepresentation> reps(a.comps.size());
    std::vector<std::vector<Rational>> xs(a.comps.size());
    for (std::size_t i = 0; i < a.comps.size(); ++i) {
        subs[i] = induced_subgraph(g, a.comps[i]);
        auto rec = recognize_block_2esrig(subs[i].graph);
        if (!rec.yes()) throw InternalError("recognize_tree_3esrig: pendant component is not 2-ESRIG");
        reps[i] = *rec.rep;
        for (const auto& q : reps[i].rects) xs[i].push_back(q.x_lo), xs[i].push_back(q.x_hi);
        std::sort(xs[i].begin(), xs[i].end());
        xs[i].erase(std::unique(xs[i].begin(), xs[i].end()), xs[i].end());
    }
    for (int u : s) {
        std::vector<int> mine;
        long total = 0;
        for (int i = 0; i < static_cast<int>(a.comps.size()); ++i)
            if (a.owner[i] == u) mine.push_back(i), total += static_cast<long>(xs[i].size()) + 1;
        long pos = 0;
        for (int i : mine) {
            const auto& sub = subs[i];
            auto rep = reps[i];
            int w = -1;
            for (int j = 0; j < sub.graph.n(); ++j)
                if (g.adjacent(u, sub.to_parent[j])) w = j;
            if (w < 0) throw InternalError("recognize_tree_3esrig: component without an attachment");
            if (!(rep.rects[w].y_lo <= 0)) rep = reflected_y(rep, Rational(1));
            auto x = [&](const Rational& v) -> Rational {
                long q = static_cast<long>(std::lower_bound(xs[i].begin(), xs[i].end(), v) - xs[i].begin());
                return b.c[u] + b.eps * rat(pos + q + 1, total + 1);
            };
            for (int j = 0; j < sub.graph.n(); ++j) {
                const Rect& q = rep.rects[j];
                int v = sub.to_parent[j];
                Rational lo = std::max(Rational(q.y_lo + 1), Rational(1));
                Rational hi = std::min(Rational(q.y_hi + 1), Rational(2));
                if (lo == 1) lo = g.adjacent(u, v) ? b.t[u] : Rational(1);
                r.rects[v] = Rect{x(q.x_lo), x(q.x_hi), lo, hi};
            }
            pos += static_cast<long>(xs[i].size()) + 1;
        }
    }
    require_valid(r, g, Mode::ESRIG, "recognize_tree_3esrig");
    return r;
}

Recognition recognize_with(const Graph& g, const ClassPredicate& c, int k) {
    auto t = color_block_tree(g, c);
    auto shape = red_shape(t);
    Recognition out;
    if (shape.kind == RedShape::Branch) {
        out.cert = extract_certificate(g, c, t, shape.branch);
        return out;
    }
    auto s = select_S(g, c, t);
    out.rep = k == 2 ? build_2esrig(g, s) : build_3esrig(g, s);
    return out;
}

bool block_2esrig_decide(const Graph& g) {
    for (const auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        auto t = color_block_tree(sub.graph, non_interval());
        if (red_shape(t).kind == RedShape::Branch) return false;
    }
    return true;
}

}  // namespace

ClassPredicate non_interval() {
    return {"non-interval", [](const Graph& g) { return !interval_test(g); }};
}

ClassPredicate non_2esrig() {
    return {"non-2-ESRIG", [](const Graph& g) {
                if (!is_block_graph(g)) throw std::invalid_argument("non-2-ESRIG membership is only implemented for block graphs");
                return !block_2esrig_decide(g);
            }};
}

std::optional<int> ColoredBlockTree::edge_index(BlockTreeEdge e) const {
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        if (edges[i] == e) return i;
    return std::nullopt;
}

ColoredBlockTree color_block_tree(const Graph& g, const ClassPredicate& c) {
    if (g.n() == 0 || !is_connected(g)) throw std::invalid_argument("color_block_tree: graph must be connected and nonempty");
    ColoredBlockTree t;
    t.tree = block_tree(g);
    t.edges = t.tree.edges();
    for (const auto& e : t.edges) {
        t.side.push_back(pendant_vertices(g, t.tree, e));
        t.red_edge.push_back(c.contains(induced_subgraph(g, t.side.back()).graph) ? 1 : 0);
    }
    const BlockTree& bt = t.tree;
    t.red_node.assign(bt.node_count(), 0);
    std::vector<int> red_count(bt.node_count(), 0);
    for (std::size_t i = 0; i < t.edges.size(); ++i)
        if (t.red_edge[i]) ++red_count[cut_node_of(bt, t.edges[i])];
    for (int x = bt.block_count(); x < bt.node_count(); ++x) t.red_node[x] = red_count[x] >= 2;
    for (int x = 0; x < bt.block_count(); ++x) {
        int n = 0;
        for (int y : bt.tree_adj[x]) n += t.red_node[y];
        t.red_node[x] = n >= 2;
    }
    // Red vertices must induce a connected subtree.
    int start = -1, total = 0;
    for (int x = 0; x < bt.node_count(); ++x)
        if (t.red_node[x]) total++, start = start < 0 ? x : start;
    if (start >= 0) {
        std::vector<char> seen(bt.node_count(), 0);
        std::deque<int> q{start};
        seen[start] = 1;
        int reached = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            ++reached;
            for (int y : bt.tree_adj[x])
                if (t.red_node[y] && !seen[y]) seen[y] = 1, q.push_back(y);
        }
        if (reached != total) throw InternalError("color_block_tree: red vertices are not connected");
    }
    return t;
}

RedShape red_shape(const ColoredBlockTree& t) {
    const BlockTree& bt = t.tree;
    RedShape s;
    std::vector<int> deg(bt.node_count(), 0);
    int any = -1;
    for (int x = 0; x < bt.node_count(); ++x) {
        if (!t.red_node[x]) continue;
        if (any < 0) any = x;
        for (int y : bt.tree_adj[x]) deg[x] += t.red_node[y];
        if (deg[x] >= 3 && s.branch < 0) s.branch = x;
    }
    if (any < 0) return s;
    if (s.branch >= 0) {
        s.kind = RedShape::Branch;
        return s;
    }
    s.kind = RedShape::Path;
    int end = any;
    for (int x = 0; x < bt.node_count(); ++x)
        if (t.red_node[x] && deg[x] <= 1) {
            end = x;
            break;
        }
    int prev = -1, cur = end;
    while (cur >= 0) {
        s.path.push_back(cur);
        int next = -1;
        for (int y : bt.tree_adj[cur])
            if (t.red_node[y] && y != prev) next = y;
        prev = cur;
        cur = next;
    }
    return s;
}

AsteroidalCertificate extract_certificate(const Graph& g, const ClassPredicate& c, const ColoredBlockTree& t,
                                          int branch_node) {
    const BlockTree& bt = t.tree;
    if (branch_node < 0 || branch_node >= bt.node_count() || !t.red_node[branch_node])
        throw std::invalid_argument("extract_certificate: not a red vertex");
    std::vector<int> red_nbrs;
    for (int y : bt.tree_adj[branch_node])
        if (t.red_node[y]) red_nbrs.push_back(y);
    std::sort(red_nbrs.begin(), red_nbrs.end());
    if (red_nbrs.size() < 3) throw std::invalid_argument("extract_certificate: vertex has fewer than three red neighbours");

    AsteroidalCertificate cert;
    cert.class_name = c.name;
    std::array<int, 3> anchor{};
    for (int i = 0; i < 3; ++i) {
        int cut, block;
        if (bt.is_block_node(branch_node)) {
            cut = bt.cut_vertex_of(red_nbrs[i]);
            block = branch_node;
        } else {
            block = red_nbrs[i];
            int here = bt.cut_vertex_of(branch_node);
            cut = -1;
            for (int y : bt.tree_adj[block])
                if (t.red_node[y] && bt.cut_vertex_of(y) != here) {
                    cut = bt.cut_vertex_of(y);
                    break;
                }
            if (cut < 0) throw InternalError("extract_certificate: red block lacks a second red cut vertex");
        }
        int e = smallest_other_red(t, cut, block);
        cert.parts[i] = t.side[e];
        anchor[i] = neighbour_in(g, cut, cert.parts[i]);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            int k = 3 - i - j;
            auto p = path_missing(g, anchor[i], anchor[j], cert.parts[k]);
            if (!p) throw InternalError("extract_certificate: no path missing the third part");
            cert.paths[i][j] = *p;
            cert.paths[j][i] = std::vector<int>(p->rbegin(), p->rend());
        }
    if (c.name == non_2esrig().name)
        for (int i = 0; i < 3; ++i) {
            auto sub = induced_subgraph(g, cert.parts[i]);
            auto rec = recognize_block_2esrig(sub.graph);
            if (!rec.cert) throw InternalError("extract_certificate: part is 2-ESRIG");
            cert.nested[i] = std::make_shared<AsteroidalCertificate>(to_parent_ids(*rec.cert, sub.to_parent));
        }
    if (!verify_certificate(g, c, cert)) throw InternalError("extract_certificate: certificate failed verification");
    return cert;
}

bool verify_certificate(const Graph& g, const ClassPredicate& c, const AsteroidalCertificate& cert) {
    if (cert.class_name != c.name) return false;
    std::array<VertexSet, 3> closed;
    for (int i = 0; i < 3; ++i) {
        const auto& h = cert.parts[i];
        if (h.empty() || !std::is_sorted(h.begin(), h.end()) || std::adjacent_find(h.begin(), h.end()) != h.end())
            return false;
        if (h.front() < 0 || h.back() >= g.n()) return false;
        auto sub = induced_subgraph(g, h);
        if (!is_connected(sub.graph) || !c.contains(sub.graph)) return false;
        closed[i] = closed_neighbourhood(g, h);
    }
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!neighbour_disjoint(g, cert.parts[i], cert.parts[j])) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            int k = 3 - i - j;
            const auto& p = cert.paths[i][j];
            if (p.empty()) return false;
            for (int v : p)
                if (v < 0 || v >= g.n() || contains_vertex(closed[k], v)) return false;
            if (!contains_vertex(cert.parts[i], p.front()) || !contains_vertex(cert.parts[j], p.back())) return false;
            VertexSet seen(p.begin(), p.end());
            std::sort(seen.begin(), seen.end());
            if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
            for (std::size_t q = 0; q + 1 < p.size(); ++q)
                if (!g.adjacent(p[q], p[q + 1])) return false;
            if (!exists_path_missing(g, p.front(), p.back(), cert.parts[k])) return false;
        }
    for (int i = 0; i < 3; ++i) {
        if (!cert.nested[i]) continue;
        auto sub = induced_subgraph(g, cert.parts[i]);
        std::vector<int> local(g.n(), -1);
        for (int v = 0; v < sub.graph.n(); ++v) local[sub.to_parent[v]] = v;
        auto n = to_local_ids(*cert.nested[i], local);
        if (!n) return false;
        ClassPredicate nc;
        try {
            nc = predicate_by_name(n->class_name);
        } catch (const std::invalid_argument&) {
            return false;
        }
        if (!verify_certificate(sub.graph, nc, *n)) return false;
    }
    return true;
}

VertexSet select_S(const Graph& g, const ClassPredicate& c, const ColoredBlockTree& t) {
    const BlockTree& bt = t.tree;
    if (red_shape(t).kind == RedShape::Branch) throw std::invalid_argument("select_S: red vertices branch");
    VertexSet s;
    bool any_red = std::any_of(t.red_node.begin(), t.red_node.end(), [](char x) { return x != 0; });
    if (any_red) {
        for (int b = 0; b < bt.block_count(); ++b) {
            bool touches = false;
            for (int y : bt.tree_adj[b]) touches = touches || t.red_node[y];
            if (touches) s.insert(s.end(), bt.blocks[b].begin(), bt.blocks[b].end());
        }
    } else if (bt.cut_vertices.empty()) {
        for (int v = 0; v < g.n(); ++v) s.push_back(v);
    } else {
        int chosen = -1;
        for (int u : bt.cut_vertices)
            if (red_edges_at_cut(t, u).empty()) {
                chosen = *std::min_element(bt.blocks_of[u].begin(), bt.blocks_of[u].end());
                break;
            }
        if (chosen < 0) {
            int best = -1;
            for (int u : bt.cut_vertices) {
                auto f = red_edges_at_cut(t, u);
                if (f.size() != 1) throw InternalError("select_S: cut vertex without a unique red edge");
                if (best < 0 || t.side[f[0]].size() < t.side[best].size()) best = f[0];
            }
            chosen = t.edges[best].block;
        }
        s = bt.blocks[chosen];
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    auto a = attach(g, s);
    for (const auto& comp : a.comps)
        if (c.contains(induced_subgraph(g, comp).graph)) throw InternalError("select_S: a component of G - S is in the class");
    return s;
}

Recognition recognize_block_2esrig(const Graph& g) {
    if (g.n() == 0 || !is_connected(g)) throw std::invalid_argument("recognize_block_2esrig: graph must be connected and nonempty");
    if (!is_block_graph(g)) throw std::invalid_argument("recognize_block_2esrig: not a block graph");
    return recognize_with(g, non_interval(), 2);
}

Recognition recognize_tree_3esrig(const Graph& g) {
    if (!is_tree(g)) throw std::invalid_argument("recognize_tree_3esrig: not a tree");
    return recognize_with(g, non_2esrig(), 3);
}

}  // namespace stabkit

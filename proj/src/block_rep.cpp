#include <algorithm>
#include <map>
#include <stdexcept>

#include "stabkit/constructors.hpp"
#include "stabkit/error.hpp"

namespace stabkit {

namespace {

#ifdef NDEBUG
bool checks_on = false;
#else
bool checks_on = true;
#endif

struct Request {
    VertexSet s;  // local ids, subset of one block
    Rational a, b, h;
};

bool on_bottom(const Rect& q) { return q.y_lo <= 0 && 0 <= q.y_hi; }

void check_bullets(const Graph& g, const std::vector<Rect>& r, const Request& q, int k) {
    StabbedRepresentation rep;
    for (int i = 0; i < k; ++i) rep.stabs.push_back(Rational(i));
    for (int v = 0; v < g.n(); ++v) rep.add(g.label(v), r[v]);
    require_valid(rep, g, Mode::ESRIG, "block_graph_rep (recursive call)");
    for (int v = 0; v < g.n(); ++v) {
        const Rect& x = r[v];
        if (!(q.a < x.x_lo && x.x_hi < q.b)) throw InternalError("block_graph_rep: span leaves its window");
        if (on_bottom(x) ? !(x.y_hi > q.h) : !(x.y_lo > q.h)) throw InternalError("block_graph_rep: floor violated");
    }
    for (int u : q.s) {
        if (!on_bottom(r[u])) throw InternalError("block_graph_rep: accessible vertex off the bottom line");
        for (int v = 0; v < g.n(); ++v)
            if (!std::binary_search(q.s.begin(), q.s.end(), v) && on_bottom(r[v]) && !(r[u].x_lo < r[v].x_lo))
                throw InternalError("block_graph_rep: set not accessible");
    }
}

// One or two blocks: a single line. Block b comes first with S leading, the
// other block (if any) hangs off the shared cut vertex to the right.
std::vector<Rect> base_case(const Graph& g, const std::vector<VertexSet>& blocks, int bi, const Request& q) {
    const VertexSet& B = blocks[bi];
    std::vector<int> order;
    for (int v : q.s) order.push_back(v);
    for (int v : B)
        if (!std::binary_search(q.s.begin(), q.s.end(), v)) order.push_back(v);
    VertexSet other;
    int cut = -1;
    if (blocks.size() == 2) {
        const VertexSet& C = blocks[1 - bi];
        for (int v : C) {
            if (std::binary_search(B.begin(), B.end(), v)) cut = v;
            else other.push_back(v);
        }
    }
    int t = static_cast<int>(order.size()), s = static_cast<int>(other.size());
    std::vector<long> lo(g.n()), hi(g.n());
    for (int i = 0; i < t; ++i) {
        lo[order[i]] = i + 1;
        hi[order[i]] = t + i + 1;
    }
    for (int j = 0; j < s; ++j) {
        lo[other[j]] = 2 * t + 2 + j;
        hi[other[j]] = 2 * t + s + 3 + j;
    }
    if (cut >= 0) hi[cut] = 2 * t + s + 2;
    long slots = 2 * t + 2 * s + 4;
    Rational w = q.b - q.a;
    Rational top = (q.h + 1) / 2;
    std::vector<Rect> r(g.n());
    for (int v = 0; v < g.n(); ++v)
        r[v] = Rect{q.a + w * rat(lo[v], slots), q.a + w * rat(hi[v], slots), Rational(0), top};
    return r;
}

int block_containing(const std::vector<VertexSet>& blocks, const VertexSet& s) {
    for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
        if (std::includes(blocks[i].begin(), blocks[i].end(), s.begin(), s.end())) return i;
    throw InternalError("block_graph_rep: accessible set not inside a block");
}

std::vector<Rect> build(const Graph& g, const Request& q) {
    auto blocks = biconnected_blocks(g);
    long m = static_cast<long>(blocks.size());
    int bi = q.s.empty() ? 0 : block_containing(blocks, q.s);
    std::vector<Rect> r;
    if (m <= 2) {
        r = base_case(g, blocks, bi, q);
        if (checks_on) check_bullets(g, r, q, 1);
        return r;
    }
    r.resize(g.n());
    const VertexSet& B = blocks[bi];
    auto rest = remove_vertices(g, B);
    auto comps = connected_components(rest.graph);

    // Each component of G - B hangs off exactly one vertex of B.
    std::vector<int> owner(comps.size(), -1);
    std::vector<long> comp_blocks(comps.size());
    std::vector<Subgraph> sub(comps.size());
    int heavy = -1;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        VertexSet parent_ids;
        for (int v : comps[c]) parent_ids.push_back(rest.to_parent[v]);
        std::sort(parent_ids.begin(), parent_ids.end());
        sub[c] = induced_subgraph(g, parent_ids);
        comp_blocks[c] = static_cast<long>(biconnected_blocks(sub[c].graph).size());
        for (int v : parent_ids)
            for (int u : g.neighbours(v))
                if (std::binary_search(B.begin(), B.end(), u)) owner[c] = u;
        if (owner[c] < 0) throw InternalError("block_graph_rep: component not attached to the block");
        if (2 * comp_blocks[c] > m) heavy = static_cast<int>(c);
    }

    std::vector<int> order;
    for (int v : q.s) order.push_back(v);
    for (int v : B)
        if (!std::binary_search(q.s.begin(), q.s.end(), v)) order.push_back(v);
    int t = static_cast<int>(order.size());
    Rational mid = midpoint(q.a, q.b);
    Rational wl = mid - q.a;
    std::vector<Rational> c(t + 1), d(t), hs(t);
    for (int i = 0; i < t; ++i) {
        c[i] = q.a + wl * rat(i + 1, 2 * t + 2);
        d[i] = q.a + wl * rat(t + 2 + i, 2 * t + 2);
        hs[i] = q.h + (1 - q.h) * rat(i + 1, t + 1);
    }
    c[t] = d[t - 1];
    std::map<int, int> index_of;
    for (int i = 0; i < t; ++i) index_of[order[i]] = i;
    for (int i = 0; i < t; ++i) r[order[i]] = Rect{c[i], d[i], Rational(0), hs[i]};

    std::vector<std::vector<int>> light(t);
    for (std::size_t cc = 0; cc < comps.size(); ++cc)
        if (static_cast<int>(cc) != heavy) light[index_of[owner[cc]]].push_back(static_cast<int>(cc));

    auto neighbours_in = [&](int u, const Subgraph& sg) {
        VertexSet s;
        for (int v = 0; v < sg.graph.n(); ++v)
            if (g.adjacent(u, sg.to_parent[v])) s.push_back(v);
        return s;
    };

    for (int i = 0; i < t; ++i) {
        int ti = static_cast<int>(light[i].size());
        for (int j = 0; j < ti; ++j) {
            const Subgraph& sg = sub[light[i][j]];
            Request sq;
            sq.s = neighbours_in(order[i], sg);
            sq.a = c[i] + (c[i + 1] - c[i]) * rat(j + 1, ti + 2);
            sq.b = c[i] + (c[i + 1] - c[i]) * rat(j + 2, ti + 2);
            sq.h = 0;
            auto sr = build(sg.graph, sq);
            for (int v = 0; v < sg.graph.n(); ++v) {
                const Rect& x = sr[v];
                Rect y{x.x_lo, x.x_hi, x.y_lo + 1, x.y_hi + 1};
                if (on_bottom(x)) y.y_lo = std::binary_search(sq.s.begin(), sq.s.end(), v) ? hs[i] : Rational(1);
                r[sg.to_parent[v]] = y;
            }
        }
    }
    if (heavy >= 0) {
        const Subgraph& sg = sub[heavy];
        int us = owner[heavy];
        Request sq;
        sq.s = neighbours_in(us, sg);
        sq.a = mid;
        sq.b = q.b;
        sq.h = hs[t - 1];
        auto sr = build(sg.graph, sq);
        Rational reach = sr[sq.s[0]].x_lo;
        for (int v : sq.s) reach = std::max(reach, sr[v].x_lo);
        for (int v = 0; v < sg.graph.n(); ++v) r[sg.to_parent[v]] = sr[v];
        r[us].x_hi = reach;
    }
    if (checks_on) check_bullets(g, r, q, block_bound(m));
    return r;
}

// Order-preserving respacing: x to integer ranks, y values strictly between
// consecutive integers spread evenly, so stab lines stay at 0..k-1.
void normalize(std::vector<Rect>& r) {
    std::vector<Rational> xs, ys;
    for (const auto& q : r) {
        xs.push_back(q.x_lo), xs.push_back(q.x_hi);
        ys.push_back(q.y_lo), ys.push_back(q.y_hi);
    }
    auto uniq = [](std::vector<Rational>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(xs);
    uniq(ys);
    std::map<Rational, Rational> ymap;
    std::size_t i = 0;
    while (i < ys.size()) {
        mpz_class f;
        mpz_fdiv_q(f.get_mpz_t(), ys[i].get_num_mpz_t(), ys[i].get_den_mpz_t());
        Rational base(f);
        if (ys[i] == base) {
            ymap[ys[i]] = base;
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < ys.size() && ys[j] < base + 1) ++j;
        long cnt = static_cast<long>(j - i);
        for (std::size_t p = i; p < j; ++p) ymap[ys[p]] = base + rat(static_cast<long>(p - i) + 1, cnt + 1);
        i = j;
    }
    auto xr = [&](const Rational& v) { return Rational(static_cast<long>(std::lower_bound(xs.begin(), xs.end(), v) - xs.begin())); };
    for (auto& q : r) q = Rect{xr(q.x_lo), xr(q.x_hi), ymap[q.y_lo], ymap[q.y_hi]};
}

}  // namespace

void set_block_rep_checks(bool on) { checks_on = on; }

int block_bound(long m) {
    if (m <= 2) return 1;
    int k = 0;
    while ((1L << k) < m) ++k;
    return k;
}

StabbedRepresentation block_graph_rep(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("block_graph_rep: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("block_graph_rep: graph is disconnected");
    if (!is_block_graph(g)) throw std::invalid_argument("block_graph_rep: not a block graph (some block is not a clique)");
    long m = static_cast<long>(biconnected_blocks(g).size());
    int k = block_bound(m);
    auto r = build(g, Request{{}, Rational(0), Rational(1), Rational(0)});
    normalize(r);
    StabbedRepresentation out;
    for (int i = 0; i < k; ++i) out.stabs.push_back(Rational(i));
    for (int v = 0; v < g.n(); ++v) out.add(g.label(v), r[v]);
    require_valid(out, g, Mode::ESRIG, "block_graph_rep");
    return out;
}

}  // namespace stabkit

#include "stabkit/constructors.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "stabkit/error.hpp"

namespace stabkit {

namespace {

std::string grid_label(int i, int j) { return "r" + std::to_string(i) + "c" + std::to_string(j); }

Rect box(const Rational& xa, const Rational& xb, const Rational& ya, const Rational& yb) { return Rect{xa, xb, ya, yb}; }

}  // namespace

Graph grid_graph(int h, int w) {
    if (h < 1 || w < 1) throw std::invalid_argument("grid_graph: dimensions must be positive");
    Graph g;
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) g.add_vertex(grid_label(i, j));
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) {
            int v = i * w + j;
            if (j + 1 < w) g.add_edge(v, v + 1);
            if (i + 1 < h) g.add_edge(v, v + w);
        }
    return g;
}

// Row i sits on line y = i with x-range [2j+i, 2j+i+2], so rows are staggered
// by one unit. The band between rows i and i+1 is split at heights that fall
// with j: (i,j) reaches up to i+1-(j+1)/(w+1) and (i+1,j) comes down to the
// same height, while the diagonal neighbour (i,j+1) stops strictly lower.
BuiltRep grid_rep(int h, int w) {
    if (h < 1 || w < 1) throw std::invalid_argument("grid_rep: dimensions must be positive");
    if (h > w) {
        BuiltRep t = grid_rep(w, h);
        BuiltRep out{grid_graph(h, w), {}};
        out.rep.stabs = t.rep.stabs;
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < w; ++j) out.rep.add(grid_label(i, j), t.rep.rects[j * h + i]);
        require_valid(out.rep, out.graph, Mode::ESRIG, "grid_rep");
        return out;
    }
    BuiltRep out{grid_graph(h, w), {}};
    for (int i = 0; i < h; ++i) out.rep.stabs.push_back(Rational(i));
    auto top = [&](int i, int j) -> Rational {
        if (i == h - 1) return Rational(i);
        return Rational(i + 1) - rat(j + 1, w + 1);
    };
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < w; ++j) {
            Rational lo = i == 0 ? Rational(0) : top(i - 1, j);
            out.rep.add(grid_label(i, j), box(Rational(2 * j + i), Rational(2 * j + i + 2), lo, top(i, j)));
        }
    require_valid(out.rep, out.graph, Mode::ESRIG, "grid_rep");
    return out;
}

StabbedRepresentation split_to_3esrig(const Graph& g, const StabbedRepresentation& r0) {
    auto part = split_partition(g);
    if (!part) throw std::invalid_argument("split_to_3esrig: graph is not split");
    StabbedRepresentation r = aligned(r0, g);
    for (int v = 0; v < g.n(); ++v)
        if (!r.rects[v].well_formed()) throw std::invalid_argument("split_to_3esrig: malformed rect '" + g.label(v) + "'");
    {
        Graph ig = intersection_graph(r);
        for (int v = 0; v < g.n(); ++v)
            if (ig.neighbours(v) != g.neighbours(v))
                throw std::invalid_argument("split_to_3esrig: rects do not realize the graph at '" + g.label(v) + "'");
    }
    int n = g.n();

    // Boxes have the Helly property, so the clique rects share a box; its
    // centre becomes the origin.
    Rational dx = 0, dy = 0;
    if (!part->clique.empty()) {
        Rect common = r.rects[part->clique[0]];
        for (int v : part->clique) {
            const Rect& q = r.rects[v];
            common.x_lo = std::max(common.x_lo, q.x_lo);
            common.x_hi = std::min(common.x_hi, q.x_hi);
            common.y_lo = std::max(common.y_lo, q.y_lo);
            common.y_hi = std::min(common.y_hi, q.y_hi);
        }
        dx = -midpoint(common.x_lo, common.x_hi);
        dy = -midpoint(common.y_lo, common.y_hi);
    }
    std::vector<Rect> rects = r.rects;
    for (auto& q : rects) {
        q.x_lo += dx;
        q.x_hi += dx;
        q.y_lo += dy;
        q.y_hi += dy;
    }
    Rational y_min = 0, y_max = 0;
    for (const auto& q : rects) {
        y_min = std::min(y_min, q.y_lo);
        y_max = std::max(y_max, q.y_hi);
    }
    Rational below = y_min - 1, above = y_max + 1;

    StabbedRepresentation out;
    out.stabs = {below, Rational(0), above};
    out.labels = r.labels;
    out.rects = rects;
    std::set<Rational> used_x;
    for (int u : part->independent) {
        Rect a = rects[u];
        for (int v : g.neighbours(u)) {
            const Rect& q = rects[v];
            a.x_lo = std::max(a.x_lo, q.x_lo);
            a.x_hi = std::min(a.x_hi, q.x_hi);
            a.y_lo = std::max(a.y_lo, q.y_lo);
            a.y_hi = std::min(a.y_hi, q.y_hi);
        }
        if (!a.well_formed()) throw std::invalid_argument("split_to_3esrig: empty region for '" + g.label(u) + "'");
        Rational py;
        if (a.y_lo > 0 || a.y_hi < 0) py = midpoint(a.y_lo, a.y_hi);
        else if (a.y_hi > 0) py = a.y_hi;
        else if (a.y_lo < 0) py = a.y_lo;
        else throw std::invalid_argument("split_to_3esrig: region for '" + g.label(u) + "' lies on the x-axis (coordinates not distinct)");
        Rational px;
        bool found = false;
        for (long den = 2; den <= 4L * n + 8 && !found; ++den)
            for (long num = 1; num < den && !found; ++num) {
                Rational c = a.x_lo + (a.x_hi - a.x_lo) * rat(num, den);
                if (!used_x.count(c)) px = c, found = true;
            }
        if (!found) {
            if (a.x_lo == a.x_hi && !used_x.count(a.x_lo)) px = a.x_lo, found = true;
            else throw std::invalid_argument("split_to_3esrig: no free x-coordinate for '" + g.label(u) + "'");
        }
        used_x.insert(px);
        out.rects[u] = py > 0 ? box(px, px, py, above) : box(px, px, below, py);
    }
    require_valid(out, g, Mode::ESRIG, "split_to_3esrig");
    return out;
}

BuiltRep planted_split(int clique, int independent, std::uint64_t seed) {
    if (clique < 0 || independent < 0) throw std::invalid_argument("planted_split: sizes must be non-negative");
    std::mt19937_64 rng(seed);
    const long D = 1 << 20;
    std::set<long> xs, ys;
    auto fresh = [&](std::set<long>& used, long lo, long hi) {
        std::uniform_int_distribution<long> d(lo, hi);
        for (;;) {
            long v = d(rng);
            if (used.insert(v).second) return v;
        }
    };
    std::vector<Rect> rects;
    std::vector<std::string> labels;
    for (int i = 0; i < clique; ++i) {
        long xa = fresh(xs, -100 * D, -1), xb = fresh(xs, 1, 100 * D);
        long ya = fresh(ys, -100 * D, -1), yb = fresh(ys, 1, 100 * D);
        rects.push_back(box(rat(xa, D), rat(xb, D), rat(ya, D), rat(yb, D)));
        labels.push_back("c" + std::to_string(i));
    }
    int placed = 0;
    for (int attempt = 0; placed < independent; ++attempt) {
        if (attempt > 100000) throw InternalError("planted_split: could not place independent rects");
        std::uniform_int_distribution<long> pos(-120 * D, 120 * D), size(D / 8, 4 * D);
        long xa = pos(rng), ya = pos(rng);
        long xb = xa + size(rng), yb = ya + size(rng);
        if (xs.count(xa) || xs.count(xb) || ys.count(ya) || ys.count(yb) || xa == xb || ya == yb) continue;
        Rect q = box(rat(xa, D), rat(xb, D), rat(ya, D), rat(yb, D));
        bool clash = false;
        for (int j = clique; j < static_cast<int>(rects.size()) && !clash; ++j) clash = rects[j].meets(q);
        if (clash) continue;
        xs.insert(xa), xs.insert(xb), ys.insert(ya), ys.insert(yb);
        rects.push_back(q);
        labels.push_back("i" + std::to_string(placed++));
    }
    BuiltRep out;
    out.rep.stabs = {Rational(0)};
    for (std::size_t i = 0; i < rects.size(); ++i) out.rep.add(labels[i], rects[i]);
    out.graph = intersection_graph(out.rep);
    return out;
}

// Right and up extents order the rects 1,2,3,4 in the first quadrant, left
// and down extents order them 2,4,1,3 in the third. Cells of the first
// quadrant are exactly in the rects of a run of consecutive indices in the
// first order, cells of the third a run in the second order; between them
// every subset of size 1 to 3 shows up.
BuiltRep split_fixture() {
    const int R[4] = {1, 2, 3, 4}, U[4] = {4, 3, 2, 1};
    const int L[4] = {3, 1, 4, 2}, Dn[4] = {2, 4, 1, 3};
    BuiltRep out;
    out.rep.stabs = {Rational(0)};
    for (int i = 0; i < 4; ++i)
        out.rep.add("c" + std::to_string(i + 1), box(Rational(-L[i]), Rational(R[i]), Rational(-Dn[i]), Rational(U[i])));
    auto name = [](std::vector<int> s) {
        std::sort(s.begin(), s.end());
        std::string l = "u";
        for (int i : s) l += std::to_string(i + 1);
        return l;
    };
    std::set<std::string> seen;
    int serial = 0;
    auto cell = [&](const std::vector<int>& order, const int* along, const int* across, int sx) {
        for (int a = 0; a < 4; ++a)
            for (int b = a; b < 4; ++b) {
                if (a == 0 && b == 3) continue;
                std::vector<int> s(order.begin() + a, order.begin() + b + 1);
                std::string l = name(s);
                if (!seen.insert(l).second) continue;
                Rational x0 = a == 0 ? Rational(0) : Rational(along[order[a - 1]]);
                Rational x1 = along[order[a]];
                Rational y0 = b == 3 ? Rational(0) : Rational(across[order[b + 1]]);
                Rational y1 = across[order[b]];
                Rational off = rat(1, 4) + rat(serial++, 128);
                Rational xa = x0 + (x1 - x0) * off, xb = x1 - (x1 - x0) * off;
                Rational ya = y0 + (y1 - y0) * off, yb = y1 - (y1 - y0) * off;
                Rect q = sx > 0 ? box(xa, xb, ya, yb) : box(-xb, -xa, -yb, -ya);
                out.rep.add(l, q);
            }
    };
    cell({0, 1, 2, 3}, R, U, 1);
    cell({1, 3, 0, 2}, L, Dn, -1);
    out.graph = intersection_graph(out.rep);
    if (out.rep.size() != 18 || !is_split(out.graph) || clique_number(out.graph) != 4)
        throw InternalError("split_fixture: layout does not give the expected graph");
    return out;
}

Fixtures fixture_reps() {
    Fixtures f;
    // K_{3,3}: a1 and a2 span the strip on the outer lines, b1..b3 are
    // columns on the middle line touching both, a3 is a segment on the middle line.
    {
        auto& r = f.k33.rep;
        r.stabs = {Rational(0), Rational(1), Rational(2)};
        r.add("a1", box(0, 10, 0, rat(1, 2)));
        r.add("a2", box(0, 10, rat(3, 2), 2));
        r.add("a3", box(0, 10, 1, 1));
        for (int j = 0; j < 3; ++j) r.add("b" + std::to_string(j + 1), box(3 * j + 1, 3 * j + 2, rat(1, 2), rat(3, 2)));
        Graph g;
        for (const auto& l : r.labels) g.add_vertex(l);
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 6; ++j) g.add_edge(i, j);
        f.k33.graph = g;
        require_valid(r, g, Mode::ESRIG, "fixture_reps");
    }
    // K_{4,4}: a_i is a horizontal segment on line i, b_j a vertical segment
    // crossing all four lines.
    {
        auto& r = f.k44.rep;
        r.stabs = {Rational(0), Rational(1), Rational(2), Rational(3)};
        for (int i = 0; i < 4; ++i) r.add("a" + std::to_string(i + 1), box(0, 5, i, i));
        for (int j = 0; j < 4; ++j) r.add("b" + std::to_string(j + 1), box(j + 1, j + 1, 0, 3));
        Graph g;
        for (const auto& l : r.labels) g.add_vertex(l);
        for (int i = 0; i < 4; ++i)
            for (int j = 4; j < 8; ++j) g.add_edge(i, j);
        f.k44.graph = g;
        require_valid(r, g, Mode::SRIG, "fixture_reps");
    }
    return f;
}

}  // namespace stabkit

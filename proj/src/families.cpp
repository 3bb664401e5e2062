#include "stabkit/families.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "stabkit/error.hpp"

namespace stabkit {

namespace {

struct Build {
    Graph g;
    std::vector<Rect> rects;

    int add(const std::string& label, Rect r) {
        int v = g.add_vertex(label);
        rects.push_back(std::move(r));
        return v;
    }
    void edge(int a, int b) { g.add_edge(a, b); }

    StabbedRepresentation rep(int k) const {
        StabbedRepresentation out;
        for (int i = 0; i < k; ++i) out.stabs.push_back(Rational(i));
        for (int v = 0; v < g.n(); ++v) out.add(g.label(v), rects[v]);
        return out;
    }
};

Rect box(const Rational& xa, const Rational& xb, const Rational& ya, const Rational& yb) { return Rect{xa, xb, ya, yb}; }

// Width of the window used by a star of d copies of G_{l-1}: a margin of 1 at
// either end and a gap of 1 between child windows.
Rational width_G(int l);
Rational width_star(int l, int d) {
    if (l == 1) return Rational(1);
    return d * width_G(l - 1) + d + 1;
}
Rational width_G(int l) { return width_star(l, 3); }

// Root spans the window on the top line; child i is a rect over the window
// of copy i, reaching down far enough to touch that copy's root only.
int place_star(Build& b, int l, int d, const std::string& prefix, const Rational& x0, int top) {
    Rational w = width_star(l, d);
    int root = b.add(prefix + "u", box(x0, x0 + w, top, top + rat(1, 2)));
    if (l == 1) return root;
    Rational cw = width_G(l - 1);
    for (int i = 1; i <= d; ++i) {
        Rational cx = x0 + 1 + (i - 1) * (cw + 1);
        int ui = b.add(prefix + "u" + std::to_string(i), box(cx, cx + cw, top - rat(5, 8), top + rat(1, 4)));
        int sub = place_star(b, l - 1, 3, prefix + "b" + std::to_string(i) + ".", cx, top - 1);
        b.edge(root, ui);
        b.edge(ui, sub);
    }
    return root;
}

struct Pair {
    int left_root, p1, centre, p2, right_root;
};

// Two stars of d copies joined root - p1 - c - p2 - root. The centre is
// `gap` wide; with a wider gap its interior is free for other rects.
Pair place_pair(Build& b, int l, int d, const std::string& prefix, const Rational& x0, int top, const Rational& gap,
                FMode mode) {
    Rational a = x0 + width_star(l, d);
    Pair p;
    p.left_root = place_star(b, l, d, prefix + "L.", x0, top);
    Rational py0 = mode == FMode::PathOnTop ? top - rat(1, 4) : top - rat(5, 8);
    Rational cy0 = mode == FMode::PathOnTop ? top - rat(1, 4) : top - rat(5, 4);
    Rational cy1 = mode == FMode::PathOnTop ? Rational(top + rat(1, 4)) : Rational(top - rat(1, 2));
    p.p1 = b.add(prefix + "p1", box(a - rat(1, 2), a + rat(5, 4), py0, top + rat(1, 4)));
    p.centre = b.add(prefix + "c", box(a + 1, a + 1 + gap, cy0, cy1));
    p.p2 = b.add(prefix + "p2", box(a + gap + rat(3, 4), a + gap + rat(5, 2), py0, top + rat(1, 4)));
    p.right_root = place_star(b, l, d, prefix + "R.", a + gap + 2, top);
    b.edge(p.left_root, p.p1);
    b.edge(p.p1, p.centre);
    b.edge(p.centre, p.p2);
    b.edge(p.p2, p.right_root);
    return p;
}

Rational width_pair(int l, int d, const Rational& gap) { return 2 * width_star(l, d) + gap + 2; }

void check_l(int l, int min, const char* who) {
    if (l < min) throw std::invalid_argument(std::string(who) + ": l must be at least " + std::to_string(min));
    if (l > 16) throw std::invalid_argument(std::string(who) + ": l must be at most 16");
}

Build build_G(int l) {
    Build b;
    place_star(b, l, 3, "G" + std::to_string(l) + ".", Rational(0), l - 1);
    return b;
}
Build build_D(int l) {
    Build b;
    place_star(b, l, 7, "D" + std::to_string(l) + ".", Rational(0), l - 1);
    return b;
}
Build build_F(int l, FMode mode) {
    Build b;
    place_pair(b, l, 3, "F" + std::to_string(l) + ".", Rational(0), l - 1, Rational(1), mode);
    return b;
}
Build build_J(int l) {
    Build b;
    place_pair(b, l, 7, "J" + std::to_string(l) + ".", Rational(0), l - 1, Rational(1), FMode::PathOnTop);
    return b;
}

int find_label(const Graph& g, const std::string& l) {
    auto v = g.find(l);
    if (!v) throw InternalError("families: missing vertex " + l);
    return *v;
}

}  // namespace

bool RootedTree::is_ancestor(int a, int v) const {
    for (int x = v; x >= 0; x = parent[x])
        if (x == a) return true;
    return false;
}

RootedTree rooted_at(const Graph& tree, int root) {
    if (!is_tree(tree)) throw std::invalid_argument("rooted_at: graph is not a tree");
    RootedTree t{tree, root, std::vector<int>(tree.n(), -1)};
    std::vector<char> seen(tree.n(), 0);
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : tree.neighbours(u))
            if (!seen[w]) {
                seen[w] = 1;
                t.parent[w] = u;
                q.push(w);
            }
    }
    return t;
}

RootedTree gen_G(int l) {
    check_l(l, 1, "gen_G");
    return rooted_at(build_G(l).g, 0);
}
RootedTree gen_D(int l) {
    check_l(l, 2, "gen_D");
    return rooted_at(build_D(l).g, 0);
}
RootedTree gen_F(int l) {
    check_l(l, 1, "gen_F");
    Graph g = build_F(l, FMode::PathOnTop).g;
    return rooted_at(g, find_label(g, "F" + std::to_string(l) + ".c"));
}
RootedTree gen_J(int l) {
    check_l(l, 2, "gen_J");
    Graph g = build_J(l).g;
    return rooted_at(g, find_label(g, "J" + std::to_string(l) + ".c"));
}

StabbedRepresentation rep_G(int l) {
    check_l(l, 1, "rep_G");
    Build b = build_G(l);
    auto r = b.rep(l);
    require_valid(r, b.g, Mode::ESRIG, "rep_G");
    return r;
}
StabbedRepresentation rep_D(int l) {
    check_l(l, 2, "rep_D");
    Build b = build_D(l);
    auto r = b.rep(l);
    require_valid(r, b.g, Mode::ESRIG, "rep_D");
    return r;
}
StabbedRepresentation rep_F(int l, FMode mode) {
    check_l(l, mode == FMode::RootsOnly ? 2 : 1, "rep_F");
    Build b = build_F(l, mode);
    auto r = b.rep(l);
    require_valid(r, b.g, Mode::ESRIG, "rep_F");
    return r;
}
StabbedRepresentation rep_J(int l) {
    check_l(l, 2, "rep_J");
    Build b = build_J(l);
    auto r = b.rep(l);
    require_valid(r, b.g, Mode::ESRIG, "rep_J");
    return r;
}

Graph gen_block_counterexample() {
    Build b;
    Rect none = box(0, 0, 0, 0);
    auto copy_in = [&](const Graph& src, const std::string& prefix) {
        int base = b.g.n();
        for (int v = 0; v < src.n(); ++v) b.add(prefix + src.label(v), none);
        for (auto [x, y] : src.edges()) b.edge(base + x, base + y);
    };
    auto leaf_of = [&](const std::string& prefix, int l) {
        std::string s = prefix + "G" + std::to_string(l) + ".";
        for (int i = 1; i < l; ++i) s += "b1.";
        return find_label(b.g, s + "u");
    };
    // T: G_2 with a true twin w' for the leaf w below v.
    int u = b.add("u", none), v = b.add("v", none), w = b.add("w", none), w2 = b.add("w'", none);
    b.edge(u, v), b.edge(v, w), b.edge(v, w2), b.edge(w, w2);
    for (int i = 2; i <= 3; ++i) {
        int ui = b.add("T.u" + std::to_string(i), none), li = b.add("T.b" + std::to_string(i) + ".u", none);
        b.edge(u, ui), b.edge(ui, li);
    }
    // H: T plus two G_2 copies joined through a, which sees w.
    Graph g2 = gen_G(2).graph, g3 = gen_G(3).graph;
    copy_in(g2, "T1.");
    copy_in(g2, "T2.");
    int a = b.add("a", none);
    for (int i = 1; i <= 2; ++i) {
        int p = b.add("a.p" + std::to_string(i), none);
        b.edge(a, p);
        b.edge(p, leaf_of("T" + std::to_string(i) + ".", 2));
    }
    b.edge(a, w);
    // G': two G_3 copies joined through b, which sees w'.
    copy_in(g3, "T3.");
    copy_in(g3, "T4.");
    int bb = b.add("b", none);
    for (int i = 3; i <= 4; ++i) {
        int p = b.add("b.p" + std::to_string(i - 2), none);
        b.edge(bb, p);
        b.edge(p, leaf_of("T" + std::to_string(i) + ".", 3));
    }
    b.edge(bb, w2);
    return b.g;
}

Graph gen_tree_not_k_srig(int k) {
    if (k < 4) throw std::invalid_argument("gen_tree_not_k_srig: k must be at least 4");
    if (k > 12) throw std::invalid_argument("gen_tree_not_k_srig: k must be at most 12");
    Build b;
    int c = b.add("c", box(0, 0, 0, 0));
    Rational x0 = 0;
    for (int i = k; i >= k - 2; --i) {
        std::string prefix = "H" + std::to_string(i) + ".";
        Pair p = place_pair(b, i, 3, prefix, x0, i - 1, Rational(1), FMode::PathOnTop);
        x0 += width_pair(i, 3, Rational(1)) + 1;
        int q = b.add("c.q" + std::to_string(k - i + 1), box(0, 0, 0, 0));
        b.edge(c, q);
        b.edge(q, p.centre);
    }
    return b.g;
}

GapTree gen_gap_tree(int k) {
    if (k < 4) throw std::invalid_argument("gen_gap_tree: k must be at least 4");
    if (k > 12) throw std::invalid_argument("gen_gap_tree: k must be at most 12");
    Build b;
    Rational wd = width_star(k - 2, 7);
    Rational gap1 = wd + 4;
    Rational wh1 = width_pair(k - 1, 7, gap1);
    Rational gap0 = wh1 + 2;

    // H_k with its connecting path on the bottom line: built with the path on
    // top, then reflected.
    Pair hk = place_pair(b, k, 7, "Hk.", Rational(0), k - 1, gap0, FMode::PathOnTop);
    for (auto& q : b.rects) {
        Rational lo = (k - 1) - q.y_hi, hi = (k - 1) - q.y_lo;
        q.y_lo = lo;
        q.y_hi = hi;
    }
    // Inside the centre b_k: H_{k-1} on lines 1..k-1 with its path on top,
    // and inside its centre b_{k-1} a column for c and then D_{k-2} on lines 1..k-2.
    Rational ak = width_star(k, 7);
    Rational x1 = ak + 2;
    Pair hk1 = place_pair(b, k - 1, 7, "Hk1.", x1, k - 1, gap1, FMode::PathOnTop);
    Rational a1 = x1 + width_star(k - 1, 7);
    Rational xd = a1 + 4;
    int droot = place_star(b, k - 2, 7, "D.", xd, k - 2);

    int c = b.add("c", box(a1 + 2, a1 + 3, k - rat(9, 4), k - rat(7, 4)));
    int q1 = b.add("q1", box(a1 + rat(9, 4), a1 + rat(9, 4), 0, k - rat(9, 4)));
    int q2 = b.add("q2", box(a1 + rat(5, 2), a1 + rat(5, 2), k - rat(7, 4), k - 1));
    int q3 = b.add("q3", box(a1 + rat(11, 4), xd + rat(1, 2), k - 2 - rat(1, 8), k - 2 + rat(1, 8)));
    b.edge(c, q1), b.edge(q1, hk.centre);
    b.edge(c, q2), b.edge(q2, hk1.centre);
    b.edge(c, q3), b.edge(q3, droot);

    GapTree out{b.g, b.rep(k)};
    require_valid(out.rep, out.graph, Mode::SRIG, "gen_gap_tree");
    return out;
}

std::vector<std::string> on_stab(const StabbedRepresentation& r, int j) {
    std::vector<std::string> out;
    const Rational& s = r.stabs.at(j);
    for (int i = 0; i < r.size(); ++i)
        if (r.rects[i].y_lo <= s && s <= r.rects[i].y_hi) out.push_back(r.labels[i]);
    return out;
}

}  // namespace stabkit

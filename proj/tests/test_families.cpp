#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "stabkit/families.hpp"
#include "stabkit/recognizers.hpp"

using namespace stabkit;

namespace {

std::set<std::string> label_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

std::set<std::string> closed_labels(const Graph& g, const std::vector<int>& vs) {
    std::set<std::string> out;
    for (int v : closed_neighbourhood(g, VertexSet(vs.begin(), vs.end()))) out.insert(g.label(v));
    return out;
}

bool spans_nest(const RootedTree& t, const StabbedRepresentation& r) {
    auto a = aligned(r, t.graph);
    for (int v = 0; v < t.graph.n(); ++v)
        for (int w = t.parent[v]; w >= 0; w = t.parent[w])
            if (!(a.rects[w].x_lo <= a.rects[v].x_lo && a.rects[v].x_hi <= a.rects[w].x_hi)) return false;
    return true;
}

long pow3(int e) {
    long p = 1;
    while (e-- > 0) p *= 3;
    return p;
}

}  // namespace

TEST_CASE("family sizes") {
    for (int l = 1; l <= 6; ++l) CHECK(gen_G(l).graph.n() == pow3(l) - 2);
    CHECK(gen_F(2).graph.n() == 17);
    CHECK(gen_D(2).graph.n() == 15);
    CHECK(gen_D(4).graph.n() == 183);
    CHECK(gen_D(3).graph.n() == 57);
    CHECK(gen_J(2).graph.n() == 33);
    for (int l = 1; l <= 4; ++l) {
        CHECK(is_tree(gen_G(l).graph));
        CHECK(is_tree(gen_F(l).graph));
    }
    CHECK_THROWS_AS(gen_D(1), std::invalid_argument);
    CHECK_THROWS_AS(gen_G(0), std::invalid_argument);
    CHECK_THROWS_AS(rep_F(1, FMode::RootsOnly), std::invalid_argument);
}

TEST_CASE("rooted trees") {
    auto t = gen_G(3);
    CHECK(t.parent[t.root] == -1);
    for (int v = 0; v < t.graph.n(); ++v) CHECK(t.is_ancestor(t.root, v));
    int leaf = -1;
    for (int v = 0; v < t.graph.n(); ++v)
        if (t.graph.degree(v) == 1) leaf = v;
    CHECK(!t.is_ancestor(leaf, t.root));
    CHECK_THROWS_AS(rooted_at(th::cycle(4), 0), std::invalid_argument);
}

TEST_CASE("G_l representations") {
    CHECK(rep_G(1).size() == 1);
    for (int l = 1; l <= 5; ++l) {
        auto t = gen_G(l);
        auto r = rep_G(l);
        CHECK(r.k() == l);
        CHECK(validate(r, t.graph, Mode::ESRIG).valid());
        CHECK(spans_nest(t, r));
        CHECK(label_set(on_stab(r, l - 1)) == closed_labels(t.graph, {t.root}));
    }
    CHECK(rep_G(4).size() == 79);
}

TEST_CASE("F_l representations in both layouts") {
    for (int l = 2; l <= 4; ++l) {
        auto t = gen_F(l);
        std::string p = "F" + std::to_string(l) + ".";
        int lr = *t.graph.find(p + "L.u"), rr = *t.graph.find(p + "R.u");
        auto a = rep_F(l, FMode::PathOnTop);
        CHECK(a.k() == l);
        CHECK(validate(a, t.graph, Mode::ESRIG).valid());
        auto top = label_set(on_stab(a, l - 1));
        for (const char* s : {"L.u", "p1", "c", "p2", "R.u"}) CHECK(top.count(p + s) == 1);

        auto b = rep_F(l, FMode::RootsOnly);
        CHECK(validate(b, t.graph, Mode::ESRIG).valid());
        CHECK(label_set(on_stab(b, l - 1)) == closed_labels(t.graph, {lr, rr}));
    }
    CHECK(validate(rep_F(1, FMode::PathOnTop), gen_F(1).graph, Mode::ESRIG).valid());
}

TEST_CASE("D_l and J_l representations") {
    for (int l = 2; l <= 4; ++l) {
        auto d = gen_D(l);
        auto r = rep_D(l);
        CHECK(validate(r, d.graph, Mode::ESRIG).valid());
        CHECK(spans_nest(d, r));
        CHECK(label_set(on_stab(r, l - 1)) == closed_labels(d.graph, {d.root}));
        auto j = gen_J(l);
        auto q = rep_J(l);
        CHECK(validate(q, j.graph, Mode::ESRIG).valid());
        auto top = label_set(on_stab(q, l - 1));
        std::string p = "J" + std::to_string(l) + ".";
        for (const char* s : {"L.u", "p1", "c", "p2", "R.u"}) CHECK(top.count(p + s) == 1);
    }
}

TEST_CASE("block counterexample structure") {
    Graph g = gen_block_counterexample();
    CHECK(is_block_graph(g));
    CHECK(is_connected(g));
    int triangles = 0;
    for (auto [u, v] : g.edges())
        for (int w : g.neighbours(u))
            if (w > v && g.adjacent(v, w)) ++triangles;
    CHECK(triangles == 1);
    for (const char* l : {"w", "w'", "v", "u", "a", "b"}) CHECK(g.find(l));
    int w = *g.find("w"), wp = *g.find("w'"), v = *g.find("v");
    CHECK(g.adjacent(w, wp));
    CHECK(g.adjacent(w, v));
    CHECK(g.adjacent(wp, v));
    CHECK(g.adjacent(*g.find("b"), wp));
}

TEST_CASE("tree that is not k-SRIG") {
    Graph t = gen_tree_not_k_srig(4);
    CHECK(is_tree(t));
    // Two G_i per pair for i = 4, 3, 2, their connectors, and three q's around c.
    long expect = 1 + 3;
    for (int i = 2; i <= 4; ++i) expect += 2 * (pow3(i) - 2) + 3;
    CHECK(t.n() == expect);
    CHECK_THROWS_AS(gen_tree_not_k_srig(3), std::invalid_argument);
}

TEST_CASE("gap tree layout at k = 4") {
    auto g = gen_gap_tree(4);
    CHECK(is_tree(g.graph));
    CHECK(g.rep.k() == 4);
    CHECK(validate(g.rep, g.graph, Mode::SRIG, Engine::Sweep).valid());
    CHECK(validate(g.rep, g.graph, Mode::SRIG, Engine::Pairwise).valid());
    long d4 = 7 * pow3(3) - 6, d3 = 7 * pow3(2) - 6, d2 = 7 * pow3(1) - 6;
    CHECK(g.graph.n() == 2 * d4 + 3 + 2 * d3 + 3 + d2 + 4);
    CHECK_THROWS_AS(gen_gap_tree(3), std::invalid_argument);
}

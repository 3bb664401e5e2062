#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "stabkit/constructors.hpp"
#include "stabkit/error.hpp"
#include "stabkit/representation.hpp"

using namespace stabkit;

namespace {

StabbedRepresentation random_rep(int n, int k, std::mt19937_64& rng) {
    StabbedRepresentation r;
    for (int i = 0; i < k; ++i) r.stabs.push_back(Rational(2 * i));
    std::uniform_int_distribution<int> x(0, 40), w(0, 8), y(-2, 2 * k), h(0, 3);
    for (int i = 0; i < n; ++i) {
        int a = x(rng), b = y(rng);
        r.add("v" + std::to_string(i), Rect{Rational(a), Rational(a + w(rng)), Rational(b), Rational(b + h(rng))});
    }
    return r;
}

}  // namespace

TEST_CASE("pairwise and sweep engines agree") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        auto r = random_rep(40, 3, rng);
        Graph g = intersection_graph(r);
        CHECK(validate(r, g, Mode::SRIG, Engine::Pairwise).missing_edges.empty());
        auto a = validate(r, g, Mode::SRIG, Engine::Pairwise);
        auto b = validate(r, g, Mode::SRIG, Engine::Sweep);
        CHECK(a.extra_edges == b.extra_edges);
        CHECK(a.unstabbed == b.unstabbed);
        CHECK(a.multi_stabbed == b.multi_stabbed);
        auto e1 = validate(r, g, Mode::ESRIG, Engine::Pairwise);
        auto e2 = validate(r, g, Mode::ESRIG, Engine::Sweep);
        CHECK(e1.multi_stabbed == e2.multi_stabbed);
    }
}

TEST_CASE("validation reports each violation") {
    StabbedRepresentation r;
    r.stabs = {Rational(0)};
    r.add("a", Rect{Rational(0), Rational(1), Rational(0), Rational(0)});
    r.add("b", Rect{Rational(2), Rational(3), Rational(0), Rational(0)});
    r.add("c", Rect{Rational(0), Rational(3), Rational(1), Rational(2)});
    Graph g = parse_edge_list_string("a b\nc\n");
    auto rep = validate(r, g, Mode::SRIG);
    CHECK(!rep.valid());
    REQUIRE(rep.missing_edges.size() == 1);
    CHECK(rep.unstabbed == std::vector<std::string>{"c"});
    CHECK_THROWS_AS(require_valid(r, g, Mode::SRIG, "test"), InternalError);

    Graph other = parse_edge_list_string("a b\nd\n");
    CHECK_THROWS_AS(validate(r, other, Mode::SRIG), std::invalid_argument);
}

TEST_CASE("exactify on the K33 fixture and on a 3-line SRIG") {
    auto fx = fixture_reps();
    auto e = exactify_k_le_3(fx.k33.rep);
    CHECK(validate(e, fx.k33.graph, Mode::ESRIG).valid());

    StabbedRepresentation r;
    r.stabs = {Rational(0), Rational(1), Rational(2)};
    r.add("tall", Rect{Rational(0), Rational(1), Rational(0), Rational(2)});
    r.add("mid", Rect{Rational(1), Rational(2), Rational(1), Rational(1)});
    r.add("low", Rect{Rational(0), Rational(3), Rational(0), Rational(0)});
    r.add("far", Rect{Rational(5), Rational(6), Rational(2), Rational(2)});
    Graph g = intersection_graph(r);
    auto x = exactify_k_le_3(r);
    CHECK(validate(x, g, Mode::ESRIG).valid());
    CHECK_THROWS_AS(exactify_k_le_3(fx.k44.rep), std::invalid_argument);
}

TEST_CASE("path decompositions and colourings from representations") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
        auto r = random_rep(25, 3, rng);
        // Drop rects that miss every line.
        StabbedRepresentation s;
        s.stabs = r.stabs;
        for (int i = 0; i < r.size(); ++i)
            if (r.stab_count(i) > 0) s.add(r.labels[i], r.rects[i]);
        Graph g = intersection_graph(s);
        if (g.n() == 0) continue;
        int omega = clique_number(g);
        auto pd = path_decomposition_from_rep(s, g);
        auto w = check_path_decomposition(g, pd);
        REQUIRE(w);
        CHECK(*w <= s.k() * omega - 1);
        auto col = coloring_from_rep(s, g);
        CHECK(is_proper_coloring(g, col));
        CHECK(*std::max_element(col.begin(), col.end()) < s.k() * omega);
    }
}

TEST_CASE("geometric helpers") {
    auto fx = fixture_reps();
    auto t = translated(fx.k33.rep, Rational(5), Rational(-1));
    CHECK(validate(t, fx.k33.graph, Mode::ESRIG).valid());
    auto f = reflected_y(fx.k33.rep, Rational(0));
    CHECK(validate(f, fx.k33.graph, Mode::ESRIG).valid());
    CHECK(std::is_sorted(f.stabs.begin(), f.stabs.end()));
    StabbedRepresentation both;
    append(both, fx.k33.rep, "x.");
    CHECK(both.size() == fx.k33.rep.size());
    CHECK(both.labels[0].rfind("x.", 0) == 0);
    auto a = aligned(fx.k33.rep, fx.k33.graph);
    for (int v = 0; v < fx.k33.graph.n(); ++v) CHECK(a.labels[v] == fx.k33.graph.label(v));
}

TEST_CASE("unit height stab lines") {
    std::vector<Rect> rects{{Rational(0), Rational(1), Rational(0), Rational(1)},
                            {Rational(2), Rational(3), rat(1, 2), rat(3, 2)},
                            {Rational(4), Rational(5), Rational(3), Rational(4)}};
    auto lines = unit_height_stab_lines(rects);
    for (const auto& q : rects)
        CHECK(std::any_of(lines.begin(), lines.end(), [&](const Rational& y) { return q.y_lo <= y && y <= q.y_hi; }));
}

TEST_CASE("svg output") {
    auto fx = fixture_reps();
    auto svg = to_svg(fx.k33.rep, "validator: valid");
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("validator: valid") != std::string::npos);
    CHECK(svg == to_svg(fx.k33.rep, "validator: valid"));
}

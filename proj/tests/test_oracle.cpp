#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "helpers.hpp"
#include "stabkit/constructors.hpp"
#include "stabkit/families.hpp"
#include "stabkit/oracle.hpp"

using namespace stabkit;

namespace {

int or99(const std::optional<int>& v) { return v ? *v : 99; }

}  // namespace

TEST_CASE("oracle on named graphs") {
    auto c4 = stab_numbers(th::cycle(4));
    CHECK(c4.stab == 2);
    CHECK(c4.estab == 2);
    auto p5 = stab_numbers(th::path(5));
    CHECK(p5.stab == 1);
    CHECK(p5.estab == 1);
    auto g2 = stab_numbers(gen_G(2).graph);
    CHECK(g2.stab == 2);
    CHECK(g2.estab == 2);
    CHECK(stab_oracle(th::biclique(4, 4), 4));
    CHECK(!stab_oracle(th::cycle(5), 1));
    CHECK(stab_numbers(th::complete(6)).estab == 1);
    CHECK(or99(stab_numbers(th::biclique(3, 3)).estab) <= 3);
    Graph big = th::path(oracle_cap() + 1);
    CHECK_THROWS_AS(stab_oracle(big, 2), std::invalid_argument);
}

TEST_CASE("oracle agrees with brute force on every graph with n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        auto t = th::axis_table(n);
        std::uint32_t lim = 1u << (n * (n - 1) / 2);
        for (std::uint32_t m = 0; m < lim; ++m) {
            Graph g = th::from_mask(n, m);
            auto b = th::brute_numbers(t, m);
            auto s = stab_numbers(g);
            CHECK_MESSAGE(or99(s.stab) == b.stab, "n=", n, " mask=", m);
            CHECK_MESSAGE(or99(s.estab) == b.estab, "n=", n, " mask=", m);
        }
    }
}

TEST_CASE("oracle properties on random graphs") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; ++t) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = th::numbered(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 2) g.add_edge(u, v);
        auto s = stab_numbers(g);
        REQUIRE(s.stab);
        CHECK(or99(s.stab) <= or99(s.estab));
        if (is_connected(g)) CHECK(stab_lower_bound(g) <= *s.stab);
        for (int k = 1; k < n; ++k) {
            if (stab_oracle(g, k)) CHECK(stab_oracle(g, k + 1));
            if (estab_oracle(g, k)) CHECK(estab_oracle(g, k + 1));
        }
        auto w = oracle_witness(g, *s.stab, Mode::SRIG);
        REQUIRE(w);
        CHECK(w->k() <= *s.stab);
        CHECK(validate(*w, g, Mode::SRIG).valid());
        if (s.estab) {
            auto e = oracle_witness(g, *s.estab, Mode::ESRIG);
            REQUIRE(e);
            CHECK(validate(*e, g, Mode::ESRIG).valid());
        }
        if (*s.stab > 1) CHECK(!oracle_witness(g, *s.stab - 1, Mode::SRIG));
    }
}

TEST_CASE("pathwidth and lower bounds") {
    CHECK(pathwidth(th::path(6)) == 1);
    CHECK(pathwidth(th::cycle(6)) == 2);
    CHECK(pathwidth(th::complete(5)) == 4);
    CHECK(pathwidth(gen_G(2).graph) == 2);
    CHECK(pathwidth(gen_F(2).graph) == 2);
    CHECK_THROWS_AS(pathwidth(gen_G(3).graph), std::invalid_argument);
    CHECK(pathwidth(grid_graph(3, 3)) == 3);
    CHECK(stab_lower_bound(grid_graph(4, 4)) == 3);
    CHECK(grid_stab_lower_bound(4, 7) == 3);
    CHECK(grid_stab_lower_bound(5, 5) == 3);
    CHECK(grid_stab_lower_bound(1, 9) == 1);
}

TEST_CASE("graph6 and canonical forms") {
    CHECK(graph6(th::numbered(1)) == "@");
    CHECK(graph6(th::numbered(2)) == "A?");
    CHECK(graph6(th::complete(2)) == "A_");
    CHECK(graph6(th::complete(3)) == "Bw");
    CHECK(graph6(th::complete(4)) == "C~");
    std::mt19937_64 rng(37);
    for (int t = 0; t < 30; ++t) {
        Graph g = th::random_tree(8, rng);
        std::vector<int> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = th::numbered(8);
        for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
        CHECK(graph6(canonical_form(g)) == graph6(canonical_form(h)));
    }
}

TEST_CASE("census enumeration counts") {
    const int trees[] = {1, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) CHECK(all_trees(n).size() == static_cast<std::size_t>(trees[n]));
    const int conn[] = {1, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) CHECK(all_connected(n).size() == static_cast<std::size_t>(conn[n]));
    std::set<std::string> codes;
    for (const auto& g : all_connected(6)) codes.insert(graph6(g));
    CHECK(codes.size() == 112);
    CHECK_THROWS_AS(all_trees(11), std::invalid_argument);
    CHECK_THROWS_AS(all_connected(9), std::invalid_argument);
}

TEST_CASE("census rows") {
    auto rows = census(CensusKind::Trees, 7);
    REQUIRE(rows.size() == 11);
    for (const auto& r : rows) {
        CHECK(r.n == 7);
        CHECK(r.m == 6);
        CHECK(r.source == "oracle");
        REQUIRE(r.numbers.estab);
        CHECK(*r.numbers.estab <= 2);
    }
    auto csv = census_csv(rows);
    CHECK(csv.rfind("graph6,n,m,interval,stab,estab,pathwidth,omega,source\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
}

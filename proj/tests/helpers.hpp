#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "stabkit/graph.hpp"
#include "stabkit/representation.hpp"

namespace th {

using stabkit::Graph;

inline Graph numbered(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(std::to_string(i));
    return g;
}

inline Graph path(int n) {
    Graph g = numbered(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle(int n) {
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete(int n) {
    Graph g = numbered(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph biclique(int a, int b) {
    Graph g = numbered(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

inline Graph star(int leaves) {
    Graph g = numbered(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Graph from_mask(int n, std::uint32_t mask) {
    Graph g = numbered(n);
    int b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b)
            if (mask >> b & 1) g.add_edge(i, j);
    return g;
}

inline std::uint32_t to_mask(const Graph& g) {
    int n = g.n();
    std::uint32_t m = 0;
    int b = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++b)
            if (g.adjacent(i, j)) m |= 1u << b;
    return m;
}

// Connected block graph grown by gluing cliques of 2..5 vertices at random
// existing vertices.
inline Graph random_block_graph(int n, std::mt19937_64& rng) {
    Graph g = numbered(n);
    int placed = 1;
    while (placed < n) {
        int at = std::uniform_int_distribution<int>(0, placed - 1)(rng);
        int add = std::min(n - placed, std::uniform_int_distribution<int>(1, 4)(rng));
        std::vector<int> blk{at};
        for (int i = 0; i < add; ++i) blk.push_back(placed++);
        for (std::size_t i = 0; i < blk.size(); ++i)
            for (std::size_t j = i + 1; j < blk.size(); ++j) g.add_edge(blk[i], blk[j]);
    }
    return g;
}

inline Graph random_tree(int n, std::mt19937_64& rng) {
    Graph g = numbered(n);
    for (int v = 1; v < n; ++v) g.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    return g;
}

// Independent brute force over 2-D representations of n <= 5 labelled
// vertices. Every interval family is order-equivalent to a sequence of 2n
// distinct endpoints, so enumerating those sequences covers each axis. For
// each realizable interval graph we keep the best piercing number and the
// best exact piercing number over all its sequences.
struct AxisTable {
    int n = 0;
    std::map<std::uint32_t, int> pierce;  // mask -> min piercing
    std::map<std::uint32_t, int> exact;   // mask -> min exact piercing (absent: none)
};

inline AxisTable axis_table(int n) {
    AxisTable t;
    t.n = n;
    std::vector<int> start(n, -1), stop(n, -1);
    std::vector<int> seq;
    auto finish = [&]() {
        int pairs = 0;
        std::uint32_t mask = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++pairs)
                if (start[i] < stop[j] && start[j] < stop[i]) mask |= 1u << pairs;
        // Cells sit between consecutive events; record who is open in each.
        std::vector<std::uint32_t> cells;
        std::uint32_t open = 0;
        for (int e : seq) {
            int v = e >> 1;
            if (e & 1) open &= ~(1u << v);
            else open |= 1u << v;
            if (open) cells.push_back(open);
        }
        std::sort(cells.begin(), cells.end());
        cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
        // Greedy piercing in sweep order.
        int p = 0;
        std::uint32_t hit = 0, active = 0;
        for (int e : seq) {
            int v = e >> 1;
            if (!(e & 1)) {
                active |= 1u << v;
                continue;
            }
            if (!(hit >> v & 1)) ++p, hit |= active;
            active &= ~(1u << v);
        }
        auto it = t.pierce.find(mask);
        if (it == t.pierce.end() || p < it->second) t.pierce[mask] = p;
        std::uint32_t all = (1u << n) - 1;
        int c = static_cast<int>(cells.size());
        int best = 99;
        for (std::uint32_t s = 1; s < (1u << c); ++s) {
            std::uint32_t cover = 0;
            bool ok = true;
            for (int i = 0; i < c && ok; ++i)
                if (s >> i & 1) {
                    if (cover & cells[i]) ok = false;
                    cover |= cells[i];
                }
            if (ok && cover == all) best = std::min(best, __builtin_popcount(s));
        }
        if (best < 99) {
            auto jt = t.exact.find(mask);
            if (jt == t.exact.end() || best < jt->second) t.exact[mask] = best;
        }
    };
    int total = 2 * n;
    auto rec = [&](auto&& self, int placed) -> void {
        if (placed == total) {
            finish();
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (start[v] < 0) {
                start[v] = placed;
                seq.push_back(2 * v);
                self(self, placed + 1);
                seq.pop_back();
                start[v] = -1;
            } else if (stop[v] < 0) {
                stop[v] = placed;
                seq.push_back(2 * v + 1);
                self(self, placed + 1);
                seq.pop_back();
                stop[v] = -1;
            }
        }
    };
    if (n > 0) rec(rec, 0);
    return t;
}

struct BruteNumbers {
    int stab = 99;   // 99: not a rectangle intersection graph
    int estab = 99;  // 99: no exact representation
};

inline BruteNumbers brute_numbers(const AxisTable& t, std::uint32_t g) {
    BruteNumbers b;
    for (const auto& [y, py] : t.pierce) {
        if ((y & g) != g) continue;
        bool pair = false;
        for (const auto& [x, px] : t.pierce)
            if ((x & y) == g) {
                pair = true;
                break;
            }
        if (!pair) continue;
        b.stab = std::min(b.stab, py);
        auto e = t.exact.find(y);
        if (e != t.exact.end()) b.estab = std::min(b.estab, e->second);
    }
    return b;
}

}  // namespace th

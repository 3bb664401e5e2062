#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "stabkit/interval.hpp"
#include "stabkit/oracle.hpp"
#include "stabkit/recognizers.hpp"

namespace stabkit {

namespace {

constexpr int max_canonical_n = 11;

std::vector<int> refine(const Graph& g) {
    int n = g.n();
    std::vector<int> colour(n);
    for (int v = 0; v < n; ++v) colour[v] = g.degree(v);
    int classes = -1;
    while (true) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s{colour[v]};
            std::vector<int> nb;
            for (int u : g.neighbours(v)) nb.push_back(colour[u]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& [s, v] : sig) rank.emplace(s, 0);
        int r = 0;
        for (auto& [s, id] : rank) id = r++;
        for (int v = 0; v < n; ++v) colour[v] = rank[sig[v].first];
        if (r == classes) break;
        classes = r;
    }
    return colour;
}

// Bits of the upper triangle in graph6 column order, first pair most significant.
std::uint64_t code_of(const Graph& g, const std::vector<int>& at) {
    int n = g.n();
    std::uint64_t c = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) c = (c << 1) | (g.adjacent(at[i], at[j]) ? 1u : 0u);
    return c;
}

struct Canon {
    std::uint64_t code = 0;
    std::vector<int> at;  // position -> vertex
};

Canon canonical(const Graph& g) {
    int n = g.n();
    if (n > max_canonical_n) throw std::invalid_argument("canonical_form: n exceeds " + std::to_string(max_canonical_n));
    auto colour = refine(g);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });
    std::vector<std::pair<int, int>> cells;  // [begin, end) in order
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && colour[order[j]] == colour[order[i]]) ++j;
        cells.push_back({i, j});
        i = j;
    }
    Canon best;
    bool have = false;
    std::vector<int> at = order;
    auto rec = [&](auto&& self, std::size_t cell) -> void {
        if (cell == cells.size()) {
            auto c = code_of(g, at);
            if (!have || c > best.code) best = {c, at}, have = true;
            return;
        }
        auto [b, e] = cells[cell];
        std::sort(at.begin() + b, at.begin() + e);
        do {
            self(self, cell + 1);
        } while (std::next_permutation(at.begin() + b, at.begin() + e));
    };
    rec(rec, 0);
    if (!have) best.at = at;
    return best;
}

Graph relabelled(const Graph& g, const std::vector<int>& at) {
    int n = g.n();
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[at[i]] = i;
    Graph h;
    for (int i = 0; i < n; ++i) h.add_vertex(std::to_string(i));
    for (auto [u, v] : g.edges()) h.add_edge(pos[u], pos[v]);
    return h;
}

std::vector<Graph> grow(const std::vector<Graph>& prev, bool leaves_only) {
    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    for (const auto& g : prev) {
        int n = g.n();
        std::uint32_t lim = 1u << n;
        for (std::uint32_t s = 1; s < lim; ++s) {
            if (leaves_only && (s & (s - 1))) continue;
            Graph h = g;
            int v = h.add_vertex(std::to_string(n));
            for (int u = 0; u < n; ++u)
                if (s >> u & 1) h.add_edge(u, v);
            auto c = canonical(h);
            if (seen.insert(c.code).second) out.push_back(relabelled(h, c.at));
        }
    }
    std::sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) { return graph6(a) < graph6(b); });
    return out;
}

std::vector<Graph> family(int n, bool trees) {
    if (n < 1) throw std::invalid_argument("census: n must be at least 1");
    std::vector<Graph> cur(1);
    cur[0].add_vertex("0");
    for (int i = 2; i <= n; ++i) cur = grow(cur, trees);
    return cur;
}

}  // namespace

Graph canonical_form(const Graph& g) {
    auto c = canonical(g);
    return relabelled(g, c.at);
}

std::string graph6(const Graph& g) {
    int n = g.n();
    if (n > 62) throw std::invalid_argument("graph6: n > 62 not supported");
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0, bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) out.push_back(static_cast<char>(63 + acc)), acc = 0, bits = 0;
        }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

std::vector<Graph> all_trees(int n) {
    if (n > 10) throw std::invalid_argument("all_trees: n = " + std::to_string(n) + " exceeds 10");
    return family(n, true);
}

std::vector<Graph> all_connected(int n) {
    if (n > 8) throw std::invalid_argument("all_connected: n = " + std::to_string(n) + " exceeds 8");
    return family(n, false);
}

std::vector<CensusRow> census(CensusKind kind, int n) {
    auto graphs = kind == CensusKind::Trees ? all_trees(n) : all_connected(n);
    std::vector<CensusRow> rows;
    for (const auto& g : graphs) {
        CensusRow r;
        r.g6 = graph6(g);
        r.n = g.n();
        r.m = g.m();
        r.interval = interval_test(g);
        r.pathwidth = pathwidth(g);
        r.omega = clique_number(g);
        if (g.n() <= oracle_cap()) {
            r.numbers = stab_numbers(g);
            r.source = "oracle";
        } else if (kind == CensusKind::Trees) {
            // k <= 3: SRIG and ESRIG coincide, and both recognizers are exact for trees.
            r.numbers.k_max = 3;
            int k = r.interval ? 1 : recognize_block_2esrig(g).yes() ? 2 : recognize_tree_3esrig(g).yes() ? 3 : 0;
            if (k > 0) r.numbers.stab = r.numbers.estab = k;
            r.source = "recognizer";
        } else {
            throw std::invalid_argument("census: n exceeds the oracle cap");
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
    std::ostringstream out;
    out << "graph6,n,m,interval,stab,estab,pathwidth,omega,source\n";
    auto num = [](const std::optional<int>& v, int k_max) { return v ? std::to_string(*v) : ">" + std::to_string(k_max); };
    for (const auto& r : rows)
        out << r.g6 << ',' << r.n << ',' << r.m << ',' << (r.interval ? 1 : 0) << ',' << num(r.numbers.stab, r.numbers.k_max)
            << ',' << num(r.numbers.estab, r.numbers.k_max) << ',' << r.pathwidth << ',' << r.omega << ',' << r.source
            << '\n';
    return out.str();
}

}  // namespace stabkit

#include "stabkit/representation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "internal.hpp"
#include "stabkit/error.hpp"

namespace stabkit {

namespace {

// Smallest positive difference between distinct values in v (v nonempty).
std::optional<Rational> min_gap(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    std::optional<Rational> g;
    for (std::size_t i = 1; i < v.size(); ++i) {
        Rational d = v[i] - v[i - 1];
        if (!g || d < *g) g = d;
    }
    return g;
}

std::vector<Rational> y_values(const StabbedRepresentation& r) {
    std::vector<Rational> v = r.stabs;
    for (const auto& q : r.rects) {
        v.push_back(q.y_lo);
        v.push_back(q.y_hi);
    }
    return v;
}

}  // namespace

StabbedRepresentation exactify_k_le_3(const StabbedRepresentation& r) {
    if (r.k() > 3) throw std::invalid_argument("exactify_k_le_3: " + std::to_string(r.k()) + " stab lines, at most 3 allowed");
    Graph g = intersection_graph(r);
    for (int i = 0; i < r.size(); ++i)
        if (r.stab_count(i) == 0) throw std::invalid_argument("exactify_k_le_3: rect '" + r.labels[i] + "' meets no stab line");
    StabbedRepresentation out = r;
    if (r.k() <= 1) return out;

    // Endpoints sitting exactly on a stab line are pushed outward first, so
    // the trimming below cannot turn a touching contact into a gap.
    auto gap = min_gap(y_values(out));
    if (gap) {
        Rational delta = *gap / 3;
        for (auto& q : out.rects)
            for (const auto& s : out.stabs) {
                if (q.y_lo == s) q.y_lo = s - delta;
                if (q.y_hi == s) q.y_hi = s + delta;
            }
    }
    gap = min_gap(y_values(out));
    Rational eps = *gap / 2;
    const Rational& a1 = out.stabs[0];
    const Rational& a2 = out.stabs[1];
    for (int i = 0; i < out.size(); ++i) {
        Rect& q = out.rects[i];
        if (!(q.y_lo <= a2 && a2 <= q.y_hi)) continue;
        q.y_lo = std::max(q.y_lo, Rational(a1 + eps));
        if (out.k() == 3) q.y_hi = std::min(q.y_hi, Rational(out.stabs[2] - eps));
    }
    require_valid(out, g, Mode::ESRIG, "exactify_k_le_3");
    return out;
}

std::vector<Rational> unit_height_stab_lines(const std::vector<Rect>& rects) {
    if (rects.empty()) return {};
    Rational h = rects[0].y_hi - rects[0].y_lo;
    for (const auto& q : rects)
        if (q.y_hi - q.y_lo != h) throw std::invalid_argument("unit_height_stab_lines: rect heights differ");
    std::vector<const Rect*> byhi;
    for (const auto& q : rects) byhi.push_back(&q);
    std::sort(byhi.begin(), byhi.end(), [](const Rect* a, const Rect* b) { return a->y_hi < b->y_hi; });
    std::vector<Rational> lines;
    for (const Rect* q : byhi)
        if (lines.empty() || lines.back() < q->y_lo) lines.push_back(q->y_hi);
    return lines;
}

int PathDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

PathDecomposition path_decomposition_from_rep(const StabbedRepresentation& r0, const Graph& g) {
    require_valid(r0, g, Mode::SRIG, "path_decomposition_from_rep");
    StabbedRepresentation r = aligned(r0, g);
    auto c = detail::compress(r);
    int n = r.size();
    std::vector<int> byhi(n), bylo(n);
    for (int i = 0; i < n; ++i) byhi[i] = bylo[i] = i;
    std::sort(byhi.begin(), byhi.end(), [&](int a, int b) { return c.x_hi[a] < c.x_hi[b]; });
    std::sort(bylo.begin(), bylo.end(), [&](int a, int b) { return c.x_lo[a] < c.x_lo[b]; });
    PathDecomposition pd;
    std::set<std::pair<int, int>> active;  // (x_hi, vertex)
    std::size_t next_lo = 0;
    for (std::size_t i = 0; i < byhi.size(); ++i) {
        int t = c.x_hi[byhi[i]];
        if (i > 0 && c.x_hi[byhi[i - 1]] == t) continue;
        while (next_lo < bylo.size() && c.x_lo[bylo[next_lo]] <= t) {
            active.emplace(c.x_hi[bylo[next_lo]], bylo[next_lo]);
            ++next_lo;
        }
        while (!active.empty() && active.begin()->first < t) active.erase(active.begin());
        VertexSet bag;
        for (const auto& [hi, v] : active) bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        pd.bags.push_back(std::move(bag));
    }
    return pd;
}

std::optional<int> check_path_decomposition(const Graph& g, const PathDecomposition& pd) {
    int n = g.n();
    std::vector<int> first(n, -1), last(n, -1), count(n, 0);
    for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i)
        for (int v : pd.bags[i]) {
            if (v < 0 || v >= n) return std::nullopt;
            if (first[v] < 0) first[v] = i;
            last[v] = i;
            ++count[v];
        }
    for (int v = 0; v < n; ++v) {
        if (first[v] < 0) return std::nullopt;
        if (count[v] != last[v] - first[v] + 1) return std::nullopt;
    }
    for (auto [u, v] : g.edges())
        if (std::max(first[u], first[v]) > std::min(last[u], last[v])) return std::nullopt;
    return pd.width();
}

std::vector<int> coloring_from_rep(const StabbedRepresentation& r0, const Graph& g) {
    require_valid(r0, g, Mode::SRIG, "coloring_from_rep");
    StabbedRepresentation r = aligned(r0, g);
    auto c = detail::compress(r);
    int n = r.size();
    std::vector<std::vector<int>> line(r.k());
    for (int v = 0; v < n; ++v) {
        int j = static_cast<int>(std::lower_bound(c.stabs.begin(), c.stabs.end(), c.y_lo[v]) - c.stabs.begin());
        line[j].push_back(v);
    }
    std::vector<int> colour(n, -1);
    int offset = 0;
    for (auto& vs : line) {
        std::sort(vs.begin(), vs.end(), [&](int a, int b) { return c.x_lo[a] < c.x_lo[b]; });
        std::set<std::pair<int, int>> busy;  // (x_hi, colour)
        std::set<int> free_colours;
        int used = 0;
        for (int v : vs) {
            while (!busy.empty() && busy.begin()->first < c.x_lo[v]) {
                free_colours.insert(busy.begin()->second);
                busy.erase(busy.begin());
            }
            int col;
            if (free_colours.empty()) col = used++;
            else {
                col = *free_colours.begin();
                free_colours.erase(free_colours.begin());
            }
            colour[v] = offset + col;
            busy.emplace(c.x_hi[v], col);
        }
        offset += used;
    }
    return colour;
}

bool is_proper_coloring(const Graph& g, const std::vector<int>& colour) {
    if (static_cast<int>(colour.size()) != g.n()) return false;
    for (int c : colour)
        if (c < 0) return false;
    for (auto [u, v] : g.edges())
        if (colour[u] == colour[v]) return false;
    return true;
}

StabbedRepresentation translated(const StabbedRepresentation& r, const Rational& dx, const Rational& dy) {
    StabbedRepresentation out = r;
    for (auto& q : out.rects) {
        q.x_lo += dx;
        q.x_hi += dx;
        q.y_lo += dy;
        q.y_hi += dy;
    }
    for (auto& s : out.stabs) s += dy;
    return out;
}

StabbedRepresentation reflected_y(const StabbedRepresentation& r, const Rational& c) {
    StabbedRepresentation out = r;
    for (auto& q : out.rects) {
        Rational lo = c - q.y_hi, hi = c - q.y_lo;
        q.y_lo = lo;
        q.y_hi = hi;
    }
    for (auto& s : out.stabs) s = c - s;
    std::reverse(out.stabs.begin(), out.stabs.end());
    return out;
}

void append(StabbedRepresentation& into, const StabbedRepresentation& from, const std::string& prefix) {
    for (int i = 0; i < from.size(); ++i) into.add(prefix + from.labels[i], from.rects[i]);
}

}  // namespace stabkit

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "internal.hpp"
#include "stabkit/error.hpp"

namespace stabkit {

namespace detail {

namespace {

std::vector<int> ranks(const std::vector<const Rational*>& vals, std::vector<Rational>& uniq) {
    std::vector<int> idx(vals.size());
    std::vector<int> order(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return *vals[a] < *vals[b]; });
    int rank = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || *vals[order[i]] != *vals[order[i - 1]]) {
            ++rank;
            uniq.push_back(*vals[order[i]]);
        }
        idx[order[i]] = rank;
    }
    return idx;
}

}  // namespace

CompressedRects compress(const StabbedRepresentation& r) {
    std::size_t n = r.rects.size();
    std::vector<const Rational*> xs, ys;
    xs.reserve(2 * n);
    ys.reserve(2 * n + r.stabs.size());
    for (const auto& q : r.rects) {
        xs.push_back(&q.x_lo);
        xs.push_back(&q.x_hi);
        ys.push_back(&q.y_lo);
        ys.push_back(&q.y_hi);
    }
    for (const auto& s : r.stabs) ys.push_back(&s);
    std::vector<Rational> ux, uy;
    auto xr = ranks(xs, ux);
    auto yr = ranks(ys, uy);
    CompressedRects c;
    c.x_lo.resize(n);
    c.x_hi.resize(n);
    c.y_lo.resize(n);
    c.y_hi.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        c.x_lo[i] = xr[2 * i];
        c.x_hi[i] = xr[2 * i + 1];
        c.y_lo[i] = yr[2 * i];
        c.y_hi[i] = yr[2 * i + 1];
    }
    for (std::size_t j = 0; j < r.stabs.size(); ++j) c.stabs.push_back(yr[2 * n + j]);
    return c;
}

std::vector<std::pair<int, int>> intersecting_pairs(const CompressedRects& c, Engine engine) {
    int n = static_cast<int>(c.x_lo.size());
    if (engine == Engine::Auto) engine = n > 5000 ? Engine::Sweep : Engine::Pairwise;
    std::vector<std::pair<int, int>> out;
    auto meet = [&](int i, int j) {
        return c.x_lo[i] <= c.x_hi[j] && c.x_lo[j] <= c.x_hi[i] && c.y_lo[i] <= c.y_hi[j] && c.y_lo[j] <= c.y_hi[i];
    };
    if (engine == Engine::Pairwise) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (meet(i, j)) out.emplace_back(i, j);
        return out;
    }
    // Sweep over x: rects enter at x_lo (ties before exits), leave after x_hi.
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return c.x_lo[a] < c.x_lo[b]; });
    std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> expiry;
    std::vector<int> active, slot(n, -1);
    for (int i : order) {
        while (!expiry.empty() && expiry.top().first < c.x_lo[i]) {
            int gone = expiry.top().second;
            expiry.pop();
            int s = slot[gone];
            slot[active.back()] = s;
            active[s] = active.back();
            active.pop_back();
            slot[gone] = -1;
        }
        for (int j : active)
            if (c.y_lo[i] <= c.y_hi[j] && c.y_lo[j] <= c.y_hi[i]) out.emplace_back(std::min(i, j), std::max(i, j));
        slot[i] = static_cast<int>(active.size());
        active.push_back(i);
        expiry.emplace(c.x_hi[i], i);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> intersecting_pairs(const StabbedRepresentation& r, Engine engine) {
    return intersecting_pairs(compress(r), engine);
}

}  // namespace detail

int StabbedRepresentation::stab_count(int i) const {
    const Rect& q = rects[i];
    auto lo = std::lower_bound(stabs.begin(), stabs.end(), q.y_lo);
    auto hi = std::upper_bound(stabs.begin(), stabs.end(), q.y_hi);
    return hi > lo ? static_cast<int>(hi - lo) : 0;
}

StabbedRepresentation aligned(const StabbedRepresentation& r, const Graph& g) {
    if (r.size() != g.n()) {
        for (const auto& l : r.labels)
            if (!g.find(l)) throw std::invalid_argument("vertex set mismatch: '" + l + "' has a rect but is not in the graph");
        for (int v = 0; v < g.n(); ++v) {
            bool found = std::find(r.labels.begin(), r.labels.end(), g.label(v)) != r.labels.end();
            if (!found) throw std::invalid_argument("vertex set mismatch: '" + g.label(v) + "' has no rect");
        }
        throw std::invalid_argument("vertex set mismatch: duplicate labels in representation");
    }
    StabbedRepresentation out;
    out.stabs = r.stabs;
    out.labels.resize(g.n());
    out.rects.resize(g.n());
    std::vector<char> seen(g.n(), 0);
    for (int i = 0; i < r.size(); ++i) {
        auto v = g.find(r.labels[i]);
        if (!v) throw std::invalid_argument("vertex set mismatch: '" + r.labels[i] + "' has a rect but is not in the graph");
        if (seen[*v]) throw std::invalid_argument("vertex set mismatch: '" + r.labels[i] + "' has two rects");
        seen[*v] = 1;
        out.labels[*v] = r.labels[i];
        out.rects[*v] = r.rects[i];
    }
    return out;
}

Graph intersection_graph(const StabbedRepresentation& r) {
    Graph g;
    for (const auto& l : r.labels) g.add_vertex(l);
    for (auto [i, j] : detail::intersecting_pairs(r, Engine::Auto)) g.add_edge(i, j);
    return g;
}

ValidationReport validate(const StabbedRepresentation& r0, const Graph& g, Mode mode, Engine engine) {
    StabbedRepresentation r = aligned(r0, g);
    ValidationReport rep;
    for (std::size_t j = 0; j + 1 < r.stabs.size(); ++j)
        if (!(r.stabs[j] < r.stabs[j + 1])) rep.malformed.push_back("stabs not strictly increasing");
    if (r.stabs.empty()) rep.malformed.push_back("no stab lines");
    for (int v = 0; v < r.size(); ++v)
        if (!r.rects[v].well_formed()) rep.malformed.push_back(r.labels[v]);
    if (!rep.malformed.empty()) return rep;

    auto c = detail::compress(r);
    for (int v = 0; v < r.size(); ++v) {
        auto lo = std::lower_bound(c.stabs.begin(), c.stabs.end(), c.y_lo[v]);
        auto hi = std::upper_bound(c.stabs.begin(), c.stabs.end(), c.y_hi[v]);
        long cnt = hi > lo ? hi - lo : 0;
        if (cnt == 0) rep.unstabbed.push_back(r.labels[v]);
        else if (cnt >= 2 && mode == Mode::ESRIG) rep.multi_stabbed.push_back(r.labels[v]);
    }
    auto pairs = detail::intersecting_pairs(c, engine);
    auto edges = g.edges();
    std::size_t i = 0, j = 0;
    while (i < pairs.size() || j < edges.size()) {
        if (j == edges.size() || (i < pairs.size() && pairs[i] < edges[j])) {
            rep.extra_edges.emplace_back(r.labels[pairs[i].first], r.labels[pairs[i].second]);
            ++i;
        } else if (i == pairs.size() || edges[j] < pairs[i]) {
            rep.missing_edges.emplace_back(r.labels[edges[j].first], r.labels[edges[j].second]);
            ++j;
        } else {
            ++i;
            ++j;
        }
    }
    return rep;
}

void require_valid(const StabbedRepresentation& r, const Graph& g, Mode mode, const std::string& who) {
    auto rep = validate(r, g, mode);
    if (rep.valid()) return;
    std::string msg = who + ": produced an invalid representation (";
    msg += std::to_string(rep.missing_edges.size()) + " missing edges, ";
    msg += std::to_string(rep.extra_edges.size()) + " extra edges, ";
    msg += std::to_string(rep.unstabbed.size()) + " unstabbed, ";
    msg += std::to_string(rep.multi_stabbed.size()) + " multi-stabbed, ";
    msg += std::to_string(rep.malformed.size()) + " malformed)";
    throw InternalError(msg);
}

}  // namespace stabkit

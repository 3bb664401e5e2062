#include "stabkit/interval.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "stabkit/error.hpp"

namespace stabkit {

namespace {

// comp[v][x] = component of x in G - N[v], or -1 when x is in N[v].
std::vector<std::vector<int>> punctured_components(const Graph& g) {
    int n = g.n();
    std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
    std::vector<char> blocked(n);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
        std::fill(blocked.begin(), blocked.end(), 0);
        blocked[v] = 1;
        for (int w : g.neighbours(v)) blocked[w] = 1;
        int next = 0;
        auto& c = comp[v];
        for (int s = 0; s < n; ++s) {
            if (blocked[s] || c[s] >= 0) continue;
            queue.assign(1, s);
            c[s] = next;
            for (std::size_t i = 0; i < queue.size(); ++i)
                for (int w : g.neighbours(queue[i]))
                    if (!blocked[w] && c[w] < 0) {
                        c[w] = next;
                        queue.push_back(w);
                    }
            ++next;
        }
    }
    return comp;
}

// Left-endpoint ordering in which every vertex's later neighbours directly
// follow it. Candidates with the fewest unplaced neighbours are tried first.
class UmbrellaSearch {
public:
    UmbrellaSearch(const Graph& g, const VertexSet& comp) : g_(g), comp_(comp) {
        in_comp_.assign(g.n(), 0);
        for (int v : comp) in_comp_[v] = 1;
    }

    std::optional<std::vector<int>> run(int start) {
        placed_.assign(g_.n(), 0);
        remaining_.assign(g_.n(), 0);
        for (int v : comp_) remaining_[v] = g_.degree(v);
        order_.clear();
        if (extend(start)) return order_;
        return std::nullopt;
    }

private:
    void place(int v) {
        placed_[v] = 1;
        order_.push_back(v);
        for (int w : g_.neighbours(v)) --remaining_[w];
        if (remaining_[v] > 0) active_.push_back(v);
        for (int w : g_.neighbours(v))
            if (placed_[w] && remaining_[w] == 0) active_.erase(std::find(active_.begin(), active_.end(), w));
    }

    void unplace(int v, const std::vector<int>& saved_active) {
        placed_[v] = 0;
        order_.pop_back();
        for (int w : g_.neighbours(v)) ++remaining_[w];
        active_ = saved_active;
    }

    bool extend(int v) {
        auto saved = active_;
        place(v);
        if (order_.size() == comp_.size()) return true;
        if (!active_.empty()) {
            int pivot = *std::min_element(active_.begin(), active_.end(),
                                          [&](int a, int b) { return remaining_[a] < remaining_[b]; });
            std::vector<int> cand;
            for (int w : g_.neighbours(pivot)) {
                if (placed_[w]) continue;
                bool ok = true;
                for (int a : active_)
                    if (a != pivot && !g_.adjacent(a, w)) {
                        ok = false;
                        break;
                    }
                if (ok) cand.push_back(w);
            }
            std::stable_sort(cand.begin(), cand.end(), [&](int a, int b) { return remaining_[a] < remaining_[b]; });
            for (std::size_t i = 0; i < cand.size(); ++i) {
                if (extend(cand[i])) return true;
                // A candidate with no unplaced neighbours is always safe; if it failed, all will.
                if (remaining_[cand[i]] == 0) break;
            }
        }
        unplace(v, saved);
        return false;
    }

    const Graph& g_;
    const VertexSet& comp_;
    std::vector<char> in_comp_, placed_;
    std::vector<int> remaining_, order_, active_;
};

}  // namespace

std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g) {
    int n = g.n();
    if (n < 3) return std::nullopt;
    auto comp = punctured_components(g);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (comp[a][b] < 0) continue;
            for (int c = b + 1; c < n; ++c) {
                if (comp[a][c] < 0 || comp[b][c] < 0) continue;
                if (comp[a][b] == comp[a][c] && comp[b][a] == comp[b][c] && comp[c][a] == comp[c][b]) {
                    AsteroidalTriple t{{a, b, c}};
                    if (!exists_path_missing(g, a, b, {c}) || !exists_path_missing(g, a, c, {b}) ||
                        !exists_path_missing(g, b, c, {a}))
                        throw InternalError("find_asteroidal_triple: triple failed path verification");
                    return t;
                }
            }
        }
    return std::nullopt;
}

bool interval_test(const Graph& g) { return is_chordal(g) && !find_asteroidal_triple(g); }

bool realizes(const IntervalRepresentation& rep, const Graph& g) {
    if (static_cast<int>(rep.size()) != g.n()) return false;
    for (int u = 0; u < g.n(); ++u) {
        if (rep[u].lo > rep[u].hi) return false;
        for (int v = u + 1; v < g.n(); ++v)
            if (rep[u].meets(rep[v]) != g.adjacent(u, v)) return false;
    }
    return true;
}

IntervalResult is_interval(const Graph& g) {
    IntervalResult res;
    if (auto cyc = chordless_cycle(g)) {
        res.witness = ChordlessCycle{*cyc};
        return res;
    }
    if (auto at = find_asteroidal_triple(g)) {
        res.witness = *at;
        return res;
    }
    int n = g.n();
    std::vector<int> order;
    for (const auto& comp : connected_components(g)) {
        std::vector<int> starts;
        auto sub = induced_subgraph(g, comp);
        auto lb = lex_bfs(sub.graph);
        starts.push_back(sub.to_parent[lb.back()]);
        for (int v : comp)
            if (v != starts[0]) starts.push_back(v);
        UmbrellaSearch search(g, comp);
        std::optional<std::vector<int>> found;
        for (int s : starts)
            if ((found = search.run(s))) break;
        if (!found) throw InternalError("is_interval: chordal AT-free component without an interval ordering");
        order.insert(order.end(), found->begin(), found->end());
    }
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    long k = n + 2;
    IntervalRepresentation rep(n);
    for (int v = 0; v < n; ++v) {
        int reach = pos[v];
        for (int w : g.neighbours(v)) reach = std::max(reach, pos[w]);
        rep[v].lo = Rational(pos[v] * k);
        rep[v].hi = Rational(reach * k + 1 + pos[v]);
    }
    if (!realizes(rep, g)) throw InternalError("is_interval: constructed representation does not realize the graph");
    res.rep = std::move(rep);
    return res;
}

HittingSet min_hitting_set(const IntervalCollection& c) {
    std::vector<const Interval*> byhi;
    for (const auto& i : c) byhi.push_back(&i);
    std::sort(byhi.begin(), byhi.end(), [](const Interval* a, const Interval* b) { return a->hi < b->hi; });
    HittingSet x;
    for (const Interval* i : byhi)
        if (x.empty() || x.back() < i->lo) x.push_back(i->hi);
    return x;
}

std::optional<HittingSet> exact_hitting_set(const IntervalCollection& c) {
    if (c.empty()) return HittingSet{};
    std::vector<Rational> ends;
    for (const auto& i : c) {
        ends.push_back(i.lo);
        ends.push_back(i.hi);
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    auto idx = [&](const Rational& x) {
        return static_cast<int>(std::lower_bound(ends.begin(), ends.end(), x) - ends.begin());
    };
    // Cell 2j is the point ends[j]; cell 2j+1 the open gap to ends[j+1].
    int cells = 2 * static_cast<int>(ends.size()) - 1;
    std::vector<std::pair<int, int>> span;
    for (const auto& i : c) span.emplace_back(2 * idx(i.lo), 2 * idx(i.hi));
    std::vector<char> covered(cells, 0);
    for (auto [a, b] : span)
        for (int x = a; x <= b; ++x) covered[x] = 1;
    auto ok_first = [&](int q) {
        for (auto [a, b] : span)
            if (b < q) return false;
        return true;
    };
    auto ok_last = [&](int p) {
        for (auto [a, b] : span)
            if (a > p) return false;
        return true;
    };
    auto ok_pair = [&](int p, int q) {
        for (auto [a, b] : span)
            if ((a <= p && b >= q) || (a > p && b < q)) return false;
        return true;
    };
    std::vector<int> prev(cells, -2);
    for (int q = 0; q < cells; ++q) {
        if (!covered[q]) continue;
        if (ok_first(q)) {
            prev[q] = -1;
            continue;
        }
        for (int p = 0; p < q; ++p)
            if (prev[p] != -2 && ok_pair(p, q)) {
                prev[q] = p;
                break;
            }
    }
    for (int q = cells - 1; q >= 0; --q) {
        if (prev[q] == -2 || !ok_last(q)) continue;
        HittingSet x;
        for (int p = q; p >= 0; p = prev[p]) {
            if (p % 2 == 0) x.push_back(ends[p / 2]);
            else x.push_back(midpoint(ends[p / 2], ends[p / 2 + 1]));
        }
        std::reverse(x.begin(), x.end());
        return x;
    }
    return std::nullopt;
}

bool is_chain_bipartite(const Graph& h, const VertexSet& a, const VertexSet& b) {
    std::vector<char> in_b(h.n(), 0);
    for (int v : b) in_b[v] = 1;
    std::vector<VertexSet> nb;
    for (int u : a) {
        VertexSet s;
        for (int w : h.neighbours(u))
            if (in_b[w]) s.push_back(w);
        nb.push_back(std::move(s));
    }
    std::sort(nb.begin(), nb.end(), [](const VertexSet& x, const VertexSet& y) { return x.size() < y.size(); });
    for (std::size_t i = 1; i < nb.size(); ++i)
        if (!std::includes(nb[i].begin(), nb[i].end(), nb[i - 1].begin(), nb[i - 1].end())) return false;
    return true;
}

bool valid_clique_partition(const Graph& h, const OrderedCliquePartition& p) {
    std::vector<int> level(h.n(), -1);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int v : p[i]) {
            if (v < 0 || v >= h.n() || level[v] >= 0) return false;
            level[v] = static_cast<int>(i);
        }
    for (int v = 0; v < h.n(); ++v)
        if (level[v] < 0) return false;
    for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v) {
            int d = std::abs(level[u] - level[v]);
            if (d == 0 && !h.adjacent(u, v)) return false;
            if (d >= 2 && h.adjacent(u, v)) return false;
        }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!is_chain_bipartite(h, p[i], p[i + 1])) return false;
    return true;
}

namespace {

// Fewest levels for one connected component; levels relative to its first vertex.
std::optional<std::vector<int>> min_levels_component(const Graph& h, const VertexSet& comp, int limit) {
    std::vector<int> order{comp[0]}, parent(h.n(), -1);
    std::vector<char> seen(h.n(), 0);
    seen[comp[0]] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int w : h.neighbours(order[i]))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = order[i];
                order.push_back(w);
            }
    std::vector<int> level(h.n(), 0);
    std::optional<std::vector<int>> best;
    int best_span = limit + 1;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int lo, int hi) {
        if (hi - lo + 1 >= best_span) return;
        if (i == order.size()) {
            std::map<int, VertexSet> classes;
            for (int v : order) classes[level[v]].push_back(v);
            for (auto it = classes.begin(); std::next(it) != classes.end(); ++it) {
                auto a = it->second, b = std::next(it)->second;
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (!is_chain_bipartite(h, a, b)) return;
            }
            best_span = hi - lo + 1;
            best = std::vector<int>(h.n(), 0);
            for (int v : order) (*best)[v] = level[v] - lo;
            return;
        }
        int v = order[i];
        int base = level[parent[v]];
        for (int d : {0, -1, 1}) {
            int lv = base + d;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                int u = order[j];
                int diff = std::abs(level[u] - lv);
                bool adj = h.adjacent(u, v);
                if ((diff == 0 && !adj) || (diff >= 2 && adj)) ok = false;
            }
            if (!ok) continue;
            level[v] = lv;
            rec(i + 1, std::min(lo, lv), std::max(hi, lv));
        }
    };
    level[comp[0]] = 0;
    rec(1, 0, 0);
    return best;
}

}  // namespace

std::optional<OrderedCliquePartition> exact_stab_feasible(const Graph& h, int k) {
    if (k < 1) throw std::invalid_argument("exact_stab_feasible: k must be at least 1");
    if (!interval_test(h)) throw std::invalid_argument("exact_stab_feasible: graph is not an interval graph");
    OrderedCliquePartition out;
    for (const auto& comp : connected_components(h)) {
        int room = k - static_cast<int>(out.size());
        if (room <= 0) return std::nullopt;
        auto lv = min_levels_component(h, comp, room);
        if (!lv) return std::nullopt;
        int span = 0;
        for (int v : comp) span = std::max(span, (*lv)[v] + 1);
        std::size_t base = out.size();
        out.resize(base + span);
        for (int v : comp) out[base + (*lv)[v]].push_back(v);
    }
    for (auto& c : out) std::sort(c.begin(), c.end());
    if (!valid_clique_partition(h, out)) throw InternalError("exact_stab_feasible: partition failed validation");
    return out;
}

IntervalRepresentation representation_from_partition(const Graph& h, const OrderedCliquePartition& p) {
    IntervalRepresentation rep(h.n());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int v : p[i]) rep[v].lo = rep[v].hi = Rational(static_cast<long>(i + 1));
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        const auto& a = p[i];
        const auto& b = p[i + 1];
        std::vector<char> in_a(h.n(), 0), in_b(h.n(), 0);
        for (int v : a) in_a[v] = 1;
        for (int v : b) in_b[v] = 1;
        std::vector<std::pair<int, int>> bdeg;
        for (int v : b) {
            int d = 0;
            for (int w : h.neighbours(v)) d += in_a[w];
            bdeg.emplace_back(-d, v);
        }
        std::sort(bdeg.begin(), bdeg.end());
        long m = static_cast<long>(b.size());
        for (std::size_t r = 0; r < bdeg.size(); ++r)
            rep[bdeg[r].second].lo = Rational(static_cast<long>(i + 1)) + rat(static_cast<long>(r + 1), m + 1);
        for (int u : a) {
            long d = 0;
            for (int w : h.neighbours(u)) d += in_b[w];
            rep[u].hi = Rational(static_cast<long>(i + 1)) + rat(2 * d + 1, 2 * (m + 1));
        }
    }
    return rep;
}

}  // namespace stabkit

#include "stabkit/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "stabkit/error.hpp"

namespace stabkit {

namespace {

constexpr int hard_cap = 11;
constexpr std::uint8_t unreachable = 255;

void check_cap(const Graph& g, const char* who) {
    if (g.n() > oracle_cap())
        throw std::invalid_argument(std::string(who) + ": n = " + std::to_string(g.n()) + " exceeds the oracle cap " +
                                    std::to_string(oracle_cap()) + " (set STABKIT_ORACLE_CAP to raise it)");
}

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint32_t> a(g.n(), 0);
    for (int u = 0; u < g.n(); ++u)
        for (int v : g.neighbours(u)) a[u] |= 1u << v;
    return a;
}

// Umbrella closure of G under the vertex order: u before v are joined when u
// reaches some G-neighbour at or after v. Each interval supergraph of G
// contains one of these.
struct Completion {
    std::vector<std::uint32_t> adj;
    std::vector<int> pos;
    std::vector<int> reach;
};

Completion closure(const std::vector<std::uint32_t>& gadj, const std::vector<int>& order) {
    int n = static_cast<int>(order.size());
    Completion c;
    c.pos.assign(n, 0);
    c.reach.assign(n, 0);
    c.adj.assign(n, 0);
    for (int i = 0; i < n; ++i) c.pos[order[i]] = i;
    for (int u = 0; u < n; ++u) {
        c.reach[u] = c.pos[u];
        for (int w = 0; w < n; ++w)
            if ((gadj[u] >> w & 1) && c.pos[w] > c.reach[u]) c.reach[u] = c.pos[w];
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && c.pos[u] < c.pos[v] && c.pos[v] <= c.reach[u]) c.adj[u] |= 1u << v, c.adj[v] |= 1u << u;
    return c;
}

struct Candidate {
    std::uint64_t mask = 0;
    std::vector<int> order;
};

std::uint64_t edge_mask(const std::vector<std::uint32_t>& adj) {
    int n = static_cast<int>(adj.size());
    std::uint64_t m = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (adj[u] >> v & 1) m |= std::uint64_t{1} << (u * (2 * n - u - 1) / 2 + (v - u - 1));
    return m;
}

// Inclusion-minimal closures over all vertex orders.
std::vector<Candidate> minimal_completions(const std::vector<std::uint32_t>& gadj) {
    int n = static_cast<int>(gadj.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::unordered_map<std::uint64_t, std::vector<int>> seen;
    do {
        auto c = closure(gadj, order);
        seen.emplace(edge_mask(c.adj), order);
    } while (std::next_permutation(order.begin(), order.end()));
    std::vector<Candidate> all;
    for (auto& [m, o] : seen) all.push_back({m, o});
    std::sort(all.begin(), all.end(), [](const Candidate& a, const Candidate& b) {
        int pa = std::popcount(a.mask), pb = std::popcount(b.mask);
        return pa != pb ? pa < pb : a.mask < b.mask;
    });
    std::vector<Candidate> kept;
    for (auto& c : all) {
        bool dominated = false;
        for (const auto& k : kept)
            if ((k.mask & ~c.mask) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(std::move(c));
    }
    return kept;
}

// Event sweep over interval supergraphs Y with G <= Y <= upper. Each vertex is
// unborn (0), active and unpierced (1), active and pierced (2), or done (3).
// Returns the fewest piercing points, counting exact piercings only in ESRIG
// mode, or unreachable.
struct SweepMove {
    int vertex;  // -1 for a free point placement
    bool start;
};

struct Sweep {
    int n;
    const std::vector<std::uint32_t>& gadj;
    const std::vector<std::uint32_t>& upper;
    Mode mode;
    bool record = false;
    std::vector<std::uint8_t> dist;
    std::vector<std::uint32_t> parent;
    std::vector<std::int8_t> move_vertex;
    std::vector<std::uint8_t> move_start;

    std::uint8_t run(std::uint8_t limit) {
        std::size_t states = std::size_t{1} << (2 * n);
        dist.assign(states, unreachable);
        if (record) {
            parent.assign(states, 0);
            move_vertex.assign(states, 0);
            move_start.assign(states, 0);
        }
        std::uint32_t goal = static_cast<std::uint32_t>(states - 1);
        std::deque<std::uint32_t> q;
        dist[0] = 0;
        q.push_back(0);
        std::vector<char> closed(states, 0);
        while (!q.empty()) {
            std::uint32_t s = q.front();
            q.pop_front();
            if (closed[s]) continue;
            closed[s] = 1;
            std::uint8_t d = dist[s];
            if (s == goal) return d;
            std::uint32_t unborn = 0, unhit = 0, hit = 0, done = 0;
            for (int v = 0; v < n; ++v) {
                switch ((s >> (2 * v)) & 3) {
                    case 0: unborn |= 1u << v; break;
                    case 1: unhit |= 1u << v; break;
                    case 2: hit |= 1u << v; break;
                    default: done |= 1u << v;
                }
            }
            std::uint32_t active = unhit | hit;
            auto relax = [&](std::uint32_t t, std::uint8_t cost, int v, bool start) {
                std::uint8_t nd = static_cast<std::uint8_t>(d + cost);
                if (nd > limit || nd >= dist[t]) return;
                dist[t] = nd;
                if (record) {
                    parent[t] = s;
                    move_vertex[t] = static_cast<std::int8_t>(v);
                    move_start[t] = start;
                }
                if (cost == 0) q.push_front(t);
                else q.push_back(t);
            };
            auto with_all = [&](std::uint32_t base, std::uint32_t from, std::uint32_t to) {
                for (int v = 0; v < n; ++v)
                    if (from >> v & 1) base = (base & ~(3u << (2 * v))) | (to << (2 * v));
                return base;
            };
            for (int v = 0; v < n; ++v) {
                std::uint32_t bit = 1u << v;
                if (unborn & bit) {
                    if ((active & ~upper[v]) == 0 && (gadj[v] & done) == 0) relax(s | (1u << (2 * v)), 0, v, true);
                } else if (active & bit) {
                    if (gadj[v] & unborn) continue;
                    std::uint32_t t = s;
                    std::uint8_t cost = 0;
                    if (unhit & bit) {
                        if (mode == Mode::ESRIG) continue;
                        t = with_all(t, unhit, 2);
                        cost = 1;
                    }
                    relax(t | (3u << (2 * v)), cost, v, false);
                }
            }
            if (mode == Mode::ESRIG && hit == 0 && unhit != 0) relax(with_all(s, unhit, 2), 1, -1, false);
        }
        return unreachable;
    }

    std::vector<SweepMove> moves() const {
        std::vector<SweepMove> out;
        std::uint32_t s = static_cast<std::uint32_t>((std::size_t{1} << (2 * n)) - 1);
        while (s != 0) {
            out.push_back({move_vertex[s], move_start[s] != 0});
            s = parent[s];
        }
        std::reverse(out.begin(), out.end());
        return out;
    }
};

std::vector<std::uint32_t> sandwich_upper(const Graph& g, const std::vector<std::uint32_t>& gadj, const Candidate& c) {
    int n = g.n();
    std::vector<std::uint32_t> up(n, 0);
    auto x = closure(gadj, c.order);
    std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
    for (int u = 0; u < n; ++u) up[u] = (all & ~(1u << u) & ~x.adj[u]) | gadj[u];
    return up;
}

struct Best {
    int value = unreachable;
    std::optional<Candidate> where;
};

Best search(const Graph& g, Mode mode, int stop_at) {
    Best best;
    int n = g.n();
    if (n == 0) {
        best.value = 0;
        return best;
    }
    auto gadj = adjacency_masks(g);
    for (const auto& c : minimal_completions(gadj)) {
        auto up = sandwich_upper(g, gadj, c);
        Sweep sw{n, gadj, up, mode, false, {}, {}, {}, {}};
        int limit = best.value == unreachable ? n : best.value - 1;
        if (limit < 1) break;
        int v = sw.run(static_cast<std::uint8_t>(limit));
        if (v < best.value) {
            best.value = v;
            best.where = c;
            if (best.value <= stop_at) break;
        }
    }
    return best;
}

StabbedRepresentation realize(const Graph& g, const Candidate& c, Mode mode) {
    int n = g.n();
    auto gadj = adjacency_masks(g);
    auto up = sandwich_upper(g, gadj, c);
    Sweep sw{n, gadj, up, mode, true, {}, {}, {}, {}};
    if (sw.run(static_cast<std::uint8_t>(n)) == unreachable) throw InternalError("oracle_witness: sweep not reproducible");
    auto x = closure(gadj, c.order);
    std::vector<long> lo(n), hi(n);
    std::vector<long> points;
    long t = 0;
    std::vector<char> hit(n, 0);
    for (const auto& mv : sw.moves()) {
        ++t;
        if (mv.vertex < 0) {
            points.push_back(t);
            continue;
        }
        if (mv.start) {
            lo[mv.vertex] = t;
        } else {
            hi[mv.vertex] = t;
            if (mode == Mode::SRIG && !hit[mv.vertex]) {
                points.push_back(t);
                for (int v = 0; v < n; ++v)
                    if (lo[v] > 0 && hi[v] == 0) hit[v] = 1;
                hit[mv.vertex] = 1;
            }
        }
    }
    StabbedRepresentation r;
    for (long p : points) r.stabs.push_back(Rational(p));
    for (int v = 0; v < n; ++v)
        r.add(g.label(v), Rect{Rational(x.pos[v]), Rational(x.reach[v]), Rational(lo[v]), Rational(hi[v])});
    require_valid(r, g, mode, "oracle_witness");
    return r;
}

}  // namespace

int oracle_cap() {
    if (const char* env = std::getenv("STABKIT_ORACLE_CAP")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return std::min(v, hard_cap);
        } catch (const std::exception&) {
        }
    }
    return 8;
}

bool stab_oracle(const Graph& g, int k) {
    check_cap(g, "stab_oracle");
    if (k < 0) return false;
    return search(g, Mode::SRIG, k).value <= k;
}

bool estab_oracle(const Graph& g, int k) {
    check_cap(g, "estab_oracle");
    if (k < 0) return false;
    return search(g, Mode::ESRIG, k).value <= k;
}

std::optional<StabbedRepresentation> oracle_witness(const Graph& g, int k, Mode mode) {
    check_cap(g, "oracle_witness");
    auto best = search(g, mode, k);
    if (best.value > k) return std::nullopt;
    if (g.n() == 0) return StabbedRepresentation{};
    return realize(g, *best.where, mode);
}

StabNumbers stab_numbers(const Graph& g, std::optional<int> k_max) {
    check_cap(g, "stab_numbers");
    StabNumbers out;
    out.k_max = k_max.value_or(g.n());
    int lb = g.n() == 0 ? 0 : 1;
    int s = search(g, Mode::SRIG, lb).value;
    int e = search(g, Mode::ESRIG, std::max(lb, s)).value;
    if (s <= out.k_max) out.stab = s;
    if (e <= out.k_max) out.estab = e;
    return out;
}

int pathwidth(const Graph& g) {
    int n = g.n();
    if (n > 20) throw std::invalid_argument("pathwidth: n = " + std::to_string(n) + " exceeds 20");
    if (n == 0) return 0;
    auto gadj = adjacency_masks(g);
    std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint8_t> f(std::size_t{1} << n, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int boundary = 0;
        for (int v = 0; v < n; ++v)
            if ((s >> v & 1) && (gadj[v] & ~s & full)) ++boundary;
        int best = 255;
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) best = std::min<int>(best, f[s & ~(1u << v)]);
        f[s] = static_cast<std::uint8_t>(std::max(best, boundary));
    }
    return f[full];
}

int stab_lower_bound(const Graph& g) {
    if (g.n() == 0) return 0;
    int omega = clique_number(g);
    return (pathwidth(g) + 1 + omega - 1) / omega;
}

int grid_stab_lower_bound(int h, int w) {
    if (h < 1 || w < 1) throw std::invalid_argument("grid_stab_lower_bound: h and w must be positive");
    int m = std::min(h, w);
    return (m + 2) / 2;
}

}  // namespace stabkit

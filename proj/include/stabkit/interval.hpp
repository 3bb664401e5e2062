#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "stabkit/graph.hpp"
#include "stabkit/rational.hpp"

namespace stabkit {

struct Interval {
    Rational lo, hi;
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool meets(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
};

using IntervalCollection = std::vector<Interval>;
using IntervalRepresentation = std::vector<Interval>;  // indexed by vertex
using HittingSet = std::vector<Rational>;              // sorted

struct ChordlessCycle {
    std::vector<int> cycle;
};
struct AsteroidalTriple {
    std::array<int, 3> vertices;
};
using NonIntervalWitness = std::variant<ChordlessCycle, AsteroidalTriple>;

struct IntervalResult {
    std::optional<IntervalRepresentation> rep;
    std::optional<NonIntervalWitness> witness;
    bool yes() const { return rep.has_value(); }
};

IntervalResult is_interval(const Graph& g);
// Decision only; skips building the representation.
bool interval_test(const Graph& g);
std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g);

bool realizes(const IntervalRepresentation& rep, const Graph& g);

HittingSet min_hitting_set(const IntervalCollection& c);
std::optional<HittingSet> exact_hitting_set(const IntervalCollection& c);

// Ordered partition C_1..C_j (j <= k) of V(H): cliques, nothing between classes
// two or more apart, chain graphs between neighbouring classes. Any such
// partition gives H a representation with an exact hitting set of size j.
using OrderedCliquePartition = std::vector<VertexSet>;
std::optional<OrderedCliquePartition> exact_stab_feasible(const Graph& h, int k);
bool is_chain_bipartite(const Graph& h, const VertexSet& a, const VertexSet& b);
bool valid_clique_partition(const Graph& h, const OrderedCliquePartition& p);
// Interval representation realizing p with points 1..j as an exact hitting set.
IntervalRepresentation representation_from_partition(const Graph& h, const OrderedCliquePartition& p);

}  // namespace stabkit

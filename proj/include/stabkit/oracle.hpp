#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stabkit/graph.hpp"
#include "stabkit/representation.hpp"

namespace stabkit {

// Largest n the exhaustive routines accept: 8, or STABKIT_ORACLE_CAP (at most 11).
int oracle_cap();

// Exhaustive over interval supergraph pairs; throws std::invalid_argument past the cap.
bool stab_oracle(const Graph& g, int k);
bool estab_oracle(const Graph& g, int k);

// A representation with at most k stab lines realizing stab_oracle / estab_oracle,
// re-validated before return.
std::optional<StabbedRepresentation> oracle_witness(const Graph& g, int k, Mode mode);

struct StabNumbers {
    std::optional<int> stab;   // nullopt: larger than k_max (or none exists)
    std::optional<int> estab;
    int k_max = 0;
};
// k_max defaults to n.
StabNumbers stab_numbers(const Graph& g, std::optional<int> k_max = std::nullopt);

// Vertex separation number via subset DP; n <= 20.
int pathwidth(const Graph& g);
// ceil((pw + 1) / omega).
int stab_lower_bound(const Graph& g);
// ceil((min{h,w} + 1) / 2) for the h x w grid.
int grid_stab_lower_bound(int h, int w);

// Census over unlabelled graphs. Trees up to n = 10, connected graphs up to n = 8.
enum class CensusKind { Trees, Connected };
std::vector<Graph> all_trees(int n);
std::vector<Graph> all_connected(int n);
std::string graph6(const Graph& g);
Graph canonical_form(const Graph& g);

struct CensusRow {
    std::string g6;  // canonical
    int n = 0;
    std::size_t m = 0;
    bool interval = false;
    StabNumbers numbers;
    int pathwidth = 0;
    int omega = 0;
    // "oracle", or "recognizer" for trees past the oracle cap (stab <= 3 only).
    std::string source;
};
std::vector<CensusRow> census(CensusKind kind, int n);
std::string census_csv(const std::vector<CensusRow>& rows);

}  // namespace stabkit

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stabkit/graph.hpp"
#include "stabkit/rational.hpp"

namespace stabkit {

struct Rect {
    Rational x_lo, x_hi, y_lo, y_hi;
    bool meets(const Rect& o) const {
        return x_lo <= o.x_hi && o.x_lo <= x_hi && y_lo <= o.y_hi && o.y_lo <= y_hi;
    }
    bool well_formed() const { return x_lo <= x_hi && y_lo <= y_hi; }
};

// rects[i] belongs to the vertex labelled labels[i].
struct StabbedRepresentation {
    std::vector<Rational> stabs;
    std::vector<std::string> labels;
    std::vector<Rect> rects;

    int k() const { return static_cast<int>(stabs.size()); }
    int size() const { return static_cast<int>(rects.size()); }
    void add(std::string label, Rect r) {
        labels.push_back(std::move(label));
        rects.push_back(std::move(r));
    }
    int stab_count(int i) const;  // stab lines met by rects[i]
};

enum class Mode { SRIG, ESRIG };
enum class Engine { Auto, Pairwise, Sweep };

struct ValidationReport {
    std::vector<std::pair<std::string, std::string>> missing_edges;  // in G, rects disjoint
    std::vector<std::pair<std::string, std::string>> extra_edges;    // rects meet, not in G
    std::vector<std::string> unstabbed;
    std::vector<std::string> multi_stabbed;  // ESRIG mode only
    std::vector<std::string> malformed;      // x_lo > x_hi or y_lo > y_hi, or unsorted stabs
    bool valid() const {
        return missing_edges.empty() && extra_edges.empty() && unstabbed.empty() && multi_stabbed.empty() &&
               malformed.empty();
    }
};

// Rects reordered so that rects[v] belongs to vertex v of g. Throws
// std::invalid_argument naming the first label present on one side only.
StabbedRepresentation aligned(const StabbedRepresentation& r, const Graph& g);

Graph intersection_graph(const StabbedRepresentation& r);
ValidationReport validate(const StabbedRepresentation& r, const Graph& g, Mode mode, Engine engine = Engine::Auto);
// Throws InternalError with a summary when invalid.
void require_valid(const StabbedRepresentation& r, const Graph& g, Mode mode, const std::string& who);

StabbedRepresentation exactify_k_le_3(const StabbedRepresentation& r);
std::vector<Rational> unit_height_stab_lines(const std::vector<Rect>& rects);

struct PathDecomposition {
    std::vector<VertexSet> bags;
    int width() const;
};
PathDecomposition path_decomposition_from_rep(const StabbedRepresentation& r, const Graph& g);
// Width when all three axioms hold.
std::optional<int> check_path_decomposition(const Graph& g, const PathDecomposition& pd);

std::vector<int> coloring_from_rep(const StabbedRepresentation& r, const Graph& g);
bool is_proper_coloring(const Graph& g, const std::vector<int>& colour);

std::string to_svg(const StabbedRepresentation& r, const std::string& comment = {});

// Geometric helpers used by the constructors.
StabbedRepresentation translated(const StabbedRepresentation& r, const Rational& dx, const Rational& dy);
// y -> c - y for rects and stabs (stab order kept increasing).
StabbedRepresentation reflected_y(const StabbedRepresentation& r, const Rational& c);
void append(StabbedRepresentation& into, const StabbedRepresentation& from, const std::string& prefix = {});

}  // namespace stabkit

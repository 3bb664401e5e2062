#pragma once

#include <utility>
#include <vector>

#include "stabkit/representation.hpp"

namespace stabkit::detail {

// Rects with every coordinate replaced by its rank; order-equivalent to the input.
struct CompressedRects {
    std::vector<int> x_lo, x_hi, y_lo, y_hi;
    std::vector<int> stabs;  // ranks on the y axis
};
CompressedRects compress(const StabbedRepresentation& r);

// All index pairs (i < j) of meeting rects, sorted.
std::vector<std::pair<int, int>> intersecting_pairs(const StabbedRepresentation& r, Engine engine);
std::vector<std::pair<int, int>> intersecting_pairs(const CompressedRects& c, Engine engine);

}  // namespace stabkit::detail

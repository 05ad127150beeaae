#include "ftld/fixtures.hpp"

namespace ftld {

FiniteGraph demo6_graph() {
    return FiniteGraph::from_edges(
        6, {{0, 1}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 5}, {2, 3}, {2, 5}, {3, 4}});
}

Bitset demo6_detectors() {
    return Bitset::from_vertices(6, {0, 1, 3, 5});
}

} // namespace ftld

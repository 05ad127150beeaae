#pragma once

#include "ftld/bitset.hpp"
#include "ftld/graph.hpp"

namespace ftld {

/// Six-vertex demo graph used across the tests, the docs, and data/demo6.g.
/// With detectors {0,1,3,5} it carries a removal-tolerant code whose shares
/// are 17/12, 7/4, 7/4, 13/12 (sum 6, average 3/2); the full vertex set is an
/// ERR code and everything minus vertex 2 is a DET code. The adjacency is
/// pinned by a brute-force reconstruction test over all 6-vertex graphs.
FiniteGraph demo6_graph();

/// The {0,1,3,5} detector set above.
Bitset demo6_detectors();

} // namespace ftld

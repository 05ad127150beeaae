#pragma once

#include <vector>

#include "ftld/bitset.hpp"
#include "ftld/graph.hpp"
#include "ftld/rational.hpp"

namespace ftld {

/// Domination census of a detector set: dom(v) = |N[v] & S| for every vertex,
/// the partial share 1/dom(v) where defined, and the vertices left
/// undominated (which carry no share).
struct DomProfile {
    std::vector<int> dom;
    std::vector<Rational> partial;  // meaningful only where dom[v] >= 1
    std::vector<int> undominated;   // sorted
    bool dominating() const { return undominated.empty(); }
};

DomProfile dom_profile(const FiniteGraph& g, const Bitset& s);

/// |N[v] & S|
int dom(const FiniteGraph& g, const Bitset& s, int v);

/// Total share of detector x: sum of 1/dom(u) over u in N[x]. Exact.
Rational share(const FiniteGraph& g, const Bitset& s, int x);

/// Block share: sum of partial shares over a vertex set.
Rational block_share(const FiniteGraph& g, const Bitset& s, const std::vector<int>& a);

/// Sum of reciprocals of a list of positive integers.
Rational sigma(const std::vector<long long>& values);

/// Average share over a dominating set; checks the exact sum identity
/// sum_{x in S} share(x) == |V(G)| before dividing.
Rational average_share(const FiniteGraph& g, const Bitset& s);

/// Per-detector breakdown used by the CLI.
struct ShareReport {
    std::vector<std::pair<int, Rational>> per_detector; // sorted by vertex id
    Rational sum;
    Rational average;
};

ShareReport share_report(const FiniteGraph& g, const Bitset& s);

} // namespace ftld

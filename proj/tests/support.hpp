#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ftld/bitset.hpp"
#include "ftld/graph.hpp"

// Deterministic splitmix64 generator so every test run and platform sees the
// same instance stream (std::uniform_int_distribution is not portable).
struct TestRng {
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    bool chance(int num, int den) { return below(den) < static_cast<std::uint64_t>(num); }
};

inline ftld::FiniteGraph random_graph(TestRng& rng, int n, int edge_percent) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(edge_percent, 100)) edges.emplace_back(u, v);
    return ftld::FiniteGraph::from_edges(n, edges);
}

inline ftld::Bitset random_subset(TestRng& rng, int n, int member_percent) {
    ftld::Bitset s(n);
    for (int v = 0; v < n; ++v)
        if (rng.chance(member_percent, 100)) s.set(v);
    return s;
}

// Random subset grown into a dominating set: any undominated vertex joins S
// itself (a vertex always dominates itself).
inline ftld::Bitset random_dominating_set(TestRng& rng, const ftld::FiniteGraph& g) {
    int n = g.vertex_count();
    ftld::Bitset s = random_subset(rng, n, 30);
    for (int v = 0; v < n; ++v) {
        if (ftld::Bitset::and_count(g.closed_row(v), s.data()) == 0) s.set(v);
    }
    return s;
}

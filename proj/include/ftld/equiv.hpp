#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ftld/code_kind.hpp"

namespace ftld {

struct EquivCounterexample {
    int n;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> subset;
    CodeKind kind;
    bool oracle_verdict;
    bool check_verdict;
    bool casewise_verdict;
};

struct EquivReport {
    std::uint64_t cases = 0; // (graph, subset, kind) triples examined
    std::optional<EquivCounterexample> counterexample;
    bool ok() const { return !counterexample.has_value(); }
};

/// Exhaustively compares oracle_check, check_code, and check_code_casewise
/// on every labeled graph with 1..max_n vertices and every detector subset,
/// for all four code kinds. Stops at the first disagreement, which is minimal
/// in (n, edge encoding, subset encoding) order.
EquivReport equiv_scan(int max_n);

} // namespace ftld

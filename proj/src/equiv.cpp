#include "ftld/equiv.hpp"

#include "ftld/oracle.hpp"
#include "ftld/verify.hpp"

namespace ftld {

EquivReport equiv_scan(int max_n) {
    EquivReport report;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        const std::uint64_t graph_count = std::uint64_t(1) << slots.size();
        for (std::uint64_t edge_mask = 0; edge_mask < graph_count; ++edge_mask) {
            std::vector<std::pair<int, int>> edges;
            for (size_t i = 0; i < slots.size(); ++i)
                if ((edge_mask >> i) & 1) edges.push_back(slots[i]);
            FiniteGraph g = FiniteGraph::from_edges(n, edges);
            for (std::uint32_t subset_mask = 0; subset_mask < (1u << n); ++subset_mask) {
                Bitset s(n);
                for (int v = 0; v < n; ++v)
                    if ((subset_mask >> v) & 1) s.set(v);
                for (CodeKind kind : all_code_kinds) {
                    ++report.cases;
                    bool via_oracle = oracle_check(g, s, kind);
                    bool via_check = check_code(g, s, kind).valid;
                    bool via_casewise = check_code_casewise(g, s, kind).valid;
                    if (via_oracle != via_check || via_check != via_casewise) {
                        report.counterexample = EquivCounterexample{
                            n, edges, s.to_vertices(), kind, via_oracle, via_check, via_casewise};
                        return report;
                    }
                }
            }
        }
    }
    return report;
}

} // namespace ftld

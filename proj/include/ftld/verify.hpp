#pragma once

#include <vector>

#include "ftld/bitset.hpp"
#include "ftld/code_kind.hpp"
#include "ftld/graph.hpp"

namespace ftld {

enum class ViolationKind { Domination, PairDistinguishing };

/// Witness for one failed clause of a code characterization: the vertex (or
/// pair) involved, the count the clause demanded and the count actually
/// achieved, and which numbered property failed.
struct Violation {
    ViolationKind kind;
    int u;
    int v;        // -1 for domination violations
    int required;
    int achieved; // always < required
    int clause;   // 1-based property index within the characterization

    bool operator==(const Violation&) const = default;
};

struct VerificationVerdict {
    bool valid = true;
    std::vector<Violation> violations; // sorted by (u, v, clause)
};

enum class PairScope {
    Auto,            // follow the graph's pair_check_radius() hint
    All,             // test every vertex pair
    WithinDistance2, // test only pairs at graph distance <= 2
};

struct CheckOptions {
    PairScope pair_scope = PairScope::Auto;
};

/// Decide whether s is a valid code of the given kind, reporting every failed
/// clause. RED and ERR use the compact characterization whose pair rule reads
/// |sym_diff - {u,v}| >= k_min - |{u,v} & S|; check_code_casewise evaluates
/// the equivalent per-membership clause split instead. The two must agree on
/// every input and are cross-checked in the test suite.
VerificationVerdict check_code(const FiniteGraph& g, const Bitset& s, CodeKind kind,
                               const CheckOptions& opts = {});
VerificationVerdict check_code_casewise(const FiniteGraph& g, const Bitset& s, CodeKind kind,
                                        const CheckOptions& opts = {});

/// Verdict-only fast path with early exit; same semantics as check_code.
bool code_valid(const FiniteGraph& g, const Bitset& s, CodeKind kind, const CheckOptions& opts = {});

/// Same fast path with a caller-supplied pair list (callers verifying many
/// sets on one graph precompute pairs_within_distance once).
bool code_valid(const FiniteGraph& g, const Bitset& s, CodeKind kind,
                const std::vector<std::pair<int, int>>& pairs);

/// |((N(v) & S) sym_diff (N(u) & S)) - {v,u}| >= k
bool k_distinguished(const FiniteGraph& g, const Bitset& s, int u, int v, int k);

} // namespace ftld

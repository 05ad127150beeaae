#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ftld/bitset.hpp"
#include "ftld/code_kind.hpp"
#include "ftld/graph.hpp"

namespace ftld {

/// Per-detector report vector over {0,1,2}: entry for detector d is 2 when
/// the intruder sits at d, 1 when it sits in N(d), 0 otherwise. Entries
/// follow the detector ordering handed to signature().
using Signature = std::vector<std::uint8_t>;

enum class FaultModel {
    None,          // reports arrive untouched
    Removal,       // one detector may be removed or disabled
    FalseNegative, // one detector may send 0 instead of 1 or 2
    AnyError,      // one detector may send any wrong value
};

Signature signature(const FiniteGraph& g, const std::vector<int>& detectors,
                    std::optional<int> intruder);

/// Every report vector the monitor could receive when the true signature is
/// sig and at most one fault of the given model occurs. Removal is handled by
/// detector deletion in oracle_check, not by report corruption.
std::vector<Signature> observable_set(const Signature& sig, FaultModel model);

/// From-first-principles validity: a code is valid iff every observation
/// identifies its scenario uniquely, where the scenarios are "no intruder"
/// plus one intruder at each vertex. Serves as an independent cross-check of
/// check_code; the two are compared exhaustively in the test suite.
bool oracle_check(const FiniteGraph& g, const Bitset& s, CodeKind kind);

} // namespace ftld

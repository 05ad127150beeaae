#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ftld/code_kind.hpp"
#include "ftld/rational.hpp"

namespace ftld {

enum class CellState : std::uint8_t { Detector, Empty, Free };

/// A (2r+1) x (2r+1) window of cell states centered on a forced detector.
/// Free marks cells left undecided (either completion possible).
struct LocalConfig {
    int radius = 1;
    std::vector<CellState> cells; // row-major, (2r+1)^2 entries

    int side() const { return 2 * radius + 1; }
    CellState at(int x, int y) const { return cells[static_cast<size_t>(y) * side() + x]; }
};

/// '#' detector, '.' empty, '?' free; one row per line.
std::string render_ascii(const LocalConfig& config);
LocalConfig local_config_from_ascii(const std::string& text);

struct MaxShareResult {
    CodeKind kind = CodeKind::LD;
    int radius = 1;
    Rational bound;
    LocalConfig witness;
    std::uint64_t nodes = 0; // search tree size, informational only
};

/// Certified upper bound on the share of a detector x of any valid code of
/// the given kind on the infinite king grid, by exhausting all window
/// assignments around x that are not definitely infeasible. A window clause
/// is enforced only when its whole support is inside the window; everything
/// else is presumed satisfiable outside, so the result over-approximates the
/// true supremum (sound for lower-bounding density). Radii 1 and 2 run in
/// seconds; radius 3 is a long-running mode.
MaxShareResult max_share(CodeKind kind, int radius, int threads = 1);

/// 1 / max_share: certified lower bound on the optimal code density.
Rational density_lower_bound(CodeKind kind, int radius);

struct DischargeEntry {
    std::string label;  // neighbor identifier, informational
    Rational sh_max;    // upper bound on that neighbor's share
    int k;              // number of simultaneous discharge sources it must split across
};

struct DischargeTable {
    Rational target;
    std::vector<DischargeEntry> entries;
};

struct DischargeOutcome {
    bool resolved;
    Rational post_share;
};

/// Resolution step for a problem detector x with sh(x) > target: each entry
/// with sh_max < target absorbs (target - sh_max)/k of the excess; entries at
/// or above the target absorb nothing. Resolved iff the post-discharge share
/// sits at or below the target.
DischargeOutcome discharge_resolves(const Rational& sh_x, const DischargeTable& table);

/// Builds a DischargeTable for the center of a config from window data alone:
/// only detector neighbors whose own share is fully computable inside the
/// window (Chebyshev distance <= radius-2 from center) yield entries, and k
/// counts the neighbors-of-the-neighbor that could simultaneously exceed the
/// target (unknowable ones count). At radius 2 no neighbor qualifies.
DischargeTable build_discharge_table(CodeKind kind, const LocalConfig& config,
                                     const Rational& target);

} // namespace ftld

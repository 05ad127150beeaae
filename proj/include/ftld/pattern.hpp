#pragma once

#include <map>
#include <string>
#include <vector>

#include "ftld/bitset.hpp"
#include "ftld/code_kind.hpp"
#include "ftld/graph.hpp"
#include "ftld/rational.hpp"
#include "ftld/verify.hpp"

namespace ftld {

/// Detector assignment on a width x height fundamental domain, optionally
/// sheared, standing for the periodic subset of the infinite king grid that
/// its translates tile. Crossing the top edge (y + height) lands shear cells
/// to the right: plane cell (X, Y+height) is identified with (X+shear, Y).
struct PeriodicPattern {
    int width = 1;
    int height = 1;
    int shear = 0;
    std::vector<std::uint8_t> cells; // width*height, row-major, 1 = detector

    bool detector(int x, int y) const { return cells[static_cast<size_t>(y) * width + x] != 0; }
    void set_detector(int x, int y, bool on) {
        cells[static_cast<size_t>(y) * width + x] = on ? 1 : 0;
    }
    int detector_count() const;

    /// Detector state of an arbitrary plane cell, reduced through the period
    /// lattice (handles negative coordinates).
    bool plane_cell(long long x, long long y) const;

    bool operator==(const PeriodicPattern&) const = default;
};

PeriodicPattern make_pattern(int width, int height, int shear,
                             const std::vector<std::pair<int, int>>& detectors = {});

/// Exact detector density: |detectors| / (width*height).
Rational density(const PeriodicPattern& p);

struct TorusLift {
    FiniteGraph graph;
    Bitset detectors;
    int rx = 1; // domain replications along x
    int ry = 1; // along y
};

/// Replicates the domain onto the smallest king torus with both dimensions
/// >= 7 and zero accumulated shear. Windows of radius <= 3 on such a torus
/// are isomorphic to infinite-grid windows, so torus verification of the
/// pattern is exact rather than approximate. The optional factors enlarge
/// the minimal replication counts; verdicts must not depend on them.
TorusLift lift_to_torus(const PeriodicPattern& p, int rx_factor = 1, int ry_factor = 1);

/// check_code on the lift, with pair checks restricted to distance <= 2
/// (distance >= 3 pairs share no dominator and pass every clause once
/// domination holds). Valid iff the infinite periodic pattern is valid.
VerificationVerdict verify_pattern(const PeriodicPattern& p, CodeKind kind);

/// Pattern translated by (dx, dy) as a subset of the plane, re-expressed on
/// the same domain.
PeriodicPattern translate(const PeriodicPattern& p, int dx, int dy);

/// Lexicographically minimal translate; used to deduplicate search results.
PeriodicPattern canonical_translate(const PeriodicPattern& p);

std::string render_ascii(const PeriodicPattern& p);
std::string render_svg(const PeriodicPattern& p);

/// File format: optional header "period W H shear S", then H lines of W
/// characters from {#, .}. Without the header the grid dimensions are
/// inferred and shear is 0.
PeriodicPattern parse_pattern(const std::string& text);
PeriodicPattern read_pattern_file(const std::string& path);
std::string format_pattern(const PeriodicPattern& p);

/// The best patterns known here for each kind, found by pattern_search and
/// frozen: densities 1/5 (LD), 5/16 (RED), 6/16 (DET), 7/16 (ERR). Keyed by
/// lowercase kind name.
const std::map<std::string, PeriodicPattern>& builtin_patterns();

} // namespace ftld

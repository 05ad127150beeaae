#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ftld/code_kind.hpp"
#include "ftld/pattern.hpp"
#include "ftld/rational.hpp"

namespace ftld {

struct SearchOptions {
    int budget = 25;             // largest allowed domain area
    bool override_budget = false;
    int threads = 1;
};

/// Result of the exhaustive per-period search: the smallest detector count
/// admitting a valid pattern on the given domain, with every optimal pattern
/// up to translation (canonical translates, sorted). min_count is empty only
/// if no subset works, which cannot happen since the all-detector pattern is
/// valid for every kind.
struct SearchResult {
    int width = 0;
    int height = 0;
    int shear = 0;
    CodeKind kind = CodeKind::LD;
    std::optional<int> min_count;
    std::vector<PeriodicPattern> optimal;
    std::uint64_t candidates = 0; // subsets enumerated

    Rational best_density() const {
        return Rational(min_count.value(), static_cast<long long>(width) * height);
    }
};

/// Exhaustively minimizes |detectors| over the 2^(w*h) subsets of the
/// fundamental domain, walking detector counts upward from the covering
/// lower bound and verifying candidates on their torus lift.
SearchResult search_min(int width, int height, int shear, CodeKind kind,
                        const SearchOptions& opts = {});

struct SweepEntry {
    int width;
    int height;
    int shear;
    int min_count;
    Rational density;
};

/// Batch driver: search_min over every (w, h, shear) with w*h <= max_area,
/// 0 <= shear < w. Reports the best density over all domains and a witness.
struct SweepReport {
    CodeKind kind = CodeKind::LD;
    int max_area = 0;
    Rational best_density;
    PeriodicPattern best_pattern;
    std::vector<SweepEntry> entries; // ordered by (w, h, shear)
};

SweepReport search_sweep(int max_area, CodeKind kind, const SearchOptions& opts = {});

} // namespace ftld

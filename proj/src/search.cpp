#include "ftld/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <thread>

#include "ftld/graph.hpp"
#include "ftld/verify.hpp"

namespace ftld {

namespace {

// Fixed per-domain data shared by every candidate subset.
struct DomainContext {
    int width, height, shear, area;
    CodeKind kind;
    // closed-neighborhood structure at domain level; each of the 9 plane
    // cells around a domain cell reduces to a domain index (with repeats
    // possible when a dimension is < 3)
    std::vector<std::array<int, 9>> closed_idx;
    bool collision_free; // 9 distinct indices everywhere: popcount path valid
    std::vector<std::uint64_t> closed_mask;
    // lift data
    FiniteGraph lift_graph;
    std::vector<std::vector<int>> lift_cells; // domain cell -> lift vertex ids
    std::vector<std::pair<int, int>> lift_pairs;
};

long long floor_div_ll(long long a, long long b) {
    long long q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

int domain_index(int w, int h, int shear, long long x, long long y) {
    long long k = floor_div_ll(y, h);
    long long y0 = y - k * h;
    long long x0 = x + k * shear;
    x0 -= floor_div_ll(x0, w) * w;
    return static_cast<int>(y0 * w + x0);
}

DomainContext make_context(int w, int h, int shear, CodeKind kind) {
    DomainContext ctx;
    ctx.width = w;
    ctx.height = h;
    ctx.shear = shear;
    ctx.area = w * h;
    ctx.kind = kind;
    ctx.closed_idx.resize(ctx.area);
    ctx.closed_mask.assign(ctx.area, 0);
    ctx.collision_free = true;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            int c = y * w + x;
            int slot = 0;
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx)
                    ctx.closed_idx[c][slot++] = domain_index(w, h, shear, x + dx, y + dy);
            auto sorted = ctx.closed_idx[c];
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                ctx.collision_free = false;
            for (int idx : ctx.closed_idx[c]) ctx.closed_mask[c] |= std::uint64_t(1) << idx;
        }
    }

    PeriodicPattern probe = make_pattern(w, h, shear);
    TorusLift lift = lift_to_torus(probe);
    ctx.lift_graph = std::move(lift.graph);
    ctx.lift_cells.resize(ctx.area);
    int W = lift.rx * w, H = lift.ry * h;
    for (int y = 0; y < H; ++y)
        for (int x = 0; x < W; ++x)
            ctx.lift_cells[domain_index(w, h, shear, x, y)].push_back(torus_vertex(W, x, y));
    ctx.lift_pairs = pairs_within_distance(ctx.lift_graph, 2);
    return ctx;
}

// Exact domination screen at domain level; necessary for validity and cheap
// enough to run on every subset before lifting.
bool domination_feasible(const DomainContext& ctx, std::uint64_t mask) {
    const int need = k_min(ctx.kind);
    if (ctx.collision_free) {
        for (int c = 0; c < ctx.area; ++c) {
            if (ctx.kind == CodeKind::LD && ((mask >> c) & 1)) continue;
            if (std::popcount(mask & ctx.closed_mask[c]) < need) return false;
        }
        return true;
    }
    for (int c = 0; c < ctx.area; ++c) {
        if (ctx.kind == CodeKind::LD && ((mask >> c) & 1)) continue;
        int got = 0;
        for (int idx : ctx.closed_idx[c]) got += (mask >> idx) & 1;
        if (got < need) return false;
    }
    return true;
}

bool lift_valid(const DomainContext& ctx, std::uint64_t mask) {
    Bitset dets(ctx.lift_graph.vertex_count());
    for (int c = 0; c < ctx.area; ++c)
        if ((mask >> c) & 1)
            for (int v : ctx.lift_cells[c]) dets.set(v);
    return code_valid(ctx.lift_graph, dets, ctx.kind, ctx.lift_pairs);
}

PeriodicPattern pattern_from_mask(const DomainContext& ctx, std::uint64_t mask) {
    PeriodicPattern p = make_pattern(ctx.width, ctx.height, ctx.shear);
    for (int c = 0; c < ctx.area; ++c)
        if ((mask >> c) & 1) p.cells[c] = 1;
    return p;
}

// Next k-subset in counting order (Gosper's hack).
std::uint64_t next_combination(std::uint64_t v) {
    std::uint64_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

struct LevelScan {
    std::vector<std::uint64_t> valid;
    std::uint64_t candidates = 0;
};

// Enumerates all k-subsets whose highest element is `top`, screening and
// lifting each. One such call is an independent work unit for threading.
LevelScan scan_top_slice(const DomainContext& ctx, int k, int top) {
    LevelScan out;
    const std::uint64_t high = std::uint64_t(1) << top;
    if (k == 1) {
        ++out.candidates;
        if (domination_feasible(ctx, high) && lift_valid(ctx, high)) out.valid.push_back(high);
        return out;
    }
    const std::uint64_t stop = std::uint64_t(1) << top;
    std::uint64_t low = (std::uint64_t(1) << (k - 1)) - 1;
    for (; low < stop; low = next_combination(low)) {
        std::uint64_t mask = high | low;
        ++out.candidates;
        if (domination_feasible(ctx, mask) && lift_valid(ctx, mask)) out.valid.push_back(mask);
    }
    return out;
}

int covering_lower_bound(CodeKind kind, int area) {
    // Each detector closed-dominates exactly 9 lift cells, so k detectors per
    // domain supply 9k domination slots per domain; LD only needs slots for
    // the area-k non-detector cells.
    if (kind == CodeKind::LD) return (area + 9) / 10;
    return (k_min(kind) * area + 8) / 9;
}

} // namespace

SearchResult search_min(int width, int height, int shear, CodeKind kind,
                        const SearchOptions& opts) {
    if (width < 1 || height < 1)
        throw Error(ErrorCode::InvalidArgument, "domain must be at least 1x1");
    if (shear < 0 || shear >= width)
        throw Error(ErrorCode::InvalidArgument, "shear must lie in [0, width)", shear);
    long long area = static_cast<long long>(width) * height;
    if (area > opts.budget && !opts.override_budget)
        throw Error(ErrorCode::BudgetExceeded,
                    "domain area " + std::to_string(area) + " exceeds budget " +
                        std::to_string(opts.budget) + " (override to proceed)",
                    area);
    if (area > 62)
        throw Error(ErrorCode::BudgetExceeded, "domain area beyond 62 cells is unsupported", area);

    DomainContext ctx = make_context(width, height, shear, kind);
    SearchResult result;
    result.width = width;
    result.height = height;
    result.shear = shear;
    result.kind = kind;

    const int threads = std::max(1, opts.threads);
    for (int k = covering_lower_bound(kind, ctx.area); k <= ctx.area; ++k) {
        std::vector<LevelScan> slices(ctx.area);
        if (threads == 1) {
            for (int top = k - 1; top < ctx.area; ++top) slices[top] = scan_top_slice(ctx, k, top);
        } else {
            std::atomic<int> next_top{k - 1};
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back([&] {
                    for (int top = next_top.fetch_add(1); top < ctx.area;
                         top = next_top.fetch_add(1))
                        slices[top] = scan_top_slice(ctx, k, top);
                });
            for (auto& th : pool) th.join();
        }

        std::vector<std::uint64_t> valid;
        for (auto& slice : slices) {
            result.candidates += slice.candidates;
            valid.insert(valid.end(), slice.valid.begin(), slice.valid.end());
        }
        if (valid.empty()) continue;

        result.min_count = k;
        for (std::uint64_t mask : valid)
            result.optimal.push_back(canonical_translate(pattern_from_mask(ctx, mask)));
        std::sort(result.optimal.begin(), result.optimal.end(),
                  [](const PeriodicPattern& a, const PeriodicPattern& b) {
                      return a.cells < b.cells;
                  });
        result.optimal.erase(std::unique(result.optimal.begin(), result.optimal.end()),
                             result.optimal.end());
        return result;
    }
    return result; // unreachable for any real domain: the full set is valid
}

SweepReport search_sweep(int max_area, CodeKind kind, const SearchOptions& opts) {
    if (max_area < 1)
        throw Error(ErrorCode::InvalidArgument, "sweep area must be >= 1", max_area);
    if (max_area > opts.budget && !opts.override_budget)
        throw Error(ErrorCode::BudgetExceeded,
                    "sweep area " + std::to_string(max_area) + " exceeds budget " +
                        std::to_string(opts.budget) + " (override to proceed)",
                    max_area);

    struct Combo {
        int w, h, shear;
    };
    std::vector<Combo> combos;
    for (int w = 1; w <= max_area; ++w)
        for (int h = 1; w * h <= max_area; ++h)
            for (int shear = 0; shear < w; ++shear) combos.push_back({w, h, shear});

    std::vector<SearchResult> results(combos.size());
    SearchOptions inner = opts;
    inner.threads = 1;
    inner.override_budget = true; // per-combo areas are already <= max_area
    inner.budget = max_area;

    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        for (size_t i = 0; i < combos.size(); ++i)
            results[i] = search_min(combos[i].w, combos[i].h, combos[i].shear, kind, inner);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < combos.size(); i = next.fetch_add(1))
                    results[i] = search_min(combos[i].w, combos[i].h, combos[i].shear, kind, inner);
            });
        for (auto& th : pool) th.join();
    }

    SweepReport report;
    report.kind = kind;
    report.max_area = max_area;
    bool have_best = false;
    for (size_t i = 0; i < combos.size(); ++i) {
        const SearchResult& r = results[i];
        Rational d = r.best_density();
        report.entries.push_back({combos[i].w, combos[i].h, combos[i].shear, *r.min_count, d});
        if (!have_best || d < report.best_density) {
            have_best = true;
            report.best_density = d;
            report.best_pattern = r.optimal.front();
        }
    }
    return report;
}

} // namespace ftld

#include "ftld/bounds.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <sstream>
#include <thread>

namespace ftld {

std::string render_ascii(const LocalConfig& config) {
    std::string out;
    int side = config.side();
    for (int y = 0; y < side; ++y) {
        for (int x = 0; x < side; ++x) {
            switch (config.at(x, y)) {
                case CellState::Detector: out += '#'; break;
                case CellState::Empty: out += '.'; break;
                case CellState::Free: out += '?'; break;
            }
        }
        out += '\n';
    }
    return out;
}

LocalConfig local_config_from_ascii(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) rows.push_back(line);
    }
    int side = static_cast<int>(rows.size());
    if (side < 3 || side % 2 == 0)
        throw Error(ErrorCode::ParseError, "config must be a (2r+1) x (2r+1) grid");
    LocalConfig config;
    config.radius = (side - 1) / 2;
    config.cells.resize(static_cast<size_t>(side) * side);
    for (int y = 0; y < side; ++y) {
        if (static_cast<int>(rows[y].size()) != side)
            throw Error(ErrorCode::ParseError, "config rows must all have length " +
                                                   std::to_string(side));
        for (int x = 0; x < side; ++x) {
            CellState state;
            switch (rows[y][x]) {
                case '#': state = CellState::Detector; break;
                case '.': state = CellState::Empty; break;
                case '?': state = CellState::Free; break;
                default:
                    throw Error(ErrorCode::ParseError, "config cells must be '#', '.' or '?'");
            }
            config.cells[static_cast<size_t>(y) * side + x] = state;
        }
    }
    if (config.at(config.radius, config.radius) != CellState::Detector)
        throw Error(ErrorCode::ParseError, "center cell must be a detector");
    return config;
}

namespace {

// Shares over window cells are sums of 1/d with d in 1..9; scale by
// lcm(1..9) = 2520 so objectives compare as plain integers.
constexpr int kShareScale = 2520;
constexpr std::array<int, 10> kRecip = {0,    2520, 1260, 840, 630,
                                        504, 420,  360,  315, 280};

struct WindowGeometry {
    int radius, side, cell_count, center;
    std::vector<std::uint64_t> open_mask;   // within-window N(i)
    std::vector<std::uint64_t> closed_mask; // within-window N[i]
    std::vector<int> core;                  // N[center], the 9 objective cells
    std::vector<int> branch_cells;          // all non-center cells in branch order
    std::vector<int> branch_pos;            // cell -> position in branch_cells, center = -1
};

int chebyshev(const WindowGeometry& geo, int a, int b) {
    int ax = a % geo.side, ay = a / geo.side;
    int bx = b % geo.side, by = b / geo.side;
    return std::max(std::abs(ax - bx), std::abs(ay - by));
}

WindowGeometry make_geometry(int radius) {
    WindowGeometry geo;
    geo.radius = radius;
    geo.side = 2 * radius + 1;
    geo.cell_count = geo.side * geo.side;
    geo.center = radius * geo.side + radius;
    geo.open_mask.assign(geo.cell_count, 0);
    geo.closed_mask.assign(geo.cell_count, 0);
    for (int c = 0; c < geo.cell_count; ++c) {
        int cx = c % geo.side, cy = c / geo.side;
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                int nx = cx + dx, ny = cy + dy;
                if (nx < 0 || nx >= geo.side || ny < 0 || ny >= geo.side) continue;
                int u = ny * geo.side + nx;
                geo.closed_mask[c] |= std::uint64_t(1) << u;
                if (u != c) geo.open_mask[c] |= std::uint64_t(1) << u;
            }
        }
    }
    for (int c = 0; c < geo.cell_count; ++c)
        if (chebyshev(geo, c, geo.center) <= 1) geo.core.push_back(c);

    // Branch the objective-driving cells (the core ring) first, then the
    // outer rings by distance; row-major inside each ring.
    geo.branch_pos.assign(geo.cell_count, -1);
    for (int ring = 1; ring <= radius; ++ring)
        for (int c = 0; c < geo.cell_count; ++c)
            if (chebyshev(geo, c, geo.center) == ring) geo.branch_cells.push_back(c);
    for (size_t i = 0; i < geo.branch_cells.size(); ++i) geo.branch_pos[geo.branch_cells[i]] = i;
    return geo;
}

// Enforceable clauses, bucketed by the branch depth at which their entire
// support becomes decided.
struct DomClause {
    int cell;
};

struct PairClause {
    int u, v;
};

int support_ready_depth(const WindowGeometry& geo, std::uint64_t support) {
    int depth = -1;
    std::uint64_t bits = support;
    while (bits) {
        int cell = std::countr_zero(bits);
        bits &= bits - 1;
        depth = std::max(depth, geo.branch_pos[cell]);
    }
    return depth;
}

// Pair rule of the characterization evaluated on window masks. det is the
// detector bitmask; membership of u and v is read off det directly.
bool pair_clause_holds(CodeKind kind, const WindowGeometry& geo, std::uint64_t det, int u, int v) {
    bool us = (det >> u) & 1;
    bool vs = (det >> v) & 1;
    std::uint64_t au = geo.open_mask[u] & det;
    std::uint64_t av = geo.open_mask[v] & det;
    std::uint64_t pair_bits = (std::uint64_t(1) << u) | (std::uint64_t(1) << v);
    switch (kind) {
        case CodeKind::LD:
            if (us || vs) return true;
            return (au ^ av) != 0;
        case CodeKind::RED: {
            int required = 2 - (us ? 1 : 0) - (vs ? 1 : 0);
            if (required <= 0) return true;
            return std::popcount((au ^ av) & ~pair_bits) >= required;
        }
        case CodeKind::DET: {
            if (us && vs) return (au ^ av) != 0;
            if (us != vs) {
                std::uint64_t nd = us ? av : au;  // non-detector side
                std::uint64_t dd = us ? au : av;
                return std::popcount(nd & ~dd) >= 2 || std::popcount(dd & ~nd) >= 1;
            }
            return std::popcount(au & ~av) >= 2 || std::popcount(av & ~au) >= 2;
        }
        case CodeKind::ERR: {
            int required = 3 - (us ? 1 : 0) - (vs ? 1 : 0);
            return std::popcount((au ^ av) & ~pair_bits) >= required;
        }
    }
    return true;
}

struct Explorer {
    const WindowGeometry& geo;
    CodeKind kind;
    int need; // k_min
    std::vector<std::vector<DomClause>> dom_by_depth;
    std::vector<std::vector<PairClause>> pairs_by_depth;
    std::vector<std::vector<int>> core_hit; // branch position -> core slots its cell dominates

    // search state
    std::uint64_t det = 0;
    std::array<int, 9> core_count{}; // detectors seen in N[core[i]]
    int objective = 0;               // sum of kRecip[max(need, count)] over core
    std::uint64_t nodes = 0;

    int local_best = -1;
    std::uint64_t local_best_mask = 0;
    std::atomic<int>* shared_best = nullptr;

    Explorer(const WindowGeometry& g, CodeKind k) : geo(g), kind(k), need(k_min(k)) {
        int depths = static_cast<int>(geo.branch_cells.size());
        dom_by_depth.resize(depths);
        pairs_by_depth.resize(depths);
        // Enforceable domination: cells whose closed neighborhood is fully
        // inside the window.
        for (int c = 0; c < geo.cell_count; ++c) {
            if (chebyshev(geo, c, geo.center) > geo.radius - 1) continue;
            int ready = support_ready_depth(geo, geo.closed_mask[c]);
            if (ready < 0) ready = 0; // center-only support: check at first depth
            dom_by_depth[ready].push_back({c});
        }
        // Enforceable pairs: both open neighborhoods inside the window and
        // the two cells at distance <= 2 of each other.
        for (int u = 0; u < geo.cell_count; ++u) {
            if (chebyshev(geo, u, geo.center) > geo.radius - 1) continue;
            for (int v = u + 1; v < geo.cell_count; ++v) {
                if (chebyshev(geo, v, geo.center) > geo.radius - 1) continue;
                if (chebyshev(geo, u, v) > 2) continue;
                std::uint64_t support = geo.open_mask[u] | geo.open_mask[v] |
                                        (std::uint64_t(1) << u) | (std::uint64_t(1) << v);
                int ready = support_ready_depth(geo, support);
                if (ready < 0) ready = 0;
                pairs_by_depth[ready].push_back({u, v});
            }
        }
        core_hit.resize(depths);
        for (int pos = 0; pos < depths; ++pos) {
            int cell = geo.branch_cells[pos];
            for (size_t slot = 0; slot < geo.core.size(); ++slot)
                if (geo.closed_mask[geo.core[slot]] >> cell & 1)
                    core_hit[pos].push_back(static_cast<int>(slot));
        }
    }

    void reset_root() {
        det = std::uint64_t(1) << geo.center;
        core_count.fill(0);
        objective = 0;
        for (size_t slot = 0; slot < geo.core.size(); ++slot) {
            core_count[slot] = 1; // center detector dominates every core cell
            objective += kRecip[std::max(need, core_count[slot])];
        }
    }

    void place(int pos, bool detector) {
        if (!detector) return;
        det |= std::uint64_t(1) << geo.branch_cells[pos];
        for (int slot : core_hit[pos]) {
            int before = std::max(need, core_count[slot]);
            ++core_count[slot];
            int after = std::max(need, core_count[slot]);
            objective += kRecip[after] - kRecip[before];
        }
    }

    void unplace(int pos, bool detector) {
        if (!detector) return;
        det &= ~(std::uint64_t(1) << geo.branch_cells[pos]);
        for (int slot : core_hit[pos]) {
            int before = std::max(need, core_count[slot]);
            --core_count[slot];
            int after = std::max(need, core_count[slot]);
            objective += kRecip[after] - kRecip[before];
        }
    }

    bool clauses_hold_at(int depth) const {
        for (const DomClause& clause : dom_by_depth[depth])
            if (std::popcount(det & geo.closed_mask[clause.cell]) < need) return false;
        for (const PairClause& clause : pairs_by_depth[depth])
            if (!pair_clause_holds(kind, geo, det, clause.u, clause.v)) return false;
        return true;
    }

    // Placing further detectors only lowers the objective, so the current
    // value bounds every completion of this node.
    bool worth_exploring() const {
        if (objective <= local_best) return false;
        if (shared_best && objective < shared_best->load(std::memory_order_relaxed)) return false;
        return true;
    }

    void record_leaf() {
        if (objective > local_best) {
            local_best = objective;
            local_best_mask = det;
            if (shared_best) {
                int seen = shared_best->load(std::memory_order_relaxed);
                while (seen < objective &&
                       !shared_best->compare_exchange_weak(seen, objective,
                                                           std::memory_order_relaxed)) {
                }
            }
        }
    }

    void dfs(int depth) {
        ++nodes;
        if (!worth_exploring()) return;
        if (depth == static_cast<int>(geo.branch_cells.size())) {
            record_leaf();
            return;
        }
        // Empty first: sparse assignments carry the high objectives, so the
        // incumbent tightens early.
        for (bool detector : {false, true}) {
            place(depth, detector);
            if (clauses_hold_at(depth)) dfs(depth + 1);
            unplace(depth, detector);
        }
    }
};

LocalConfig config_from_mask(const WindowGeometry& geo, std::uint64_t det) {
    LocalConfig config;
    config.radius = geo.radius;
    config.cells.resize(geo.cell_count);
    for (int c = 0; c < geo.cell_count; ++c)
        config.cells[c] = (det >> c & 1) ? CellState::Detector : CellState::Empty;
    return config;
}

} // namespace

MaxShareResult max_share(CodeKind kind, int radius, int threads) {
    if (radius < 1 || radius > 3)
        throw Error(ErrorCode::UnsupportedRadius,
                    "supported radii are 1 and 2 (3 as a long-running mode)", radius);
    WindowGeometry geo = make_geometry(radius);
    const int branch_count = static_cast<int>(geo.branch_cells.size());
    threads = std::max(1, threads);

    // Work is split by fixed prefixes of the branch order so results merge
    // identically for any worker count: max objective, then earliest prefix,
    // then first leaf in DFS order inside the prefix.
    const int prefix_len = std::min(branch_count, threads == 1 ? 0 : 8);
    const std::uint64_t task_count = std::uint64_t(1) << prefix_len;

    struct TaskResult {
        int best = -1;
        std::uint64_t mask = 0;
        std::uint64_t nodes = 0;
    };
    std::vector<TaskResult> task_results(task_count);
    std::atomic<int> shared_best{-1};
    std::atomic<std::uint64_t> next_task{0};

    // Ascending task index must equal sequential DFS visit order (earlier
    // branch positions more significant, Empty before Detector), so ties
    // merge to the same witness for every worker count.
    auto run_task = [&](std::uint64_t task) {
        Explorer explorer(geo, kind);
        explorer.shared_best = &shared_best;
        explorer.reset_root();
        bool alive = true;
        for (int pos = 0; pos < prefix_len && alive; ++pos) {
            explorer.place(pos, (task >> (prefix_len - 1 - pos)) & 1);
            if (!explorer.clauses_hold_at(pos)) alive = false;
        }
        if (alive && explorer.worth_exploring()) explorer.dfs(prefix_len);
        task_results[task] = {explorer.local_best, explorer.local_best_mask, explorer.nodes};
    };

    if (threads == 1) {
        for (std::uint64_t task = 0; task < task_count; ++task) run_task(task);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::uint64_t task = next_task.fetch_add(1); task < task_count;
                     task = next_task.fetch_add(1))
                    run_task(task);
            });
        for (auto& th : pool) th.join();
    }

    MaxShareResult result;
    result.kind = kind;
    result.radius = radius;
    int best = -1;
    std::uint64_t best_mask = 0;
    for (std::uint64_t task = 0; task < task_count; ++task) {
        result.nodes += task_results[task].nodes;
        if (task_results[task].best > best) {
            best = task_results[task].best;
            best_mask = task_results[task].mask;
        }
    }
    if (best < 0)
        throw Error(ErrorCode::InvalidArgument, "no feasible window configuration found");
    result.bound = Rational(best, kShareScale);
    result.witness = config_from_mask(geo, best_mask);
    return result;
}

Rational density_lower_bound(CodeKind kind, int radius) {
    return max_share(kind, radius).bound.reciprocal();
}

DischargeOutcome discharge_resolves(const Rational& sh_x, const DischargeTable& table) {
    if (!(sh_x > table.target))
        throw Error(ErrorCode::NotAProblemCase,
                    "share " + sh_x.str() + " does not exceed target " + table.target.str());
    Rational post = sh_x;
    for (const DischargeEntry& entry : table.entries) {
        if (entry.k < 1)
            throw Error(ErrorCode::InvalidArgument, "discharge divisor k must be >= 1", entry.k);
        if (entry.sh_max >= table.target) continue; // cannot absorb anything
        post -= (table.target - entry.sh_max) / Rational(entry.k);
    }
    return {post <= table.target, post};
}

DischargeTable build_discharge_table(CodeKind kind, const LocalConfig& config,
                                     const Rational& target) {
    WindowGeometry geo = make_geometry(config.radius);
    std::uint64_t det = 0;
    for (int c = 0; c < geo.cell_count; ++c)
        if (config.cells[c] == CellState::Detector) det |= std::uint64_t(1) << c;

    const int need = k_min(kind);

    // Upper bound on the share of cell v, computable only when every
    // neighborhood it sums over lies inside the window. Free cells never
    // count as dominators, which keeps the bound an over-estimate.
    auto share_upper = [&](int v) -> std::optional<Rational> {
        if (chebyshev(geo, v, geo.center) > geo.radius - 2) return std::nullopt;
        Rational total;
        std::uint64_t members = geo.closed_mask[v];
        while (members) {
            int u = std::countr_zero(members);
            members &= members - 1;
            int d = std::max(need, std::popcount(det & geo.closed_mask[u]));
            total += Rational(1, d);
        }
        return total;
    };

    DischargeTable table;
    table.target = target;
    std::uint64_t center_neighbors = geo.open_mask[geo.center] & det;
    while (center_neighbors) {
        int v = std::countr_zero(center_neighbors);
        center_neighbors &= center_neighbors - 1;
        auto sh_max = share_upper(v);
        if (!sh_max) continue;
        // Conservative k: every detector (or undecided) neighbor of v whose
        // own share bound is unknown or above the target could be a
        // competing discharge source.
        int k = 0;
        std::uint64_t around = geo.open_mask[v];
        while (around) {
            int u = std::countr_zero(around);
            around &= around - 1;
            if (config.cells[u] == CellState::Empty) continue;
            if (config.cells[u] == CellState::Free) {
                ++k;
                continue;
            }
            auto bound = share_upper(u);
            if (!bound || *bound > target) ++k;
        }
        k = std::max(k, 1);
        int vx = v % geo.side - geo.radius, vy = v / geo.side - geo.radius;
        table.entries.push_back(
            {"(" + std::to_string(vx) + "," + std::to_string(vy) + ")", *sh_max, k});
    }
    return table;
}

} // namespace ftld

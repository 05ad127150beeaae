#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ftld/bitset.hpp"
#include "ftld/error.hpp"

namespace ftld {

/// Immutable simple undirected graph with 0..n-1 vertex ids.
///
/// Adjacency is stored twice: sorted neighbor lists for iteration and packed
/// bit rows (open and closed neighborhoods) for the clause arithmetic in the
/// verifier and oracle. Instances are safe for concurrent reads.
class FiniteGraph {
public:
    FiniteGraph() = default; // empty graph
    static FiniteGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const;
    bool adjacent(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    int words() const { return words_; }
    std::span<const std::uint64_t> open_row(int v) const {
        return {open_rows_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
    }
    std::span<const std::uint64_t> closed_row(int v) const {
        return {closed_rows_.data() + static_cast<size_t>(v) * words_, static_cast<size_t>(words_)};
    }

    /// When set, every pair clause of the code characterizations is already
    /// satisfied for vertex pairs farther apart than this radius, so a
    /// verifier may restrict pair checks accordingly. Producers of king-grid
    /// tori with both dimensions >= 7 set it to 2.
    std::optional<int> pair_check_radius() const { return pair_check_radius_; }
    void set_pair_check_radius(int r) { pair_check_radius_ = r; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw Error(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " out of range", v);
    }

private:
    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> open_rows_;
    std::vector<std::uint64_t> closed_rows_;
    std::optional<int> pair_check_radius_;
};

/// Cell coordinate on a king-grid torus; x wraps mod width, y mod height.
struct TorusCoord {
    int x = 0;
    int y = 0;
};

/// King-grid torus on width x height cells: vertex (x,y) is adjacent to the
/// eight cells at Chebyshev distance 1 under the wrap rule. Crossing the
/// bottom row boundary shifts the column by `shear` (mod width), so sheared
/// period lattices are expressible.
///
/// Both dimensions must be >= 3; smaller tori would collapse the
/// 8-neighborhood into multi-edges.
FiniteGraph king_torus(int width, int height, int shear);

int torus_vertex(int width, int x, int y);
TorusCoord torus_coord(int width, int v);

/// N(v) together with v itself, sorted.
std::vector<int> closed_neighborhood(const FiniteGraph& g, int v);

/// All unordered pairs (u,v), u < v, at graph distance <= d, sorted.
std::vector<std::pair<int, int>> pairs_within_distance(const FiniteGraph& g, int d);

/// Text format: first line "n m", then m lines "u v" (0-based), LF endings.
FiniteGraph parse_graph(const std::string& text);
FiniteGraph read_graph_file(const std::string& path);
std::string format_graph(const FiniteGraph& g);

} // namespace ftld

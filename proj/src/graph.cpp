#include "ftld/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace ftld {

FiniteGraph FiniteGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0)
        throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    FiniteGraph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorCode::InvalidVertex, "edge endpoint out of range", u < 0 || u >= n ? u : v);
        if (u == v)
            throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(u), u);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.m_ = static_cast<int>(edges.size());
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj_[v];
        std::sort(nb.begin(), nb.end());
        if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
            throw Error(ErrorCode::InvalidArgument, "parallel edge at vertex " + std::to_string(v), v);
    }
    g.words_ = std::max(1, (n + 63) / 64);
    g.open_rows_.assign(static_cast<size_t>(n) * g.words_, 0);
    g.closed_rows_.assign(static_cast<size_t>(n) * g.words_, 0);
    for (int v = 0; v < n; ++v) {
        auto* open = g.open_rows_.data() + static_cast<size_t>(v) * g.words_;
        auto* closed = g.closed_rows_.data() + static_cast<size_t>(v) * g.words_;
        for (int u : g.adj_[v]) {
            open[u >> 6] |= std::uint64_t(1) << (u & 63);
            closed[u >> 6] |= std::uint64_t(1) << (u & 63);
        }
        closed[v >> 6] |= std::uint64_t(1) << (v & 63);
    }
    return g;
}

const std::vector<int>& FiniteGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool FiniteGraph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (open_row(u)[v >> 6] >> (v & 63)) & 1;
}

int torus_vertex(int width, int x, int y) { return y * width + x; }

TorusCoord torus_coord(int width, int v) { return {v % width, v / width}; }

namespace {

int mod(int a, int m) {
    int r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

FiniteGraph king_torus(int width, int height, int shear) {
    if (width < 3 || height < 3)
        throw Error(ErrorCode::DegenerateTorus,
                    "torus dimensions must be >= 3, got " + std::to_string(width) + "x" +
                        std::to_string(height));
    if (shear < 0 || shear >= width)
        throw Error(ErrorCode::InvalidArgument, "shear must lie in [0, width)", shear);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(width) * height * 4);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            int v = torus_vertex(width, x, y);
            for (int dy = -1; dy <= 1; ++dy) {
                for (int dx = -1; dx <= 1; ++dx) {
                    if (dx == 0 && dy == 0) continue;
                    int ny = y + dy;
                    int nx = x + dx;
                    if (ny >= height) nx += shear;   // wrap down across the seam
                    if (ny < 0) nx -= shear;         // wrap up across the seam
                    ny = mod(ny, height);
                    nx = mod(nx, width);
                    int u = torus_vertex(width, nx, ny);
                    if (v < u) edges.emplace_back(v, u);
                }
            }
        }
    }
    FiniteGraph g = FiniteGraph::from_edges(width * height, edges);
    if (width >= 7 && height >= 7)
        g.set_pair_check_radius(2);
    return g;
}

std::vector<int> closed_neighborhood(const FiniteGraph& g, int v) {
    g.check_vertex(v);
    std::vector<int> out = g.neighbors(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

std::vector<std::pair<int, int>> pairs_within_distance(const FiniteGraph& g, int d) {
    if (d < 0)
        throw Error(ErrorCode::InvalidArgument, "distance must be >= 0", d);
    std::vector<std::pair<int, int>> pairs;
    int n = g.vertex_count();
    std::vector<int> dist(n);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        queue.assign(1, s);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            if (dist[v] == d) continue;
            for (int u : g.neighbors(v)) {
                if (dist[u] < 0) {
                    dist[u] = dist[v] + 1;
                    queue.push_back(u);
                    if (s < u) pairs.emplace_back(s, u);
                }
            }
        }
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

FiniteGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw Error(ErrorCode::ParseError, "graph header must be 'n m'");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v))
            throw Error(ErrorCode::ParseError, "expected " + std::to_string(m) + " edges, got " +
                                                   std::to_string(i));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    long long extra;
    if (in >> extra)
        throw Error(ErrorCode::ParseError, "trailing data after edge list");
    try {
        return FiniteGraph::from_edges(static_cast<int>(n), edges);
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, std::string("bad edge list: ") + e.what());
    }
}

FiniteGraph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string format_graph(const FiniteGraph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v))
            if (v < u) out << v << " " << u << "\n";
    return out.str();
}

} // namespace ftld

#include "ftld/pattern.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ftld {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

long long floor_mod(long long a, long long b) { return a - floor_div(a, b) * b; }

} // namespace

int PeriodicPattern::detector_count() const {
    int c = 0;
    for (auto v : cells) c += v != 0;
    return c;
}

bool PeriodicPattern::plane_cell(long long x, long long y) const {
    long long k = floor_div(y, height);
    long long y0 = y - k * height;
    long long x0 = floor_mod(x + k * shear, width);
    return cells[static_cast<size_t>(y0) * width + x0] != 0;
}

PeriodicPattern make_pattern(int width, int height, int shear,
                             const std::vector<std::pair<int, int>>& detectors) {
    if (width < 1 || height < 1)
        throw Error(ErrorCode::InvalidArgument, "pattern domain must be at least 1x1");
    if (shear < 0 || shear >= width)
        throw Error(ErrorCode::InvalidArgument, "shear must lie in [0, width)", shear);
    PeriodicPattern p;
    p.width = width;
    p.height = height;
    p.shear = shear;
    p.cells.assign(static_cast<size_t>(width) * height, 0);
    for (auto [x, y] : detectors) {
        if (x < 0 || x >= width || y < 0 || y >= height)
            throw Error(ErrorCode::InvalidArgument, "detector cell out of domain");
        p.set_detector(x, y, true);
    }
    return p;
}

Rational density(const PeriodicPattern& p) {
    return Rational(p.detector_count(), static_cast<long long>(p.width) * p.height);
}

TorusLift lift_to_torus(const PeriodicPattern& p, int rx_factor, int ry_factor) {
    if (rx_factor < 1 || ry_factor < 1)
        throw Error(ErrorCode::InvalidArgument, "replication factors must be >= 1");
    TorusLift lift;
    lift.rx = (7 + p.width - 1) / p.width;
    int ry = (7 + p.height - 1) / p.height;
    while ((static_cast<long long>(ry) * p.shear) % p.width != 0) ++ry;
    lift.rx *= rx_factor;
    lift.ry = ry * ry_factor;

    int W = lift.rx * p.width;
    int H = lift.ry * p.height;
    lift.graph = king_torus(W, H, 0);
    lift.detectors = Bitset(W * H);
    for (int y = 0; y < H; ++y)
        for (int x = 0; x < W; ++x)
            if (p.plane_cell(x, y)) lift.detectors.set(torus_vertex(W, x, y));
    return lift;
}

VerificationVerdict verify_pattern(const PeriodicPattern& p, CodeKind kind) {
    TorusLift lift = lift_to_torus(p);
    return check_code(lift.graph, lift.detectors, kind,
                      CheckOptions{PairScope::WithinDistance2});
}

PeriodicPattern translate(const PeriodicPattern& p, int dx, int dy) {
    PeriodicPattern out = p;
    for (int y = 0; y < p.height; ++y)
        for (int x = 0; x < p.width; ++x)
            out.set_detector(x, y, p.plane_cell(static_cast<long long>(x) - dx,
                                                static_cast<long long>(y) - dy));
    return out;
}

PeriodicPattern canonical_translate(const PeriodicPattern& p) {
    PeriodicPattern best = p;
    for (int dy = 0; dy < p.height; ++dy) {
        for (int dx = 0; dx < p.width; ++dx) {
            PeriodicPattern cand = translate(p, dx, dy);
            if (cand.cells < best.cells) best = cand;
        }
    }
    return best;
}

std::string render_ascii(const PeriodicPattern& p) {
    std::string out;
    out.reserve(static_cast<size_t>(p.height) * (p.width + 1));
    for (int y = 0; y < p.height; ++y) {
        for (int x = 0; x < p.width; ++x) out += p.detector(x, y) ? '#' : '.';
        out += '\n';
    }
    return out;
}

std::string render_svg(const PeriodicPattern& p) {
    const int cell = 20;
    int W = 3 * p.width, H = 3 * p.height;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W * cell << "\" height=\""
        << H * cell << "\" viewBox=\"0 0 " << W * cell << " " << H * cell << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int y = 0; y < H; ++y) {
        for (int x = 0; x < W; ++x) {
            if (!p.plane_cell(x - p.width, y - p.height)) continue;
            svg << "  <rect x=\"" << x * cell << "\" y=\"" << y * cell << "\" width=\"" << cell
                << "\" height=\"" << cell << "\" fill=\"#444\"/>\n";
        }
    }
    // grid lines over the tiled area
    for (int x = 0; x <= W; ++x)
        svg << "  <line x1=\"" << x * cell << "\" y1=\"0\" x2=\"" << x * cell << "\" y2=\""
            << H * cell << "\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
    for (int y = 0; y <= H; ++y)
        svg << "  <line x1=\"0\" y1=\"" << y * cell << "\" x2=\"" << W * cell << "\" y2=\""
            << y * cell << "\" stroke=\"#bbb\" stroke-width=\"1\"/>\n";
    // outline of the central fundamental domain
    svg << "  <rect x=\"" << p.width * cell << "\" y=\"" << p.height * cell << "\" width=\""
        << p.width * cell << "\" height=\"" << p.height * cell
        << "\" fill=\"none\" stroke=\"red\" stroke-width=\"2\"/>\n";
    svg << "</svg>\n";
    return svg.str();
}

PeriodicPattern parse_pattern(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty())
        throw Error(ErrorCode::ParseError, "empty pattern file");

    int width = -1, height = -1, shear = 0;
    size_t first_row = 0;
    std::istringstream header(lines[0]);
    std::string word;
    if (header >> word && word == "period") {
        std::string shear_word;
        if (!(header >> width >> height >> shear_word >> shear) || shear_word != "shear")
            throw Error(ErrorCode::ParseError, "pattern header must be 'period W H shear S'");
        first_row = 1;
    }

    std::vector<std::string> rows(lines.begin() + first_row, lines.end());
    if (rows.empty())
        throw Error(ErrorCode::ParseError, "pattern has no rows");
    if (height < 0) {
        height = static_cast<int>(rows.size());
        width = static_cast<int>(rows[0].size());
    }
    if (static_cast<int>(rows.size()) != height)
        throw Error(ErrorCode::ParseError, "pattern row count does not match header");

    PeriodicPattern p;
    try {
        p = make_pattern(width, height, shear);
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    for (int y = 0; y < height; ++y) {
        if (static_cast<int>(rows[y].size()) != width)
            throw Error(ErrorCode::ParseError, "pattern row " + std::to_string(y) +
                                                   " has wrong length");
        for (int x = 0; x < width; ++x) {
            char c = rows[y][x];
            if (c == '#')
                p.set_detector(x, y, true);
            else if (c != '.')
                throw Error(ErrorCode::ParseError,
                            std::string("pattern cells must be '#' or '.', got '") + c + "'");
        }
    }
    return p;
}

PeriodicPattern read_pattern_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open pattern file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pattern(buf.str());
}

std::string format_pattern(const PeriodicPattern& p) {
    std::ostringstream out;
    out << "period " << p.width << " " << p.height << " shear " << p.shear << "\n";
    out << render_ascii(p);
    return out.str();
}

const std::map<std::string, PeriodicPattern>& builtin_patterns() {
    // Layouts found by search_min / search_sweep and frozen (canonical
    // translates); the search tests re-derive the minimum counts.
    static const std::map<std::string, PeriodicPattern> patterns = [] {
        std::map<std::string, PeriodicPattern> m;
        m.emplace("ld", parse_pattern("period 4 5 shear 0\n"
                                      "....\n"
                                      "...#\n"
                                      ".#..\n"
                                      "...#\n"
                                      ".#..\n"));
        m.emplace("red", parse_pattern("period 4 4 shear 0\n"
                                       "....\n"
                                       ".#.#\n"
                                       "..#.\n"
                                       ".#.#\n"));
        m.emplace("det", parse_pattern("period 4 4 shear 0\n"
                                       "...#\n"
                                       "..##\n"
                                       ".#..\n"
                                       "##..\n"));
        m.emplace("err", parse_pattern("period 4 4 shear 0\n"
                                       "...#\n"
                                       "..##\n"
                                       ".##.\n"
                                       "##..\n"));
        return m;
    }();
    return patterns;
}

} // namespace ftld

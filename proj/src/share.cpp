#include "ftld/share.hpp"

namespace ftld {

DomProfile dom_profile(const FiniteGraph& g, const Bitset& s) {
    DomProfile profile;
    int n = g.vertex_count();
    profile.dom.resize(n);
    profile.partial.resize(n);
    for (int v = 0; v < n; ++v) {
        int d = Bitset::and_count(g.closed_row(v), s.data());
        profile.dom[v] = d;
        if (d >= 1)
            profile.partial[v] = Rational(1, d);
        else
            profile.undominated.push_back(v);
    }
    return profile;
}

int dom(const FiniteGraph& g, const Bitset& s, int v) {
    g.check_vertex(v);
    return Bitset::and_count(g.closed_row(v), s.data());
}

namespace {

Rational partial_share_checked(const FiniteGraph& g, const Bitset& s, int v) {
    int d = dom(g, s, v);
    if (d == 0)
        throw Error(ErrorCode::UndominatedVertex,
                    "vertex " + std::to_string(v) + " has no dominator", v);
    return Rational(1, d);
}

} // namespace

Rational share(const FiniteGraph& g, const Bitset& s, int x) {
    g.check_vertex(x);
    if (!s.test(x))
        throw Error(ErrorCode::InvalidArgument,
                    "share is defined for detectors; " + std::to_string(x) + " is not in S", x);
    Rational total = partial_share_checked(g, s, x);
    for (int u : g.neighbors(x)) total += partial_share_checked(g, s, u);
    return total;
}

Rational block_share(const FiniteGraph& g, const Bitset& s, const std::vector<int>& a) {
    Rational total;
    for (int v : a) total += partial_share_checked(g, s, v);
    return total;
}

Rational sigma(const std::vector<long long>& values) {
    Rational total;
    for (long long x : values) {
        if (x == 0)
            throw Error(ErrorCode::DivisionByZero, "sigma entry is zero");
        if (x < 0)
            throw Error(ErrorCode::InvalidArgument, "sigma entries must be positive", x);
        total += Rational(1, x);
    }
    return total;
}

Rational average_share(const FiniteGraph& g, const Bitset& s) {
    return share_report(g, s).average;
}

ShareReport share_report(const FiniteGraph& g, const Bitset& s) {
    ShareReport report;
    auto profile = dom_profile(g, s);
    if (!profile.dominating())
        throw Error(ErrorCode::UndominatedVertex,
                    "vertex " + std::to_string(profile.undominated.front()) + " has no dominator",
                    profile.undominated.front());
    for (int x : s.to_vertices()) {
        Rational sh = profile.partial[x];
        for (int u : g.neighbors(x)) sh += profile.partial[u];
        report.per_detector.emplace_back(x, sh);
        report.sum += sh;
    }
    if (report.per_detector.empty())
        throw Error(ErrorCode::UndominatedVertex, "empty detector set has no average share");
    // Exact accounting check: each k-dominated vertex contributes 1/k to each
    // of its k dominators, so the total must equal |V(G)|.
    if (report.sum != Rational(g.vertex_count()))
        throw Error(ErrorCode::InvalidArgument,
                    "share sum " + report.sum.str() + " != vertex count " +
                        std::to_string(g.vertex_count()));
    report.average = report.sum / Rational(static_cast<long long>(report.per_detector.size()));
    return report;
}

} // namespace ftld

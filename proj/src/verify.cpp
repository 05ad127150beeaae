#include "ftld/verify.hpp"

#include <algorithm>

namespace ftld {

namespace {

inline std::uint64_t bit_in_word(int v, int word) {
    return (v >> 6) == word ? std::uint64_t(1) << (v & 63) : 0;
}

inline int dom_closed(const FiniteGraph& g, const Bitset& s, int v) {
    return Bitset::and_count(g.closed_row(v), s.data());
}

inline int open_count(const FiniteGraph& g, const Bitset& s, int v) {
    return Bitset::and_count(g.open_row(v), s.data());
}

// |(N(u) & S) sym_diff (N(v) & S)| with the pair itself removed.
inline int sym_diff_minus_pair(const FiniteGraph& g, const Bitset& s, int u, int v) {
    auto ru = g.open_row(u);
    auto rv = g.open_row(v);
    auto sw = s.data();
    int c = 0;
    for (int i = 0; i < g.words(); ++i) {
        std::uint64_t x = (ru[i] & sw[i]) ^ (rv[i] & sw[i]);
        x &= ~bit_in_word(u, i);
        x &= ~bit_in_word(v, i);
        c += std::popcount(x);
    }
    return c;
}

inline int sym_diff_minus(const FiniteGraph& g, const Bitset& s, int u, int v, int drop) {
    auto ru = g.open_row(u);
    auto rv = g.open_row(v);
    auto sw = s.data();
    int c = 0;
    for (int i = 0; i < g.words(); ++i) {
        std::uint64_t x = (ru[i] & sw[i]) ^ (rv[i] & sw[i]);
        x &= ~bit_in_word(drop, i);
        c += std::popcount(x);
    }
    return c;
}

inline int sym_diff_full(const FiniteGraph& g, const Bitset& s, int u, int v) {
    auto ru = g.open_row(u);
    auto rv = g.open_row(v);
    auto sw = s.data();
    int c = 0;
    for (int i = 0; i < g.words(); ++i)
        c += std::popcount((ru[i] & sw[i]) ^ (rv[i] & sw[i]));
    return c;
}

// |(N(a) & S) - (N(b) & S)|
inline int one_sided_diff(const FiniteGraph& g, const Bitset& s, int a, int b) {
    auto ra = g.open_row(a);
    auto rb = g.open_row(b);
    auto sw = s.data();
    int c = 0;
    for (int i = 0; i < g.words(); ++i)
        c += std::popcount((ra[i] & sw[i]) & ~(rb[i] & sw[i]));
    return c;
}

// Walks every clause of the characterization; sink returns false to stop.
// `casewise` selects the per-membership clause split for RED and ERR.
// `pairs`, when non-null, overrides the pair iteration entirely.
template <class Sink>
bool walk_clauses(const FiniteGraph& g, const Bitset& s, CodeKind kind, bool casewise,
                  const CheckOptions& opts, const std::vector<std::pair<int, int>>* pairs,
                  Sink&& sink) {
    const int n = g.vertex_count();
    const int need = k_min(kind);

    // Property i: domination. For LD it binds non-detectors only (a detector
    // dominates itself); phrased over closed neighborhoods it is uniform.
    for (int v = 0; v < n; ++v) {
        if (kind == CodeKind::LD && s.test(v)) continue;
        int got = dom_closed(g, s, v);
        if (got < need)
            if (!sink(Violation{ViolationKind::Domination, v, -1, need, got, 1})) return false;
    }

    auto pair_clause = [&](int u, int v) -> bool {
        bool us = s.test(u);
        bool vs = s.test(v);
        switch (kind) {
            case CodeKind::LD: {
                if (us || vs) return true;
                int got = sym_diff_full(g, s, u, v);
                if (got < 1)
                    return sink(Violation{ViolationKind::PairDistinguishing, u, v, 1, got, 2});
                return true;
            }
            case CodeKind::RED: {
                if (!casewise) {
                    int required = 2 - (us ? 1 : 0) - (vs ? 1 : 0);
                    if (required <= 0) return true;
                    int got = sym_diff_minus_pair(g, s, u, v);
                    if (got < required)
                        return sink(
                            Violation{ViolationKind::PairDistinguishing, u, v, required, got, 2});
                    return true;
                }
                if (us && vs) return true; // detector pairs are unconstrained
                if (us != vs) {
                    int det = us ? u : v;
                    int got = sym_diff_minus(g, s, u, v, det);
                    if (got < 1)
                        return sink(Violation{ViolationKind::PairDistinguishing, u, v, 1, got, 2});
                    return true;
                }
                int got = sym_diff_full(g, s, u, v);
                if (got < 2)
                    return sink(Violation{ViolationKind::PairDistinguishing, u, v, 2, got, 3});
                return true;
            }
            case CodeKind::DET: {
                if (us && vs) {
                    int got = sym_diff_full(g, s, u, v);
                    if (got < 1)
                        return sink(Violation{ViolationKind::PairDistinguishing, u, v, 1, got, 2});
                    return true;
                }
                if (us != vs) {
                    int nd = us ? v : u; // non-detector side
                    int det = us ? u : v;
                    if (one_sided_diff(g, s, nd, det) >= 2) return true;
                    if (one_sided_diff(g, s, det, nd) >= 1) return true;
                    return sink(Violation{ViolationKind::PairDistinguishing, u, v, 2,
                                          one_sided_diff(g, s, nd, det), 3});
                }
                if (one_sided_diff(g, s, u, v) >= 2) return true;
                if (one_sided_diff(g, s, v, u) >= 2) return true;
                return sink(Violation{ViolationKind::PairDistinguishing, u, v, 2,
                                      one_sided_diff(g, s, u, v), 4});
            }
            case CodeKind::ERR: {
                if (!casewise) {
                    int required = 3 - (us ? 1 : 0) - (vs ? 1 : 0);
                    int got = sym_diff_minus_pair(g, s, u, v);
                    if (got < required)
                        return sink(
                            Violation{ViolationKind::PairDistinguishing, u, v, required, got, 2});
                    return true;
                }
                if (us && vs) {
                    int got = sym_diff_minus_pair(g, s, u, v);
                    if (got < 1)
                        return sink(Violation{ViolationKind::PairDistinguishing, u, v, 1, got, 2});
                    return true;
                }
                if (us != vs) {
                    int det = us ? u : v;
                    int got = sym_diff_minus(g, s, u, v, det);
                    if (got < 2)
                        return sink(Violation{ViolationKind::PairDistinguishing, u, v, 2, got, 3});
                    return true;
                }
                int got = sym_diff_full(g, s, u, v);
                if (got < 3)
                    return sink(Violation{ViolationKind::PairDistinguishing, u, v, 3, got, 4});
                return true;
            }
        }
        return true;
    };

    if (pairs) {
        for (auto [u, v] : *pairs)
            if (!pair_clause(u, v)) return false;
        return true;
    }

    bool restrict = false;
    switch (opts.pair_scope) {
        case PairScope::All: restrict = false; break;
        case PairScope::WithinDistance2: restrict = true; break;
        case PairScope::Auto: restrict = g.pair_check_radius().has_value(); break;
    }

    if (restrict) {
        for (auto [u, v] : pairs_within_distance(g, 2))
            if (!pair_clause(u, v)) return false;
    } else {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!pair_clause(u, v)) return false;
    }
    return true;
}

VerificationVerdict run_check(const FiniteGraph& g, const Bitset& s, CodeKind kind, bool casewise,
                              const CheckOptions& opts) {
    VerificationVerdict verdict;
    walk_clauses(g, s, kind, casewise, opts, nullptr, [&](const Violation& viol) {
        verdict.violations.push_back(viol);
        return true;
    });
    std::sort(verdict.violations.begin(), verdict.violations.end(),
              [](const Violation& a, const Violation& b) {
                  return std::tie(a.u, a.v, a.clause) < std::tie(b.u, b.v, b.clause);
              });
    verdict.valid = verdict.violations.empty();
    return verdict;
}

} // namespace

VerificationVerdict check_code(const FiniteGraph& g, const Bitset& s, CodeKind kind,
                               const CheckOptions& opts) {
    return run_check(g, s, kind, false, opts);
}

VerificationVerdict check_code_casewise(const FiniteGraph& g, const Bitset& s, CodeKind kind,
                                        const CheckOptions& opts) {
    return run_check(g, s, kind, true, opts);
}

bool code_valid(const FiniteGraph& g, const Bitset& s, CodeKind kind, const CheckOptions& opts) {
    return walk_clauses(g, s, kind, false, opts, nullptr, [](const Violation&) { return false; });
}

bool code_valid(const FiniteGraph& g, const Bitset& s, CodeKind kind,
                const std::vector<std::pair<int, int>>& pairs) {
    return walk_clauses(g, s, kind, false, CheckOptions{}, &pairs,
                        [](const Violation&) { return false; });
}

bool k_distinguished(const FiniteGraph& g, const Bitset& s, int u, int v, int k) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v)
        throw Error(ErrorCode::InvalidPair, "k_distinguished needs two distinct vertices", u);
    if (k <= 0) return true;
    return sym_diff_minus_pair(g, s, u, v) >= k;
}

} // namespace ftld

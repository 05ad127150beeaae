#include "doctest.h"

#include "ftld/fixtures.hpp"
#include "ftld/share.hpp"

#include "support.hpp"

using namespace ftld;

TEST_CASE("demo6 domination census") {
    FiniteGraph g = demo6_graph();
    Bitset s = demo6_detectors();

    CHECK(dom(g, s, 0) == 3);
    CHECK(dom(g, s, 1) == 4);
    CHECK(dom(g, s, 2) == 3);
    CHECK(dom(g, s, 3) == 3);
    CHECK(dom(g, s, 4) == 2);
    CHECK(dom(g, s, 5) == 2);

    Bitset empty(6);
    CHECK(dom(g, empty, 0) == 0);

    auto profile = dom_profile(g, s);
    CHECK(profile.dominating());
    CHECK(profile.partial[4] == Rational(1, 2));
    CHECK(profile.partial[1] == Rational(1, 4));
    for (int v = 0; v < 6; ++v) {
        CHECK(profile.partial[v] > Rational(0));
        CHECK(profile.partial[v] <= Rational(1));
        CHECK((profile.partial[v] == Rational(1)) == (profile.dom[v] == 1));
    }
}

TEST_CASE("demo6 shares") {
    FiniteGraph g = demo6_graph();
    Bitset s = demo6_detectors();

    CHECK(share(g, s, 0) == Rational(17, 12));
    CHECK(share(g, s, 1) == Rational(7, 4));
    CHECK(share(g, s, 3) == Rational(7, 4));
    CHECK(share(g, s, 5) == Rational(13, 12));

    auto report = share_report(g, s);
    CHECK(report.sum == Rational(6));
    CHECK(report.average == Rational(3, 2));
    CHECK(average_share(g, s) == Rational(3, 2));
}

TEST_CASE("share of a lone vertex") {
    FiniteGraph g = FiniteGraph::from_edges(1, {});
    Bitset s = Bitset::from_vertices(1, {0});
    CHECK(share(g, s, 0) == Rational(1));
}

TEST_CASE("block shares") {
    FiniteGraph g = demo6_graph();
    Bitset s = demo6_detectors();
    CHECK(block_share(g, s, {0, 1}) == Rational(7, 12));
    CHECK(block_share(g, s, {}) == Rational(0));
    // over all vertices: each partial share counted once, sum of 1/dom(v)
    CHECK(block_share(g, s, {0, 1, 2, 3, 4, 5}) == Rational(9, 4));
    // additive over disjoint sets
    CHECK(block_share(g, s, {0, 1}) + block_share(g, s, {2, 3}) ==
          block_share(g, s, {0, 1, 2, 3}));
}

TEST_CASE("sigma") {
    CHECK(sigma({1, 2, 3}) == Rational(11, 6));
    CHECK(sigma({3, 4, 4, 5}) == Rational(31, 30));
    CHECK(sigma({3, 4, 4, 5}) + sigma({3, 4}) + sigma({3}) + sigma({3, 4}) == Rational(38, 15));
    CHECK(sigma({}) == Rational(0));
    CHECK_THROWS_AS(sigma({1, 0, 2}), Error);
    try {
        sigma({0});
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DivisionByZero);
    }
}

TEST_CASE("average share on a complete graph") {
    FiniteGraph k3 = FiniteGraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    Bitset s = Bitset::from_vertices(3, {0});
    CHECK(average_share(k3, s) == Rational(3));
    CHECK(share(k3, s, 0) == Rational(3));
}

TEST_CASE("undominated vertices are flagged") {
    FiniteGraph p3 = FiniteGraph::from_edges(3, {{0, 1}, {1, 2}});
    Bitset s = Bitset::from_vertices(3, {0});
    CHECK(share(p3, s, 0) == Rational(2)); // N[0] = {0,1}, each dominated once
    try {
        average_share(p3, s); // vertex 2 is uncovered
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UndominatedVertex);
        CHECK(e.detail() == 2);
    }
    CHECK_THROWS_AS(block_share(p3, s, {2}), Error);
    CHECK_THROWS_AS(share(p3, s, 1), Error); // 1 is not a detector
}

TEST_CASE("sum of shares equals vertex count on random dominating sets") {
    TestRng rng(101);
    int seen = 0;
    while (seen < 100) {
        int n = 3 + static_cast<int>(rng.below(10)); // up to 12
        FiniteGraph g = random_graph(rng, n, 20 + static_cast<int>(rng.below(60)));
        Bitset s = random_dominating_set(rng, g);
        auto report = share_report(g, s);
        CHECK(report.sum == Rational(n));
        ++seen;
    }
}

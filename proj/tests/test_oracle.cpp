#include "doctest.h"

#include <algorithm>

#include "ftld/equiv.hpp"
#include "ftld/fixtures.hpp"
#include "ftld/oracle.hpp"
#include "ftld/verify.hpp"

#include "support.hpp"

using namespace ftld;

TEST_CASE("signatures on demo6") {
    FiniteGraph g = demo6_graph();
    std::vector<int> dets = {0, 1, 3, 5};

    CHECK(signature(g, dets, 1) == Signature{1, 2, 1, 1});
    CHECK(signature(g, dets, 4) == Signature{1, 0, 1, 0});
    CHECK(signature(g, dets, std::nullopt) == Signature{0, 0, 0, 0});
}

TEST_CASE("observable sets") {
    Signature sig{1, 2, 1, 1};
    auto fn = observable_set(sig, FaultModel::FalseNegative);
    CHECK(fn.size() == 5);
    CHECK(std::count(fn.begin(), fn.end(), sig) == 1);
    CHECK(std::count(fn.begin(), fn.end(), Signature{0, 2, 1, 1}) == 1);
    CHECK(std::count(fn.begin(), fn.end(), Signature{1, 0, 1, 1}) == 1);

    CHECK(observable_set(Signature{0, 0}, FaultModel::FalseNegative) ==
          std::vector<Signature>{{0, 0}});

    auto ae = observable_set(Signature{1}, FaultModel::AnyError);
    CHECK(ae.size() == 3);
    CHECK(std::count(ae.begin(), ae.end(), Signature{0}) == 1);
    CHECK(std::count(ae.begin(), ae.end(), Signature{2}) == 1);

    CHECK(observable_set(sig, FaultModel::None) == std::vector<Signature>{sig});
    CHECK_THROWS_AS(observable_set(sig, FaultModel::Removal), Error);
}

TEST_CASE("observable set sizes") {
    TestRng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        int len = 1 + static_cast<int>(rng.below(7));
        Signature sig(len);
        int nonzero = 0;
        for (auto& entry : sig) {
            entry = static_cast<std::uint8_t>(rng.below(3));
            nonzero += entry != 0;
        }
        CHECK(observable_set(sig, FaultModel::FalseNegative).size() == size_t(1 + nonzero));
        CHECK(observable_set(sig, FaultModel::AnyError).size() == size_t(1 + 2 * len));
        // the true signature is always observable
        for (auto model : {FaultModel::None, FaultModel::FalseNegative, FaultModel::AnyError}) {
            auto family = observable_set(sig, model);
            CHECK(std::count(family.begin(), family.end(), sig) == 1);
        }
    }
}

TEST_CASE("oracle verdicts on demo6") {
    FiniteGraph g = demo6_graph();
    Bitset all = Bitset::from_vertices(6, {0, 1, 2, 3, 4, 5});
    Bitset minus2 = Bitset::from_vertices(6, {0, 1, 3, 4, 5});
    Bitset s = demo6_detectors();

    CHECK(oracle_check(g, all, CodeKind::ERR));
    CHECK(oracle_check(g, minus2, CodeKind::DET));
    CHECK(oracle_check(g, s, CodeKind::RED));
    CHECK(oracle_check(g, s, CodeKind::LD));
    CHECK_FALSE(oracle_check(g, s, CodeKind::ERR)); // vertex 4 only 2-dominated
}

TEST_CASE("oracle matches characterizations exhaustively up to n=3") {
    EquivReport report = equiv_scan(3);
    CHECK(report.ok());
    CHECK(report.cases == (2 + 2 * 4 + 8 * 8) * 4);
}

TEST_CASE("empty detector set is never a code on a nonempty graph") {
    FiniteGraph g = demo6_graph();
    Bitset empty(6);
    for (CodeKind kind : all_code_kinds) {
        CHECK_FALSE(oracle_check(g, empty, kind));
        CHECK_FALSE(check_code(g, empty, kind).valid);
    }
}

#include "ftld/oracle.hpp"

#include <map>
#include <set>

namespace ftld {

Signature signature(const FiniteGraph& g, const std::vector<int>& detectors,
                    std::optional<int> intruder) {
    if (intruder) g.check_vertex(*intruder);
    Signature sig(detectors.size(), 0);
    for (size_t i = 0; i < detectors.size(); ++i) {
        int d = detectors[i];
        g.check_vertex(d);
        if (!intruder) continue;
        if (*intruder == d)
            sig[i] = 2;
        else if (g.adjacent(d, *intruder))
            sig[i] = 1;
    }
    return sig;
}

std::vector<Signature> observable_set(const Signature& sig, FaultModel model) {
    std::vector<Signature> out;
    switch (model) {
        case FaultModel::None:
            out.push_back(sig);
            return out;
        case FaultModel::FalseNegative:
            out.push_back(sig);
            for (size_t i = 0; i < sig.size(); ++i) {
                if (sig[i] == 0) continue;
                Signature corrupted = sig;
                corrupted[i] = 0;
                out.push_back(std::move(corrupted));
            }
            return out;
        case FaultModel::AnyError:
            out.push_back(sig);
            for (size_t i = 0; i < sig.size(); ++i) {
                for (std::uint8_t value = 0; value <= 2; ++value) {
                    if (value == sig[i]) continue;
                    Signature corrupted = sig;
                    corrupted[i] = value;
                    out.push_back(std::move(corrupted));
                }
            }
            return out;
        case FaultModel::Removal:
            throw Error(ErrorCode::UnsupportedModel,
                        "removal is modeled by detector deletion, not report corruption");
    }
    throw Error(ErrorCode::UnsupportedModel, "unknown fault model");
}

namespace {

// All scenario signatures: index 0 is "no intruder", index v+1 puts the
// intruder at vertex v.
std::vector<Signature> scenario_signatures(const FiniteGraph& g, const std::vector<int>& dets) {
    std::vector<Signature> sigs;
    sigs.reserve(g.vertex_count() + 1);
    sigs.push_back(signature(g, dets, std::nullopt));
    for (int v = 0; v < g.vertex_count(); ++v) sigs.push_back(signature(g, dets, v));
    return sigs;
}

bool signatures_distinct(const FiniteGraph& g, const std::vector<int>& dets) {
    std::set<Signature> seen;
    for (auto& sig : scenario_signatures(g, dets))
        if (!seen.insert(sig).second) return false;
    return true;
}

bool families_disjoint(const FiniteGraph& g, const std::vector<int>& dets, FaultModel model) {
    std::map<Signature, int> owner;
    auto sigs = scenario_signatures(g, dets);
    for (int scenario = 0; scenario < static_cast<int>(sigs.size()); ++scenario) {
        for (auto& observed : observable_set(sigs[scenario], model)) {
            auto [it, inserted] = owner.emplace(std::move(observed), scenario);
            if (!inserted && it->second != scenario) return false;
        }
    }
    return true;
}

} // namespace

bool oracle_check(const FiniteGraph& g, const Bitset& s, CodeKind kind) {
    std::vector<int> dets = s.to_vertices();
    switch (kind) {
        case CodeKind::LD:
            return signatures_distinct(g, dets);
        case CodeKind::RED: {
            // "at most one detector removed" includes removing none.
            if (!signatures_distinct(g, dets)) return false;
            for (size_t drop = 0; drop < dets.size(); ++drop) {
                std::vector<int> reduced = dets;
                reduced.erase(reduced.begin() + drop);
                if (!signatures_distinct(g, reduced)) return false;
            }
            return true;
        }
        case CodeKind::DET:
            return families_disjoint(g, dets, FaultModel::FalseNegative);
        case CodeKind::ERR:
            return families_disjoint(g, dets, FaultModel::AnyError);
    }
    return false;
}

} // namespace ftld

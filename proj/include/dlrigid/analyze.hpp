#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dlrigid/count_matroid.hpp"
#include "dlrigid/graph.hpp"
#include "dlrigid/matroid_structure.hpp"
#include "dlrigid/rank_matroid.hpp"
#include "dlrigid/separations.hpp"

namespace dlrigid {

struct AnalyzeOptions {
    std::uint64_t seed = 0;
    int trials = 3;
    bool ears = false;
    bool separations = false;
};

struct AnalysisReport {
    std::size_t num_vertices = 0;
    std::size_t num_direction = 0;
    std::size_t num_length = 0;
    bool independent = false;
    std::string circuit; // "mixed" | "pure" | "none"
    bool m_connected = false;
    bool rigid = false;
    bool redundantly_rigid = false;
    bool two_connected = false;
    std::optional<bool> direction_balanced; // absent when not 2-connected
    std::optional<bool> length_balanced;
    std::optional<EarDecomposition> ears;
    std::optional<std::vector<TwoSeparation>> separations;
    AnalyzeOptions options;
    std::vector<std::uint64_t> primes;
};

inline AnalysisReport analyze(const MixedGraph& g, const AnalyzeOptions& opt = {}) {
    AnalysisReport r;
    r.options = opt;
    r.num_vertices = g.num_vertices();
    r.num_direction = g.num_direction();
    r.num_length = g.num_length();

    MatroidView m(g, opt.seed, opt.trials);
    r.primes = m.primes();
    std::size_t rk = m.rank_all();
    r.independent = rk == g.num_edges();

    if (g.num_vertices() <= count_matroid::kMaxExhaustiveVertices) {
        switch (count_matroid::classify_circuit_by_counts(g)) {
            case count_matroid::CircuitClass::MixedCircuit: r.circuit = "mixed"; break;
            case count_matroid::CircuitClass::PureCircuit: r.circuit = "pure"; break;
            case count_matroid::CircuitClass::NotACircuit: r.circuit = "none"; break;
        }
    } else {
        // nullity one and no coloop <=> the whole edge set is the circuit
        auto non_coloops = m.non_coloops();
        bool all_in = std::all_of(non_coloops.begin(), non_coloops.end(),
                                  [](bool b) { return b; });
        if (g.num_edges() == rk + 1 && all_in) {
            r.circuit = g.is_mixed() ? "mixed" : "pure";
        } else {
            r.circuit = "none";
        }
    }

    r.m_connected = is_m_connected(m);
    r.rigid = g.num_vertices() >= 1 && rk == 2 * g.num_vertices() - 2;
    if (r.rigid) {
        auto non_coloops = m.non_coloops();
        r.redundantly_rigid = std::all_of(non_coloops.begin(), non_coloops.end(),
                                          [](bool b) { return b; });
    }
    r.two_connected = is_k_connected(g, 2);
    if (r.two_connected) {
        auto seps = two_separations(g);
        r.direction_balanced = std::all_of(seps.begin(), seps.end(),
                                           [](const TwoSeparation& s) {
                                               return s.direction_balanced;
                                           });
        r.length_balanced = std::all_of(seps.begin(), seps.end(),
                                        [](const TwoSeparation& s) {
                                            return s.length_balanced;
                                        });
        if (opt.separations) r.separations = std::move(seps);
    } else if (opt.separations) {
        fail(ErrorCode::NotTwoConnected, "separation report needs a 2-connected graph");
    }
    if (opt.ears) r.ears = ear_decomposition_mixed(m);
    return r;
}

} // namespace dlrigid

#pragma once

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "dlrigid/construction.hpp"
#include "dlrigid/count_matroid.hpp"
#include "dlrigid/graph.hpp"
#include "dlrigid/rank_matroid.hpp"
#include "dlrigid/rng.hpp"
#include "dlrigid/separations.hpp"

namespace testutil {

using namespace dlrigid;

inline constexpr EdgeKind D = EdgeKind::Direction;
inline constexpr EdgeKind L = EdgeKind::Length;

inline MixedGraph k3plus() { return base_graph(BaseKind::K3Plus); }
inline MixedGraph k3minus() { return base_graph(BaseKind::K3Minus); }

/// K3+ with its direction edge a-b replaced by a direction-pure K4 on
/// {a, b, d, e}: the 2-sum used across the examples.
inline MixedGraph k3plus_sum_dk4() {
    return apply_move(k3plus(), TwoSumPureK4{"a", "b", D, {"d", "e"}});
}

/// Mirror image: K3- 2-summed with a length-pure K4 on its length edge a-b.
inline MixedGraph k3minus_sum_lk4() {
    return apply_move(k3minus(), TwoSumPureK4{"a", "b", L, {"d", "e"}});
}

/// Random typed graph: n vertices, every typed pair present independently
/// with probability per_mille/1000.
inline MixedGraph random_graph(SplitMix64& rng, std::size_t n, std::uint64_t per_mille) {
    std::vector<VertexId> verts;
    for (std::size_t i = 0; i < n; ++i) verts.push_back("g" + std::to_string(i));
    std::vector<std::tuple<VertexId, VertexId, EdgeKind>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (EdgeKind k : {D, L}) {
                if (rng.below(1000) < per_mille) edges.emplace_back(verts[i], verts[j], k);
            }
        }
    }
    return MixedGraph(verts, edges);
}

inline std::vector<Edge> subset_of(const std::vector<Edge>& edges, SplitMix64& rng) {
    std::vector<Edge> out;
    for (const auto& e : edges) {
        if (rng.below(2)) out.push_back(e);
    }
    return out;
}

/// Every circuit of the rigidity matroid by exhaustive subset scan; test-only,
/// |E| small.
inline std::vector<std::vector<Edge>> all_circuits_brute(MatroidView& m) {
    const auto& edges = m.graph().edges();
    std::vector<std::vector<Edge>> out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << edges.size()); ++mask) {
        std::vector<Edge> sub;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if ((mask >> i) & 1) sub.push_back(edges[i]);
        }
        if (m.rank(sub) != sub.size() - 1) continue;
        bool minimal = true;
        for (std::size_t drop = 0; drop < sub.size() && minimal; ++drop) {
            std::vector<Edge> proper;
            for (std::size_t i = 0; i < sub.size(); ++i) {
                if (i != drop) proper.push_back(sub[i]);
            }
            minimal = m.rank(proper) == proper.size();
        }
        if (minimal) out.push_back(sub);
    }
    return out;
}

inline std::set<VertexId> vertex_set(const MixedGraph& g) {
    return {g.vertices().begin(), g.vertices().end()};
}

/// Random legal 1-extension of g, fresh vertex label supplied by counter.
inline MixedGraph random_one_extension(const MixedGraph& g, SplitMix64& rng, int& counter) {
    struct Spec {
        Edge deleted;
        VertexId z;
        std::array<EdgeKind, 3> kinds;
    };
    std::vector<Spec> pool;
    for (const auto& e : g.edges()) {
        for (const auto& z : g.vertices()) {
            for (int c = 0; c < 8; ++c) {
                std::array<EdgeKind, 3> kinds = {c & 1 ? L : D, c & 2 ? L : D, c & 4 ? L : D};
                if (kinds[0] != e.kind && kinds[1] != e.kind && kinds[2] != e.kind) continue;
                if (z == e.u && kinds[2] == kinds[0]) continue;
                if (z == e.v && kinds[2] == kinds[1]) continue;
                pool.push_back({e, z, kinds});
            }
        }
    }
    const Spec& s = pool[rng.index(pool.size())];
    return apply_move(g, OneExtension{"w" + std::to_string(counter++), s.deleted, s.z, s.kinds});
}

/// Mixed circuit grown from K3+/K3- by random 1-extensions.
inline MixedGraph random_mixed_circuit(SplitMix64& rng, int steps) {
    MixedGraph g = rng.below(2) ? k3plus() : k3minus();
    int counter = 3;
    for (int i = 0; i < steps; ++i) g = random_one_extension(g, rng, counter);
    return g;
}

inline bool connected_graph(const MixedGraph& g) { return is_connected(g); }

inline bool edge_connectivity_at_least(const MixedGraph& g, int k) {
    const auto& es = g.edges();
    auto connected_without = [&](const std::vector<std::size_t>& drop) {
        std::vector<std::tuple<VertexId, VertexId, EdgeKind>> kept;
        for (std::size_t i = 0; i < es.size(); ++i) {
            if (std::find(drop.begin(), drop.end(), i) == drop.end()) {
                kept.emplace_back(es[i].u, es[i].v, es[i].kind);
            }
        }
        return connected_graph(MixedGraph(g.vertices(), kept));
    };
    if (!connected_without({})) return false;
    if (k >= 2) {
        for (std::size_t i = 0; i < es.size(); ++i) {
            if (!connected_without({i})) return false;
        }
    }
    if (k >= 3) {
        for (std::size_t i = 0; i < es.size(); ++i) {
            for (std::size_t j = i + 1; j < es.size(); ++j) {
                if (!connected_without({i, j})) return false;
            }
        }
    }
    return true;
}

inline std::set<VertexId> covered_vertices(const std::vector<Edge>& edges) {
    std::set<VertexId> out;
    for (const auto& e : edges) {
        out.insert(e.u);
        out.insert(e.v);
    }
    return out;
}

inline MixedGraph spanned_subgraph(const std::vector<Edge>& edges) {
    auto verts = covered_vertices(edges);
    std::vector<std::tuple<VertexId, VertexId, EdgeKind>> es;
    for (const auto& e : edges) es.emplace_back(e.u, e.v, e.kind);
    return MixedGraph({verts.begin(), verts.end()}, es);
}

/// Mixed-circuit test that scales past the exhaustive oracle: the count
/// classification when small, otherwise edge count 2|V|-1 plus nullity one
/// with a full-support dependency.
inline bool is_mixed_circuit(MatroidView& m, const std::vector<Edge>& circuit) {
    MixedGraph sub = spanned_subgraph(circuit);
    if (sub.num_vertices() <= count_matroid::kMaxExhaustiveVertices) {
        return count_matroid::classify_circuit_by_counts(sub) ==
               count_matroid::CircuitClass::MixedCircuit;
    }
    if (!sub.is_mixed()) return false;
    if (circuit.size() != 2 * sub.num_vertices() - 1) return false;
    if (m.rank(circuit) != circuit.size() - 1) return false;
    auto t = m.analyze(circuit);
    return t.dependents.size() == 1 && t.dependents.front().second.size() == circuit.size();
}

} // namespace testutil

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "dlrigid/errors.hpp"
#include "dlrigid/graph.hpp"
#include "dlrigid/linalg.hpp"
#include "dlrigid/rank_matroid.hpp"

namespace dlrigid {

namespace detail {

inline std::vector<std::size_t> component_roots(const TrackedElimination& t, std::size_t n) {
    UnionFind uf(n);
    for (const auto& [pos, support] : t.dependents) {
        (void)pos;
        for (std::size_t s : support) uf.unite(support.front(), s);
    }
    std::vector<std::size_t> roots(n);
    for (std::size_t i = 0; i < n; ++i) roots[i] = uf.find(i);
    return roots;
}

inline std::vector<Edge> sorted_union(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    std::vector<Edge> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline std::vector<Edge> sorted_minus(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    std::vector<Edge> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

} // namespace detail

/// Classes of the relation e ~ f iff some circuit contains both, computed by
/// union-find over the fundamental circuits of a greedy basis. Classes are
/// ordered by their smallest edge.
inline std::vector<std::vector<Edge>> matroid_components(MatroidView& m) {
    const auto& edges = m.graph().edges();
    if (edges.empty()) return {};
    auto roots = detail::component_roots(m.analyze(edges), edges.size());
    std::map<std::size_t, std::vector<Edge>> classes;
    for (std::size_t i = 0; i < edges.size(); ++i) classes[roots[i]].push_back(edges[i]);
    std::vector<std::vector<Edge>> out;
    std::map<Edge, std::vector<Edge>> by_leader;
    for (auto& [root, cls] : classes) by_leader.emplace(cls.front(), std::move(cls));
    for (auto& [leader, cls] : by_leader) out.push_back(std::move(cls));
    return out;
}

/// Connected and not trivially connected: one class over at least two edges.
inline bool is_m_connected(MatroidView& m) {
    if (m.graph().num_edges() < 2) return false;
    return matroid_components(m).size() == 1;
}

// ---------------------------------------------------------------------------
// Ear decompositions

struct EarDecomposition {
    std::vector<std::vector<Edge>> circuits;   // C_1 .. C_m
    std::vector<std::vector<Edge>> lobes;      // C_i - E_{i-1}
    std::vector<std::vector<Edge>> cumulative; // E_i
    std::vector<std::size_t> ranks;            // r(E_i)
};

namespace detail {

inline bool same_component(MatroidView& m, const std::vector<Edge>& ground, const Edge& e,
                           const Edge& f) {
    auto pos_of = [&](const Edge& x) {
        auto it = std::lower_bound(ground.begin(), ground.end(), x);
        return static_cast<std::size_t>(it - ground.begin());
    };
    auto roots = component_roots(m.analyze(ground), ground.size());
    return roots[pos_of(e)] == roots[pos_of(f)];
}

/// Set-minimal circuit containing both e and f inside `ground`; the caller
/// guarantees one exists. Dropping elements in canonical order while the pair
/// stays in a common circuit leaves exactly that circuit.
inline std::vector<Edge> circuit_through(MatroidView& m, std::vector<Edge> ground,
                                         const Edge& e, const Edge& f) {
    const std::vector<Edge> order = ground;
    for (const auto& g : order) {
        if (g == e || g == f) continue;
        std::vector<Edge> cand;
        cand.reserve(ground.size() - 1);
        for (const auto& h : ground) {
            if (h != g) cand.push_back(h);
        }
        if (same_component(m, cand, e, f)) ground = std::move(cand);
    }
    require(m.rank(ground) == ground.size() - 1, ErrorCode::Internal,
            "pair search did not converge to a circuit");
    return ground;
}

/// Some circuit satisfying E1/E2 against `cum`, found among fundamental
/// circuits of a basis extended from a basis of cum.
inline std::vector<Edge> initial_ear(MatroidView& m, const std::vector<Edge>& all,
                                     const std::vector<Edge>& cum) {
    std::vector<Edge> rest = sorted_minus(all, cum);
    std::vector<Edge> order = cum;
    order.insert(order.end(), rest.begin(), rest.end());
    auto t = m.analyze(order);
    for (const auto& [pos, support] : t.dependents) {
        if (pos < cum.size()) continue;
        bool crosses = false;
        for (std::size_t s : support) crosses |= s < cum.size();
        if (!crosses) continue;
        std::vector<Edge> circuit;
        for (std::size_t s : support) circuit.push_back(order[s]);
        std::sort(circuit.begin(), circuit.end());
        return circuit;
    }
    // Transitive fallback: any old/new pair in a common circuit of the whole
    // matroid will do.
    for (const auto& f : rest) {
        for (const auto& o : cum) {
            if (same_component(m, all, o, f)) return circuit_through(m, all, o, f);
        }
    }
    fail(ErrorCode::Internal, "no ear extends the partial decomposition");
}

/// Shrinks the lobe of `circuit` to inclusion-minimality (E3): while some
/// lobe element g can be dropped -- i.e. E_i + (lobe - g) still carries a
/// circuit meeting both sides -- replace the circuit by one inside that
/// restricted ground set.
inline std::vector<Edge> minimize_lobe(MatroidView& m, const std::vector<Edge>& cum,
                                       std::vector<Edge> circuit) {
    while (true) {
        std::vector<Edge> lobe = sorted_minus(circuit, cum);
        bool improved = false;
        for (const auto& g : lobe) {
            std::vector<Edge> reduced_lobe;
            for (const auto& h : lobe) {
                if (h != g) reduced_lobe.push_back(h);
            }
            if (reduced_lobe.empty()) continue;
            std::vector<Edge> ground = sorted_union(cum, reduced_lobe);
            auto roots = component_roots(m.analyze(ground), ground.size());
            std::map<std::size_t, std::pair<bool, bool>> seen; // root -> (old, new)
            std::size_t found_root = ground.size();
            for (std::size_t i = 0; i < ground.size(); ++i) {
                bool is_old =
                    std::binary_search(cum.begin(), cum.end(), ground[i]);
                auto& flags = seen[roots[i]];
                (is_old ? flags.first : flags.second) = true;
                if (flags.first && flags.second) {
                    found_root = roots[i];
                    break;
                }
            }
            if (found_root == ground.size()) continue;
            Edge const* old_edge = nullptr;
            Edge const* new_edge = nullptr;
            for (std::size_t i = 0; i < ground.size() && !(old_edge && new_edge); ++i) {
                if (roots[i] != found_root) continue;
                bool is_old = std::binary_search(cum.begin(), cum.end(), ground[i]);
                if (is_old && !old_edge) old_edge = &ground[i];
                if (!is_old && !new_edge) new_edge = &ground[i];
            }
            circuit = circuit_through(m, ground, *old_edge, *new_edge);
            improved = true;
            break;
        }
        if (!improved) return circuit;
    }
}

} // namespace detail

/// Ear decomposition of R(G) into mixed circuits (G mixed, M-connected).
/// The first circuit is grown through a direction/length edge pair; later
/// ears are lobe-minimal; a pure ear is exchanged for a mixed circuit with
/// the same lobe through an opposite-type edge of the prefix.
inline EarDecomposition ear_decomposition_mixed(MatroidView& m) {
    const MixedGraph& g = m.graph();
    require(g.is_mixed(), ErrorCode::NotMixed, "ear decomposition needs a mixed graph");
    require(is_m_connected(m), ErrorCode::NotMConnected,
            "ear decomposition needs an M-connected graph");

    const std::vector<Edge>& all = g.edges();
    const Edge* d1 = nullptr;
    const Edge* l1 = nullptr;
    for (const auto& e : all) {
        if (e.kind == EdgeKind::Direction && !d1) d1 = &e;
        if (e.kind == EdgeKind::Length && !l1) l1 = &e;
    }

    EarDecomposition out;
    std::vector<Edge> cum;
    {
        std::vector<Edge> first = detail::circuit_through(m, all, *d1, *l1);
        cum = first;
        out.circuits.push_back(first);
        out.lobes.push_back(std::move(first));
    }
    while (cum.size() < all.size()) {
        std::vector<Edge> circuit = detail::initial_ear(m, all, cum);
        circuit = detail::minimize_lobe(m, cum, circuit);

        bool has_dir = false, has_len = false;
        for (const auto& e : circuit) (e.kind == EdgeKind::Direction ? has_dir : has_len) = true;
        if (!(has_dir && has_len)) {
            EdgeKind pure = circuit.front().kind;
            const Edge* opposite = nullptr;
            for (const auto& e : cum) {
                if (e.kind == other_kind(pure)) {
                    opposite = &e;
                    break;
                }
            }
            std::vector<Edge> lobe = detail::sorted_minus(circuit, cum);
            std::vector<Edge> ground = detail::sorted_union(cum, lobe);
            std::vector<Edge> mixed =
                detail::circuit_through(m, ground, *opposite, lobe.front());
            require(detail::sorted_minus(mixed, cum) == lobe, ErrorCode::Internal,
                    "mixed-circuit exchange changed the lobe");
            circuit = std::move(mixed);
        }

        out.lobes.push_back(detail::sorted_minus(circuit, cum));
        out.circuits.push_back(circuit);
        cum = detail::sorted_union(cum, circuit);
    }
    {
        std::vector<Edge> run;
        for (std::size_t i = 0; i < out.circuits.size(); ++i) {
            run = detail::sorted_union(run, out.circuits[i]);
            out.cumulative.push_back(run);
            out.ranks.push_back(m.rank(run));
        }
    }
    return out;
}

/// New-vertex set of ear i (vertices of C_i not touched by earlier circuits).
inline std::set<VertexId> ear_new_vertices(const EarDecomposition& d, std::size_t i) {
    std::set<VertexId> seen;
    for (std::size_t j = 0; j < i; ++j) {
        for (const auto& e : d.circuits[j]) {
            seen.insert(e.u);
            seen.insert(e.v);
        }
    }
    std::set<VertexId> fresh;
    for (const auto& e : d.circuits[i]) {
        if (!seen.count(e.u)) fresh.insert(e.u);
        if (!seen.count(e.v)) fresh.insert(e.v);
    }
    return fresh;
}

} // namespace dlrigid

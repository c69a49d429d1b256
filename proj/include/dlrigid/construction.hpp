#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dlrigid/errors.hpp"
#include "dlrigid/graph.hpp"
#include "dlrigid/matroid_structure.hpp"
#include "dlrigid/rank_matroid.hpp"
#include "dlrigid/rng.hpp"
#include "dlrigid/separations.hpp"

namespace dlrigid {

enum class ConstructionMode { MConnOnly, DirectionBalanced };

inline const char* mode_name(ConstructionMode m) {
    return m == ConstructionMode::MConnOnly ? "mconn" : "dbal";
}

/// Replayable construction from K3+ or K3- by edge additions, 1-extensions
/// and 2-sums with pure K4s (direction-pure only in DirectionBalanced mode).
struct ConstructionCertificate {
    BaseKind base = BaseKind::K3Plus;
    std::array<VertexId, 3> base_labels = {"a", "b", "c"};
    ConstructionMode mode = ConstructionMode::DirectionBalanced;
    std::vector<Move> moves;
};

inline MixedGraph replay(const ConstructionCertificate& cert) {
    MixedGraph g = base_graph(cert.base, cert.base_labels);
    for (std::size_t i = 0; i < cert.moves.size(); ++i) {
        if (std::holds_alternative<ZeroExtension>(cert.moves[i])) {
            fail(ErrorCode::ReplayPreconditionFailure,
                 "move " + std::to_string(i) + ": 0-extensions do not appear in certificates");
        }
        if (cert.mode == ConstructionMode::DirectionBalanced) {
            if (const auto* ts = std::get_if<TwoSumPureK4>(&cert.moves[i])) {
                require(ts->kind == EdgeKind::Direction, ErrorCode::ReplayPreconditionFailure,
                        "move " + std::to_string(i) +
                            ": only direction-pure K4 2-sums are allowed in dbal mode");
            }
        }
        try {
            g = apply_move(g, cert.moves[i]);
        } catch (const Error& e) {
            fail(ErrorCode::ReplayPreconditionFailure,
                 "move " + std::to_string(i) + ": " + e.what());
        }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Admissibility

struct ReductionSpec {
    VertexId v;
    VertexId x;
    VertexId y;
    EdgeKind kind;
};

struct EdgeDeletion {
    Edge edge;
};

using InverseMove = std::variant<EdgeDeletion, ReductionSpec>;

namespace detail {

inline bool m_connected_graph(const MixedGraph& g, const MatroidView& like) {
    MatroidView view(g, like.seed(), like.trials(), like.primes());
    return is_m_connected(view);
}

inline bool result_admissible(const MixedGraph& g, const MatroidView& like) {
    return g.is_mixed() && m_connected_graph(g, like);
}

inline bool result_feasible(const MixedGraph& g, const MatroidView& like) {
    return result_admissible(g, like) && is_direction_balanced(g);
}

/// Legal 1-reductions at a node: distinct neighbour pairs, both kinds unless
/// the node is pure, skipping pairs already joined by the same kind.
inline std::vector<ReductionSpec> legal_reductions(const MixedGraph& g, const VertexId& v) {
    auto incident = g.edges_at(v);
    bool pure = true;
    for (const auto& e : incident) pure &= e.kind == incident.front().kind;
    std::vector<VertexId> nbrs = g.neighbours(v);
    std::vector<ReductionSpec> out;
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            for (EdgeKind kind : {EdgeKind::Direction, EdgeKind::Length}) {
                if (pure && kind != incident.front().kind) continue;
                if (g.has_edge(nbrs[i], nbrs[j], kind)) continue;
                out.push_back({v, nbrs[i], nbrs[j], kind});
            }
        }
    }
    return out;
}

/// Forward 1-extension that rebuilds `g` from one_reduction(g, spec).
inline OneExtension forward_extension(const MixedGraph& g, const ReductionSpec& spec) {
    Edge deleted(spec.x, spec.y, spec.kind);
    auto incident = g.edges_at(spec.v); // exactly three, canonical order
    std::vector<bool> used(incident.size(), false);
    auto take = [&](const VertexId& to) {
        for (std::size_t i = 0; i < incident.size(); ++i) {
            if (!used[i] && incident[i].opposite(spec.v) == to) {
                used[i] = true;
                return incident[i].kind;
            }
        }
        fail(ErrorCode::Internal, "reduction endpoints not adjacent to node");
    };
    EdgeKind ku = take(deleted.u);
    EdgeKind kv = take(deleted.v);
    for (std::size_t i = 0; i < incident.size(); ++i) {
        if (!used[i]) {
            return OneExtension{spec.v, deleted, incident[i].opposite(spec.v),
                                {ku, kv, incident[i].kind}};
        }
    }
    fail(ErrorCode::Internal, "node does not have three incident edges");
}

} // namespace detail

/// Labeled match against the two base templates (3!-permutation check, done
/// structurally): the middle label is the vertex on both doubled pairs.
inline std::optional<std::pair<BaseKind, std::array<VertexId, 3>>> match_base(
    const MixedGraph& g) {
    if (g.num_vertices() != 3 || g.num_edges() != 5) return std::nullopt;
    std::size_t dirs = g.num_direction();
    BaseKind kind;
    EdgeKind doubled;
    if (dirs == 2) {
        kind = BaseKind::K3Plus;
        doubled = EdgeKind::Direction;
    } else if (dirs == 3) {
        kind = BaseKind::K3Minus;
        doubled = EdgeKind::Length;
    } else {
        return std::nullopt;
    }
    std::vector<Edge> extra;
    for (const auto& e : g.edges()) {
        if (e.kind == doubled) extra.push_back(e);
    }
    if (extra.size() != 2) return std::nullopt;
    // the two doubled pairs share exactly one vertex: the middle label
    VertexId mid;
    if (extra[0].u == extra[1].u || extra[0].u == extra[1].v) {
        mid = extra[0].u;
    } else if (extra[0].v == extra[1].u || extra[0].v == extra[1].v) {
        mid = extra[0].v;
    } else {
        return std::nullopt;
    }
    std::vector<VertexId> outer;
    for (const auto& v : g.vertices()) {
        if (v != mid) outer.push_back(v);
    }
    std::array<VertexId, 3> labels = {outer[0], mid, outer[1]};
    if (base_graph(kind, labels) != g) return std::nullopt;
    return std::make_pair(kind, labels);
}

/// Edges whose deletion keeps the graph mixed and M-connected.
inline std::vector<Edge> admissible_edges(MatroidView& m) {
    const MixedGraph& g = m.graph();
    require(g.is_mixed(), ErrorCode::NotMixed, "admissibility is defined for mixed graphs");
    require(is_m_connected(m), ErrorCode::NotMConnected, "graph is not M-connected");
    std::vector<Edge> out;
    for (const auto& e : g.edges()) {
        if (detail::result_admissible(g.without_edge(e), m)) out.push_back(e);
    }
    return out;
}

/// Admissible 1-reductions at the node v.
inline std::vector<ReductionSpec> admissible_reductions(MatroidView& m, const VertexId& v) {
    const MixedGraph& g = m.graph();
    require(g.has_vertex(v) && is_node(g, v), ErrorCode::NotANode,
            v + " is not a node (degree-3 vertex)");
    std::vector<ReductionSpec> out;
    for (const auto& spec : detail::legal_reductions(g, v)) {
        MixedGraph reduced = one_reduction(g, spec.v, spec.x, spec.y, spec.kind);
        if (detail::result_admissible(reduced, m)) out.push_back(spec);
    }
    return out;
}

/// Admissible moves that additionally keep the graph direction-balanced:
/// edge deletions first, then 1-reductions, both in canonical order.
inline std::vector<InverseMove> feasible_moves(MatroidView& m) {
    const MixedGraph& g = m.graph();
    require(g.is_mixed(), ErrorCode::NotMixed, "feasibility is defined for mixed graphs");
    require(is_m_connected(m), ErrorCode::NotMConnected, "graph is not M-connected");
    require(is_direction_balanced(g), ErrorCode::NotDirectionBalanced,
            "graph is not direction-balanced");
    std::vector<InverseMove> out;
    for (const auto& e : g.edges()) {
        if (detail::result_feasible(g.without_edge(e), m)) out.push_back(EdgeDeletion{e});
    }
    for (const auto& v : g.vertices()) {
        if (!is_node(g, v)) continue;
        for (const auto& spec : detail::legal_reductions(g, v)) {
            MixedGraph reduced = one_reduction(g, spec.v, spec.x, spec.y, spec.kind);
            if (detail::result_feasible(reduced, m)) out.push_back(spec);
        }
    }
    return out;
}

/// Peels G down to K3+ or K3- by feasible (admissible in MConnOnly mode)
/// edge deletions and 1-reductions, and pure-K4 2-cleaves; emits the forward
/// move sequence. Direction-balanced M-connected mixed graphs always admit a
/// next move; running out raises TheoremViolation.
inline ConstructionCertificate decompose(MatroidView& m, ConstructionMode mode) {
    const bool balanced_mode = mode == ConstructionMode::DirectionBalanced;
    MixedGraph work = m.graph();
    require(work.is_mixed(), ErrorCode::PreconditionViolated,
            "decompose needs a mixed graph");
    require(is_m_connected(m), ErrorCode::PreconditionViolated,
            "decompose needs an M-connected graph");
    if (balanced_mode) {
        require(is_direction_balanced(work), ErrorCode::PreconditionViolated,
                "decompose(dbal) needs a direction-balanced graph");
    }

    auto ok = [&](const MixedGraph& g2) {
        return balanced_mode ? detail::result_feasible(g2, m)
                             : detail::result_admissible(g2, m);
    };

    ConstructionCertificate cert;
    cert.mode = mode;
    std::vector<Move> reversed;

    while (true) {
        if (auto base = match_base(work)) {
            cert.base = base->first;
            cert.base_labels = base->second;
            break;
        }

        bool moved = false;
        for (const auto& e : work.edges()) {
            MixedGraph g2 = work.without_edge(e);
            if (!ok(g2)) continue;
            reversed.push_back(EdgeAddition{e});
            work = std::move(g2);
            moved = true;
            break;
        }
        if (moved) continue;

        for (const auto& v : work.vertices()) {
            if (!is_node(work, v)) continue;
            for (const auto& spec : detail::legal_reductions(work, v)) {
                MixedGraph g2 = one_reduction(work, spec.v, spec.x, spec.y, spec.kind);
                if (!ok(g2)) continue;
                reversed.push_back(detail::forward_extension(work, spec));
                work = std::move(g2);
                moved = true;
                break;
            }
            if (moved) break;
        }
        if (moved) continue;

        std::optional<CleaveSpot> spot = find_pure_k4_cleave(work, EdgeKind::Direction);
        if (!spot && !balanced_mode) spot = find_pure_k4_cleave(work, EdgeKind::Length);
        if (spot) {
            auto [rest, k4] = two_cleave(work, spot->x, spot->y, spot->side);
            (void)k4;
            auto it = spot->side.begin();
            VertexId n1 = *it++;
            VertexId n2 = *it;
            reversed.push_back(TwoSumPureK4{spot->x, spot->y, spot->kind, {n1, n2}});
            work = std::move(rest);
            continue;
        }

        fail(ErrorCode::TheoremViolation,
             "no feasible move, no admissible move, no pure-K4 cleave on " +
                 std::to_string(work.num_vertices()) + " vertices");
    }

    cert.moves.assign(reversed.rbegin(), reversed.rend());
    return cert;
}

/// Random forward construction: base K3+/K3- plus nMoves moves sampled
/// uniformly (kind first, then instance), each legal at its step.
/// Deterministic in the seed. DirectionBalanced mode 2-sums only on
/// direction edges.
inline std::pair<MixedGraph, ConstructionCertificate> random_construct(
    std::uint64_t seed, int n_moves, ConstructionMode mode) {
    require(n_moves >= 0, ErrorCode::PreconditionViolated, "nMoves must be >= 0");
    SplitMix64 rng(seed);

    ConstructionCertificate cert;
    cert.mode = mode;
    cert.base = rng.below(2) == 0 ? BaseKind::K3Plus : BaseKind::K3Minus;
    cert.base_labels = {"a", "b", "c"};
    MixedGraph work = base_graph(cert.base, cert.base_labels);
    int label_counter = 3;
    auto fresh = [&label_counter] { return "v" + std::to_string(label_counter++); };

    for (int step = 0; step < n_moves; ++step) {
        std::vector<Edge> additions;
        const auto& vs = work.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                for (EdgeKind k : {EdgeKind::Direction, EdgeKind::Length}) {
                    if (!work.has_edge(vs[i], vs[j], k)) additions.emplace_back(vs[i], vs[j], k);
                }
            }
        }

        struct ExtSpec {
            Edge deleted;
            VertexId z;
            std::array<EdgeKind, 3> kinds;
        };
        std::vector<ExtSpec> extensions;
        for (const auto& e : work.edges()) {
            for (const auto& z : vs) {
                for (int c = 0; c < 8; ++c) {
                    std::array<EdgeKind, 3> kinds = {
                        c & 1 ? EdgeKind::Length : EdgeKind::Direction,
                        c & 2 ? EdgeKind::Length : EdgeKind::Direction,
                        c & 4 ? EdgeKind::Length : EdgeKind::Direction};
                    if (kinds[0] != e.kind && kinds[1] != e.kind && kinds[2] != e.kind) continue;
                    if (z == e.u && kinds[2] == kinds[0]) continue;
                    if (z == e.v && kinds[2] == kinds[1]) continue;
                    extensions.push_back({e, z, kinds});
                }
            }
        }

        std::vector<Edge> sum_edges;
        for (const auto& e : work.edges()) {
            if (mode == ConstructionMode::DirectionBalanced && e.kind != EdgeKind::Direction) {
                continue;
            }
            sum_edges.push_back(e);
        }

        std::vector<int> kinds_avail;
        if (!additions.empty()) kinds_avail.push_back(0);
        if (!extensions.empty()) kinds_avail.push_back(1);
        if (!sum_edges.empty()) kinds_avail.push_back(2);
        int pick = kinds_avail[rng.index(kinds_avail.size())];

        Move move = [&]() -> Move {
            if (pick == 0) return EdgeAddition{additions[rng.index(additions.size())]};
            if (pick == 1) {
                const ExtSpec& s = extensions[rng.index(extensions.size())];
                return OneExtension{fresh(), s.deleted, s.z, s.kinds};
            }
            const Edge& e = sum_edges[rng.index(sum_edges.size())];
            return TwoSumPureK4{e.u, e.v, e.kind, {fresh(), fresh()}};
        }();
        work = apply_move(work, move);
        cert.moves.push_back(std::move(move));
    }
    return {std::move(work), std::move(cert)};
}

} // namespace dlrigid

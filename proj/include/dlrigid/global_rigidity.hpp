#pragma once

#include <optional>
#include <set>
#include <vector>

#include "dlrigid/errors.hpp"
#include "dlrigid/graph.hpp"
#include "dlrigid/matroid_structure.hpp"
#include "dlrigid/rank_matroid.hpp"
#include "dlrigid/realisation.hpp"
#include "dlrigid/separations.hpp"

namespace dlrigid {

/// The checkable necessary conditions for generic global rigidity.
/// Boundedness of direction-edge deletions (the last known necessary
/// condition) is reported as not evaluated rather than silently skipped.
struct NecessaryConditionsReport {
    bool mixed = false;
    bool rigid = false;
    bool two_connected = false;
    bool direction_balanced = false;
    bool two_edge_cuts_ok = false;
    bool length_redundant_ok = false;
    static constexpr const char* condition_seven_status = "NotEvaluated";
};

namespace detail {

inline bool disconnected_without_edges(const MixedGraph& g, const Edge& a,
                                       const std::optional<Edge>& b) {
    MixedGraph h = g.without_edge(a);
    if (b) h = h.without_edge(*b);
    return !is_connected(h);
}

} // namespace detail

/// Minimal 2-edge-cuts only: pairs that disconnect while neither edge is a
/// bridge. Acceptable cuts are two direction edges at a shared degree-2
/// vertex.
inline bool two_edge_cuts_acceptable(const MixedGraph& g) {
    const auto& es = g.edges();
    std::vector<bool> bridge(es.size());
    for (std::size_t i = 0; i < es.size(); ++i) {
        bridge[i] = detail::disconnected_without_edges(g, es[i], std::nullopt);
    }
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (bridge[i]) continue;
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            if (bridge[j]) continue;
            if (!detail::disconnected_without_edges(g, es[i], es[j])) continue;
            if (es[i].kind != EdgeKind::Direction || es[j].kind != EdgeKind::Direction) {
                return false;
            }
            VertexId common;
            if (es[j].touches(es[i].u)) {
                common = es[i].u;
            } else if (es[j].touches(es[i].v)) {
                common = es[i].v;
            } else {
                return false;
            }
            if (g.degree(common) != 2) return false;
        }
    }
    return true;
}

inline NecessaryConditionsReport necessary_conditions(const MixedGraph& g, MatroidView& m) {
    require(g.num_vertices() >= 3, ErrorCode::TooFewVertices,
            "necessary conditions need at least three vertices");
    NecessaryConditionsReport r;
    r.mixed = g.is_mixed();
    r.rigid = m.rank_all() == 2 * g.num_vertices() - 2;
    r.two_connected = is_k_connected(g, 2);
    r.direction_balanced = r.two_connected && is_direction_balanced(g);
    r.two_edge_cuts_ok = two_edge_cuts_acceptable(g);
    if (g.num_length() < 2) {
        r.length_redundant_ok = true;
    } else {
        r.length_redundant_ok = true;
        for (const auto& e : g.edges()) {
            if (e.kind != EdgeKind::Length) continue;
            std::vector<Edge> rest;
            for (const auto& f : g.edges()) {
                if (f != e) rest.push_back(f);
            }
            if (m.rank(rest) != 2 * g.num_vertices() - 2) {
                r.length_redundant_ok = false;
                break;
            }
        }
    }
    return r;
}

/// Main verdict: an M-connected mixed graph is generically globally rigid
/// exactly when it is direction-balanced.
inline bool is_globally_rigid_mconn(const MixedGraph& g, MatroidView& m) {
    require(g.is_mixed(), ErrorCode::OutOfTheoremScope,
            "verdict only applies to mixed graphs");
    require(is_m_connected(m), ErrorCode::OutOfTheoremScope,
            "verdict only applies to M-connected graphs");
    return is_direction_balanced(g);
}

/// With a single length edge, global rigidity reduces to rigidity.
inline bool single_length_edge_verdict(const MixedGraph& g, MatroidView& m) {
    require(g.num_length() == 1, ErrorCode::NotSingleLengthEdge,
            "verdict needs exactly one length edge");
    return m.rank_all() == 2 * g.num_vertices() - 2;
}

struct Witness {
    RealisationQ q;
    TwoSeparation separation;
};

/// Equivalent, non-congruent realisation for a graph with a direction-free
/// 2-separation side: the side's interior is reflected across the line
/// through the cut's points. Exact-rational arithmetic throughout.
inline Witness build_witness(const MixedGraph& g, const RealisationQ& p) {
    auto seps = two_separations(g);
    const TwoSeparation* chosen = nullptr;
    const std::vector<VertexId>* side = nullptr;
    for (const auto& s : seps) {
        std::set<VertexId> in_a(s.side_a.begin(), s.side_a.end());
        std::set<VertexId> in_b(s.side_b.begin(), s.side_b.end());
        bool dir_a = false, dir_b = false;
        for (const auto& e : g.edges()) {
            if (e.kind != EdgeKind::Direction) continue;
            dir_a |= in_a.count(e.u) || in_a.count(e.v);
            dir_b |= in_b.count(e.u) || in_b.count(e.v);
        }
        if (!dir_a) {
            chosen = &s;
            side = &s.side_a;
            break;
        }
        if (!dir_b) {
            chosen = &s;
            side = &s.side_b;
            break;
        }
    }
    require(chosen != nullptr, ErrorCode::NoUnbalancedSeparation,
            "every 2-separation has direction edges on both sides");
    for (const auto& v : g.vertices()) {
        require(p.count(v), ErrorCode::PreconditionViolated,
                "realisation misses vertex " + v);
    }
    const Vec2<BigRational>& a = p.at(chosen->x);
    const Vec2<BigRational>& b = p.at(chosen->y);
    Vec2<BigRational> d = b - a;
    BigRational n2 = sq_norm(d);
    require(!n2.is_zero(), ErrorCode::DegenerateCutLine,
            "cut vertices realised at the same point");

    // reflection across the line through a with direction d
    BigRational rxx = (d.x * d.x - d.y * d.y) / n2;
    BigRational rxy = (BigRational(2) * d.x * d.y) / n2;

    Witness w;
    w.separation = *chosen;
    w.q = p;
    for (const auto& v : *side) {
        Vec2<BigRational> rel = p.at(v) - a;
        Vec2<BigRational> ref{rxx * rel.x + rxy * rel.y, rxy * rel.x - rxx * rel.y};
        w.q[v] = a + ref;
    }
    return w;
}

} // namespace dlrigid

#pragma once

#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "dlrigid/errors.hpp"
#include "dlrigid/graph.hpp"

namespace dlrigid {

/// Ground-truth oracle for small instances: independence and circuit tests by
/// exhaustive verification of the sparsity counts
///   i(X) <= 2|X|-2,  i_D(X) <= 2|X|-3,  i_L(X) <= 2|X|-3.
namespace count_matroid {

inline constexpr std::size_t kMaxExhaustiveVertices = 14;

struct CountProfile {
    std::set<VertexId> subset;
    std::size_t total = 0;
    std::size_t direction = 0;
    std::size_t length = 0;
};

enum class CriticalKind { NotCritical, MixedCritical, DirectionCritical, LengthCritical };

enum class CircuitClass { MixedCircuit, PureCircuit, NotACircuit };

namespace detail {

struct Scanner {
    explicit Scanner(const MixedGraph& g) : verts(g.vertices()) {
        require(verts.size() <= kMaxExhaustiveVertices,
                ErrorCode::TooLargeForExhaustiveOracle,
                "exhaustive count oracle capped at 14 vertices");
        adj_dir.assign(verts.size(), 0);
        adj_len.assign(verts.size(), 0);
        for (const auto& e : g.edges()) {
            std::size_t iu = index_of(e.u), iv = index_of(e.v);
            auto& adj = e.kind == EdgeKind::Direction ? adj_dir : adj_len;
            adj[iu] |= std::uint32_t{1} << iv;
            adj[iv] |= std::uint32_t{1} << iu;
        }
    }

    std::size_t index_of(const VertexId& v) const {
        return static_cast<std::size_t>(
            std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    }

    /// Visits every nonempty subset in Gray-code order with incrementally
    /// maintained counts; `visit(mask, size, iD, iL)` returning false stops.
    template <class Visit>
    bool scan(Visit&& visit) const {
        const std::size_t n = verts.size();
        std::uint32_t cur = 0;
        std::size_t dir = 0, len = 0;
        for (std::uint64_t k = 1; k < (std::uint64_t{1} << n); ++k) {
            std::uint32_t gray = static_cast<std::uint32_t>(k ^ (k >> 1));
            std::uint32_t flipped = gray ^ cur;
            std::size_t v = static_cast<std::size_t>(std::countr_zero(flipped));
            if (gray & flipped) {
                dir += std::popcount(adj_dir[v] & cur);
                len += std::popcount(adj_len[v] & cur);
                cur = gray;
            } else {
                cur = gray;
                dir -= std::popcount(adj_dir[v] & cur);
                len -= std::popcount(adj_len[v] & cur);
            }
            if (!visit(cur, static_cast<std::size_t>(std::popcount(cur)), dir, len)) {
                return false;
            }
        }
        return true;
    }

    std::vector<VertexId> verts;
    std::vector<std::uint32_t> adj_dir;
    std::vector<std::uint32_t> adj_len;
};

} // namespace detail

inline CountProfile count_profile(const MixedGraph& g, const std::set<VertexId>& x) {
    CountProfile p;
    p.subset = x;
    for (const auto& e : g.edges()) {
        if (x.count(e.u) && x.count(e.v)) {
            ++p.total;
            ++(e.kind == EdgeKind::Direction ? p.direction : p.length);
        }
    }
    return p;
}

/// Number of edges between X-Y and Y-X.
inline std::size_t d_between(const MixedGraph& g, const std::set<VertexId>& x,
                             const std::set<VertexId>& y) {
    std::size_t n = 0;
    for (const auto& e : g.edges()) {
        bool u_xy = x.count(e.u) && !y.count(e.u), v_xy = x.count(e.v) && !y.count(e.v);
        bool u_yx = y.count(e.u) && !x.count(e.u), v_yx = y.count(e.v) && !x.count(e.v);
        if ((u_xy && v_yx) || (u_yx && v_xy)) ++n;
    }
    return n;
}

inline std::set<VertexId> set_minus(const std::set<VertexId>& a, const std::set<VertexId>& b) {
    std::set<VertexId> out;
    for (const auto& v : a) {
        if (!b.count(v)) out.insert(v);
    }
    return out;
}

inline std::size_t d_between3(const MixedGraph& g, const std::set<VertexId>& x,
                              const std::set<VertexId>& y, const std::set<VertexId>& z) {
    return d_between(g, x, set_minus(y, z)) + d_between(g, y, set_minus(z, x)) +
           d_between(g, z, set_minus(x, y));
}

inline bool count_independent(const MixedGraph& g) {
    if (g.num_vertices() < 2) return true;
    detail::Scanner s(g);
    return s.scan([](std::uint32_t, std::size_t size, std::size_t dir, std::size_t len) {
        if (size < 2) return true;
        if (dir + len > 2 * size - 2) return false;
        if (dir > 2 * size - 3 || len > 2 * size - 3) return false;
        return true;
    });
}

inline CircuitClass classify_circuit_by_counts(const MixedGraph& g) {
    const std::size_t n = g.num_vertices();
    const std::size_t m = g.num_edges();
    if (n < 3 || m == 0) return CircuitClass::NotACircuit;
    const bool pure = !g.is_mixed();

    bool mixed_counts_ok = true; // i(X)<=2|X|-2 proper, pure counts everywhere
    bool pure_counts_ok = true;  // i(X)<=2|X|-3 proper
    detail::Scanner s(g);
    const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    s.scan([&](std::uint32_t mask, std::size_t size, std::size_t dir, std::size_t len) {
        if (size < 2) return true;
        if (dir > 2 * size - 3 || len > 2 * size - 3) mixed_counts_ok = false;
        if (mask != full) {
            if (dir + len > 2 * size - 2) mixed_counts_ok = false;
            if (dir + len > 2 * size - 3) pure_counts_ok = false;
        }
        return mixed_counts_ok || pure_counts_ok;
    });

    if (!pure && m == 2 * n - 1 && mixed_counts_ok) return CircuitClass::MixedCircuit;
    if (pure && m == 2 * n - 2 && pure_counts_ok) return CircuitClass::PureCircuit;
    return CircuitClass::NotACircuit;
}

inline CriticalKind critical_kind(const MixedGraph& g, const std::set<VertexId>& x) {
    require(x.size() >= 2, ErrorCode::SubsetTooSmall, "critical sets need >= 2 vertices");
    for (const auto& v : x) {
        require(g.has_vertex(v), ErrorCode::PreconditionViolated,
                "subset vertex " + v + " not in graph");
    }
    if (!count_independent(g.induced(x))) return CriticalKind::NotCritical;
    CountProfile p = count_profile(g, x);
    if (p.total == 2 * x.size() - 2) return CriticalKind::MixedCritical;
    if (p.total == 2 * x.size() - 3) {
        if (p.length == 0) return CriticalKind::DirectionCritical;
        if (p.direction == 0) return CriticalKind::LengthCritical;
    }
    return CriticalKind::NotCritical;
}

/// Independence of an edge subset: only the subgraph it spans matters.
inline bool independent_by_counts(const std::vector<Edge>& edges) {
    std::set<VertexId> covered;
    std::vector<std::tuple<VertexId, VertexId, EdgeKind>> es;
    for (const auto& e : edges) {
        covered.insert(e.u);
        covered.insert(e.v);
        es.emplace_back(e.u, e.v, e.kind);
    }
    return count_independent(MixedGraph({covered.begin(), covered.end()}, es));
}

/// Greedy matroid rank over the count oracle.
inline std::size_t rank_by_counts(const std::vector<Edge>& edges) {
    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Edge> picked;
    for (const auto& e : sorted) {
        picked.push_back(e);
        if (!independent_by_counts(picked)) picked.pop_back();
    }
    return picked.size();
}

} // namespace count_matroid
} // namespace dlrigid

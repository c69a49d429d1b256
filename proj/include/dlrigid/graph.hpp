#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "dlrigid/errors.hpp"

namespace dlrigid {

using VertexId = std::string;

/// Direction orders before Length everywhere; iteration order downstream
/// depends on this.
enum class EdgeKind { Direction = 0, Length = 1 };

inline EdgeKind other_kind(EdgeKind k) {
    return k == EdgeKind::Direction ? EdgeKind::Length : EdgeKind::Direction;
}

inline const char* kind_name(EdgeKind k) {
    return k == EdgeKind::Direction ? "direction" : "length";
}

/// Undirected typed edge with normalized endpoints (u < v).
struct Edge {
    VertexId u;
    VertexId v;
    EdgeKind kind;

    Edge(VertexId a, VertexId b, EdgeKind k) : kind(k) {
        require(a != b, ErrorCode::LoopEdge, "loop edge at vertex " + a);
        if (b < a) std::swap(a, b);
        u = std::move(a);
        v = std::move(b);
    }

    bool touches(const VertexId& w) const { return u == w || v == w; }

    VertexId opposite(const VertexId& w) const { return u == w ? v : u; }

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.u == b.u && a.v == b.v && a.kind == b.kind;
    }
    friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
    friend bool operator<(const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v, a.kind) < std::tie(b.u, b.v, b.kind);
    }

    std::string to_string() const {
        return u + "-" + v + "(" + kind_name(kind) + ")";
    }
};

enum class NodeClass { NotNode, LeafNode, SeriesNode, BranchingNode };

enum class BaseKind { K3Plus, K3Minus };

inline const char* base_kind_name(BaseKind b) {
    return b == BaseKind::K3Plus ? "K3Plus" : "K3Minus";
}

/// Loop-free direction-length multigraph: at most one edge of each kind per
/// vertex pair. Immutable value; all operations return new graphs.
class MixedGraph {
public:
    MixedGraph() = default;

    MixedGraph(std::vector<VertexId> vertices,
               const std::vector<std::tuple<VertexId, VertexId, EdgeKind>>& edges) {
        std::sort(vertices.begin(), vertices.end());
        for (std::size_t i = 1; i < vertices.size(); ++i) {
            require(vertices[i] != vertices[i - 1], ErrorCode::DuplicateLabel,
                    "duplicate vertex label " + vertices[i]);
        }
        vertices_ = std::move(vertices);
        for (const auto& [u, v, k] : edges) {
            Edge e(u, v, k);
            require(has_vertex(e.u), ErrorCode::DanglingEndpoint,
                    "edge endpoint " + e.u + " not declared");
            require(has_vertex(e.v), ErrorCode::DanglingEndpoint,
                    "edge endpoint " + e.v + " not declared");
            edges_.push_back(std::move(e));
        }
        std::sort(edges_.begin(), edges_.end());
        for (std::size_t i = 1; i < edges_.size(); ++i) {
            require(edges_[i] != edges_[i - 1], ErrorCode::DuplicateTypedEdge,
                    "repeated " + edges_[i].to_string());
        }
    }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    std::size_t num_of_kind(EdgeKind k) const {
        std::size_t n = 0;
        for (const auto& e : edges_) n += e.kind == k;
        return n;
    }
    std::size_t num_direction() const { return num_of_kind(EdgeKind::Direction); }
    std::size_t num_length() const { return num_of_kind(EdgeKind::Length); }

    bool is_mixed() const { return num_direction() > 0 && num_length() > 0; }
    bool is_pure(EdgeKind k) const {
        return !edges_.empty() && num_of_kind(other_kind(k)) == 0;
    }

    bool has_vertex(const VertexId& v) const {
        return std::binary_search(vertices_.begin(), vertices_.end(), v);
    }

    bool has_edge(const VertexId& a, const VertexId& b, EdgeKind k) const {
        if (a == b) return false;
        Edge e(a, b, k);
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    bool has_any_edge(const VertexId& a, const VertexId& b) const {
        return has_edge(a, b, EdgeKind::Direction) || has_edge(a, b, EdgeKind::Length);
    }

    // Degree counts multi-edges.
    std::size_t degree(const VertexId& v) const {
        std::size_t d = 0;
        for (const auto& e : edges_) d += e.touches(v);
        return d;
    }

    std::vector<VertexId> neighbours(const VertexId& v) const {
        std::set<VertexId> out;
        for (const auto& e : edges_) {
            if (e.touches(v)) out.insert(e.opposite(v));
        }
        return {out.begin(), out.end()};
    }

    std::vector<Edge> edges_at(const VertexId& v) const {
        std::vector<Edge> out;
        for (const auto& e : edges_) {
            if (e.touches(v)) out.push_back(e);
        }
        return out;
    }

    MixedGraph with_edge(const Edge& e) const {
        require(has_vertex(e.u) && has_vertex(e.v), ErrorCode::DanglingEndpoint,
                "edge endpoint not in graph: " + e.to_string());
        require(!has_edge(e.u, e.v, e.kind), ErrorCode::EdgeAlreadyPresent,
                e.to_string() + " already present");
        MixedGraph g = *this;
        g.edges_.insert(std::upper_bound(g.edges_.begin(), g.edges_.end(), e), e);
        return g;
    }

    MixedGraph without_edge(const Edge& e) const {
        MixedGraph g = *this;
        auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), e);
        require(it != g.edges_.end() && *it == e, ErrorCode::PreconditionViolated,
                e.to_string() + " not present");
        g.edges_.erase(it);
        return g;
    }

    MixedGraph with_vertex(const VertexId& v) const {
        require(!has_vertex(v), ErrorCode::DuplicateLabel, "vertex " + v + " already present");
        MixedGraph g = *this;
        g.vertices_.insert(std::upper_bound(g.vertices_.begin(), g.vertices_.end(), v), v);
        return g;
    }

    /// Removes v together with all incident edges.
    MixedGraph without_vertex(const VertexId& v) const {
        require(has_vertex(v), ErrorCode::PreconditionViolated, "vertex " + v + " not present");
        MixedGraph g;
        for (const auto& w : vertices_) {
            if (w != v) g.vertices_.push_back(w);
        }
        for (const auto& e : edges_) {
            if (!e.touches(v)) g.edges_.push_back(e);
        }
        return g;
    }

    /// Subgraph induced by a vertex subset.
    MixedGraph induced(const std::set<VertexId>& keep) const {
        MixedGraph g;
        for (const auto& w : vertices_) {
            if (keep.count(w)) g.vertices_.push_back(w);
        }
        for (const auto& e : edges_) {
            if (keep.count(e.u) && keep.count(e.v)) g.edges_.push_back(e);
        }
        return g;
    }

    friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }
    friend bool operator!=(const MixedGraph& a, const MixedGraph& b) { return !(a == b); }

private:
    std::vector<VertexId> vertices_; // sorted
    std::vector<Edge> edges_;        // sorted, canonical order
};

/// K3+ (length triangle plus two direction edges) or K3- (the mirror image).
/// The doubled pairs are (l0,l1) and (l1,l2).
inline MixedGraph base_graph(BaseKind which,
                             const std::array<VertexId, 3>& labels = {"a", "b", "c"}) {
    EdgeKind tri = which == BaseKind::K3Plus ? EdgeKind::Length : EdgeKind::Direction;
    EdgeKind extra = other_kind(tri);
    std::vector<std::tuple<VertexId, VertexId, EdgeKind>> edges = {
        {labels[0], labels[1], tri}, {labels[1], labels[2], tri},
        {labels[2], labels[0], tri}, {labels[0], labels[1], extra},
        {labels[1], labels[2], extra},
    };
    return MixedGraph({labels.begin(), labels.end()}, edges);
}

inline MixedGraph pure_k4(EdgeKind kind, const std::array<VertexId, 4>& labels) {
    std::vector<std::tuple<VertexId, VertexId, EdgeKind>> edges;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            edges.emplace_back(labels[i], labels[j], kind);
        }
    }
    return MixedGraph({labels.begin(), labels.end()}, edges);
}

// ---------------------------------------------------------------------------
// Moves

struct EdgeAddition {
    Edge edge;
};

/// Listed for completeness of the operation set; never appears in
/// construction certificates.
struct ZeroExtension {
    VertexId v;
    VertexId x;
    VertexId y;
    std::array<EdgeKind, 2> kinds; // vx, vy
};

struct OneExtension {
    VertexId v;
    Edge deleted;
    VertexId z;
    std::array<EdgeKind, 3> kinds; // v-deleted.u, v-deleted.v, v-z
};

/// 2-sum with a pure K4 on the edge xy of `kind`; kind is Direction in every
/// direction-balanced certificate.
struct TwoSumPureK4 {
    VertexId x;
    VertexId y;
    EdgeKind kind;
    std::array<VertexId, 2> new_labels;
};

using Move = std::variant<EdgeAddition, ZeroExtension, OneExtension, TwoSumPureK4>;

inline MixedGraph apply_move(const MixedGraph& g, const Move& move) {
    if (const auto* m = std::get_if<EdgeAddition>(&move)) {
        require(g.has_vertex(m->edge.u) && g.has_vertex(m->edge.v),
                ErrorCode::PreconditionViolated,
                "edge addition endpoint not in graph: " + m->edge.to_string());
        require(!g.has_edge(m->edge.u, m->edge.v, m->edge.kind),
                ErrorCode::PreconditionViolated,
                "edge addition of present edge " + m->edge.to_string());
        return g.with_edge(m->edge);
    }
    if (const auto* m = std::get_if<ZeroExtension>(&move)) {
        require(!g.has_vertex(m->v), ErrorCode::PreconditionViolated,
                "0-extension vertex " + m->v + " not fresh");
        require(g.has_vertex(m->x) && g.has_vertex(m->y), ErrorCode::PreconditionViolated,
                "0-extension neighbour missing");
        require(m->x != m->y || m->kinds[0] != m->kinds[1], ErrorCode::PreconditionViolated,
                "0-extension onto a single vertex needs edges of different kinds");
        MixedGraph out = g.with_vertex(m->v);
        out = out.with_edge(Edge(m->v, m->x, m->kinds[0]));
        out = out.with_edge(Edge(m->v, m->y, m->kinds[1]));
        return out;
    }
    if (const auto* m = std::get_if<OneExtension>(&move)) {
        require(g.has_edge(m->deleted.u, m->deleted.v, m->deleted.kind),
                ErrorCode::PreconditionViolated,
                "1-extension deletes absent edge " + m->deleted.to_string());
        require(!g.has_vertex(m->v), ErrorCode::PreconditionViolated,
                "1-extension vertex " + m->v + " not fresh");
        require(g.has_vertex(m->z), ErrorCode::PreconditionViolated,
                "1-extension third neighbour " + m->z + " not in graph");
        bool same_type = m->kinds[0] == m->deleted.kind || m->kinds[1] == m->deleted.kind ||
                         m->kinds[2] == m->deleted.kind;
        require(same_type, ErrorCode::PreconditionViolated,
                "1-extension needs a new edge of the deleted edge's type");
        if (m->z == m->deleted.u) {
            require(m->kinds[2] != m->kinds[0], ErrorCode::PreconditionViolated,
                    "1-extension parallel edges to " + m->z + " must differ in kind");
        }
        if (m->z == m->deleted.v) {
            require(m->kinds[2] != m->kinds[1], ErrorCode::PreconditionViolated,
                    "1-extension parallel edges to " + m->z + " must differ in kind");
        }
        MixedGraph out = g.without_edge(m->deleted).with_vertex(m->v);
        out = out.with_edge(Edge(m->v, m->deleted.u, m->kinds[0]));
        out = out.with_edge(Edge(m->v, m->deleted.v, m->kinds[1]));
        out = out.with_edge(Edge(m->v, m->z, m->kinds[2]));
        return out;
    }
    const auto& m = std::get<TwoSumPureK4>(move);
    require(g.has_edge(m.x, m.y, m.kind), ErrorCode::PreconditionViolated,
            "2-sum base edge " + m.x + "-" + m.y + " of kind " + kind_name(m.kind) +
                " absent");
    require(m.new_labels[0] != m.new_labels[1], ErrorCode::PreconditionViolated,
            "2-sum fresh labels must be distinct");
    for (const auto& n : m.new_labels) {
        require(!g.has_vertex(n), ErrorCode::PreconditionViolated,
                "2-sum label " + n + " not fresh");
    }
    MixedGraph out = g.without_edge(Edge(m.x, m.y, m.kind));
    out = out.with_vertex(m.new_labels[0]).with_vertex(m.new_labels[1]);
    const std::array<VertexId, 4> quad = {m.x, m.y, m.new_labels[0], m.new_labels[1]};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (quad[i] == m.x && quad[j] == m.y) continue;
            out = out.with_edge(Edge(quad[i], quad[j], m.kind));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Inverse operations

inline bool is_node(const MixedGraph& g, const VertexId& v) { return g.degree(v) == 3; }

/// G_v^{xy}: delete node v with all incident edges, add the edge xy of `kind`.
inline MixedGraph one_reduction(const MixedGraph& g, const VertexId& v, const VertexId& x,
                                const VertexId& y, EdgeKind kind) {
    require(g.has_vertex(v) && is_node(g, v), ErrorCode::NotANode,
            "1-reduction vertex " + v + " is not a node");
    auto incident = g.edges_at(v);
    bool x_adj = false, y_adj = false;
    bool pure = true;
    for (const auto& e : incident) {
        if (e.opposite(v) == x) x_adj = true;
        if (e.opposite(v) == y) y_adj = true;
        if (e.kind != incident.front().kind) pure = false;
    }
    require(x != y && x != v && y != v && x_adj && y_adj, ErrorCode::PreconditionViolated,
            "1-reduction endpoints must be distinct neighbours of " + v);
    if (pure) {
        require(kind == incident.front().kind, ErrorCode::KindMismatchForPureNode,
                "pure node " + v + " requires a " + kind_name(incident.front().kind) +
                    " edge");
    }
    require(!g.has_edge(x, y, kind), ErrorCode::EdgeAlreadyPresent,
            Edge(x, y, kind).to_string() + " already present");
    return g.without_vertex(v).with_edge(Edge(x, y, kind));
}

/// Splits G = G1 (+)_2 G2 across {x, y} where the side induced by
/// `side` + {x,y} is pure; both halves gain the xy edge of the side's kind.
/// Returns (complement half, pure half).
inline std::pair<MixedGraph, MixedGraph> two_cleave(const MixedGraph& g, const VertexId& x,
                                                    const VertexId& y,
                                                    const std::set<VertexId>& side) {
    require(g.has_vertex(x) && g.has_vertex(y) && x != y, ErrorCode::PreconditionViolated,
            "cleave cut must be two distinct vertices of the graph");
    require(!side.empty() && !side.count(x) && !side.count(y), ErrorCode::NotASeparation,
            "side must be a nonempty vertex set disjoint from the cut");
    for (const auto& s : side) {
        require(g.has_vertex(s), ErrorCode::NotASeparation, "side vertex " + s + " missing");
    }
    require(side.size() + 2 < g.num_vertices(), ErrorCode::NotASeparation,
            "complement side is empty");

    std::vector<Edge> side_edges;
    for (const auto& e : g.edges()) {
        bool us = side.count(e.u) > 0, vs = side.count(e.v) > 0;
        if (us || vs) {
            bool u_ok = us || e.u == x || e.u == y;
            bool v_ok = vs || e.v == x || e.v == y;
            require(u_ok && v_ok, ErrorCode::NotASeparation,
                    "edge " + e.to_string() + " leaves the side");
            side_edges.push_back(e);
        }
    }
    require(!side_edges.empty(), ErrorCode::SideNotPure, "side has no edges");
    EdgeKind pure_kind = side_edges.front().kind;
    for (const auto& e : side_edges) {
        require(e.kind == pure_kind, ErrorCode::SideNotPure,
                "side mixes edge kinds at " + e.to_string());
    }
    require(!g.has_edge(x, y, pure_kind), ErrorCode::EdgeOfSameTypePresent,
            "graph already has the " + std::string(kind_name(pure_kind)) + " edge " + x +
                "-" + y);

    Edge xy(x, y, pure_kind);
    MixedGraph pure_half;
    {
        std::set<VertexId> keep(side.begin(), side.end());
        keep.insert(x);
        keep.insert(y);
        std::vector<std::tuple<VertexId, VertexId, EdgeKind>> es;
        for (const auto& e : side_edges) es.emplace_back(e.u, e.v, e.kind);
        es.emplace_back(xy.u, xy.v, xy.kind);
        pure_half = MixedGraph({keep.begin(), keep.end()}, es);
    }
    MixedGraph rest;
    {
        std::vector<VertexId> verts;
        for (const auto& w : g.vertices()) {
            if (!side.count(w)) verts.push_back(w);
        }
        std::vector<std::tuple<VertexId, VertexId, EdgeKind>> es;
        for (const auto& e : g.edges()) {
            if (!side.count(e.u) && !side.count(e.v)) es.emplace_back(e.u, e.v, e.kind);
        }
        es.emplace_back(xy.u, xy.v, xy.kind);
        rest = MixedGraph(std::move(verts), es);
    }
    return {rest, pure_half};
}

// ---------------------------------------------------------------------------
// Nodes

/// Vertices of degree exactly three, classified by their degree inside the
/// node subgraph G[V3].
inline std::map<VertexId, NodeClass> node_classification(const MixedGraph& g) {
    std::set<VertexId> nodes;
    for (const auto& v : g.vertices()) {
        if (is_node(g, v)) nodes.insert(v);
    }
    std::map<VertexId, NodeClass> out;
    for (const auto& v : g.vertices()) {
        if (!nodes.count(v)) {
            out[v] = NodeClass::NotNode;
            continue;
        }
        std::size_t deg3 = 0;
        for (const auto& e : g.edges_at(v)) deg3 += nodes.count(e.opposite(v));
        out[v] = deg3 <= 1   ? NodeClass::LeafNode
                 : deg3 == 2 ? NodeClass::SeriesNode
                              : NodeClass::BranchingNode;
    }
    return out;
}

inline MixedGraph node_subgraph(const MixedGraph& g) {
    std::set<VertexId> nodes;
    for (const auto& v : g.vertices()) {
        if (is_node(g, v)) nodes.insert(v);
    }
    return g.induced(nodes);
}

} // namespace dlrigid

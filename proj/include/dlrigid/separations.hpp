#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "dlrigid/errors.hpp"
#include "dlrigid/graph.hpp"

namespace dlrigid {

/// Vertex components of G after removing a vertex set; each component sorted,
/// components ordered by smallest member.
inline std::vector<std::vector<VertexId>> components_excluding(
    const MixedGraph& g, const std::set<VertexId>& removed) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const auto& v : g.vertices()) {
        if (!removed.count(v)) adj[v];
    }
    for (const auto& e : g.edges()) {
        if (removed.count(e.u) || removed.count(e.v)) continue;
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::set<VertexId> todo;
    for (const auto& [v, _] : adj) todo.insert(v);
    std::vector<std::vector<VertexId>> out;
    while (!todo.empty()) {
        std::vector<VertexId> stack{*todo.begin()};
        todo.erase(todo.begin());
        std::vector<VertexId> comp;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const auto& w : adj[v]) {
                if (todo.erase(w)) stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_connected(const MixedGraph& g) {
    return components_excluding(g, {}).size() <= 1;
}

/// |V| > k and no vertex set smaller than k disconnects G.
inline bool is_k_connected(const MixedGraph& g, int k) {
    require(k >= 1 && k <= 3, ErrorCode::PreconditionViolated, "k must be 1, 2 or 3");
    if (g.num_vertices() <= static_cast<std::size_t>(k)) return false;
    if (!is_connected(g)) return false;
    const auto& vs = g.vertices();
    if (k >= 2) {
        for (const auto& v : vs) {
            if (components_excluding(g, {v}).size() > 1) return false;
        }
    }
    if (k >= 3) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
            for (std::size_t j = i + 1; j < vs.size(); ++j) {
                if (components_excluding(g, {vs[i], vs[j]}).size() > 1) return false;
            }
        }
    }
    return true;
}

/// One 2-separation: cut pair {x,y} plus the two strictly-inside vertex
/// sides. The balance flags ask whether each side's edge set (everything
/// except xy edges) contains a direction / length edge.
struct TwoSeparation {
    VertexId x; // x < y
    VertexId y;
    std::vector<VertexId> side_a; // sorted; holds the smallest non-cut vertex
    std::vector<VertexId> side_b;
    bool direction_balanced = false;
    bool length_balanced = false;
};

namespace detail {

inline TwoSeparation make_separation(const MixedGraph& g, const VertexId& x,
                                     const VertexId& y, std::vector<VertexId> side_a,
                                     std::vector<VertexId> side_b) {
    if (side_b.front() < side_a.front()) std::swap(side_a, side_b);
    TwoSeparation s;
    s.x = std::min(x, y);
    s.y = std::max(x, y);
    s.side_a = std::move(side_a);
    s.side_b = std::move(side_b);
    bool dir_a = false, dir_b = false, len_a = false, len_b = false;
    std::set<VertexId> in_a(s.side_a.begin(), s.side_a.end());
    std::set<VertexId> in_b(s.side_b.begin(), s.side_b.end());
    for (const auto& e : g.edges()) {
        bool a = in_a.count(e.u) || in_a.count(e.v);
        bool b = in_b.count(e.u) || in_b.count(e.v);
        if (e.kind == EdgeKind::Direction) {
            dir_a |= a;
            dir_b |= b;
        } else {
            len_a |= a;
            len_b |= b;
        }
    }
    s.direction_balanced = dir_a && dir_b;
    s.length_balanced = len_a && len_b;
    return s;
}

inline std::vector<TwoSeparation> enumerate_two_separations(const MixedGraph& g) {
    std::vector<TwoSeparation> out;
    const auto& vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            auto comps = components_excluding(g, {vs[i], vs[j]});
            std::size_t c = comps.size();
            if (c < 2) continue;
            require(c <= 16, ErrorCode::PreconditionViolated,
                    "more than 16 components behind one cut pair");
            // every bipartition of the components, component 0 pinned to side A
            for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << c); mask += 2) {
                std::vector<VertexId> a, b;
                for (std::size_t k = 0; k < c; ++k) {
                    auto& dst = (mask >> k) & 1 ? a : b;
                    dst.insert(dst.end(), comps[k].begin(), comps[k].end());
                }
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                out.push_back(make_separation(g, vs[i], vs[j], std::move(a), std::move(b)));
            }
        }
    }
    return out;
}

} // namespace detail

inline std::vector<TwoSeparation> two_separations(const MixedGraph& g) {
    require(is_k_connected(g, 2), ErrorCode::NotTwoConnected,
            "2-separations are enumerated for 2-connected graphs only");
    return detail::enumerate_two_separations(g);
}

inline bool is_direction_balanced(const MixedGraph& g) {
    auto seps = two_separations(g);
    return std::all_of(seps.begin(), seps.end(),
                       [](const TwoSeparation& s) { return s.direction_balanced; });
}

inline bool is_length_balanced(const MixedGraph& g) {
    auto seps = two_separations(g);
    return std::all_of(seps.begin(), seps.end(),
                       [](const TwoSeparation& s) { return s.length_balanced; });
}

inline bool is_balanced(const MixedGraph& g) {
    return is_direction_balanced(g) && is_length_balanced(g);
}

/// {x,y} crosses {x',y'} when x and y land in different components of
/// G - {x',y'}.
inline bool crossing(const TwoSeparation& s1, const TwoSeparation& s2, const MixedGraph& g) {
    if (s1.x == s2.x || s1.x == s2.y || s1.y == s2.x || s1.y == s2.y) return false;
    auto comps = components_excluding(g, {s2.x, s2.y});
    for (const auto& comp : comps) {
        bool has_x = std::binary_search(comp.begin(), comp.end(), s1.x);
        bool has_y = std::binary_search(comp.begin(), comp.end(), s1.y);
        if (has_x && has_y) return false;
        if (has_x || has_y) return true; // split across components
    }
    return false;
}

// ---------------------------------------------------------------------------
// Pure-K4 cleaves

struct CleaveSpot {
    VertexId x;
    VertexId y;
    std::set<VertexId> side; // exactly two vertices
    EdgeKind kind;
};

/// First 2-separation whose side, plus the xy edge, is a pure K4 of `kind`:
/// two side vertices whose neighbourhood is {x, y}, all five non-xy pairs
/// carrying exactly the `kind` edge, and no xy edge of that kind in G.
inline std::optional<CleaveSpot> find_pure_k4_cleave(const MixedGraph& g, EdgeKind kind) {
    const auto& vs = g.vertices();
    if (vs.size() < 5) return std::nullopt;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const VertexId& n1 = vs[i];
            const VertexId& n2 = vs[j];
            std::set<VertexId> nb;
            for (const auto& v : {n1, n2}) {
                for (const auto& w : g.neighbours(v)) {
                    if (w != n1 && w != n2) nb.insert(w);
                }
            }
            if (nb.size() != 2) continue;
            auto it = nb.begin();
            VertexId x = *it++;
            VertexId y = *it;
            bool ok = true;
            const std::array<std::pair<VertexId, VertexId>, 5> pairs = {
                std::pair{n1, n2}, {x, n1}, {x, n2}, {y, n1}, {y, n2}};
            for (const auto& [a, b] : pairs) {
                if (!g.has_edge(a, b, kind) || g.has_edge(a, b, other_kind(kind))) {
                    ok = false;
                    break;
                }
            }
            if (!ok || g.has_edge(x, y, kind)) continue;
            return CleaveSpot{x, y, {n1, n2}, kind};
        }
    }
    return std::nullopt;
}

inline std::optional<CleaveSpot> find_dirk4_cleave(const MixedGraph& g) {
    return find_pure_k4_cleave(g, EdgeKind::Direction);
}

/// Ends: X with |N(X)| = 2, a nonempty remainder beyond X + N(X), and every
/// nonempty proper subset attached by at least three vertices. Test helper;
/// exponential in |X|.
inline std::vector<std::set<VertexId>> ends(const MixedGraph& g) {
    auto neighbourhood = [&](const std::set<VertexId>& xs) {
        std::set<VertexId> nb;
        for (const auto& e : g.edges()) {
            bool us = xs.count(e.u), vs2 = xs.count(e.v);
            if (us && !vs2) nb.insert(e.v);
            if (vs2 && !us) nb.insert(e.u);
        }
        return nb;
    };
    std::set<std::set<VertexId>> candidates;
    for (const auto& sep : detail::enumerate_two_separations(g)) {
        candidates.insert({sep.side_a.begin(), sep.side_a.end()});
        candidates.insert({sep.side_b.begin(), sep.side_b.end()});
    }
    std::vector<std::set<VertexId>> out;
    for (const auto& x : candidates) {
        if (neighbourhood(x).size() != 2) continue;
        if (x.size() + 2 >= g.num_vertices()) continue;
        if (x.size() > 16) continue;
        std::vector<VertexId> xs(x.begin(), x.end());
        bool minimal = true;
        for (std::uint32_t mask = 1; minimal && mask + 1 < (std::uint32_t{1} << xs.size());
             ++mask) {
            std::set<VertexId> sub;
            for (std::size_t k = 0; k < xs.size(); ++k) {
                if ((mask >> k) & 1) sub.insert(xs[k]);
            }
            if (neighbourhood(sub).size() < 3) minimal = false;
        }
        if (minimal) out.push_back(x);
    }
    return out;
}

} // namespace dlrigid

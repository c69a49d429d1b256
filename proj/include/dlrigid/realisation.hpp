#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "dlrigid/errors.hpp"
#include "dlrigid/graph.hpp"
#include "dlrigid/linalg.hpp"
#include "dlrigid/prime_field.hpp"
#include "dlrigid/rational.hpp"
#include "dlrigid/rng.hpp"

namespace dlrigid {

/// Scalar semantics for equivalence / congruence checks. Coordinates are
/// stored exactly either way; Float64 converts on demand and compares with
/// tolerances.
enum class Domain { ExactRational, Float64 };

template <class T>
struct Vec2 {
    T x{};
    T y{};

    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
};

template <class T>
using Realisation = std::map<VertexId, Vec2<T>>;

using RealisationQ = Realisation<BigRational>;
using RealisationFp = Realisation<std::uint64_t>;

inline BigRational cross(const Vec2<BigRational>& a, const Vec2<BigRational>& b) {
    return a.x * b.y - a.y * b.x;
}

inline BigRational sq_norm(const Vec2<BigRational>& a) { return a.x * a.x + a.y * a.y; }

inline Vec2<double> to_double(const Vec2<BigRational>& a) {
    return {a.x.to_double(), a.y.to_double()};
}

// Coordinate magnitude for sampled generic points.
inline constexpr std::uint64_t kCoordinateRange = std::uint64_t{1} << 40;

/// Random integer coordinates, i.i.d. uniform in [1, 2^40]; a stand-in for
/// algebraic independence with Schwartz-Zippel failure bounds when reduced
/// mod a 62-bit prime. Deterministic in (G, seed).
inline RealisationQ generic_realisation(const MixedGraph& g, std::uint64_t seed) {
    SplitMix64 rng(seed);
    RealisationQ p;
    for (const auto& v : g.vertices()) {
        BigRational x(static_cast<long long>(rng.below(kCoordinateRange) + 1));
        BigRational y(static_cast<long long>(rng.below(kCoordinateRange) + 1));
        p[v] = Vec2<BigRational>{x, y};
    }
    return p;
}

inline RealisationFp generic_realisation_fp(const MixedGraph& g, std::uint64_t seed,
                                            const FpField& f) {
    SplitMix64 rng(seed);
    RealisationFp p;
    for (const auto& v : g.vertices()) {
        std::uint64_t x = rng.below(f.modulus());
        std::uint64_t y = rng.below(f.modulus());
        p[v] = Vec2<std::uint64_t>{x, y};
    }
    return p;
}

// ---------------------------------------------------------------------------
// Rigidity matrix

/// |D|+|L| rows by 2|V| columns. A length row uv carries p(u)-p(v) in u's
/// column pair and p(v)-p(u) in v's; a direction row the perps of those,
/// (x,y)-perp = (y,-x), with the u-first convention (u < v).
struct RigidityMatrixQ {
    std::vector<Edge> row_edges;
    std::vector<VertexId> column_vertices; // column pair 2i, 2i+1 per vertex
    std::vector<std::vector<BigRational>> rows;
};

namespace detail {

template <class Elem, class Sub, class Neg>
std::vector<Elem> rigidity_row(std::size_t cols, std::size_t cu, std::size_t cv,
                               EdgeKind kind, const Vec2<Elem>& pu, const Vec2<Elem>& pv,
                               Sub sub, Neg neg) {
    std::vector<Elem> row(cols, Elem{});
    Elem dx = sub(pu.x, pv.x);
    Elem dy = sub(pu.y, pv.y);
    if (kind == EdgeKind::Length) {
        row[cu] = dx;
        row[cu + 1] = dy;
        row[cv] = neg(dx);
        row[cv + 1] = neg(dy);
    } else {
        row[cu] = dy;
        row[cu + 1] = neg(dx);
        row[cv] = neg(dy);
        row[cv + 1] = dx;
    }
    return row;
}

} // namespace detail

inline RigidityMatrixQ rigidity_matrix(const MixedGraph& g, const RealisationQ& p) {
    RigidityMatrixQ m;
    m.column_vertices = g.vertices();
    std::map<VertexId, std::size_t> col;
    for (std::size_t i = 0; i < m.column_vertices.size(); ++i) {
        col[m.column_vertices[i]] = 2 * i;
    }
    for (const auto& v : g.vertices()) {
        require(p.count(v), ErrorCode::PreconditionViolated,
                "realisation misses vertex " + v);
    }
    for (const auto& e : g.edges()) {
        const auto& pu = p.at(e.u);
        const auto& pv = p.at(e.v);
        require(pu != pv, ErrorCode::CoincidentEndpoints,
                "coincident endpoints on edge " + e.to_string());
        m.row_edges.push_back(e);
        m.rows.push_back(detail::rigidity_row(
            2 * m.column_vertices.size(), col.at(e.u), col.at(e.v), e.kind, pu, pv,
            [](const BigRational& a, const BigRational& b) { return a - b; },
            [](const BigRational& a) { return -a; }));
    }
    return m;
}

inline std::size_t rank(const RigidityMatrixQ& m) {
    return matrix_rank(m.rows, RationalField{});
}

/// Rows of R(G,p) over Fp for an edge subset, in the subset's order.
inline std::vector<std::vector<std::uint64_t>> rigidity_rows_fp(
    const std::vector<Edge>& edges, const std::vector<VertexId>& vertices,
    const RealisationFp& p, const FpField& f) {
    std::map<VertexId, std::size_t> col;
    for (std::size_t i = 0; i < vertices.size(); ++i) col[vertices[i]] = 2 * i;
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(edges.size());
    for (const auto& e : edges) {
        rows.push_back(detail::rigidity_row(
            2 * vertices.size(), col.at(e.u), col.at(e.v), e.kind, p.at(e.u), p.at(e.v),
            [&f](std::uint64_t a, std::uint64_t b) { return f.sub(a, b); },
            [&f](std::uint64_t a) { return f.neg(a); }));
    }
    return rows;
}

/// One-sided Monte Carlo rigidity test: rank(R(G,p)) = 2|V|-2 at some random
/// finite-field realisation certifies rigidity; a false negative needs every
/// trial degenerate, probability <= (2|V|/p)^(2*trials).
inline bool infinitesimally_rigid(const MixedGraph& g, int trials = 3,
                                  std::uint64_t seed = 0) {
    require(g.num_vertices() >= 1, ErrorCode::PreconditionViolated, "empty vertex set");
    const std::size_t target = 2 * g.num_vertices() - 2;
    if (g.num_edges() == 0) return target == 0;
    auto primes = default_primes();
    for (int t = 0; t < trials; ++t) {
        for (std::size_t pi = 0; pi < primes.size(); ++pi) {
            FpField f(primes[pi]);
            std::uint64_t inst_seed =
                seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(t) * 131 + pi;
            auto coords = generic_realisation_fp(g, inst_seed, f);
            auto rows = rigidity_rows_fp(g.edges(), g.vertices(), coords, f);
            if (matrix_rank(std::move(rows), f) == target) return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Equivalence and congruence

/// Max relative violation of the edge constraints of (G,p) by q, in doubles.
inline double equivalence_residual(const MixedGraph& g, const RealisationQ& p,
                                   const RealisationQ& q) {
    double worst = 0.0;
    for (const auto& e : g.edges()) {
        Vec2<double> dp = to_double(p.at(e.u)) - to_double(p.at(e.v));
        Vec2<double> dq = to_double(q.at(e.u)) - to_double(q.at(e.v));
        if (e.kind == EdgeKind::Length) {
            double a = dp.x * dp.x + dp.y * dp.y;
            double b = dq.x * dq.x + dq.y * dq.y;
            worst = std::max(worst, std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}));
        } else {
            double cr = dp.x * dq.y - dp.y * dq.x;
            double scale = std::hypot(dp.x, dp.y) * std::hypot(dq.x, dq.y);
            worst = std::max(worst, std::abs(cr) / std::max(scale, 1e-300));
        }
    }
    return worst;
}

inline bool check_equivalent(const MixedGraph& g, const RealisationQ& p,
                             const RealisationQ& q, double tol = 1e-9,
                             Domain domain = Domain::ExactRational) {
    for (const auto& v : g.vertices()) {
        require(p.count(v) && q.count(v), ErrorCode::PreconditionViolated,
                "realisation misses vertex " + v);
    }
    if (domain == Domain::Float64) return equivalence_residual(g, p, q) <= tol;
    for (const auto& e : g.edges()) {
        Vec2<BigRational> dp = p.at(e.u) - p.at(e.v);
        Vec2<BigRational> dq = q.at(e.u) - q.at(e.v);
        if (e.kind == EdgeKind::Length) {
            if (sq_norm(dp) != sq_norm(dq)) return false;
        } else {
            if (dq.x.is_zero() && dq.y.is_zero()) return false;
            if (!cross(dp, dq).is_zero()) return false;
        }
    }
    return true;
}

/// Best fit of q = s*p + t over s in {+1,-1}; the residual is the max vertex
/// deviation from the better fit (absolute, in doubles).
inline double congruence_residual(const MixedGraph& g, const RealisationQ& p,
                                  const RealisationQ& q) {
    double best = std::numeric_limits<double>::infinity();
    for (int s : {1, -1}) {
        double tx = 0, ty = 0;
        for (const auto& v : g.vertices()) {
            Vec2<double> pv = to_double(p.at(v)), qv = to_double(q.at(v));
            tx += qv.x - s * pv.x;
            ty += qv.y - s * pv.y;
        }
        tx /= static_cast<double>(g.num_vertices());
        ty /= static_cast<double>(g.num_vertices());
        double worst = 0;
        for (const auto& v : g.vertices()) {
            Vec2<double> pv = to_double(p.at(v)), qv = to_double(q.at(v));
            worst = std::max(worst, std::hypot(qv.x - s * pv.x - tx, qv.y - s * pv.y - ty));
        }
        best = std::min(best, worst);
    }
    return best;
}

inline bool check_congruent(const MixedGraph& g, const RealisationQ& p,
                            const RealisationQ& q, double tol = 1e-6,
                            Domain domain = Domain::ExactRational) {
    for (const auto& v : g.vertices()) {
        require(p.count(v) && q.count(v), ErrorCode::PreconditionViolated,
                "realisation misses vertex " + v);
    }
    if (g.num_vertices() == 0) return true;
    if (domain == Domain::Float64) return congruence_residual(g, p, q) <= tol;
    const VertexId& v0 = g.vertices().front();
    for (int s : {1, -1}) {
        BigRational sr(s);
        Vec2<BigRational> t{q.at(v0).x - sr * p.at(v0).x, q.at(v0).y - sr * p.at(v0).y};
        bool ok = true;
        for (const auto& v : g.vertices()) {
            if (q.at(v).x != sr * p.at(v).x + t.x || q.at(v).y != sr * p.at(v).y + t.y) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

} // namespace dlrigid

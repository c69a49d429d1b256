#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dlrigid/errors.hpp"
#include "dlrigid/graph.hpp"
#include "dlrigid/linalg.hpp"
#include "dlrigid/prime_field.hpp"
#include "dlrigid/realisation.hpp"

namespace dlrigid {

/// Randomized rank oracle for the rigidity matroid of one graph.
///
/// Holds trials x primes finite-field realisations, fixed for the lifetime of
/// the view so that all queries are mutually consistent. rank() combines the
/// per-instance ranks by max: a "dependent" verdict is wrong only when every
/// instance degenerates, probability <= (2|V|/p)^(trials*primes); an
/// "independent" verdict is certain. Structural queries (greedy basis,
/// fundamental-circuit supports) come from the first instance.
///
/// The rank cache is not synchronized: confine a view to one thread or clone
/// it per thread.
class MatroidView {
public:
    explicit MatroidView(MixedGraph g, std::uint64_t seed = 0, int trials = 3,
                         std::vector<std::uint64_t> primes = default_primes())
        : graph_(std::move(g)), seed_(seed), trials_(trials), primes_(std::move(primes)) {
        require(trials_ >= 1 && !primes_.empty(), ErrorCode::PreconditionViolated,
                "need at least one trial and one prime");
        for (int t = 0; t < trials_; ++t) {
            for (std::size_t pi = 0; pi < primes_.size(); ++pi) {
                FpField f(primes_[pi]);
                std::uint64_t inst_seed = seed_ * 0x9E3779B97F4A7C15ULL +
                                          static_cast<std::uint64_t>(t) * 131 + pi;
                instances_.push_back({f, generic_realisation_fp(graph_, inst_seed, f)});
            }
        }
    }

    const MixedGraph& graph() const { return graph_; }
    std::uint64_t seed() const { return seed_; }
    int trials() const { return trials_; }
    const std::vector<std::uint64_t>& primes() const { return primes_; }

    std::size_t edge_index(const Edge& e) const {
        const auto& es = graph_.edges();
        auto it = std::lower_bound(es.begin(), es.end(), e);
        require(it != es.end() && *it == e, ErrorCode::PreconditionViolated,
                "edge not in graph: " + e.to_string());
        return static_cast<std::size_t>(it - es.begin());
    }

    std::size_t rank(const std::vector<Edge>& subset) {
        std::vector<Edge> sorted = canonical(subset);
        auto key = bitset_key(sorted);
        auto hit = cache_.find(key);
        if (hit != cache_.end()) return hit->second;
        std::size_t best = 0;
        for (const auto& inst : instances_) {
            auto rows = rigidity_rows_fp(sorted, graph_.vertices(), inst.coords, inst.field);
            best = std::max(best, matrix_rank(std::move(rows), inst.field));
            if (best == sorted.size()) break; // rank cannot exceed row count
        }
        cache_.emplace(std::move(key), best);
        return best;
    }

    std::size_t rank_all() { return rank(graph_.edges()); }

    bool is_independent(const std::vector<Edge>& subset) {
        return rank(subset) == subset.size();
    }

    /// Minimal dependent subset, by element elimination in canonical order.
    std::vector<Edge> find_circuit(const std::vector<Edge>& dependent_set) {
        std::vector<Edge> work = canonical(dependent_set);
        require(!is_independent(work), ErrorCode::InputIndependent,
                "find_circuit needs a dependent set");
        const std::vector<Edge> order = work;
        for (const auto& e : order) {
            std::vector<Edge> candidate;
            candidate.reserve(work.size() - 1);
            for (const auto& f : work) {
                if (f != e) candidate.push_back(f);
            }
            if (!is_independent(candidate)) work = std::move(candidate);
        }
        return work;
    }

    /// C(e, B): the unique circuit in B + e.
    std::vector<Edge> fundamental_circuit(const std::vector<Edge>& basis_like,
                                          const Edge& e) {
        std::vector<Edge> base = canonical(basis_like);
        require(is_independent(base), ErrorCode::PreconditionViolated,
                "fundamental_circuit needs an independent base set");
        std::vector<Edge> with = base;
        with.insert(std::upper_bound(with.begin(), with.end(), e), e);
        require(rank(with) == base.size(), ErrorCode::NotDependentAfterAdding,
                "edge independent of the given set: " + e.to_string());
        return find_circuit(with);
    }

    /// Prefix-greedy elimination of the subset's rows on the first instance:
    /// greedy basis positions plus, per dependent row, the support of its
    /// expression over the basis (its fundamental circuit). Positions index
    /// into the subset, which must be sorted.
    TrackedElimination analyze(const std::vector<Edge>& sorted_subset) {
        const auto& inst = instances_.front();
        auto rows =
            rigidity_rows_fp(sorted_subset, graph_.vertices(), inst.coords, inst.field);
        return eliminate_tracking(rows, inst.field);
    }

    /// Edges e with rank(E - e) = rank(E) (never forced into a basis).
    /// Derived from one tracked elimination: an edge is a non-coloop exactly
    /// when some dependency support contains it.
    std::vector<bool> non_coloops() {
        auto t = analyze(graph_.edges());
        std::vector<bool> out(graph_.num_edges(), false);
        for (const auto& [pos, support] : t.dependents) {
            out[pos] = true;
            for (std::size_t s : support) out[s] = true;
        }
        return out;
    }

private:
    struct Instance {
        FpField field;
        RealisationFp coords;
    };

    static std::vector<Edge> canonical(std::vector<Edge> edges) {
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 1; i < edges.size(); ++i) {
            require(edges[i] != edges[i - 1], ErrorCode::PreconditionViolated,
                    "repeated edge in subset: " + edges[i].to_string());
        }
        return edges;
    }

    std::vector<std::uint64_t> bitset_key(const std::vector<Edge>& sorted) const {
        std::vector<std::uint64_t> key((graph_.num_edges() + 63) / 64, 0);
        for (const auto& e : sorted) {
            std::size_t i = edge_index(e);
            key[i / 64] |= std::uint64_t{1} << (i % 64);
        }
        return key;
    }

    MixedGraph graph_;
    std::uint64_t seed_;
    int trials_;
    std::vector<std::uint64_t> primes_;
    std::vector<Instance> instances_;
    std::map<std::vector<std::uint64_t>, std::size_t> cache_;
};

} // namespace dlrigid

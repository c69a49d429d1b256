// Acceptance suite: every criterion prints one PASS/FAIL line; the binary
// exits nonzero when any criterion fails. Tolerances and budgets are fixed
// here, not configurable.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dlrigid/analyze.hpp"
#include "dlrigid/construction.hpp"
#include "dlrigid/count_matroid.hpp"
#include "dlrigid/global_rigidity.hpp"
#include "dlrigid/io.hpp"
#include "helpers.hpp"

using namespace dlrigid;
using testutil::D;
using testutil::L;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Harness {
    int failures = 0;

    void report(int num, const std::string& name, bool ok, double secs,
                const std::string& detail) {
        std::printf("[%s] criterion %2d: %-34s (%6.2fs)%s%s\n", ok ? "PASS" : "FAIL", num,
                    name.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

bool is_min_degree_three(const MixedGraph& g) {
    std::size_t min_deg = SIZE_MAX;
    for (const auto& v : g.vertices()) min_deg = std::min(min_deg, g.degree(v));
    return min_deg == 3;
}

// --------------------------------------------------------------- criterion 1

bool base_facts(std::string& detail) {
    using count_matroid::CircuitClass;
    using count_matroid::classify_circuit_by_counts;
    bool ok = true;
    MixedGraph plus = testutil::k3plus();
    MixedGraph minus = testutil::k3minus();
    ok &= classify_circuit_by_counts(plus) == CircuitClass::MixedCircuit;
    ok &= classify_circuit_by_counts(minus) == CircuitClass::MixedCircuit;
    ok &= plus.num_edges() == 5 && plus.num_edges() == 2 * plus.num_vertices() - 1;
    ok &= minus.num_edges() == 5;
    MixedGraph dk4 = pure_k4(D, {"a", "b", "c", "d"});
    MixedGraph lk4 = pure_k4(L, {"a", "b", "c", "d"});
    ok &= classify_circuit_by_counts(dk4) == CircuitClass::PureCircuit;
    ok &= classify_circuit_by_counts(lk4) == CircuitClass::PureCircuit;
    ok &= dk4.num_edges() == 6 && dk4.num_edges() == 2 * dk4.num_vertices() - 2;
    MatroidView mp(plus), md(dk4), ml(lk4), mm(minus);
    ok &= mp.rank_all() == 4;
    ok &= mm.rank_all() == 4;
    ok &= md.rank_all() == 5;
    ok &= ml.rank_all() == 5;
    detail = ok ? "K3+/K3- mixed circuits, pure K4 circuits, ranks 4/5" : "mismatch";
    return ok;
}

// --------------------------------------------------------------- criterion 2

bool oracle_agreement(std::string& detail) {
    SplitMix64 rng(20250801);
    std::size_t graphs = 0, queries = 0, disagreements = 0;
    while (graphs < 500) {
        std::size_t n = 2 + rng.index(5); // 2..6 vertices
        std::uint64_t density = 100 + rng.below(800);
        MixedGraph g = testutil::random_graph(rng, n, density);
        ++graphs;
        MatroidView m(g, rng.next());
        for (int q = 0; q < 50; ++q) {
            auto s = testutil::subset_of(g.edges(), rng);
            ++queries;
            if (m.is_independent(s) != count_matroid::independent_by_counts(s)) {
                ++disagreements;
            }
        }
    }
    detail = std::to_string(graphs) + " graphs, " + std::to_string(queries) +
             " queries, " + std::to_string(disagreements) + " disagreements";
    return disagreements == 0;
}

// --------------------------------------------------------------- criterion 3

bool circuit_structure(std::string& detail) {
    SplitMix64 rng(20250802);
    std::size_t circuits = 0, violations = 0;
    // dependent random graphs plus grown mixed circuits
    for (int round = 0; round < 160; ++round) {
        MixedGraph g = round % 2 == 0
                           ? testutil::random_graph(rng, 3 + rng.index(4), 450 + rng.below(400))
                           : testutil::random_mixed_circuit(rng, rng.index(4));
        MatroidView m(g, rng.next());
        if (m.is_independent(g.edges())) continue;
        auto c = m.find_circuit(g.edges());
        MixedGraph sub = testutil::spanned_subgraph(c);
        ++circuits;
        bool ok = true;
        ok &= is_min_degree_three(sub);
        ok &= is_k_connected(sub, 2);
        ok &= testutil::edge_connectivity_at_least(sub, 3);
        auto cls = count_matroid::classify_circuit_by_counts(sub);
        if (cls == count_matroid::CircuitClass::MixedCircuit) {
            ok &= sub.num_edges() == 2 * sub.num_vertices() - 1;
        } else if (cls == count_matroid::CircuitClass::PureCircuit) {
            ok &= sub.num_edges() == 2 * sub.num_vertices() - 2;
        } else {
            ok = false;
        }
        if (!ok) ++violations;
    }
    detail = std::to_string(circuits) + " circuits, " + std::to_string(violations) +
             " violations";
    return circuits >= 50 && violations == 0;
}

// --------------------------------------------------------------- criterion 4

bool ear_decomposition_suite(std::string& detail) {
    SplitMix64 rng(20250803);
    std::size_t graphs = 0, violations = 0;
    for (int round = 0; round < 200; ++round) {
        auto [g, cert] = random_construct(rng.next(), 1 + rng.index(10),
                                          round % 2 ? ConstructionMode::DirectionBalanced
                                                    : ConstructionMode::MConnOnly);
        MatroidView m(g, rng.next());
        ++graphs;
        bool ok = true;
        auto d = ear_decomposition_mixed(m);
        ok &= d.cumulative.back() == g.edges();
        for (std::size_t i = 0; i < d.circuits.size() && ok; ++i) {
            ok &= testutil::is_mixed_circuit(m, d.circuits[i]);
            if (i == 0) continue;
            std::vector<Edge> overlap;
            std::set_intersection(d.circuits[i].begin(), d.circuits[i].end(),
                                  d.cumulative[i - 1].begin(), d.cumulative[i - 1].end(),
                                  std::back_inserter(overlap));
            ok &= !overlap.empty();                                   // E1
            ok &= !d.lobes[i].empty();                                // E2
            ok &= d.ranks[i] - d.ranks[i - 1] == d.lobes[i].size() - 1; // telescoping
            auto fresh = ear_new_vertices(d, i);
            ok &= d.lobes[i].size() == 2 * fresh.size() + 1;
            if (!fresh.empty()) {
                ok &= components_excluding(g.induced(fresh), {}).size() == 1;
            }
        }
        if (!ok) ++violations;
    }
    detail = std::to_string(graphs) + " graphs, " + std::to_string(violations) +
             " violations";
    return graphs == 200 && violations == 0;
}

// --------------------------------------------------------------- criterion 5

bool preservation_suite(std::string& detail) {
    SplitMix64 rng(20250804);
    std::size_t graphs = 0, violations = 0;
    int counter = 1000;
    while (graphs < 100) {
        auto [g, cert] = random_construct(rng.next(), 1 + rng.index(8),
                                          ConstructionMode::DirectionBalanced);
        ++graphs;
        bool ok = true;

        auto check_mconn_mixed = [&](const MixedGraph& h) {
            MatroidView m(h, rng.next());
            return h.is_mixed() && is_m_connected(m);
        };

        // edge addition
        std::vector<Edge> absent;
        const auto& vs = g.vertices();
        for (std::size_t a = 0; a < vs.size(); ++a) {
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                for (EdgeKind k : {D, L}) {
                    if (!g.has_edge(vs[a], vs[b], k)) absent.emplace_back(vs[a], vs[b], k);
                }
            }
        }
        if (!absent.empty()) {
            ok &= check_mconn_mixed(
                apply_move(g, EdgeAddition{absent[rng.index(absent.size())]}));
        }

        // 1-extension
        ok &= check_mconn_mixed(testutil::random_one_extension(g, rng, counter));

        // 2-sum with a direction-pure K4: M-connectivity plus the balance law
        std::vector<Edge> dirs;
        for (const auto& e : g.edges()) {
            if (e.kind == D) dirs.push_back(e);
        }
        const Edge& de = dirs[rng.index(dirs.size())];
        MixedGraph dsum = apply_move(
            g, TwoSumPureK4{de.u, de.v, D,
                            {"p" + std::to_string(counter++), "p" + std::to_string(counter++)}});
        ok &= check_mconn_mixed(dsum);
        ok &= is_direction_balanced(dsum) == is_direction_balanced(g);
        ok &= is_direction_balanced(dsum); // corpus graphs are direction-balanced

        // 2-sum with a length-pure K4 on a length edge: M-connected but the
        // new separation has no direction edge inside the pure side
        std::vector<Edge> lens;
        for (const auto& e : g.edges()) {
            if (e.kind == L) lens.push_back(e);
        }
        if (!lens.empty()) {
            const Edge& le = lens[rng.index(lens.size())];
            MixedGraph lsum = apply_move(g, TwoSumPureK4{le.u, le.v, L,
                                                         {"p" + std::to_string(counter++),
                                                          "p" + std::to_string(counter++)}});
            ok &= check_mconn_mixed(lsum);
            ok &= !is_direction_balanced(lsum);
        }

        if (!ok) ++violations;
    }
    detail = std::to_string(graphs) + " graphs, " + std::to_string(violations) +
             " violations";
    return violations == 0;
}

// --------------------------------------------------------------- criterion 6

bool construction_round_trip(ConstructionMode mode, std::string& detail) {
    SplitMix64 rng(mode == ConstructionMode::DirectionBalanced ? 20250805 : 20250806);
    std::size_t graphs = 0, failures = 0, theorem_violations = 0, move_total = 0;
    while (graphs < 200) {
        auto [g, fwd] = random_construct(rng.next(), 1 + rng.index(8), mode);
        ++graphs;
        try {
            MatroidView m(g, rng.next());
            auto cert = decompose(m, mode);
            move_total += cert.moves.size();
            if (replay(cert) != g) ++failures;
        } catch (const Error& e) {
            if (e.code() == ErrorCode::TheoremViolation) {
                ++theorem_violations;
            } else {
                ++failures;
            }
        }
    }
    detail = std::to_string(graphs) + " graphs, " + std::to_string(move_total) +
             " replayed moves, " + std::to_string(theorem_violations) +
             " theorem violations, " + std::to_string(failures) + " mismatches";
    return failures == 0 && theorem_violations == 0;
}

// --------------------------------------------------------------- criterion 7

bool rigidity_trichotomy(std::string& detail) {
    SplitMix64 rng(20250807);
    std::size_t graphs = 0, unbalanced = 0, failures = 0;
    while (graphs < 200) {
        auto [g, fwd] = random_construct(rng.next(), 1 + rng.index(8),
                                         graphs % 2 ? ConstructionMode::MConnOnly
                                                    : ConstructionMode::DirectionBalanced);
        ++graphs;
        MatroidView m(g, rng.next());
        bool verdict = is_globally_rigid_mconn(g, m);
        if (verdict != is_direction_balanced(g)) {
            ++failures;
            continue;
        }
        if (!verdict) {
            ++unbalanced;
            RealisationQ p = generic_realisation(g, rng.next());
            Witness w = build_witness(g, p);
            bool ok = check_equivalent(g, p, w.q, 0.0, Domain::ExactRational);
            ok &= equivalence_residual(g, p, w.q) <= 1e-9;
            ok &= !check_congruent(g, p, w.q, 0.0, Domain::ExactRational);
            ok &= congruence_residual(g, p, w.q) >= 1e-6;
            if (!ok) ++failures;
        }
    }
    detail = std::to_string(graphs) + " graphs, " + std::to_string(unbalanced) +
             " witnesses, " + std::to_string(failures) + " failures";
    return failures == 0 && unbalanced > 0;
}

// --------------------------------------------------------------- criterion 8

bool redundant_rigidity(std::string& detail) {
    SplitMix64 rng(20250808);
    std::size_t graphs = 0, failures = 0, edge_checks = 0;
    while (graphs < 100) {
        auto [g, fwd] =
            random_construct(rng.next(), 1 + rng.index(8), ConstructionMode::MConnOnly);
        ++graphs;
        MatroidView m(g, rng.next());
        std::size_t target = 2 * g.num_vertices() - 2;
        for (const auto& e : g.edges()) {
            std::vector<Edge> rest;
            for (const auto& f : g.edges()) {
                if (f != e) rest.push_back(f);
            }
            ++edge_checks;
            if (m.rank(rest) != target) ++failures;
        }
    }
    detail = std::to_string(graphs) + " graphs, " + std::to_string(edge_checks) +
             " edge deletions, " + std::to_string(failures) + " failures";
    return failures == 0;
}

// --------------------------------------------------------------- criterion 9

bool crossing_exclusion(std::string& detail) {
    SplitMix64 rng(20250809);
    std::size_t pure_sided = 0, violations = 0;
    for (int round = 0; round < 120; ++round) {
        auto [g, fwd] =
            random_construct(rng.next(), 1 + rng.index(8), ConstructionMode::MConnOnly);
        if (!g.is_mixed()) continue;
        auto seps = two_separations(g);
        for (const auto& s1 : seps) {
            bool pure_side = false;
            for (const auto& side : {s1.side_a, s1.side_b}) {
                std::set<VertexId> in_side(side.begin(), side.end());
                bool dir = false, len = false;
                for (const auto& e : g.edges()) {
                    if (in_side.count(e.u) || in_side.count(e.v)) {
                        (e.kind == EdgeKind::Direction ? dir : len) = true;
                    }
                }
                pure_side |= !(dir && len);
            }
            if (!pure_side) continue;
            ++pure_sided;
            for (const auto& s2 : seps) {
                if (crossing(s1, s2, g)) ++violations;
            }
        }
    }
    detail = std::to_string(pure_sided) + " pure-sided separations, " +
             std::to_string(violations) + " crossings";
    return pure_sided > 0 && violations == 0;
}

// -------------------------------------------------------------- criterion 10

bool scale_smoke(std::string& detail) {
    SplitMix64 rng(20250810);
    MixedGraph g = testutil::k3plus();
    int counter = 3;
    while (g.num_vertices() < 50) g = testutil::random_one_extension(g, rng, counter);

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "dlrigid_acceptance";
    fs::create_directories(dir);
    fs::path graph_path = dir / "scale50.json";
    {
        std::ofstream out(graph_path);
        out << graph_to_json(g).dump(2) << "\n";
    }

    json verdicts[2];
    double worst = 0;
    for (int run = 0; run < 2; ++run) {
        fs::path out_path = dir / ("scale50_out" + std::to_string(run) + ".json");
        std::string cmd = std::string(DLRIGID_CLI_PATH) + " analyze " +
                          graph_path.string() + " --seed " + std::to_string(run + 1) +
                          " > " + out_path.string();
        auto start = Clock::now();
        int rc = std::system(cmd.c_str());
        worst = std::max(worst, seconds_since(start));
        if (rc != 0) {
            detail = "analyze exited with " + std::to_string(rc);
            return false;
        }
        std::ifstream in(out_path);
        std::stringstream ss;
        ss << in.rdbuf();
        verdicts[run] = json::parse(ss.str());
    }
    for (const char* key : {"independent", "circuit", "m_connected", "rigid",
                            "redundantly_rigid", "two_connected", "direction_balanced",
                            "length_balanced"}) {
        if (verdicts[0][key] != verdicts[1][key]) {
            detail = std::string("seed disagreement on ") + key;
            return false;
        }
    }
    std::ostringstream msg;
    msg << "|V|=" << g.num_vertices() << " |E|=" << g.num_edges() << ", slowest run "
        << worst << "s";
    detail = msg.str();
    return worst < 5.0;
}

} // namespace

int main() {
    Harness h;
    auto timed = [&](int num, const std::string& name, double budget, auto&& fn) {
        std::string detail;
        auto start = Clock::now();
        bool ok = false;
        try {
            ok = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = seconds_since(start);
        if (budget > 0 && secs > budget) {
            ok = false;
            detail += " [over " + std::to_string(budget) + "s budget]";
        }
        h.report(num, name, ok, secs, detail);
    };

    timed(1, "base facts", 1.0, base_facts);
    timed(2, "oracle agreement", 60.0, oracle_agreement);
    timed(3, "circuit structure", 0, circuit_structure);
    timed(4, "ear decompositions", 120.0, ear_decomposition_suite);
    timed(5, "move preservation", 0, preservation_suite);
    timed(6, "round trip (dbal)", 300.0, [](std::string& d) {
        return construction_round_trip(ConstructionMode::DirectionBalanced, d);
    });
    timed(6, "round trip (mconn)", 300.0, [](std::string& d) {
        return construction_round_trip(ConstructionMode::MConnOnly, d);
    });
    timed(7, "global rigidity trichotomy", 0, rigidity_trichotomy);
    timed(8, "redundant rigidity", 0, redundant_rigidity);
    timed(9, "crossing exclusion", 0, crossing_exclusion);
    timed(10, "scale smoke test", 0, scale_smoke);

    if (h.failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", h.failures);
    return 1;
}

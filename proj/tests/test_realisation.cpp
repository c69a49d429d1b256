#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dlrigid/realisation.hpp"
#include "helpers.hpp"

using namespace dlrigid;
using testutil::D;
using testutil::L;

TEST_CASE("generic realisation is deterministic and seed-sensitive") {
    MixedGraph g = testutil::k3plus();
    CHECK(generic_realisation(g, 5) == generic_realisation(g, 5));
    int distinct = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto p = generic_realisation(g, 2 * s);
        auto q = generic_realisation(g, 2 * s + 1);
        std::multiset<std::string> mp, mq;
        for (const auto& [v, pt] : p) {
            mp.insert(pt.x.to_string());
            mp.insert(pt.y.to_string());
        }
        for (const auto& [v, pt] : q) {
            mq.insert(pt.x.to_string());
            mq.insert(pt.y.to_string());
        }
        distinct += mp != mq;
    }
    CHECK(distinct == 100);
}

TEST_CASE("rigidity matrix rows follow the length/direction conventions") {
    MixedGraph len({"u", "v"}, {{"u", "v", L}});
    RealisationQ p;
    p["u"] = {BigRational(0), BigRational(0)};
    p["v"] = {BigRational(1), BigRational(0)};
    auto m = rigidity_matrix(len, p);
    REQUIRE(m.rows.size() == 1);
    // u columns get p(u)-p(v) = (-1, 0), v columns the negation
    CHECK(m.rows[0] == std::vector<BigRational>{-1, 0, 1, 0});

    MixedGraph dir({"u", "v"}, {{"u", "v", D}});
    auto md = rigidity_matrix(dir, p);
    // perp(x, y) = (y, -x) applied to (-1, 0) gives (0, 1)
    CHECK(md.rows[0] == std::vector<BigRational>{0, 1, 0, -1});
}

TEST_CASE("coincident endpoints are rejected") {
    MixedGraph g({"u", "v"}, {{"u", "v", L}});
    RealisationQ p;
    p["u"] = {BigRational(3), BigRational(4)};
    p["v"] = {BigRational(3), BigRational(4)};
    CHECK_THROWS_AS(rigidity_matrix(g, p), Error);
}

TEST_CASE("K3+ has rank 4 = 2|V|-2 by exact elimination") {
    MixedGraph g = testutil::k3plus();
    auto m = rigidity_matrix(g, generic_realisation(g, 17));
    CHECK(m.rows.size() == 5);
    CHECK(m.rows[0].size() == 6);
    CHECK(rank(m) == 4);
}

TEST_CASE("direction-pure K4 has rank 5 = 2|V|-3 by exact elimination") {
    MixedGraph g = pure_k4(D, {"a", "b", "c", "d"});
    auto m = rigidity_matrix(g, generic_realisation(g, 23));
    CHECK(rank(m) == 5);
}

TEST_CASE("infinitesimal rigidity") {
    CHECK(infinitesimally_rigid(testutil::k3plus()));
    CHECK(infinitesimally_rigid(testutil::k3minus()));
    CHECK(!infinitesimally_rigid(pure_k4(D, {"a", "b", "c", "d"})));
    CHECK(!infinitesimally_rigid(pure_k4(L, {"a", "b", "c", "d"})));
    CHECK(infinitesimally_rigid(MixedGraph({"solo"}, {})));
    CHECK(!infinitesimally_rigid(MixedGraph({"x", "y"}, {{"x", "y", L}})));
}

TEST_CASE("translations lie in the kernel exactly") {
    SplitMix64 rng(31);
    for (int round = 0; round < 10; ++round) {
        MixedGraph g = testutil::random_graph(rng, 5, 500);
        if (g.num_edges() == 0) continue;
        auto m = rigidity_matrix(g, generic_realisation(g, rng.next()));
        for (int axis = 0; axis < 2; ++axis) {
            for (const auto& row : m.rows) {
                BigRational dot(0);
                for (std::size_t c = static_cast<std::size_t>(axis); c < row.size(); c += 2) {
                    dot += row[c];
                }
                CHECK(dot.is_zero());
            }
        }
        CHECK(rank(m) <= 2 * g.num_vertices() - 2);

        // same identity over the prime field
        FpField f(kPrimeA);
        auto coords = generic_realisation_fp(g, rng.next(), f);
        for (const auto& row : rigidity_rows_fp(g.edges(), g.vertices(), coords, f)) {
            for (int axis = 0; axis < 2; ++axis) {
                std::uint64_t dot = 0;
                for (std::size_t c = static_cast<std::size_t>(axis); c < row.size(); c += 2) {
                    dot = f.add(dot, row[c]);
                }
                CHECK(dot == 0);
            }
        }
    }
}

TEST_CASE("fp and exact-rational ranks agree on a random corpus") {
    SplitMix64 rng(41);
    for (int round = 0; round < 25; ++round) {
        MixedGraph g = testutil::random_graph(rng, 4 + rng.index(2), 400);
        if (g.num_edges() == 0) continue;
        auto exact = rank(rigidity_matrix(g, generic_realisation(g, rng.next())));
        MatroidView m(g, rng.next());
        CHECK(m.rank_all() == exact);
    }
}

TEST_CASE("equivalence and congruence under translation and point reflection") {
    MixedGraph g = testutil::k3plus();
    RealisationQ p = generic_realisation(g, 77);

    RealisationQ translated;
    for (const auto& [v, pt] : p) {
        translated[v] = {pt.x + BigRational(7), pt.y - BigRational(3)};
    }
    CHECK(check_equivalent(g, p, translated));
    CHECK(check_congruent(g, p, translated));
    CHECK(check_equivalent(g, p, translated, 1e-9, Domain::Float64));
    CHECK(check_congruent(g, p, translated, 1e-6, Domain::Float64));

    RealisationQ rotated; // 180 degrees about the origin
    for (const auto& [v, pt] : p) rotated[v] = {-pt.x, -pt.y};
    CHECK(check_equivalent(g, p, rotated));
    CHECK(check_congruent(g, p, rotated));

    RealisationQ scaled;
    for (const auto& [v, pt] : p) scaled[v] = {pt.x * BigRational(2), pt.y * BigRational(2)};
    CHECK(!check_equivalent(g, p, scaled)); // lengths change
    CHECK(!check_congruent(g, p, scaled));

    // a genuine 90-degree rotation breaks direction constraints
    RealisationQ quarter;
    for (const auto& [v, pt] : p) quarter[v] = {-pt.y, pt.x};
    CHECK(!check_equivalent(g, p, quarter));
}

TEST_CASE("congruence residual separates congruent from distorted") {
    MixedGraph g = testutil::k3minus();
    RealisationQ p = generic_realisation(g, 5);
    RealisationQ q = p;
    q["a"] = {q["a"].x + BigRational(1), q["a"].y};
    CHECK(!check_congruent(g, p, q));
    CHECK(congruence_residual(g, p, q) > 1e-6);
    RealisationQ shifted;
    for (const auto& [v, pt] : p) shifted[v] = {pt.x + BigRational(10), pt.y};
    CHECK(congruence_residual(g, p, shifted) < 1e-6);
}

#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "sfcsim/errors.hpp"

using namespace sfcsim;
using namespace sfcsim::testing;

namespace {

SubstrateTopology three_points() {
    std::vector<SubstrateSnapshot> snaps;
    for (int k = 0; k < 3; ++k) snaps.push_back(uniform_chain(2, 1.0 + k));
    return SubstrateTopology({0, 10, 20}, std::move(snaps));
}

SquareMatrix<Amount> full_band(const SubstrateSnapshot& s) {
    SquareMatrix<Amount> m(s.node_count());
    for (std::size_t i = 0; i < s.node_count(); ++i)
        for (std::size_t j = 0; j < s.node_count(); ++j)
            m(i, j) = s.link_band_or_zero(static_cast<NodeId>(i), static_cast<NodeId>(j));
    return m;
}

}  // namespace

TEST_CASE("snapshot_at uses floor semantics") {
    const auto topo = three_points();
    CHECK(&snapshot_at(topo, 15) == &topo.snapshot(1));
    CHECK(&snapshot_at(topo, 0) == &topo.snapshot(0));
    CHECK(&snapshot_at(topo, 25) == &topo.snapshot(2));
    CHECK(&snapshot_at(topo, 9.999) == &topo.snapshot(0));
    CHECK(&snapshot_at(topo, 10) == &topo.snapshot(1));
    CHECK_THROWS_AS(snapshot_at(topo, -0.5), TimeBeforeStart);
}

TEST_CASE("snapshot_at is piecewise constant") {
    const auto topo = three_points();
    for (double t = 0; t < 30; t += 0.25) {
        const std::size_t expect = t < 10 ? 0 : t < 20 ? 1 : 2;
        CHECK(snapshot_at(topo, t) == topo.snapshot(expect));
    }
}

TEST_CASE("topology construction rejects bad time points") {
    CHECK_THROWS_AS(SubstrateTopology({0, 0}, {uniform_chain(2), uniform_chain(2)}), ValidationError);
    CHECK_THROWS_AS(SubstrateTopology({0, 5}, {uniform_chain(2)}), ValidationError);
    CHECK_THROWS_AS(SubstrateTopology({0, 5}, {uniform_chain(2), uniform_chain(3)}), ValidationError);
}

TEST_CASE("shortest_feasible_path basic cases") {
    const auto s = uniform_chain(3);
    SUBCASE("only path") {
        auto p = shortest_feasible_path(s, 0, 2, 1_amt);
        REQUIRE(p);
        CHECK(p->nodes == std::vector<NodeId>{0, 1, 2});
    }
    SUBCASE("colocation") {
        auto p = shortest_feasible_path(s, 1, 1, 1_amt);
        REQUIRE(p);
        CHECK(p->nodes == std::vector<NodeId>{1});
        CHECK(path_latency(s, *p) == Millis{});
    }
    SUBCASE("filtered edge disconnects") {
        auto residual = full_band(s);
        residual.set_sym(1, 2, 10_amt);
        CHECK_FALSE(shortest_feasible_path(s, 0, 2, 20_amt, residual));
        CHECK(shortest_feasible_path(s, 0, 2, 10_amt, residual));
    }
}

TEST_CASE("shortest_feasible_path prefers low latency then lexicographic order") {
    // Square 0-1-3, 0-2-3 with equal latency: [0,1,3] wins the tie.
    SubstrateSnapshot s(4);
    for (int v = 0; v < 4; ++v) s.set_node(v, 1_amt, 1_amt);
    s.add_edge(0, 1, 1_ms, 10_amt);
    s.add_edge(1, 3, 1_ms, 10_amt);
    s.add_edge(0, 2, 1_ms, 10_amt);
    s.add_edge(2, 3, 1_ms, 10_amt);
    CHECK(shortest_feasible_path(s, 0, 3)->nodes == std::vector<NodeId>{0, 1, 3});
    // Making the upper route slower flips the choice.
    s.add_edge(1, 3, 2_ms, 10_amt);
    CHECK(shortest_feasible_path(s, 0, 3)->nodes == std::vector<NodeId>{0, 2, 3});
    // A direct but slower edge loses to the two-hop route.
    s.add_edge(0, 3, 5_ms, 10_amt);
    CHECK(shortest_feasible_path(s, 0, 3)->nodes == std::vector<NodeId>{0, 2, 3});
}

TEST_CASE("path_latency") {
    const auto s = uniform_chain(4);
    CHECK(path_latency(s, PhysicalPath{{0, 1, 2}}) == 2_ms);
    CHECK(path_latency(s, PhysicalPath{{3}}) == 0_ms);
    CHECK_THROWS_AS(path_latency(s, PhysicalPath{{0, 2}}), InvalidPath);
}

TEST_CASE("shortest_feasible_path matches exhaustive enumeration") {
    Rng rng(7);
    for (int iter = 0; iter < 400; ++iter) {
        const int n = 2 + static_cast<int>(uniform_index(rng, 7));  // up to 8 nodes
        SubstrateSnapshot s(n);
        SquareMatrix<Amount> residual(n);
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (uniform_index(rng, 100) < 40) {
                    // Few distinct latencies so ties are common.
                    s.add_edge(a, b, Millis::from_raw(static_cast<std::int64_t>(uniform_index(rng, 3)) * Millis::kScale), 50_amt);
                    residual.set_sym(a, b, Amount::from_raw(static_cast<std::int64_t>(uniform_index(rng, 50)) * Amount::kScale));
                }
            }
        }
        const Amount min_band = Amount::from_raw(static_cast<std::int64_t>(uniform_index(rng, 40)) * Amount::kScale);
        const NodeId src = static_cast<NodeId>(uniform_index(rng, n));
        const NodeId dst = static_cast<NodeId>(uniform_index(rng, n));

        auto all = oracle::simple_paths(s, src, dst, [&](NodeId a, NodeId b) { return residual(a, b) >= min_band; });
        auto got = shortest_feasible_path(s, src, dst, min_band, residual);
        if (all.empty()) {
            CHECK_FALSE(got);
            continue;
        }
        REQUIRE(got);
        CHECK(path_valid(s, *got));
        // Oracle's preferred path: min latency, then lexicographic.
        const oracle::Path* best = &all.front();
        for (const auto& p : all) {
            if (oracle::latency_raw(s, p) < oracle::latency_raw(s, *best)) best = &p;
        }
        CHECK(got->nodes == *best);
        CHECK(path_latency(s, *got).raw() == oracle::latency_raw(s, *best));

        auto back = shortest_feasible_path(s, dst, src, min_band, residual);
        REQUIRE(back);
        CHECK(path_latency(s, *back) == path_latency(s, *got));
    }
}

TEST_CASE("topology json round trip and validation") {
    const auto topo = three_points();
    CHECK(topology_from_json(topology_to_json(topo)) == topo);

    auto j = topology_to_json(topo);
    j["snapshots"][1]["adjacency"][0][1] = 0;  // break symmetry
    try {
        topology_from_json(j);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(e.location() == "snapshots[1].adjacency[0][1]");
    }

    auto neg = topology_to_json(topo);
    neg["snapshots"][0]["node_cpu"][0] = -1;
    CHECK_THROWS_AS(topology_from_json(neg), ValidationError);
}

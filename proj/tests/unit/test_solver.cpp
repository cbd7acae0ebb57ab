#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "sfcsim/errors.hpp"

using namespace sfcsim;
using namespace sfcsim::testing;

namespace {

SolverDecision solve(Solver& solver, const SfcRequest& r, const VnfCatalog& c, const SubstrateSnapshot& s,
                     const ResourceLedger& l, std::uint64_t seed = 1) {
    Rng rng(seed);
    return solver.solve({r, c, s, l}, rng);
}

std::vector<std::unique_ptr<Solver>> all_solvers() {
    std::vector<std::unique_ptr<Solver>> out;
    for (const auto& name : known_solvers()) out.push_back(make_solver(name));
    return out;
}

}  // namespace

TEST_CASE("uniform_index stays in range and covers every value") {
    Rng rng(3);
    std::vector<int> hits(7, 0);
    for (int i = 0; i < 7000; ++i) ++hits[uniform_index(rng, 7)];
    for (int h : hits) CHECK(h > 800);
    CHECK(uniform_index(rng, 1) == 0);
}

TEST_CASE("solver contract basics") {
    for (auto& solver : all_solvers()) {
        CAPTURE(solver->name());
        SUBCASE("no node has enough cpu") {
            const auto s = uniform_chain(3, 0.1, 512);
            const auto c = uniform_catalog(2, 0.2, 64);
            ResourceLedger l(s);
            auto d = solve(*solver, request(0, 0, 1, 0, 2, {0, 1}), c, s, l);
            REQUIRE_FALSE(accepted(d));
            CHECK(std::get<Reject>(d).reason == FailureReason::NodeCpuInsufficient);
        }
        SUBCASE("no node has enough ram") {
            const auto s = uniform_chain(3, 4, 63);
            const auto c = uniform_catalog(1, 0.2, 64);
            ResourceLedger l(s);
            auto d = solve(*solver, request(0, 0, 1, 0, 2, {0}), c, s, l);
            REQUIRE_FALSE(accepted(d));
            CHECK(std::get<Reject>(d).reason == FailureReason::NodeRamInsufficient);
        }
        SUBCASE("single node substrate") {
            const auto s = uniform_chain(1);
            const auto c = uniform_catalog(3);
            ResourceLedger l(s);
            const auto r = request(0, 0, 1, 0, 0, {0, 1, 2}, 1);
            auto d = solve(*solver, r, c, s, l);
            REQUIRE(accepted(d));
            const auto& plan = std::get<Accept>(d).plan;
            CHECK(plan.vnf_placement == std::vector<NodeId>{0, 0, 0});
            CHECK(plan.total_latency == 0_ms);
            CHECK_FALSE(check_plan(plan, l, s, r, c));
        }
        SUBCASE("disconnected endpoints") {
            SubstrateSnapshot s(2);
            s.set_node(0, 4_amt, 512_amt);
            s.set_node(1, 4_amt, 512_amt);
            ResourceLedger l(s);
            auto d = solve(*solver, request(0, 0, 1, 0, 1, {0}), uniform_catalog(1), s, l);
            REQUIRE_FALSE(accepted(d));
            CHECK(std::get<Reject>(d).reason == FailureReason::NoPath);
        }
        SUBCASE("bandwidth shortfall is not reported as a missing path") {
            // Only node 0 can host the first VNF and only node 2 the second;
            // the 0-1-2 route has 5 Mbps but the link needs 20.
            const auto s = chain_snapshot(3, 1.0, 5, {0.2, 0, 0.2}, {64, 64, 64});
            ResourceLedger l(s);
            auto d = solve(*solver, request(0, 0, 1, 0, 2, {0, 0}), uniform_catalog(1), s, l);
            REQUIRE_FALSE(accepted(d));
            CHECK(std::get<Reject>(d).reason == FailureReason::LinkBandwidthInsufficient);
        }
        SUBCASE("latency bound") {
            const auto s = chain_snapshot(3, 1.0, 100, {0.2, 0, 0}, {64, 0, 0});
            ResourceLedger l(s);
            auto d = solve(*solver, request(0, 0, 1, 2, 2, {0}, 3.5), uniform_catalog(1), s, l);
            REQUIRE_FALSE(accepted(d));
            CHECK(std::get<Reject>(d).reason == FailureReason::QosLatencyViolated);
        }
    }
}

TEST_CASE("greedy placement") {
    GreedySolver greedy;
    SUBCASE("first VNF of the example goes to the 4-core node") {
        const ExampleA a;
        ResourceLedger l(a.topo.snapshot(0));
        auto d = solve(greedy, a.requests[0], a.catalog, a.topo.snapshot(0), l);
        REQUIRE(accepted(d));
        CHECK(std::get<Accept>(d).plan.vnf_placement.front() == 1);
    }
    SUBCASE("ties go to the smaller index") {
        const auto s = uniform_chain(2);
        ResourceLedger l(s);
        auto d = solve(greedy, request(0, 0, 1, 1, 1, {0}), uniform_catalog(1), s, l);
        REQUIRE(accepted(d));
        CHECK(std::get<Accept>(d).plan.vnf_placement == std::vector<NodeId>{0});
    }
    SUBCASE("seed does not matter") {
        Rng pick(11);
        for (int i = 0; i < 100; ++i) {
            auto sc = random_scenario(pick, 8, 3);
            const auto& s = sc.topo.snapshot(0);
            ResourceLedger l(s);
            for (const auto& r : sc.requests) {
                auto a = solve(greedy, r, sc.catalog, s, l, 1);
                auto b = solve(greedy, r, sc.catalog, s, l, 999);
                CHECK(accepted(a) == accepted(b));
                if (accepted(a)) CHECK(std::get<Accept>(a).plan == std::get<Accept>(b).plan);
                else CHECK(std::get<Reject>(a).reason == std::get<Reject>(b).reason);
            }
        }
    }
}

TEST_CASE("random solver") {
    SUBCASE("golden placement on the three-node example, seed 42") {
        const ExampleA a;
        const auto& s = a.topo.snapshot(0);
        ResourceLedger l(s);
        RandomSolver solver;
        Rng rng(42);
        auto d0 = solver.solve({a.requests[0], a.catalog, s, l}, rng);
        REQUIRE(accepted(d0));
        const auto& p0 = std::get<Accept>(d0).plan;
        CHECK(p0.vnf_placement == std::vector<NodeId>{0, 2, 1});
        CHECK(p0.total_latency == 4_ms);
        l.allocate(p0);
        auto d1 = solver.solve({a.requests[1], a.catalog, s, l}, rng);
        REQUIRE(accepted(d1));
        const auto& p1 = std::get<Accept>(d1).plan;
        CHECK(p1.vnf_placement == std::vector<NodeId>{0, 2, 2});
        CHECK(p1.total_latency == 6_ms);
    }
    SUBCASE("single candidate per position matches greedy") {
        // Demands 0.3, 0.2, 0.1 against capacities 0.1, 0.2, 0.3 leave
        // exactly one host for each VNF in turn (nodes 2, 1, 0).
        const auto s = chain_snapshot(3, 1.0, 100, {0.1, 0.2, 0.3}, {64, 64, 64});
        ResourceLedger l(s);
        RandomSolver random;
        GreedySolver greedy;
        const auto r = request(0, 0, 1, 0, 2, {0, 1, 2}, 50);
        VnfCatalog c;
        c.add_template({0, 0.3_amt, 1_amt});
        c.add_template({1, 0.2_amt, 1_amt});
        c.add_template({2, 0.1_amt, 1_amt});
        c.add_link(0, 1, 5_amt);
        c.add_link(1, 2, 5_amt);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto a = solve(random, r, c, s, l, seed);
            auto b = solve(greedy, r, c, s, l);
            REQUIRE(accepted(a));
            REQUIRE(accepted(b));
            CHECK(std::get<Accept>(a).plan == std::get<Accept>(b).plan);
            CHECK(std::get<Accept>(a).plan.vnf_placement == std::vector<NodeId>{2, 1, 0});
        }
    }
    SUBCASE("reproducible under a fixed seed") {
        Rng pick(5);
        RandomSolver solver;
        for (int i = 0; i < 50; ++i) {
            auto sc = random_scenario(pick, 8, 4);
            const auto& s = sc.topo.snapshot(0);
            ResourceLedger l(s);
            for (const auto& r : sc.requests) {
                auto a = solve(solver, r, sc.catalog, s, l, 77);
                auto b = solve(solver, r, sc.catalog, s, l, 77);
                CHECK(accepted(a) == accepted(b));
                if (accepted(a) && accepted(b)) CHECK(std::get<Accept>(a).plan == std::get<Accept>(b).plan);
            }
        }
    }
}

TEST_CASE("every Accept passes check_plan and the independent checker") {
    Rng pick(2024);
    for (auto& solver : all_solvers()) {
        CAPTURE(solver->name());
        Rng rng(9);
        int accepts = 0;
        for (int i = 0; i < 300; ++i) {
            auto sc = random_scenario(pick, 8, 6);
            const auto& s = sc.topo.snapshot(0);
            ResourceLedger l(s);
            for (const auto& r : sc.requests) {
                auto d = solver->solve({r, sc.catalog, s, l}, rng);
                if (!accepted(d)) continue;
                ++accepts;
                const auto& plan = std::get<Accept>(d).plan;
                CHECK_FALSE(check_plan(plan, l, s, r, sc.catalog));
                std::vector<oracle::Path> paths;
                for (const auto& p : plan.virtual_link_paths) paths.push_back(p.nodes);
                CHECK(oracle::embedding_feasible(s, oracle::Residuals::of(l), r, sc.catalog, plan.vnf_placement, paths));
                l.allocate(plan);
                CHECK(l.all_free_nonnegative());
            }
        }
        CHECK(accepts > 100);
    }
}

TEST_CASE("greedy Accept implies the exhaustive search finds a plan") {
    Rng pick(77);
    GreedySolver greedy;
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        auto sc = random_scenario(pick, 4, 4);
        const auto& s = sc.topo.snapshot(0);
        ResourceLedger l(s);
        for (const auto& r : sc.requests) {
            auto d = solve(greedy, r, sc.catalog, s, l);
            if (!accepted(d)) continue;
            ++checked;
            CHECK(oracle::embeddable(s, oracle::Residuals::of(l), r, sc.catalog));
            l.allocate(std::get<Accept>(d).plan);
        }
    }
    CHECK(checked > 20);
}

TEST_CASE("make_solver") {
    CHECK(make_solver("greedy")->name() == "greedy");
    CHECK(make_solver("random")->name() == "random");
    CHECK_THROWS_AS(make_solver("pso"), ValidationError);
}

#include <doctest.h>

#include "fixtures.hpp"
#include "sfcsim/errors.hpp"

using namespace sfcsim;
using namespace sfcsim::testing;

namespace {

// All VNFs of the request on one node, routed by shortest path.
EmbeddingPlan colocated(const SfcRequest& r, const VnfCatalog& c, const SubstrateSnapshot& s, NodeId node) {
    std::vector<PhysicalPath> paths;
    paths.push_back(*shortest_feasible_path(s, r.ingress, node));
    for (std::size_t i = 1; i < r.vnf_chain.size(); ++i) paths.push_back(PhysicalPath{{node}});
    paths.push_back(*shortest_feasible_path(s, node, r.egress));
    return make_plan(r, c, s, std::vector<NodeId>(r.vnf_chain.size(), node), std::move(paths));
}

}  // namespace

TEST_CASE("check_plan and allocate on the three-node example") {
    const ExampleA a;
    const auto& snap = a.topo.snapshot(0);
    ResourceLedger ledger(snap);
    const auto plan = colocated(a.requests[0], a.catalog, snap, 1);
    CHECK_FALSE(check_plan(plan, ledger, snap, a.requests[0], a.catalog));
    ledger.allocate(plan);
    CHECK(ledger.ram_free(1) == 320_amt);
    CHECK(ledger.cpu_free(1) == Amount::from_double(3.4));
    CHECK(ledger.conserves());
}

TEST_CASE("check_plan reports deficits in order") {
    const auto snap = chain_snapshot(2, 1.0, 100, {0.1, 4}, {512, 512});
    const VnfCatalog c = uniform_catalog(1);
    ResourceLedger ledger(snap);

    SUBCASE("cpu deficit") {
        const auto r = request(0, 0, 1, 0, 0, {0});
        CHECK(check_plan(colocated(r, c, snap, 0), ledger, snap, r, c) == FailureReason::NodeCpuInsufficient);
    }
    SUBCASE("colocated chain has zero latency") {
        const auto r = request(0, 0, 1, 1, 1, {0, 0, 0}, 1);
        const auto plan = colocated(r, c, snap, 1);
        CHECK(plan.total_latency == 0_ms);
        CHECK(plan.band_alloc.empty());
        CHECK_FALSE(check_plan(plan, ledger, snap, r, c));
    }
    SUBCASE("latency bound") {
        const auto r = request(0, 0, 1, 0, 1, {0}, 0.5);
        CHECK(check_plan(colocated(r, c, snap, 1), ledger, snap, r, c) == FailureReason::QosLatencyViolated);
    }
    SUBCASE("path through a missing edge") {
        const auto r = request(0, 0, 1, 0, 1, {0});
        auto plan = colocated(r, c, snap, 1);
        auto broken = snap;
        broken.remove_edge(0, 1);
        CHECK(check_plan(plan, ledger, broken, r, c) == FailureReason::NoPath);
    }
    SUBCASE("bandwidth deficit") {
        const auto tight = chain_snapshot(2, 1.0, 10, {4, 4}, {512, 512});
        ResourceLedger l2(tight);
        const auto r = request(0, 0, 1, 0, 1, {0, 0});
        auto plan = make_plan(r, c, tight, {0, 1},
                              {PhysicalPath{{0}}, PhysicalPath{{0, 1}}, PhysicalPath{{1}}});
        CHECK(check_plan(plan, l2, tight, r, c) == FailureReason::LinkBandwidthInsufficient);
    }
    SUBCASE("inconsistent allocation maps") {
        const auto r = request(0, 0, 1, 1, 1, {0});
        auto plan = colocated(r, c, snap, 1);
        plan.cpu_alloc[1] = 0.01_amt;
        CHECK(check_plan(plan, ledger, snap, r, c) == FailureReason::SolverRejected);
    }
    SUBCASE("check_plan is pure") {
        const auto r = request(0, 0, 1, 0, 0, {0});
        const auto before = ledger;
        const auto plan = colocated(r, c, snap, 0);
        const auto first = check_plan(plan, ledger, snap, r, c);
        CHECK(check_plan(plan, ledger, snap, r, c) == first);
        CHECK(ledger == before);
    }
}

TEST_CASE("allocate and release") {
    const auto snap = uniform_chain(1, 2.0, 4096);
    VnfCatalog c;
    c.add_template({0, 0.2_amt, 64_amt});
    c.add_template({1, 0.8_amt, 64_amt});
    ResourceLedger ledger(snap);

    SUBCASE("subtraction") {
        ledger.allocate(colocated(request(0, 0, 1, 0, 0, {0}), c, snap, 0));
        ledger.allocate(colocated(request(1, 0, 1, 0, 0, {0}), c, snap, 0));
        CHECK(ledger.cpu_free(0) == Amount::from_double(1.6));
    }
    SUBCASE("allocate then release is identity") {
        const auto before = ledger;
        ledger.allocate(colocated(request(0, 0, 1, 0, 0, {0, 1}), c, snap, 0));
        CHECK_FALSE(ledger == before);
        ledger.release(0);
        CHECK(ledger == before);
    }
    SUBCASE("defensive re-check") {
        ledger.allocate(colocated(request(0, 0, 1, 0, 0, {1}), c, snap, 0));
        ledger.allocate(colocated(request(1, 0, 1, 0, 0, {1}), c, snap, 0));
        CHECK_THROWS_AS(ledger.allocate(colocated(request(2, 0, 1, 0, 0, {1}), c, snap, 0)), InsufficientResources);
        CHECK(ledger.allocations().size() == 2);
        CHECK(ledger.conserves());
    }
    SUBCASE("duplicate and unknown ids") {
        const auto plan = colocated(request(0, 0, 1, 0, 0, {0}), c, snap, 0);
        ledger.allocate(plan);
        CHECK_THROWS_AS(ledger.allocate(plan), DuplicateSfc);
        CHECK_THROWS_AS(ledger.release(99), UnknownSfc);
    }
}

TEST_CASE("release restores capacity") {
    const ExampleA a;
    const auto& snap = a.topo.snapshot(0);
    ResourceLedger ledger(snap);
    const auto p0 = make_plan(a.requests[0], a.catalog, snap, {0, 1, 2},
                              {PhysicalPath{{0}}, PhysicalPath{{0, 1}}, PhysicalPath{{1, 2}}, PhysicalPath{{2}}});
    const auto p1 = colocated(a.requests[1], a.catalog, snap, 1);

    SUBCASE("only active sfc") {
        ledger.allocate(p0);
        ledger.release(0);
        for (NodeId v = 0; v < 3; ++v) {
            CHECK(ledger.cpu_free(v) == ledger.cpu_capacity(v));
            CHECK(ledger.ram_free(v) == ledger.ram_capacity(v));
        }
        CHECK(ledger.band_free(0, 1) == 100_amt);
        CHECK(ledger.band_free(1, 2) == 100_amt);
    }
    SUBCASE("the other sfc's allocations remain") {
        ledger.allocate(p0);
        ledger.allocate(p1);
        ledger.release(0);
        // Hand-computed: p1 puts three 0.2-cpu / 64 MB VNFs on node 1 and
        // reserves no bandwidth (colocated, endpoint links free).
        CHECK(ledger.cpu_free(0) == 2_amt);
        CHECK(ledger.cpu_free(1) == Amount::from_double(3.4));
        CHECK(ledger.ram_free(1) == 320_amt);
        CHECK(ledger.cpu_free(2) == 2_amt);
        CHECK(ledger.band_free(0, 1) == 100_amt);
        CHECK(ledger.band_free(1, 2) == 100_amt);
        CHECK(ledger.conserves());
    }
    SUBCASE("p0 reserves 20 Mbps on each hop") {
        ledger.allocate(p0);
        CHECK(ledger.band_free(0, 1) == 80_amt);
        CHECK(ledger.band_free(2, 1) == 80_amt);
    }
}

TEST_CASE("find_affected_sfcs") {
    const auto snap = chain_snapshot(3, 1.0, 100, {4, 4, 4}, {512, 512, 512});
    VnfCatalog c;
    c.add_template({0, 0.6_amt, 64_amt});
    c.add_link(0, 0, 10_amt);
    ResourceLedger ledger(snap);

    SUBCASE("no change") {
        ledger.allocate(colocated(request(0, 0, 1, 0, 2, {0}), c, snap, 1));
        CHECK(find_affected_sfcs(ledger, snap).empty());
    }
    SUBCASE("edge vanished") {
        ledger.allocate(colocated(request(0, 0, 1, 0, 2, {0}), c, snap, 1));
        auto next = snap;
        next.remove_edge(1, 2);
        CHECK(find_affected_sfcs(ledger, next) == std::vector<AffectedSfc>{{0, FailureReason::NoPath}});
    }
    SUBCASE("capacity shrink lists every user, smallest id first") {
        // Two SFCs put 0.6 cpu each on node 1 (1.2 total); node 0 hosts an
        // unrelated SFC. Capacity of node 1 drops from 4 to 1.
        ledger.allocate(colocated(request(7, 0, 1, 1, 1, {0}), c, snap, 1));
        ledger.allocate(colocated(request(3, 0, 1, 1, 1, {0}), c, snap, 1));
        ledger.allocate(colocated(request(5, 0, 1, 0, 0, {0}), c, snap, 0));
        auto next = snap;
        next.set_node(1, 1_amt, 512_amt);
        CHECK(find_affected_sfcs(ledger, next) == std::vector<AffectedSfc>{{3, FailureReason::NodeCpuInsufficient},
                                                                           {7, FailureReason::NodeCpuInsufficient}});
        // 0.6 still fits in 1.0: a single user would be left alone.
        ledger.release(7);
        CHECK(find_affected_sfcs(ledger, next).empty());
    }
    SUBCASE("bandwidth shrink") {
        const auto r = request(0, 0, 1, 0, 2, {0, 0});
        ledger.allocate(make_plan(r, c, snap, {0, 2},
                                  {PhysicalPath{{0}}, PhysicalPath{{0, 1, 2}}, PhysicalPath{{2}}}));
        auto next = snap;
        next.add_edge(0, 1, 1_ms, 5_amt);
        CHECK(find_affected_sfcs(ledger, next) ==
              std::vector<AffectedSfc>{{0, FailureReason::LinkBandwidthInsufficient}});
    }
}

TEST_CASE("rebase keeps used amounts") {
    const auto snap = uniform_chain(2, 4, 512);
    const VnfCatalog c = uniform_catalog(1, 1.0, 100);
    ResourceLedger ledger(snap);
    ledger.allocate(colocated(request(0, 0, 1, 0, 0, {0}), c, snap, 0));
    auto next = snap;
    next.set_node(0, 0.5_amt, 512_amt);
    ledger.rebase(next);
    CHECK(ledger.cpu_used(0) == 1_amt);
    CHECK(ledger.cpu_free(0) == -0.5_amt);
    CHECK(ledger.conserves());
    CHECK_FALSE(ledger.all_free_nonnegative());
    ledger.release(0);
    CHECK(ledger.all_free_nonnegative());
}

#pragma once

#include <vector>

#include "sfcsim/engine.hpp"
#include "sfcsim/scenario.hpp"

namespace sfcsim::testing {

inline SubstrateSnapshot chain_snapshot(int n, double latency_ms, double band, std::vector<double> cpu,
                                        std::vector<double> ram) {
    SubstrateSnapshot s(n);
    for (int i = 0; i < n; ++i) s.set_node(i, Amount::from_double(cpu[i]), Amount::from_double(ram[i]));
    for (int i = 0; i + 1 < n; ++i) s.add_edge(i, i + 1, Millis::from_double(latency_ms), Amount::from_double(band));
    return s;
}

inline SubstrateSnapshot uniform_chain(int n, double cpu = 4, double ram = 512, double band = 100) {
    return chain_snapshot(n, 1.0, band, std::vector<double>(n, cpu), std::vector<double>(n, ram));
}

inline SubstrateTopology static_topology(SubstrateSnapshot s) { return SubstrateTopology({0.0}, {std::move(s)}); }

// Templates 0..k-1 with identical demands; every pair (including self) linked.
inline VnfCatalog uniform_catalog(int k, double cpu = 0.2, double ram = 64, double band = 20) {
    VnfCatalog c;
    for (int i = 0; i < k; ++i) c.add_template({i, Amount::from_double(cpu), Amount::from_double(ram)});
    for (int a = 0; a < k; ++a) {
        for (int b = a; b < k; ++b) c.add_link(a, b, Amount::from_double(band));
    }
    return c;
}

inline SfcRequest request(SfcId id, double start, double end, NodeId in, NodeId out, std::vector<VnfId> chain,
                          double qos_ms = 100) {
    return SfcRequest{id, start, end, in, out, std::move(chain), Millis::from_double(qos_ms)};
}

// The two-SFC, three-node chain scenario used throughout the examples.
struct ExampleA {
    SubstrateTopology topo = static_topology(chain_snapshot(3, 1.0, 100, {2, 4, 2}, {256, 512, 256}));
    VnfCatalog catalog = [] {
        VnfCatalog c;
        for (int i = 0; i < 3; ++i) c.add_template({i, Amount::from_double(0.2), Amount::from_double(64)});
        c.add_link(0, 1, Amount::from_double(20));
        c.add_link(1, 2, Amount::from_double(20));
        return c;
    }();
    std::vector<SfcRequest> requests = {request(0, 5, 25, 0, 2, {0, 1, 2}, 10),
                                        request(1, 10, 50, 2, 0, {0, 1, 2}, 10)};
};

struct RandomScenario {
    SubstrateTopology topo;
    VnfCatalog catalog;
    std::vector<SfcRequest> requests;
};

inline Amount random_amount(Rng& rng, int lo_tenths, int hi_tenths) {
    return Amount::from_raw((lo_tenths + static_cast<std::int64_t>(uniform_index(rng, hi_tenths - lo_tenths + 1))) *
                            (Amount::kScale / 10));
}

// Small random dynamic scenario: up to max_nodes nodes, up to max_sfcs SFCs,
// 1-4 snapshots in which edges come and go and capacities shrink or grow.
inline RandomScenario random_scenario(Rng& rng, int max_nodes = 10, int max_sfcs = 20) {
    const int n = 2 + static_cast<int>(uniform_index(rng, max_nodes - 1));
    const int snaps = 1 + static_cast<int>(uniform_index(rng, 4));
    std::vector<double> times;
    std::vector<SubstrateSnapshot> snapshots;
    for (int k = 0; k < snaps; ++k) {
        SubstrateSnapshot s(n);
        for (int v = 0; v < n; ++v) s.set_node(v, random_amount(rng, 0, 30), random_amount(rng, 0, 40) + random_amount(rng, 0, 40));
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (uniform_index(rng, 100) < 45) {
                    s.add_edge(a, b, Millis::from_raw(static_cast<std::int64_t>(1 + uniform_index(rng, 5)) * Millis::kScale),
                               random_amount(rng, 0, 50));
                }
            }
        }
        times.push_back(10.0 * k);
        snapshots.push_back(std::move(s));
    }
    SubstrateTopology topo(std::move(times), std::move(snapshots));

    VnfCatalog catalog;
    const int templates = 1 + static_cast<int>(uniform_index(rng, 4));
    for (int t = 0; t < templates; ++t) {
        catalog.add_template({t, random_amount(rng, 1, 10), random_amount(rng, 1, 20)});
    }
    for (int a = 0; a < templates; ++a) {
        for (int b = a; b < templates; ++b) catalog.add_link(a, b, random_amount(rng, 1, 20));
    }

    std::vector<SfcRequest> requests;
    const int sfcs = static_cast<int>(uniform_index(rng, max_sfcs + 1));
    const double horizon = 10.0 * snaps + 5;
    for (int i = 0; i < sfcs; ++i) {
        const double start = static_cast<double>(uniform_index(rng, static_cast<std::size_t>(horizon)));
        const double end = start + 1 + static_cast<double>(uniform_index(rng, 20));
        std::vector<VnfId> chain;
        const int len = 1 + static_cast<int>(uniform_index(rng, 3));
        for (int k = 0; k < len; ++k) chain.push_back(static_cast<VnfId>(uniform_index(rng, templates)));
        requests.push_back(request(i, start, end, static_cast<NodeId>(uniform_index(rng, n)),
                                   static_cast<NodeId>(uniform_index(rng, n)), chain,
                                   static_cast<double>(2 + uniform_index(rng, 12))));
    }
    return {std::move(topo), std::move(catalog), std::move(requests)};
}

}  // namespace sfcsim::testing

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sfcsim/solver.hpp"
#include "sfcsim/trace.hpp"

namespace sfcsim {

struct SimEvent {
    double time = 0;
    EventKind kind = EventKind::TopologyChange;
    std::uint64_t seq = 0;
    SfcId sfc_id = 0;              // arrival / departure
    std::size_t topo_index = 0;    // topology change

    // (time, kind priority, seq)
    friend bool operator<(const SimEvent& a, const SimEvent& b) {
        if (a.time != b.time) return a.time < b.time;
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.seq < b.seq;
    }
};

std::vector<SimEvent> build_event_queue(const SubstrateTopology& topo, const std::vector<SfcRequest>& requests);

struct SimulationReport {
    double end_time = 0;
    int accepted = 0;
    int rejected = 0;
    int terminated_early = 0;
    TraceLog trace;
    std::vector<CountPoint> running_count;

    int arrivals() const { return accepted + rejected; }
};

struct RunOptions {
    // Called after every dispatched event with the ledger at that boundary.
    std::function<void(const SimEvent&, const ResourceLedger&)> on_boundary;
};

/// Runs one simulation to completion. Throws MalformedScenario when the
/// workload does not validate against the topology and catalog.
SimulationReport run(const SubstrateTopology& topo, const std::vector<SfcRequest>& requests,
                     const VnfCatalog& catalog, Solver& solver, std::uint64_t seed, const RunOptions& options = {});

// Active-SFC count after the events at each distinct event time.
const std::vector<CountPoint>& running_count_series(const SimulationReport& report);

}  // namespace sfcsim

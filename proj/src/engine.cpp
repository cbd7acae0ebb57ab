#include "sfcsim/engine.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "sfcsim/errors.hpp"

namespace sfcsim {

std::vector<SimEvent> build_event_queue(const SubstrateTopology& topo, const std::vector<SfcRequest>& requests) {
    std::vector<SimEvent> events;
    std::uint64_t seq = 0;
    for (std::size_t i = 1; i < topo.size(); ++i) {
        events.push_back({topo.time_points()[i], EventKind::TopologyChange, seq++, 0, i});
    }
    for (const auto& r : requests) {
        events.push_back({r.start_time, EventKind::SfcArrival, seq++, r.sfc_id, 0});
        events.push_back({r.end_time, EventKind::SfcDeparture, seq++, r.sfc_id, 0});
    }
    std::sort(events.begin(), events.end());
    return events;
}

namespace {

class Simulation {
public:
    Simulation(const SubstrateTopology& topo, const std::vector<SfcRequest>& requests, const VnfCatalog& catalog,
               Solver& solver, std::uint64_t seed)
        : topo_(topo), catalog_(catalog), solver_(solver), rng_(seed), ledger_(topo.snapshot(0)) {
        for (const auto& r : requests) requests_.emplace(r.sfc_id, &r);
    }

    void dispatch(const SimEvent& ev) {
        switch (ev.kind) {
            case EventKind::SfcArrival: on_arrival(ev); break;
            case EventKind::SfcDeparture: on_departure(ev); break;
            case EventKind::TopologyChange: on_topology_change(ev); break;
        }
        report_.trace.sample(ev.time, ledger_);
        const int active = static_cast<int>(ledger_.allocations().size());
        auto& series = report_.running_count;
        if (!series.empty() && series.back().time == ev.time) {
            series.back().count = active;
        } else {
            series.push_back({ev.time, active});
        }
    }

    const ResourceLedger& ledger() const { return ledger_; }
    SimulationReport take_report() { return std::move(report_); }

private:
    const SubstrateSnapshot& snap() const { return topo_.snapshot(current_); }

    // Solves and validates; returns the plan or the rejection reason. detail
    // receives a note when the solver's Accept fails MANO validation.
    std::variant<EmbeddingPlan, FailureReason> embed(const SfcRequest& req, SolveMode mode,
                                                     const EmbeddingPlan* old_plan, std::string& detail) {
        SolverInput input{req, catalog_, snap(), ledger_, mode, old_plan};
        SolverDecision decision = solver_.solve(input, rng_);
        if (auto* reject = std::get_if<Reject>(&decision)) return reject->reason;
        EmbeddingPlan plan = std::move(std::get<Accept>(decision).plan);
        if (auto bad = check_plan(plan, ledger_, snap(), req, catalog_)) {
            detail = "solver accept failed check: " + std::string(to_string(*bad));
            return FailureReason::SolverRejected;
        }
        return plan;
    }

    void on_arrival(const SimEvent& ev) {
        const SfcRequest& req = *requests_.at(ev.sfc_id);
        TraceRecord rec{ev.time, 0, ev.kind, req.sfc_id, Outcome::Rejected, std::nullopt, std::nullopt, {}};
        auto result = embed(req, SolveMode::Embed, nullptr, rec.detail);
        if (auto* plan = std::get_if<EmbeddingPlan>(&result)) {
            ledger_.allocate(*plan);
            rec.outcome = Outcome::Accepted;
            rec.plan = std::move(*plan);
            ++report_.accepted;
        } else {
            rec.reason = std::get<FailureReason>(result);
            ++report_.rejected;
        }
        report_.trace.record(std::move(rec));
    }

    void on_departure(const SimEvent& ev) {
        TraceRecord rec{ev.time, 0, ev.kind, ev.sfc_id, Outcome::Skipped, std::nullopt, std::nullopt, {}};
        if (ledger_.is_active(ev.sfc_id)) {
            ledger_.release(ev.sfc_id);
            rec.outcome = Outcome::Released;
        }
        report_.trace.record(std::move(rec));
    }

    void on_topology_change(const SimEvent& ev) {
        const SubstrateSnapshot& next = topo_.snapshot(ev.topo_index);
        const auto affected = find_affected_sfcs(ledger_, next);
        ledger_.rebase(next);
        current_ = ev.topo_index;
        report_.trace.record({ev.time, 0, ev.kind, std::nullopt, Outcome::Applied, std::nullopt, std::nullopt,
                              std::to_string(affected.size()) + " affected"});

        // Each migration sees the ledger left by the previous one.
        for (const auto& [id, trigger] : affected) {
            const SfcRequest& req = *requests_.at(id);
            const EmbeddingPlan old = ledger_.release(id);
            TraceRecord rec{ev.time, 0, ev.kind, id, Outcome::Terminated, trigger, std::nullopt, {}};
            auto result = embed(req, SolveMode::Migrate, &old, rec.detail);
            if (auto* plan = std::get_if<EmbeddingPlan>(&result)) {
                ledger_.allocate(*plan);
                rec.outcome = Outcome::Migrated;
                rec.plan = std::move(*plan);
            } else {
                // A vanished edge that leaves no route at all is reported as
                // such; any other failed re-embed is a migration failure.
                const FailureReason why = std::get<FailureReason>(result);
                rec.reason = trigger == FailureReason::NoPath && why == FailureReason::NoPath
                                 ? FailureReason::NoPath
                                 : FailureReason::MigrationFailed;
                if (rec.detail.empty()) rec.detail = "re-embed rejected: " + std::string(to_string(why));
                ++report_.terminated_early;
            }
            report_.trace.record(std::move(rec));
        }

        // Plans that survived keep their routes; refresh their latency.
        ledger_.refresh_latencies(next);
    }

    const SubstrateTopology& topo_;
    const VnfCatalog& catalog_;
    Solver& solver_;
    Rng rng_;
    ResourceLedger ledger_;
    std::size_t current_ = 0;
    std::map<SfcId, const SfcRequest*> requests_;
    SimulationReport report_;
};

}  // namespace

SimulationReport run(const SubstrateTopology& topo, const std::vector<SfcRequest>& requests,
                     const VnfCatalog& catalog, Solver& solver, std::uint64_t seed, const RunOptions& options) {
    const ValidationReport check = validate_workload(requests, catalog, topo);
    if (const RequestCheck* bad = check.first_failure()) {
        throw MalformedScenario("sfc " + std::to_string(bad->sfc_id) + ": " + std::string(to_string(bad->issue)) +
                                " (" + bad->detail + ")");
    }

    const std::vector<SimEvent> queue = build_event_queue(topo, requests);
    Simulation sim(topo, requests, catalog, solver, seed);
    for (const SimEvent& ev : queue) {
        sim.dispatch(ev);
        if (options.on_boundary) options.on_boundary(ev, sim.ledger());
    }
    SimulationReport report = sim.take_report();
    report.end_time = queue.empty() ? topo.last_time() : std::max(topo.last_time(), queue.back().time);
    return report;
}

const std::vector<CountPoint>& running_count_series(const SimulationReport& report) { return report.running_count; }

}  // namespace sfcsim

#include "sfcsim/solver.hpp"

#include <algorithm>
#include <limits>

#include "sfcsim/errors.hpp"

namespace sfcsim {

std::size_t uniform_index(Rng& rng, std::size_t n) {
    const std::uint64_t bound = n;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
}

SolverDecision SequentialSolver::solve(const SolverInput& in, Rng& rng) {
    const SfcRequest& req = in.request;
    const SubstrateSnapshot& snap = in.snapshot;
    const std::size_t n = snap.node_count();

    Residual res;
    res.band = in.residual.band_free();
    for (std::size_t v = 0; v < n; ++v) {
        const auto node = static_cast<NodeId>(v);
        res.cpu.push_back(in.residual.cpu_free(node));
        res.ram.push_back(in.residual.ram_free(node));
        res.max_cpu_capacity = std::max(res.max_cpu_capacity, in.residual.cpu_capacity(node));
        res.max_ram_capacity = std::max(res.max_ram_capacity, in.residual.ram_capacity(node));
    }

    // Routes a virtual link against the tentative residual and reserves it.
    auto route = [&](NodeId from, NodeId to, Amount demand) -> std::variant<PhysicalPath, FailureReason> {
        auto path = shortest_feasible_path(snap, from, to, demand, res.band);
        if (!path) {
            // Distinguish a bandwidth shortfall from a disconnected pair.
            SquareMatrix<Amount> open(n, demand);
            return shortest_feasible_path(snap, from, to, demand, open) ? FailureReason::LinkBandwidthInsufficient
                                                                        : FailureReason::NoPath;
        }
        if (!demand.is_zero()) {
            for (std::size_t h = 1; h < path->nodes.size(); ++h) {
                const NodeId a = path->nodes[h - 1], b = path->nodes[h];
                res.band.set_sym(a, b, res.band(a, b) - demand);
            }
        }
        return *std::move(path);
    };

    std::vector<NodeId> placement;
    std::vector<PhysicalPath> paths;
    NodeId prev = req.ingress;
    for (std::size_t k = 0; k < req.vnf_chain.size(); ++k) {
        const VnfTemplate& t = in.catalog.at(req.vnf_chain[k]);
        std::vector<NodeId> candidates;
        bool any_cpu = false;
        for (std::size_t v = 0; v < n; ++v) {
            const bool cpu_ok = res.cpu[v] >= t.cpu_demand;
            any_cpu = any_cpu || cpu_ok;
            if (cpu_ok && res.ram[v] >= t.ram_demand) candidates.push_back(static_cast<NodeId>(v));
        }
        if (candidates.empty()) {
            return Reject{any_cpu ? FailureReason::NodeRamInsufficient : FailureReason::NodeCpuInsufficient};
        }
        const NodeId node = choose(candidates, res, rng);
        res.cpu[node] -= t.cpu_demand;
        res.ram[node] -= t.ram_demand;

        auto routed = route(prev, node, virtual_link_demand(req, in.catalog, k));
        if (auto* reason = std::get_if<FailureReason>(&routed)) return Reject{*reason};
        placement.push_back(node);
        paths.push_back(std::get<PhysicalPath>(std::move(routed)));
        prev = node;
    }
    auto routed = route(prev, req.egress, virtual_link_demand(req, in.catalog, req.vnf_chain.size()));
    if (auto* reason = std::get_if<FailureReason>(&routed)) return Reject{*reason};
    paths.push_back(std::get<PhysicalPath>(std::move(routed)));

    EmbeddingPlan plan = make_plan(req, in.catalog, snap, std::move(placement), std::move(paths));
    if (plan.total_latency > req.qos_max_latency) return Reject{FailureReason::QosLatencyViolated};
    return Accept{std::move(plan)};
}

NodeId RandomSolver::choose(const std::vector<NodeId>& candidates, const Residual&, Rng& rng) {
    return candidates[uniform_index(rng, candidates.size())];
}

NodeId GreedySolver::choose(const std::vector<NodeId>& candidates, const Residual& res, Rng&) {
    auto share = [](Amount free, Amount cap) { return cap.is_zero() ? 0.0 : free.to_double() / cap.to_double(); };
    NodeId best = candidates.front();
    double best_score = -1.0;
    for (NodeId v : candidates) {
        const double score = share(res.cpu[v], res.max_cpu_capacity) + share(res.ram[v], res.max_ram_capacity);
        if (score > best_score) {
            best_score = score;
            best = v;
        }
    }
    return best;
}

std::vector<std::string> known_solvers() { return {"random", "greedy"}; }

bool is_known_solver(std::string_view name) {
    const auto names = known_solvers();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::unique_ptr<Solver> make_solver(std::string_view name) {
    if (name == "random") return std::make_unique<RandomSolver>();
    if (name == "greedy") return std::make_unique<GreedySolver>();
    throw ValidationError("solver", "UnknownSolver: '" + std::string(name) + "'");
}

}  // namespace sfcsim

#include "sfcsim/mano.hpp"

#include <string>

#include "sfcsim/errors.hpp"

namespace sfcsim {

std::string_view to_string(FailureReason r) {
    switch (r) {
        case FailureReason::NodeCpuInsufficient: return "NodeCpuInsufficient";
        case FailureReason::NodeRamInsufficient: return "NodeRamInsufficient";
        case FailureReason::LinkBandwidthInsufficient: return "LinkBandwidthInsufficient";
        case FailureReason::NoPath: return "NoPath";
        case FailureReason::QosLatencyViolated: return "QosLatencyViolated";
        case FailureReason::MigrationFailed: return "MigrationFailed";
        case FailureReason::SolverRejected: return "SolverRejected";
    }
    return "Unknown";
}

Amount virtual_link_demand(const SfcRequest& request, const VnfCatalog& catalog, std::size_t link) {
    if (link == 0 || link >= request.vnf_chain.size()) return Amount{};
    return catalog.band_demand(request.vnf_chain[link - 1], request.vnf_chain[link]).value_or(Amount{});
}

namespace {

struct Allocations {
    std::map<NodeId, Amount> cpu, ram;
    std::map<EdgeKey, Amount> band;
};

Allocations implied_allocations(const SfcRequest& request, const VnfCatalog& catalog,
                                const std::vector<NodeId>& placement, const std::vector<PhysicalPath>& paths) {
    Allocations a;
    for (std::size_t k = 0; k < placement.size(); ++k) {
        const VnfTemplate& t = catalog.at(request.vnf_chain[k]);
        a.cpu[placement[k]] += t.cpu_demand;
        a.ram[placement[k]] += t.ram_demand;
    }
    for (std::size_t i = 0; i < paths.size(); ++i) {
        const Amount demand = virtual_link_demand(request, catalog, i);
        if (demand.is_zero()) continue;
        const auto& nodes = paths[i].nodes;
        for (std::size_t h = 1; h < nodes.size(); ++h) a.band[edge_key(nodes[h - 1], nodes[h])] += demand;
    }
    return a;
}

}  // namespace

EmbeddingPlan make_plan(const SfcRequest& request, const VnfCatalog& catalog, const SubstrateSnapshot& snap,
                        std::vector<NodeId> placement, std::vector<PhysicalPath> paths) {
    EmbeddingPlan plan;
    plan.sfc_id = request.sfc_id;
    Allocations a = implied_allocations(request, catalog, placement, paths);
    plan.cpu_alloc = std::move(a.cpu);
    plan.ram_alloc = std::move(a.ram);
    plan.band_alloc = std::move(a.band);
    for (const auto& p : paths) plan.total_latency += path_latency(snap, p);
    plan.vnf_placement = std::move(placement);
    plan.virtual_link_paths = std::move(paths);
    return plan;
}

bool plan_consistent(const EmbeddingPlan& plan, const SfcRequest& request, const VnfCatalog& catalog) {
    const std::size_t k = request.vnf_chain.size();
    if (plan.sfc_id != request.sfc_id) return false;
    if (plan.vnf_placement.size() != k || plan.virtual_link_paths.size() != k + 1) return false;
    for (std::size_t i = 0; i <= k; ++i) {
        const auto& p = plan.virtual_link_paths[i];
        if (p.nodes.empty()) return false;
        const NodeId from = i == 0 ? request.ingress : plan.vnf_placement[i - 1];
        const NodeId to = i == k ? request.egress : plan.vnf_placement[i];
        if (p.front() != from || p.back() != to) return false;
    }
    const Allocations a = implied_allocations(request, catalog, plan.vnf_placement, plan.virtual_link_paths);
    return a.cpu == plan.cpu_alloc && a.ram == plan.ram_alloc && a.band == plan.band_alloc;
}

ResourceLedger::ResourceLedger(const SubstrateSnapshot& snap) {
    const std::size_t n = snap.node_count();
    cpu_cap_.assign(snap.node_cpu().begin(), snap.node_cpu().end());
    ram_cap_.assign(snap.node_ram().begin(), snap.node_ram().end());
    band_cap_ = SquareMatrix<Amount>(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            band_cap_(i, j) = snap.link_band_or_zero(static_cast<NodeId>(i), static_cast<NodeId>(j));
        }
    }
    cpu_free_ = cpu_cap_;
    ram_free_ = ram_cap_;
    band_free_ = band_cap_;
}

void ResourceLedger::allocate(const EmbeddingPlan& plan) {
    if (is_active(plan.sfc_id)) throw DuplicateSfc("sfc " + std::to_string(plan.sfc_id) + " already active");
    for (const auto& [n, v] : plan.cpu_alloc) {
        if (v > cpu_free_.at(n)) throw InsufficientResources("cpu on node " + std::to_string(n));
    }
    for (const auto& [n, v] : plan.ram_alloc) {
        if (v > ram_free_.at(n)) throw InsufficientResources("ram on node " + std::to_string(n));
    }
    for (const auto& [e, v] : plan.band_alloc) {
        if (v > band_free_(e.first, e.second)) {
            throw InsufficientResources("bandwidth on edge " + std::to_string(e.first) + "-" +
                                        std::to_string(e.second));
        }
    }
    for (const auto& [n, v] : plan.cpu_alloc) cpu_free_[n] -= v;
    for (const auto& [n, v] : plan.ram_alloc) ram_free_[n] -= v;
    for (const auto& [e, v] : plan.band_alloc) band_free_.set_sym(e.first, e.second, band_free_(e.first, e.second) - v);
    allocations_.emplace(plan.sfc_id, plan);
}

EmbeddingPlan ResourceLedger::release(SfcId id) {
    auto it = allocations_.find(id);
    if (it == allocations_.end()) throw UnknownSfc("sfc " + std::to_string(id) + " is not active");
    EmbeddingPlan plan = std::move(it->second);
    allocations_.erase(it);
    for (const auto& [n, v] : plan.cpu_alloc) cpu_free_[n] += v;
    for (const auto& [n, v] : plan.ram_alloc) ram_free_[n] += v;
    for (const auto& [e, v] : plan.band_alloc) band_free_.set_sym(e.first, e.second, band_free_(e.first, e.second) + v);
    return plan;
}

void ResourceLedger::rebase(const SubstrateSnapshot& snap) {
    ResourceLedger fresh(snap);
    for (std::size_t i = 0; i < node_count(); ++i) {
        fresh.cpu_free_[i] -= cpu_used(static_cast<NodeId>(i));
        fresh.ram_free_[i] -= ram_used(static_cast<NodeId>(i));
        for (std::size_t j = 0; j < node_count(); ++j) {
            fresh.band_free_(i, j) -= band_used(static_cast<NodeId>(i), static_cast<NodeId>(j));
        }
    }
    fresh.allocations_ = std::move(allocations_);
    *this = std::move(fresh);
}

void ResourceLedger::refresh_latencies(const SubstrateSnapshot& snap) {
    for (auto& [id, plan] : allocations_) {
        Millis total;
        for (const auto& p : plan.virtual_link_paths) total += path_latency(snap, p);
        plan.total_latency = total;
    }
}

bool ResourceLedger::conserves() const {
    const std::size_t n = node_count();
    std::vector<Amount> cpu(n), ram(n);
    SquareMatrix<Amount> band(n);
    for (const auto& [id, plan] : allocations_) {
        for (const auto& [v, a] : plan.cpu_alloc) cpu[v] += a;
        for (const auto& [v, a] : plan.ram_alloc) ram[v] += a;
        for (const auto& [e, a] : plan.band_alloc) band.set_sym(e.first, e.second, band(e.first, e.second) + a);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (cpu_cap_[i] - cpu_free_[i] != cpu[i] || ram_cap_[i] - ram_free_[i] != ram[i]) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (band_cap_(i, j) - band_free_(i, j) != band(i, j)) return false;
        }
    }
    return true;
}

bool ResourceLedger::all_free_nonnegative() const {
    const std::size_t n = node_count();
    for (std::size_t i = 0; i < n; ++i) {
        if (cpu_free_[i].is_negative() || ram_free_[i].is_negative()) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (band_free_(i, j).is_negative()) return false;
        }
    }
    return true;
}

std::optional<FailureReason> check_plan(const EmbeddingPlan& plan, const ResourceLedger& ledger,
                                        const SubstrateSnapshot& snap, const SfcRequest& request,
                                        const VnfCatalog& catalog) {
    if (!plan_consistent(plan, request, catalog)) return FailureReason::SolverRejected;
    for (const auto& p : plan.virtual_link_paths) {
        if (!path_valid(snap, p)) return FailureReason::NoPath;
    }
    for (NodeId n : plan.vnf_placement) {
        if (n < 0 || static_cast<std::size_t>(n) >= snap.node_count()) return FailureReason::NoPath;
    }
    for (const auto& [n, v] : plan.cpu_alloc) {
        if (v > ledger.cpu_free(n)) return FailureReason::NodeCpuInsufficient;
    }
    for (const auto& [n, v] : plan.ram_alloc) {
        if (v > ledger.ram_free(n)) return FailureReason::NodeRamInsufficient;
    }
    for (const auto& [e, v] : plan.band_alloc) {
        if (v > ledger.band_free(e.first, e.second)) return FailureReason::LinkBandwidthInsufficient;
    }
    Millis latency;
    for (const auto& p : plan.virtual_link_paths) latency += path_latency(snap, p);
    if (latency > request.qos_max_latency) return FailureReason::QosLatencyViolated;
    return std::nullopt;
}

std::vector<AffectedSfc> find_affected_sfcs(const ResourceLedger& ledger, const SubstrateSnapshot& new_snap) {
    std::vector<AffectedSfc> out;
    for (const auto& [id, plan] : ledger.allocations()) {  // std::map: ascending id
        std::optional<FailureReason> reason;
        for (const auto& p : plan.virtual_link_paths) {
            for (std::size_t h = 1; h < p.nodes.size() && !reason; ++h) {
                if (!new_snap.adjacent(p.nodes[h - 1], p.nodes[h])) reason = FailureReason::NoPath;
            }
        }
        for (const auto& [n, v] : plan.cpu_alloc) {
            if (!reason && ledger.cpu_used(n) > new_snap.node_cpu(n)) reason = FailureReason::NodeCpuInsufficient;
        }
        for (const auto& [n, v] : plan.ram_alloc) {
            if (!reason && ledger.ram_used(n) > new_snap.node_ram(n)) reason = FailureReason::NodeRamInsufficient;
        }
        for (const auto& [e, v] : plan.band_alloc) {
            if (!reason && ledger.band_used(e.first, e.second) > new_snap.link_band_or_zero(e.first, e.second)) {
                reason = FailureReason::LinkBandwidthInsufficient;
            }
        }
        if (reason) out.push_back({id, *reason});
    }
    return out;
}

}  // namespace sfcsim

#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sfcsim/fixed.hpp"
#include "sfcsim/topology.hpp"
#include "sfcsim/workload.hpp"

namespace sfcsim {

enum class FailureReason {
    NodeCpuInsufficient,
    NodeRamInsufficient,
    LinkBandwidthInsufficient,
    NoPath,
    QosLatencyViolated,
    MigrationFailed,
    SolverRejected,
};

inline constexpr FailureReason kAllFailureReasons[] = {
    FailureReason::NodeCpuInsufficient, FailureReason::NodeRamInsufficient,
    FailureReason::LinkBandwidthInsufficient, FailureReason::NoPath,
    FailureReason::QosLatencyViolated, FailureReason::MigrationFailed,
    FailureReason::SolverRejected,
};

std::string_view to_string(FailureReason r);

using EdgeKey = std::pair<NodeId, NodeId>;  // (min, max)

inline EdgeKey edge_key(NodeId a, NodeId b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

/// Mapping table produced by a solver: where every VNF runs, how every
/// virtual link is routed, and what it all reserves.
struct EmbeddingPlan {
    SfcId sfc_id = 0;
    std::vector<NodeId> vnf_placement;
    // ingress -> vnf_1, vnf_1 -> vnf_2, ..., vnf_k -> egress
    std::vector<PhysicalPath> virtual_link_paths;
    std::map<NodeId, Amount> cpu_alloc;
    std::map<NodeId, Amount> ram_alloc;
    std::map<EdgeKey, Amount> band_alloc;
    Millis total_latency;

    friend bool operator==(const EmbeddingPlan&, const EmbeddingPlan&) = default;
};

// Bandwidth reserved by virtual link i (0 = ingress link, chain size = egress
// link). Endpoint links only anchor the chain and reserve nothing.
Amount virtual_link_demand(const SfcRequest& request, const VnfCatalog& catalog, std::size_t link);

/// Builds a plan with allocation maps and latency derived from placement and paths.
EmbeddingPlan make_plan(const SfcRequest& request, const VnfCatalog& catalog, const SubstrateSnapshot& snap,
                        std::vector<NodeId> placement, std::vector<PhysicalPath> paths);

// Placement/path shapes line up with the request and allocation maps equal
// what placements, templates and paths imply.
bool plan_consistent(const EmbeddingPlan& plan, const SfcRequest& request, const VnfCatalog& catalog);

/// Free-resource accounting against the active snapshot's capacities.
class ResourceLedger {
public:
    explicit ResourceLedger(const SubstrateSnapshot& snap);

    std::size_t node_count() const { return cpu_cap_.size(); }

    Amount cpu_free(NodeId n) const { return cpu_free_[n]; }
    Amount ram_free(NodeId n) const { return ram_free_[n]; }
    Amount band_free(NodeId a, NodeId b) const { return band_free_(a, b); }
    Amount cpu_capacity(NodeId n) const { return cpu_cap_[n]; }
    Amount ram_capacity(NodeId n) const { return ram_cap_[n]; }
    Amount band_capacity(NodeId a, NodeId b) const { return band_cap_(a, b); }
    Amount cpu_used(NodeId n) const { return cpu_cap_[n] - cpu_free_[n]; }
    Amount ram_used(NodeId n) const { return ram_cap_[n] - ram_free_[n]; }
    Amount band_used(NodeId a, NodeId b) const { return band_cap_(a, b) - band_free_(a, b); }
    const SquareMatrix<Amount>& band_free() const { return band_free_; }

    const std::map<SfcId, EmbeddingPlan>& allocations() const { return allocations_; }
    bool is_active(SfcId id) const { return allocations_.contains(id); }

    // Throws DuplicateSfc, or InsufficientResources when any demand exceeds free.
    void allocate(const EmbeddingPlan& plan);
    // Throws UnknownSfc. Returns the released plan.
    EmbeddingPlan release(SfcId id);

    // Adopts new capacities, keeping used amounts. Free may go negative until
    // affected embeddings are migrated.
    void rebase(const SubstrateSnapshot& snap);

    // Recomputes total_latency of every active plan under snap.
    void refresh_latencies(const SubstrateSnapshot& snap);

    // capacity - free equals the sum of active allocations, elementwise.
    bool conserves() const;
    bool all_free_nonnegative() const;

    friend bool operator==(const ResourceLedger&, const ResourceLedger&) = default;

private:
    std::vector<Amount> cpu_cap_, ram_cap_, cpu_free_, ram_free_;
    SquareMatrix<Amount> band_cap_, band_free_;
    std::map<SfcId, EmbeddingPlan> allocations_;
};

/// MANO-side validation of a solver's plan. Checks run in the order
/// path, cpu, ram, bandwidth, latency; the first failure is returned. A plan
/// whose allocation maps disagree with its placements is SolverRejected.
std::optional<FailureReason> check_plan(const EmbeddingPlan& plan, const ResourceLedger& ledger,
                                        const SubstrateSnapshot& snap, const SfcRequest& request,
                                        const VnfCatalog& catalog);

struct AffectedSfc {
    SfcId sfc_id;
    FailureReason reason;

    friend bool operator==(const AffectedSfc&, const AffectedSfc&) = default;
};

/// Active embeddings that are no longer valid under new_snap, ascending by id.
std::vector<AffectedSfc> find_affected_sfcs(const ResourceLedger& ledger, const SubstrateSnapshot& new_snap);

}  // namespace sfcsim

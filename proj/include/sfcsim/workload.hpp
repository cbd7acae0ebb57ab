#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sfcsim/fixed.hpp"
#include "sfcsim/topology.hpp"

namespace sfcsim {

using VnfId = int;
using SfcId = int;

struct VnfTemplate {
    VnfId vnf_id = 0;
    Amount cpu_demand;
    Amount ram_demand;  // MB

    friend bool operator==(const VnfTemplate&, const VnfTemplate&) = default;
};

/// Reusable VNF profiles plus symmetric inter-VNF bandwidth demands.
class VnfCatalog {
public:
    // Both throw ValidationError on duplicate ids, unknown templates or
    // non-positive demands.
    void add_template(const VnfTemplate& t);
    void add_link(VnfId a, VnfId b, Amount band);

    bool contains(VnfId id) const { return templates_.contains(id); }
    const VnfTemplate& at(VnfId id) const;
    std::optional<Amount> band_demand(VnfId a, VnfId b) const;

    const std::map<VnfId, VnfTemplate>& templates() const { return templates_; }
    const std::map<std::pair<VnfId, VnfId>, Amount>& links() const { return links_; }

private:
    std::map<VnfId, VnfTemplate> templates_;
    std::map<std::pair<VnfId, VnfId>, Amount> links_;  // keyed (min, max)
};

struct SfcRequest {
    SfcId sfc_id = 0;
    double start_time = 0;
    double end_time = 0;
    NodeId ingress = 0;
    NodeId egress = 0;
    std::vector<VnfId> vnf_chain;
    Millis qos_max_latency;

    friend bool operator==(const SfcRequest&, const SfcRequest&) = default;
};

enum class WorkloadIssue {
    None,
    BadLifecycle,
    StartBeforeTopology,
    EmptyChain,
    UnknownVnf,
    MissingLinkDemand,
    BadEndpoint,
    BadQos,
    DuplicateId,
};

std::string_view to_string(WorkloadIssue issue);

struct RequestCheck {
    SfcId sfc_id = 0;
    std::size_t index = 0;
    WorkloadIssue issue = WorkloadIssue::None;
    std::string detail;

    bool ok() const { return issue == WorkloadIssue::None; }
};

struct ValidationReport {
    std::vector<RequestCheck> entries;

    bool ok() const;
    const RequestCheck* first_failure() const;
};

ValidationReport validate_workload(const std::vector<SfcRequest>& requests, const VnfCatalog& catalog,
                                   const SubstrateTopology& topo);

// Throws ValidationError naming the first failing request.
void require_valid(const ValidationReport& report, std::string_view where = "sfcs");

VnfCatalog catalog_from_json(const nlohmann::json& j);
nlohmann::json catalog_to_json(const VnfCatalog& catalog);
std::vector<SfcRequest> requests_from_json(const nlohmann::json& sfcs);
nlohmann::json requests_to_json(const std::vector<SfcRequest>& requests);

}  // namespace sfcsim

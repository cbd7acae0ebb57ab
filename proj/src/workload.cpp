#include "sfcsim/workload.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sfcsim/errors.hpp"

namespace sfcsim {

namespace {

std::pair<VnfId, VnfId> link_key(VnfId a, VnfId b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

void VnfCatalog::add_template(const VnfTemplate& t) {
    const std::string where = "catalog.templates[id " + std::to_string(t.vnf_id) + "]";
    if (templates_.contains(t.vnf_id)) throw ValidationError(where, "duplicate vnf id");
    if (t.cpu_demand <= Amount{}) throw ValidationError(where + ".cpu", "must be > 0");
    if (t.ram_demand <= Amount{}) throw ValidationError(where + ".ram_mb", "must be > 0");
    templates_.emplace(t.vnf_id, t);
}

void VnfCatalog::add_link(VnfId a, VnfId b, Amount band) {
    const std::string where = "catalog.links[" + std::to_string(a) + "," + std::to_string(b) + "]";
    if (!contains(a) || !contains(b)) throw ValidationError(where, "references unknown vnf template");
    if (band <= Amount{}) throw ValidationError(where + ".band_mbps", "must be > 0");
    if (links_.contains(link_key(a, b))) throw ValidationError(where, "duplicate link demand");
    links_.emplace(link_key(a, b), band);
}

const VnfTemplate& VnfCatalog::at(VnfId id) const {
    auto it = templates_.find(id);
    if (it == templates_.end()) throw ValidationError("catalog", "unknown vnf id " + std::to_string(id));
    return it->second;
}

std::optional<Amount> VnfCatalog::band_demand(VnfId a, VnfId b) const {
    auto it = links_.find(link_key(a, b));
    if (it == links_.end()) return std::nullopt;
    return it->second;
}

std::string_view to_string(WorkloadIssue issue) {
    switch (issue) {
        case WorkloadIssue::None: return "Ok";
        case WorkloadIssue::BadLifecycle: return "BadLifecycle";
        case WorkloadIssue::StartBeforeTopology: return "StartBeforeTopology";
        case WorkloadIssue::EmptyChain: return "EmptyChain";
        case WorkloadIssue::UnknownVnf: return "UnknownVnf";
        case WorkloadIssue::MissingLinkDemand: return "MissingLinkDemand";
        case WorkloadIssue::BadEndpoint: return "BadEndpoint";
        case WorkloadIssue::BadQos: return "BadQos";
        case WorkloadIssue::DuplicateId: return "DuplicateId";
    }
    return "Unknown";
}

bool ValidationReport::ok() const {
    return std::all_of(entries.begin(), entries.end(), [](const RequestCheck& c) { return c.ok(); });
}

const RequestCheck* ValidationReport::first_failure() const {
    for (const auto& c : entries) {
        if (!c.ok()) return &c;
    }
    return nullptr;
}

ValidationReport validate_workload(const std::vector<SfcRequest>& requests, const VnfCatalog& catalog,
                                   const SubstrateTopology& topo) {
    ValidationReport report;
    std::set<SfcId> seen;
    const auto nodes = static_cast<NodeId>(topo.node_count());

    for (std::size_t i = 0; i < requests.size(); ++i) {
        const SfcRequest& r = requests[i];
        RequestCheck check{r.sfc_id, i, WorkloadIssue::None, {}};
        auto fail = [&](WorkloadIssue issue, std::string detail) {
            check.issue = issue;
            check.detail = std::move(detail);
        };

        if (!seen.insert(r.sfc_id).second) {
            fail(WorkloadIssue::DuplicateId, "sfc id appears more than once");
        } else if (!std::isfinite(r.start_time) || !std::isfinite(r.end_time) || !(r.start_time < r.end_time)) {
            fail(WorkloadIssue::BadLifecycle, "start " + std::to_string(r.start_time) + " is not before end " +
                                                  std::to_string(r.end_time));
        } else if (r.start_time < topo.start_time()) {
            fail(WorkloadIssue::StartBeforeTopology, "start precedes the first topology time point");
        } else if (r.vnf_chain.empty()) {
            fail(WorkloadIssue::EmptyChain, "chain has no vnfs");
        } else if (r.ingress < 0 || r.ingress >= nodes || r.egress < 0 || r.egress >= nodes) {
            fail(WorkloadIssue::BadEndpoint, "endpoint outside [0, " + std::to_string(nodes) + ")");
        } else if (r.qos_max_latency <= Millis{}) {
            fail(WorkloadIssue::BadQos, "qos latency must be > 0");
        } else {
            for (std::size_t k = 0; k < r.vnf_chain.size() && check.ok(); ++k) {
                if (!catalog.contains(r.vnf_chain[k])) {
                    fail(WorkloadIssue::UnknownVnf, "chain[" + std::to_string(k) + "] = " +
                                                        std::to_string(r.vnf_chain[k]) + " not in catalog");
                } else if (k > 0 && !catalog.band_demand(r.vnf_chain[k - 1], r.vnf_chain[k])) {
                    fail(WorkloadIssue::MissingLinkDemand, "no band demand for (" +
                                                               std::to_string(r.vnf_chain[k - 1]) + "," +
                                                               std::to_string(r.vnf_chain[k]) + ")");
                }
            }
        }
        report.entries.push_back(std::move(check));
    }
    return report;
}

void require_valid(const ValidationReport& report, std::string_view where) {
    if (const RequestCheck* bad = report.first_failure()) {
        throw ValidationError(std::string(where) + "[" + std::to_string(bad->index) + "] (sfc id " +
                                  std::to_string(bad->sfc_id) + ")",
                              std::string(to_string(bad->issue)) + ": " + bad->detail);
    }
}

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(where + "." + key, "missing field");
    return j.at(key);
}

double num(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_number()) throw ValidationError(where + "." + key, "expected number");
    return v.get<double>();
}

int integer(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_number_integer()) throw ValidationError(where + "." + key, "expected integer");
    return v.get<int>();
}

const json& array(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_array()) throw ValidationError(where + "." + key, "expected array");
    return v;
}

}  // namespace

VnfCatalog catalog_from_json(const json& j) {
    VnfCatalog catalog;
    const json& templates = array(j, "templates", "catalog");
    for (std::size_t i = 0; i < templates.size(); ++i) {
        const std::string where = "catalog.templates[" + std::to_string(i) + "]";
        catalog.add_template(VnfTemplate{integer(templates[i], "id", where),
                                         Amount::from_double(num(templates[i], "cpu", where)),
                                         Amount::from_double(num(templates[i], "ram_mb", where))});
    }
    if (j.contains("links")) {
        const json& links = array(j, "links", "catalog");
        for (std::size_t i = 0; i < links.size(); ++i) {
            const std::string where = "catalog.links[" + std::to_string(i) + "]";
            catalog.add_link(integer(links[i], "a", where), integer(links[i], "b", where),
                             Amount::from_double(num(links[i], "band_mbps", where)));
        }
    }
    return catalog;
}

json catalog_to_json(const VnfCatalog& catalog) {
    json templates = json::array();
    for (const auto& [id, t] : catalog.templates()) {
        templates.push_back(json{{"id", id}, {"cpu", t.cpu_demand.to_double()}, {"ram_mb", t.ram_demand.to_double()}});
    }
    json links = json::array();
    for (const auto& [key, band] : catalog.links()) {
        links.push_back(json{{"a", key.first}, {"b", key.second}, {"band_mbps", band.to_double()}});
    }
    return json{{"templates", std::move(templates)}, {"links", std::move(links)}};
}

std::vector<SfcRequest> requests_from_json(const json& sfcs) {
    if (!sfcs.is_array()) throw ValidationError("sfcs", "expected array");
    std::vector<SfcRequest> out;
    out.reserve(sfcs.size());
    for (std::size_t i = 0; i < sfcs.size(); ++i) {
        const std::string where = "sfcs[" + std::to_string(i) + "]";
        const json& s = sfcs[i];
        SfcRequest r;
        r.sfc_id = integer(s, "id", where);
        r.start_time = num(s, "start", where);
        r.end_time = num(s, "end", where);
        r.ingress = integer(s, "ingress", where);
        r.egress = integer(s, "egress", where);
        const json& chain = array(s, "chain", where);
        for (std::size_t k = 0; k < chain.size(); ++k) {
            if (!chain[k].is_number_integer()) {
                throw ValidationError(where + ".chain[" + std::to_string(k) + "]", "expected integer");
            }
            r.vnf_chain.push_back(chain[k].get<int>());
        }
        r.qos_max_latency = Millis::from_double(num(s, "qos_latency_ms", where));
        out.push_back(std::move(r));
    }
    return out;
}

json requests_to_json(const std::vector<SfcRequest>& requests) {
    json out = json::array();
    for (const auto& r : requests) {
        out.push_back(json{{"id", r.sfc_id},
                           {"start", r.start_time},
                           {"end", r.end_time},
                           {"ingress", r.ingress},
                           {"egress", r.egress},
                           {"chain", r.vnf_chain},
                           {"qos_latency_ms", r.qos_max_latency.to_double()}});
    }
    return out;
}

}  // namespace sfcsim

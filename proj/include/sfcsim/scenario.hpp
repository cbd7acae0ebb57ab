#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sfcsim/topology.hpp"
#include "sfcsim/workload.hpp"

namespace sfcsim {

/// Space-air-ground substrate generator parameters. Defaults give 4 x 10
/// satellites, 5 UAVs and 3 ground stations.
struct SaginParams {
    int orbit_count = 4;
    int sats_per_orbit = 10;
    double altitude_km = 590.0;
    double inclination_deg = 33.0;
    int uav_count = 5;
    int ground_count = 3;

    double sat_cpu = 3.0;
    double uav_cpu = 0.3;
    double ground_cpu = 20.0;
    double node_ram_mb = 512000.0;
    double isl_band_mbps = 500.0;
    double sg_band_mbps = 200.0;   // satellite <-> UAV / ground
    double air_band_mbps = 200.0;  // UAV <-> UAV / ground

    double duration_s = 36000.0;
    double snapshot_interval_s = 600.0;
    double elevation_min_deg = 10.0;
    std::uint64_t seed = 1;

    // Service area and aerial layer.
    double region_lat_deg = 34.7;
    double region_lon_deg = 113.6;
    double region_radius_km = 50.0;
    double uav_altitude_km = 1.0;
    double uav_speed_kmps = 0.02;
    int uav_waypoints = 4;
    double air_range_km = 100.0;

    // Geometry constants.
    double earth_radius_km = 6371.0;
    double earth_mu_km3_s2 = 398600.4418;
    double light_speed_kmps = 299792.458;
    double los_margin_km = 80.0;  // grazing altitude below which ISLs are blocked

    int satellite_count() const { return orbit_count * sats_per_orbit; }
    int node_count() const { return satellite_count() + uav_count + ground_count; }
    int snapshot_count() const;

    // Throws InvalidParams.
    void validate() const;
};

SubstrateTopology generate_sagin(const SaginParams& params);

struct PoissonParams {
    int sfc_count = 100;
    double mean_lifetime_s = 600.0;
    int chain_len = 3;
    double qos_ms = 100.0;
    std::uint64_t seed = 0;
    // Arrival window length; defaults to the topology's time span.
    std::optional<double> horizon_s;
    // Candidate ingress/egress nodes; all nodes when empty.
    std::vector<NodeId> endpoints;
};

/// Exponential inter-arrivals (conditioned on sfc_count arrivals in the
/// window) and exponential lifetimes clipped to the window end. Chains are
/// random walks over catalog templates connected by link demands.
std::vector<SfcRequest> generate_poisson_workload(const SubstrateTopology& topo, const VnfCatalog& catalog,
                                                  const PoissonParams& params);

struct Scenario {
    SubstrateTopology topology;
    std::vector<SfcRequest> requests;
    VnfCatalog catalog;
    std::string solver = "greedy";
    std::uint64_t seed = 0;
    std::optional<SaginParams> substrate_generator;
    std::optional<PoissonParams> workload_generator;
};

// Throws ParseError (unreadable / malformed JSON) or ValidationError.
Scenario load_scenario(const std::filesystem::path& path);
// Relative substrate/workload file references resolve against base_dir.
Scenario scenario_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});

nlohmann::json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const nlohmann::json& j);

SaginParams sagin_params_from_json(const nlohmann::json& j);
nlohmann::json sagin_params_to_json(const SaginParams& p);
PoissonParams poisson_params_from_json(const nlohmann::json& j);

// Plain workload file: {"sfcs": [...], "catalog": {...}}.
nlohmann::json workload_to_json(const std::vector<SfcRequest>& requests, const VnfCatalog& catalog);
// Fully inline bundle (generators materialized).
nlohmann::json scenario_to_json(const Scenario& s);

}  // namespace sfcsim

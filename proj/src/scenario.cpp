#include "sfcsim/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "sfcsim/errors.hpp"
#include "sfcsim/solver.hpp"

namespace sfcsim {

namespace {

using nlohmann::json;

constexpr double kDeg = std::numbers::pi / 180.0;

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
};

// Uniform double in (0, 1) from the top 53 bits of one engine draw.
double uniform01(Rng& rng) { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; }

Vec3 geodetic(double lat_rad, double lon_rad, double radius) {
    return {radius * std::cos(lat_rad) * std::cos(lon_rad), radius * std::cos(lat_rad) * std::sin(lon_rad),
            radius * std::sin(lat_rad)};
}

// Minimum distance from Earth's center to segment ab.
double segment_clearance(const Vec3& a, const Vec3& b) {
    const Vec3 ab = b - a;
    const double len2 = ab.dot(ab);
    double t = len2 > 0 ? -a.dot(ab) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return (a + ab * t).norm();
}

double elevation_rad(const Vec3& observer, const Vec3& target) {
    const Vec3 d = target - observer;
    return std::asin(std::clamp(d.dot(observer) / (d.norm() * observer.norm()), -1.0, 1.0));
}

struct Offset {
    double east_km = 0, north_km = 0;
};

Offset random_in_disk(Rng& rng, double radius) {
    const double r = radius * std::sqrt(uniform01(rng));
    const double theta = 2 * std::numbers::pi * uniform01(rng);
    return {r * std::cos(theta), r * std::sin(theta)};
}

class SaginGeometry {
public:
    explicit SaginGeometry(const SaginParams& p) : p_(p) {
        Rng rng(p.seed);
        for (int u = 0; u < p.uav_count; ++u) {
            std::vector<Offset> loop;
            for (int w = 0; w < p.uav_waypoints; ++w) loop.push_back(random_in_disk(rng, p.region_radius_km));
            uav_loops_.push_back(std::move(loop));
        }
        for (int g = 0; g < p.ground_count; ++g) ground_.push_back(random_in_disk(rng, p.region_radius_km));
        const double r = p.earth_radius_km + p.altitude_km;
        angular_rate_ = std::sqrt(p.earth_mu_km3_s2 / (r * r * r));
    }

    Vec3 satellite(int plane, int index, double t) const {
        const double r = p_.earth_radius_km + p_.altitude_km;
        const double raan = 2 * std::numbers::pi * plane / p_.orbit_count;
        // Planes are staggered by half a Walker step so that satellites in
        // planes sharing a node line never meet there.
        const double phase = 2 * std::numbers::pi * (index + 0.5 * plane / p_.orbit_count) / p_.sats_per_orbit;
        const double u = phase + angular_rate_ * t;
        const double inc = p_.inclination_deg * kDeg;
        return {r * (std::cos(raan) * std::cos(u) - std::sin(raan) * std::sin(u) * std::cos(inc)),
                r * (std::sin(raan) * std::cos(u) + std::cos(raan) * std::sin(u) * std::cos(inc)),
                r * std::sin(u) * std::sin(inc)};
    }

    Vec3 uav(int u, double t) const {
        const auto& loop = uav_loops_[u];
        std::vector<double> seg;
        double perimeter = 0;
        for (std::size_t i = 0; i < loop.size(); ++i) {
            const auto& a = loop[i];
            const auto& b = loop[(i + 1) % loop.size()];
            seg.push_back(std::hypot(b.east_km - a.east_km, b.north_km - a.north_km));
            perimeter += seg.back();
        }
        Offset at = loop.front();
        if (perimeter > 0) {
            double s = std::fmod(p_.uav_speed_kmps * t, perimeter);
            for (std::size_t i = 0; i < loop.size(); ++i) {
                if (s <= seg[i] || i + 1 == loop.size()) {
                    const auto& a = loop[i];
                    const auto& b = loop[(i + 1) % loop.size()];
                    const double f = seg[i] > 0 ? std::min(s / seg[i], 1.0) : 0.0;
                    at = {a.east_km + f * (b.east_km - a.east_km), a.north_km + f * (b.north_km - a.north_km)};
                    break;
                }
                s -= seg[i];
            }
        }
        return local(at, p_.uav_altitude_km);
    }

    Vec3 ground(int g) const { return local(ground_[g], 0.0); }

private:
    Vec3 local(const Offset& o, double height_km) const {
        const double lat0 = p_.region_lat_deg * kDeg;
        const double lat = lat0 + o.north_km / p_.earth_radius_km;
        const double lon = p_.region_lon_deg * kDeg + o.east_km / (p_.earth_radius_km * std::cos(lat0));
        return geodetic(lat, lon, p_.earth_radius_km + height_km);
    }

    const SaginParams& p_;
    double angular_rate_ = 0;
    std::vector<std::vector<Offset>> uav_loops_;
    std::vector<Offset> ground_;
};

}  // namespace

int SaginParams::snapshot_count() const {
    return static_cast<int>(std::llround(duration_s / snapshot_interval_s)) + 1;
}

void SaginParams::validate() const {
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw InvalidParams("sagin: " + what);
    };
    require(orbit_count >= 1, "orbit_count must be >= 1");
    require(sats_per_orbit >= 1, "sats_per_orbit must be >= 1");
    require(uav_count >= 0, "uav_count must be >= 0");
    require(ground_count >= 0, "ground_count must be >= 0");
    require(altitude_km > 0, "altitude_km must be > 0");
    require(std::isfinite(duration_s) && duration_s > 0, "duration_s must be > 0");
    require(std::isfinite(snapshot_interval_s) && snapshot_interval_s > 0, "snapshot_interval_s must be > 0");
    const double steps = duration_s / snapshot_interval_s;
    require(std::abs(steps - std::round(steps)) < 1e-9 * std::max(1.0, steps),
            "snapshot_interval_s must divide duration_s");
    require(elevation_min_deg >= -90 && elevation_min_deg < 90, "elevation_min_deg out of range");
    require(inclination_deg >= 0 && inclination_deg <= 180, "inclination_deg out of range");
    require(sat_cpu >= 0 && uav_cpu >= 0 && ground_cpu >= 0 && node_ram_mb >= 0, "capacities must be >= 0");
    require(isl_band_mbps >= 0 && sg_band_mbps >= 0 && air_band_mbps >= 0, "bandwidths must be >= 0");
    require(region_radius_km >= 0 && uav_altitude_km > 0 && uav_speed_kmps >= 0, "invalid aerial layer");
    require(uav_waypoints >= 1, "uav_waypoints must be >= 1");
    require(air_range_km >= 0, "air_range_km must be >= 0");
    require(earth_radius_km > 0 && earth_mu_km3_s2 > 0 && light_speed_kmps > 0, "invalid geometry constants");
    require(los_margin_km >= 0 && los_margin_km < altitude_km, "los_margin_km must be in [0, altitude_km)");
}

SubstrateTopology generate_sagin(const SaginParams& p) {
    p.validate();
    const SaginGeometry geo(p);
    const int sats = p.satellite_count();
    const int n = p.node_count();
    const int uav0 = sats, ground0 = sats + p.uav_count;

    auto latency = [&](const Vec3& a, const Vec3& b) {
        return Millis::from_double((b - a).norm() / p.light_speed_kmps * 1000.0);
    };
    const Amount isl = Amount::from_double(p.isl_band_mbps);
    const Amount sg = Amount::from_double(p.sg_band_mbps);
    const Amount air = Amount::from_double(p.air_band_mbps);

    std::vector<double> times;
    std::vector<SubstrateSnapshot> snaps;
    for (int k = 0; k < p.snapshot_count(); ++k) {
        const double t = k * p.snapshot_interval_s;
        std::vector<Vec3> pos(n);
        for (int o = 0; o < p.orbit_count; ++o) {
            for (int s = 0; s < p.sats_per_orbit; ++s) pos[o * p.sats_per_orbit + s] = geo.satellite(o, s, t);
        }
        for (int u = 0; u < p.uav_count; ++u) pos[uav0 + u] = geo.uav(u, t);
        for (int g = 0; g < p.ground_count; ++g) pos[ground0 + g] = geo.ground(g);

        SubstrateSnapshot snap(n);
        for (int v = 0; v < n; ++v) {
            const double cpu = v < uav0 ? p.sat_cpu : v < ground0 ? p.uav_cpu : p.ground_cpu;
            snap.set_node(v, Amount::from_double(cpu), Amount::from_double(p.node_ram_mb));
        }

        // Intra-orbit ring.
        for (int o = 0; o < p.orbit_count; ++o) {
            for (int s = 0; s < p.sats_per_orbit; ++s) {
                const int a = o * p.sats_per_orbit + s;
                const int b = o * p.sats_per_orbit + (s + 1) % p.sats_per_orbit;
                if (a != b) snap.add_edge(a, b, latency(pos[a], pos[b]), isl);
            }
        }
        // Nearest neighbor in the next plane, when not blocked by the Earth.
        const int plane_pairs = p.orbit_count == 2 ? 1 : p.orbit_count >= 3 ? p.orbit_count : 0;
        for (int o = 0; o < plane_pairs; ++o) {
            const int next = (o + 1) % p.orbit_count;
            for (int s = 0; s < p.sats_per_orbit; ++s) {
                const int a = o * p.sats_per_orbit + s;
                int best = -1;
                double best_d = 0;
                for (int s2 = 0; s2 < p.sats_per_orbit; ++s2) {
                    const int b = next * p.sats_per_orbit + s2;
                    const double d = (pos[b] - pos[a]).norm();
                    if (best < 0 || d < best_d) {
                        best = b;
                        best_d = d;
                    }
                }
                if (segment_clearance(pos[a], pos[best]) >= p.earth_radius_km + p.los_margin_km) {
                    snap.add_edge(a, best, latency(pos[a], pos[best]), isl);
                }
            }
        }
        // Space <-> air / ground by elevation mask.
        for (int v = uav0; v < n; ++v) {
            for (int s = 0; s < sats; ++s) {
                if (elevation_rad(pos[v], pos[s]) >= p.elevation_min_deg * kDeg) {
                    snap.add_edge(v, s, latency(pos[v], pos[s]), sg);
                }
            }
        }
        // Air <-> air and air <-> ground within range.
        for (int u = uav0; u < ground0; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if ((pos[v] - pos[u]).norm() <= p.air_range_km) snap.add_edge(u, v, latency(pos[u], pos[v]), air);
            }
        }
        times.push_back(t);
        snaps.push_back(std::move(snap));
    }
    return SubstrateTopology(std::move(times), std::move(snaps));
}

std::vector<SfcRequest> generate_poisson_workload(const SubstrateTopology& topo, const VnfCatalog& catalog,
                                                  const PoissonParams& p) {
    if (p.sfc_count <= 0) throw InvalidParams("poisson: sfc_count must be > 0");
    if (!(p.mean_lifetime_s > 0)) throw InvalidParams("poisson: mean_lifetime_s must be > 0");
    if (p.chain_len <= 0) throw InvalidParams("poisson: chain_len must be > 0");
    if (!(p.qos_ms > 0)) throw InvalidParams("poisson: qos_ms must be > 0");
    if (catalog.templates().empty()) throw InvalidParams("poisson: catalog has no templates");
    const double horizon = p.horizon_s.value_or(topo.last_time() - topo.start_time());
    if (!(horizon > 0)) throw InvalidParams("poisson: horizon must be > 0 (set horizon_s for static topologies)");
    std::vector<NodeId> endpoints = p.endpoints;
    if (endpoints.empty()) {
        for (std::size_t v = 0; v < topo.node_count(); ++v) endpoints.push_back(static_cast<NodeId>(v));
    }
    for (NodeId v : endpoints) {
        if (v < 0 || static_cast<std::size_t>(v) >= topo.node_count()) {
            throw InvalidParams("poisson: endpoint " + std::to_string(v) + " out of range");
        }
    }

    std::vector<VnfId> template_ids;
    for (const auto& [id, t] : catalog.templates()) template_ids.push_back(id);

    Rng rng(p.seed);
    const double t0 = topo.start_time();
    const double t_end = t0 + horizon;

    // n arrivals of a Poisson process conditioned on the window: normalized
    // partial sums of n + 1 exponential gaps.
    std::vector<double> cumulative;
    double total = 0;
    for (int i = 0; i <= p.sfc_count; ++i) {
        total += -std::log(uniform01(rng));
        cumulative.push_back(total);
    }

    std::vector<SfcRequest> out;
    for (int i = 0; i < p.sfc_count; ++i) {
        SfcRequest r;
        r.sfc_id = i;
        r.start_time = t0 + horizon * (cumulative[i] / total);
        const double life = -p.mean_lifetime_s * std::log(uniform01(rng));
        r.end_time = std::min(r.start_time + life, t_end);
        if (!(r.end_time > r.start_time)) r.end_time = std::nextafter(r.start_time, t_end + 1.0);
        r.ingress = endpoints[uniform_index(rng, endpoints.size())];
        r.egress = endpoints[uniform_index(rng, endpoints.size())];
        VnfId cur = template_ids[uniform_index(rng, template_ids.size())];
        r.vnf_chain.push_back(cur);
        for (int k = 1; k < p.chain_len; ++k) {
            std::vector<VnfId> next;
            for (VnfId id : template_ids) {
                if (catalog.band_demand(cur, id)) next.push_back(id);
            }
            if (next.empty()) {
                throw InvalidParams("poisson: no link demand continues a chain from vnf " + std::to_string(cur));
            }
            cur = next[uniform_index(rng, next.size())];
            r.vnf_chain.push_back(cur);
        }
        r.qos_max_latency = Millis::from_double(p.qos_ms);
        out.push_back(std::move(r));
    }
    return out;
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& path, const json& j) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << j.dump(1) << '\n';
    if (!out) throw IoError("write failed for " + path.string());
}

namespace {

void apply_fields(const json& j, const std::string& where, const std::vector<std::pair<const char*, double*>>& doubles,
                  const std::vector<std::pair<const char*, int*>>& ints, std::uint64_t* seed,
                  std::initializer_list<std::string_view> handled_elsewhere = {}) {
    if (!j.is_object()) throw ValidationError(where, "expected object");
    for (const auto& [key, value] : j.items()) {
        const std::string at = where + "." + key;
        bool known = false;
        for (const auto& [name, ptr] : doubles) {
            if (key == name) {
                if (!value.is_number()) throw ValidationError(at, "expected number");
                *ptr = value.get<double>();
                known = true;
            }
        }
        for (const auto& [name, ptr] : ints) {
            if (key == name) {
                if (!value.is_number_integer()) throw ValidationError(at, "expected integer");
                *ptr = value.get<int>();
                known = true;
            }
        }
        if (seed && key == "seed") {
            if (!value.is_number_unsigned()) throw ValidationError(at, "expected non-negative integer");
            *seed = value.get<std::uint64_t>();
            known = true;
        }
        for (std::string_view other : handled_elsewhere) known = known || key == other;
        if (!known) throw ValidationError(at, "unknown field");
    }
}

}  // namespace

SaginParams sagin_params_from_json(const json& j) {
    SaginParams p;
    const std::vector<std::pair<const char*, double*>> doubles = {
        {"altitude_km", &p.altitude_km},
        {"inclination_deg", &p.inclination_deg},
        {"sat_cpu", &p.sat_cpu},
        {"uav_cpu", &p.uav_cpu},
        {"ground_cpu", &p.ground_cpu},
        {"node_ram_mb", &p.node_ram_mb},
        {"isl_band_mbps", &p.isl_band_mbps},
        {"sg_band_mbps", &p.sg_band_mbps},
        {"air_band_mbps", &p.air_band_mbps},
        {"duration_s", &p.duration_s},
        {"snapshot_interval_s", &p.snapshot_interval_s},
        {"elevation_min_deg", &p.elevation_min_deg},
        {"region_lat_deg", &p.region_lat_deg},
        {"region_lon_deg", &p.region_lon_deg},
        {"region_radius_km", &p.region_radius_km},
        {"uav_altitude_km", &p.uav_altitude_km},
        {"uav_speed_kmps", &p.uav_speed_kmps},
        {"air_range_km", &p.air_range_km},
        {"earth_radius_km", &p.earth_radius_km},
        {"earth_mu_km3_s2", &p.earth_mu_km3_s2},
        {"light_speed_kmps", &p.light_speed_kmps},
        {"los_margin_km", &p.los_margin_km},
    };
    const std::vector<std::pair<const char*, int*>> ints = {
        {"orbit_count", &p.orbit_count},   {"sats_per_orbit", &p.sats_per_orbit},
        {"uav_count", &p.uav_count},       {"ground_count", &p.ground_count},
        {"uav_waypoints", &p.uav_waypoints},
    };
    apply_fields(j, "sagin", doubles, ints, &p.seed);
    return p;
}

json sagin_params_to_json(const SaginParams& p) {
    return json{{"orbit_count", p.orbit_count},
                {"sats_per_orbit", p.sats_per_orbit},
                {"altitude_km", p.altitude_km},
                {"inclination_deg", p.inclination_deg},
                {"uav_count", p.uav_count},
                {"ground_count", p.ground_count},
                {"sat_cpu", p.sat_cpu},
                {"uav_cpu", p.uav_cpu},
                {"ground_cpu", p.ground_cpu},
                {"node_ram_mb", p.node_ram_mb},
                {"isl_band_mbps", p.isl_band_mbps},
                {"sg_band_mbps", p.sg_band_mbps},
                {"air_band_mbps", p.air_band_mbps},
                {"duration_s", p.duration_s},
                {"snapshot_interval_s", p.snapshot_interval_s},
                {"elevation_min_deg", p.elevation_min_deg},
                {"seed", p.seed},
                {"region_lat_deg", p.region_lat_deg},
                {"region_lon_deg", p.region_lon_deg},
                {"region_radius_km", p.region_radius_km},
                {"uav_altitude_km", p.uav_altitude_km},
                {"uav_speed_kmps", p.uav_speed_kmps},
                {"uav_waypoints", p.uav_waypoints},
                {"air_range_km", p.air_range_km},
                {"earth_radius_km", p.earth_radius_km},
                {"earth_mu_km3_s2", p.earth_mu_km3_s2},
                {"light_speed_kmps", p.light_speed_kmps},
                {"los_margin_km", p.los_margin_km}};
}

PoissonParams poisson_params_from_json(const json& j) {
    PoissonParams p;
    const std::vector<std::pair<const char*, double*>> doubles = {
        {"mean_lifetime_s", &p.mean_lifetime_s},
        {"qos_ms", &p.qos_ms},
    };
    const std::vector<std::pair<const char*, int*>> ints = {
        {"sfc_count", &p.sfc_count},
        {"chain_len", &p.chain_len},
    };
    apply_fields(j, "poisson", doubles, ints, &p.seed, {"horizon_s", "endpoints"});
    if (j.contains("horizon_s")) {
        if (!j["horizon_s"].is_number()) throw ValidationError("poisson.horizon_s", "expected number");
        p.horizon_s = j["horizon_s"].get<double>();
    }
    if (j.contains("endpoints")) {
        const json& e = j["endpoints"];
        if (!e.is_array()) throw ValidationError("poisson.endpoints", "expected array");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i].is_number_integer()) {
                throw ValidationError("poisson.endpoints[" + std::to_string(i) + "]", "expected integer");
            }
            p.endpoints.push_back(e[i].get<int>());
        }
    }
    return p;
}

namespace {

json resolve(const json& j, const std::filesystem::path& base_dir) {
    if (j.is_string()) return read_json_file(base_dir / j.get<std::string>());
    return j;
}

template <typename F>
auto with_prefix(const std::string& prefix, F&& f) {
    try {
        return f();
    } catch (const ValidationError& e) {
        const std::string msg = std::string(e.what()).substr(e.location().size() + 2);
        throw ValidationError(prefix + "." + e.location(), msg);
    } catch (const InvalidParams& e) {
        throw ValidationError(prefix, e.what());
    }
}

}  // namespace

Scenario scenario_from_json(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw ValidationError("scenario", "expected object");
    for (const char* key : {"substrate", "workload"}) {
        if (!j.contains(key)) throw ValidationError(key, "missing field");
    }

    std::string solver = "greedy";
    if (j.contains("solver")) {
        if (!j["solver"].is_string()) throw ValidationError("solver", "expected string");
        solver = j["solver"].get<std::string>();
    }
    if (!is_known_solver(solver)) throw ValidationError("solver", "UnknownSolver: '" + solver + "'");

    std::uint64_t seed = 0;
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw ValidationError("seed", "expected non-negative integer");
        seed = j["seed"].get<std::uint64_t>();
    }

    const json substrate = resolve(j["substrate"], base_dir);
    std::optional<SaginParams> sagin;
    if (substrate.is_object() && substrate.contains("generator")) {
        const json& gen = substrate["generator"];
        if (!gen.is_object() || !gen.contains("sagin")) {
            throw ValidationError("substrate.generator", "expected {\"sagin\": {...}}");
        }
        sagin = with_prefix("substrate.generator", [&] { return sagin_params_from_json(gen["sagin"]); });
    }
    SubstrateTopology topology =
        with_prefix("substrate", [&] { return sagin ? generate_sagin(*sagin) : topology_from_json(substrate); });

    const json workload = resolve(j["workload"], base_dir);
    if (!workload.is_object()) throw ValidationError("workload", "expected object");
    json catalog_json;
    if (j.contains("catalog")) {
        catalog_json = resolve(j["catalog"], base_dir);
    } else if (workload.contains("catalog")) {
        catalog_json = workload["catalog"];
    } else {
        throw ValidationError("catalog", "missing field");
    }
    VnfCatalog catalog = catalog_from_json(catalog_json);

    std::optional<PoissonParams> poisson;
    std::vector<SfcRequest> requests;
    if (workload.contains("generator")) {
        const json& gen = workload["generator"];
        if (!gen.is_object() || !gen.contains("poisson")) {
            throw ValidationError("workload.generator", "expected {\"poisson\": {...}}");
        }
        poisson = with_prefix("workload.generator", [&] {
            PoissonParams p = poisson_params_from_json(gen["poisson"]);
            if (!gen["poisson"].contains("seed")) p.seed = seed;
            return p;
        });
        requests = with_prefix("workload.generator.poisson",
                               [&] { return generate_poisson_workload(topology, catalog, *poisson); });
    } else {
        if (!workload.contains("sfcs")) throw ValidationError("workload.sfcs", "missing field");
        requests = with_prefix("workload", [&] { return requests_from_json(workload["sfcs"]); });
    }
    require_valid(validate_workload(requests, catalog, topology), "workload.sfcs");

    return Scenario{std::move(topology), std::move(requests), std::move(catalog), std::move(solver), seed,
                    sagin, poisson};
}

Scenario load_scenario(const std::filesystem::path& path) {
    return scenario_from_json(read_json_file(path), path.parent_path());
}

json workload_to_json(const std::vector<SfcRequest>& requests, const VnfCatalog& catalog) {
    return json{{"sfcs", requests_to_json(requests)}, {"catalog", catalog_to_json(catalog)}};
}

json scenario_to_json(const Scenario& s) {
    return json{{"substrate", topology_to_json(s.topology)},
                {"workload", json{{"sfcs", requests_to_json(s.requests)}}},
                {"catalog", catalog_to_json(s.catalog)},
                {"solver", s.solver},
                {"seed", s.seed}};
}

}  // namespace sfcsim

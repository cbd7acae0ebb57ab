#include "sfcsim/topology.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "sfcsim/errors.hpp"

namespace sfcsim {

SubstrateSnapshot::SubstrateSnapshot(std::size_t node_count)
    : adjacency_(node_count, 0),
      latency_(node_count),
      band_(node_count),
      cpu_(node_count),
      ram_(node_count) {}

Millis SubstrateSnapshot::latency(NodeId a, NodeId b) const {
    if (!adjacent(a, b)) {
        throw InvalidPath("no edge between " + std::to_string(a) + " and " + std::to_string(b));
    }
    return latency_(a, b);
}

Amount SubstrateSnapshot::link_band(NodeId a, NodeId b) const {
    if (!adjacent(a, b)) {
        throw InvalidPath("no edge between " + std::to_string(a) + " and " + std::to_string(b));
    }
    return band_(a, b);
}

std::vector<NodeId> SubstrateSnapshot::neighbors(NodeId n) const {
    std::vector<NodeId> out;
    for (std::size_t v = 0; v < node_count(); ++v) {
        if (adjacency_(n, v)) out.push_back(static_cast<NodeId>(v));
    }
    return out;
}

void SubstrateSnapshot::add_edge(NodeId a, NodeId b, Millis latency, Amount band) {
    adjacency_.set_sym(a, b, 1);
    latency_.set_sym(a, b, latency);
    band_.set_sym(a, b, band);
}

void SubstrateSnapshot::remove_edge(NodeId a, NodeId b) {
    adjacency_.set_sym(a, b, 0);
    latency_.set_sym(a, b, Millis{});
    band_.set_sym(a, b, Amount{});
}

void SubstrateSnapshot::set_node(NodeId n, Amount cpu, Amount ram) {
    cpu_[n] = cpu;
    ram_[n] = ram;
}

void SubstrateSnapshot::validate() const {
    const std::size_t n = node_count();
    for (std::size_t i = 0; i < n; ++i) {
        if (cpu_[i].is_negative()) throw ValidationError("node_cpu[" + std::to_string(i) + "]", "negative capacity");
        if (ram_[i].is_negative()) throw ValidationError("node_ram_mb[" + std::to_string(i) + "]", "negative capacity");
        if (adjacency_(i, i)) throw ValidationError("adjacency[" + std::to_string(i) + "]", "self loop");
        for (std::size_t j = 0; j < n; ++j) {
            const std::string at = "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            if (adjacency_(i, j) != adjacency_(j, i)) throw ValidationError("adjacency" + at, "not symmetric");
            if (!adjacency_(i, j)) continue;
            if (latency_(i, j) != latency_(j, i)) throw ValidationError("latency_ms" + at, "not symmetric");
            if (band_(i, j) != band_(j, i)) throw ValidationError("link_band_mbps" + at, "not symmetric");
            if (latency_(i, j).is_negative()) throw ValidationError("latency_ms" + at, "negative latency");
            if (band_(i, j).is_negative()) throw ValidationError("link_band_mbps" + at, "negative capacity");
        }
    }
}

SubstrateTopology::SubstrateTopology(std::vector<double> time_points, std::vector<SubstrateSnapshot> snapshots)
    : time_points_(std::move(time_points)), snapshots_(std::move(snapshots)) {
    if (time_points_.empty()) throw ValidationError("time_points", "empty");
    if (time_points_.size() != snapshots_.size()) {
        throw ValidationError("snapshots", "expected " + std::to_string(time_points_.size()) + " snapshots, got " +
                                               std::to_string(snapshots_.size()));
    }
    for (std::size_t i = 0; i < time_points_.size(); ++i) {
        if (!std::isfinite(time_points_[i])) {
            throw ValidationError("time_points[" + std::to_string(i) + "]", "not finite");
        }
        if (i > 0 && !(time_points_[i] > time_points_[i - 1])) {
            throw ValidationError("time_points[" + std::to_string(i) + "]", "not strictly increasing");
        }
        if (snapshots_[i].node_count() != snapshots_[0].node_count()) {
            throw ValidationError("snapshots[" + std::to_string(i) + "]", "node count differs from first snapshot");
        }
        try {
            snapshots_[i].validate();
        } catch (const ValidationError& e) {
            throw ValidationError("snapshots[" + std::to_string(i) + "]." + e.location(),
                                  std::string(e.what()).substr(e.location().size() + 2));
        }
    }
}

std::size_t SubstrateTopology::index_at(double t) const {
    if (t < time_points_.front()) {
        throw TimeBeforeStart("time " + std::to_string(t) + " precedes topology start " +
                              std::to_string(time_points_.front()));
    }
    auto it = std::upper_bound(time_points_.begin(), time_points_.end(), t);
    return static_cast<std::size_t>(std::distance(time_points_.begin(), it)) - 1;
}

const SubstrateSnapshot& snapshot_at(const SubstrateTopology& topo, double t) {
    return topo.snapshot(topo.index_at(t));
}

namespace {

struct Label {
    Millis dist;
    std::vector<NodeId> path;

    bool operator<(const Label& o) const {
        if (dist != o.dist) return dist < o.dist;
        return path < o.path;
    }
    bool operator>(const Label& o) const { return o < *this; }
};

}  // namespace

std::optional<PhysicalPath> shortest_feasible_path(const SubstrateSnapshot& snap, NodeId src, NodeId dst,
                                                   Amount min_band, const SquareMatrix<Amount>& residual_band) {
    const std::size_t n = snap.node_count();
    if (src < 0 || dst < 0 || static_cast<std::size_t>(src) >= n || static_cast<std::size_t>(dst) >= n) {
        throw InvalidPath("endpoint out of range");
    }
    if (src == dst) return PhysicalPath{{src}};

    // Label-setting search over (latency, node sequence); extending a path
    // strictly increases its label, so the first settled label at dst is the
    // lexicographically smallest minimum-latency path.
    std::vector<std::optional<Label>> best(n);
    std::vector<bool> settled(n, false);
    std::priority_queue<Label, std::vector<Label>, std::greater<>> queue;
    best[src] = Label{Millis{}, {src}};
    queue.push(*best[src]);

    while (!queue.empty()) {
        Label cur = queue.top();
        queue.pop();
        const NodeId u = cur.path.back();
        if (settled[u]) continue;
        settled[u] = true;
        if (u == dst) return PhysicalPath{std::move(cur.path)};

        for (NodeId v : snap.neighbors(u)) {
            if (settled[v]) continue;
            if (residual_band(u, v) < min_band) continue;
            Label next{cur.dist + snap.latency(u, v), cur.path};
            next.path.push_back(v);
            if (!best[v] || next < *best[v]) {
                best[v] = next;
                queue.push(std::move(next));
            }
        }
    }
    return std::nullopt;
}

std::optional<PhysicalPath> shortest_feasible_path(const SubstrateSnapshot& snap, NodeId src, NodeId dst,
                                                   Amount min_band) {
    SquareMatrix<Amount> band(snap.node_count());
    for (std::size_t i = 0; i < snap.node_count(); ++i) {
        for (std::size_t j = 0; j < snap.node_count(); ++j) {
            band(i, j) = snap.link_band_or_zero(static_cast<NodeId>(i), static_cast<NodeId>(j));
        }
    }
    return shortest_feasible_path(snap, src, dst, min_band, band);
}

Millis path_latency(const SubstrateSnapshot& snap, const PhysicalPath& path) {
    Millis total;
    for (std::size_t i = 1; i < path.nodes.size(); ++i) {
        total += snap.latency(path.nodes[i - 1], path.nodes[i]);
    }
    return total;
}

bool path_valid(const SubstrateSnapshot& snap, const PhysicalPath& path) {
    if (path.nodes.empty()) return false;
    std::vector<bool> seen(snap.node_count(), false);
    for (std::size_t i = 0; i < path.nodes.size(); ++i) {
        const NodeId v = path.nodes[i];
        if (v < 0 || static_cast<std::size_t>(v) >= snap.node_count() || seen[v]) return false;
        seen[v] = true;
        if (i > 0 && !snap.adjacent(path.nodes[i - 1], v)) return false;
    }
    return true;
}

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ValidationError(where + key, "missing field");
    return j.at(key);
}

double number_at(const json& j, const std::string& where) {
    if (!j.is_number()) throw ValidationError(where, "expected number");
    return j.get<double>();
}

std::vector<double> vector_at(const json& j, std::size_t n, const std::string& where) {
    if (!j.is_array() || j.size() != n) {
        throw ValidationError(where, "expected array of length " + std::to_string(n));
    }
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(number_at(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

bool truthy(const json& j, const std::string& where) {
    if (j.is_boolean()) return j.get<bool>();
    if (j.is_number()) return j.get<double>() != 0.0;
    throw ValidationError(where, "expected boolean or 0/1");
}

SubstrateSnapshot snapshot_from_json(const json& j, const std::string& where) {
    const json& cpu = require(j, "node_cpu", where);
    if (!cpu.is_array()) throw ValidationError(where + "node_cpu", "expected array");
    const std::size_t n = cpu.size();
    const auto cpu_v = vector_at(cpu, n, where + "node_cpu");
    const auto ram_v = vector_at(require(j, "node_ram_mb", where), n, where + "node_ram_mb");
    const json& adj = require(j, "adjacency", where);
    const json& lat = require(j, "latency_ms", where);
    const json& band = require(j, "link_band_mbps", where);
    for (const auto& [m, name] : {std::pair{&adj, "adjacency"}, {&lat, "latency_ms"}, {&band, "link_band_mbps"}}) {
        if (!m->is_array() || m->size() != n) {
            throw ValidationError(where + name, "expected " + std::to_string(n) + " x " + std::to_string(n) + " matrix");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!(*m)[i].is_array() || (*m)[i].size() != n) {
                throw ValidationError(where + name + "[" + std::to_string(i) + "]",
                                      "expected row of length " + std::to_string(n));
            }
        }
    }

    SubstrateSnapshot snap(n);
    for (std::size_t i = 0; i < n; ++i) {
        snap.set_node(static_cast<NodeId>(i), Amount::from_double(cpu_v[i]), Amount::from_double(ram_v[i]));
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j2 = 0; j2 < n; ++j2) {
            const std::string at = "[" + std::to_string(i) + "][" + std::to_string(j2) + "]";
            const bool a_ij = truthy(adj[i][j2], where + "adjacency" + at);
            const bool a_ji = truthy(adj[j2][i], where + "adjacency" + at);
            if (a_ij != a_ji) throw ValidationError(where + "adjacency" + at, "not symmetric");
            if (i == j2 && a_ij) throw ValidationError(where + "adjacency" + at, "self loop");
            if (!a_ij || j2 < i) continue;
            const double l_ij = number_at(lat[i][j2], where + "latency_ms" + at);
            const double b_ij = number_at(band[i][j2], where + "link_band_mbps" + at);
            if (l_ij != number_at(lat[j2][i], where + "latency_ms" + at)) {
                throw ValidationError(where + "latency_ms" + at, "not symmetric");
            }
            if (b_ij != number_at(band[j2][i], where + "link_band_mbps" + at)) {
                throw ValidationError(where + "link_band_mbps" + at, "not symmetric");
            }
            if (!std::isfinite(l_ij) || l_ij < 0) throw ValidationError(where + "latency_ms" + at, "must be finite and >= 0");
            snap.add_edge(static_cast<NodeId>(i), static_cast<NodeId>(j2), Millis::from_double(l_ij),
                          Amount::from_double(b_ij));
        }
    }
    return snap;
}

}  // namespace

SubstrateTopology topology_from_json(const json& j) {
    const json& tp = require(j, "time_points", "");
    if (!tp.is_array()) throw ValidationError("time_points", "expected array");
    const auto times = vector_at(tp, tp.size(), "time_points");
    const json& snaps = require(j, "snapshots", "");
    if (!snaps.is_array()) throw ValidationError("snapshots", "expected array");
    std::vector<SubstrateSnapshot> out;
    out.reserve(snaps.size());
    for (std::size_t i = 0; i < snaps.size(); ++i) {
        out.push_back(snapshot_from_json(snaps[i], "snapshots[" + std::to_string(i) + "]."));
    }
    return SubstrateTopology(times, std::move(out));
}

json topology_to_json(const SubstrateTopology& topo) {
    json snaps = json::array();
    const std::size_t n = topo.node_count();
    for (std::size_t k = 0; k < topo.size(); ++k) {
        const auto& s = topo.snapshot(k);
        json adj = json::array(), lat = json::array(), band = json::array(), cpu = json::array(),
             ram = json::array();
        for (std::size_t i = 0; i < n; ++i) {
            json arow = json::array(), lrow = json::array(), brow = json::array();
            for (std::size_t j2 = 0; j2 < n; ++j2) {
                const auto a = static_cast<NodeId>(i), b = static_cast<NodeId>(j2);
                const bool e = s.adjacent(a, b);
                arow.push_back(e ? 1 : 0);
                lrow.push_back(e ? s.latency(a, b).to_double() : 0.0);
                brow.push_back(e ? s.link_band(a, b).to_double() : 0.0);
            }
            adj.push_back(std::move(arow));
            lat.push_back(std::move(lrow));
            band.push_back(std::move(brow));
            cpu.push_back(s.node_cpu(static_cast<NodeId>(i)).to_double());
            ram.push_back(s.node_ram(static_cast<NodeId>(i)).to_double());
        }
        snaps.push_back(json{{"adjacency", std::move(adj)},
                             {"latency_ms", std::move(lat)},
                             {"node_cpu", std::move(cpu)},
                             {"node_ram_mb", std::move(ram)},
                             {"link_band_mbps", std::move(band)}});
    }
    json tp = json::array();
    for (double t : topo.time_points()) tp.push_back(t);
    return json{{"time_points", std::move(tp)}, {"snapshots", std::move(snaps)}};
}

}  // namespace sfcsim

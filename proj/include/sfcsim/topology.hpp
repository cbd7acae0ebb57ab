#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <json.hpp>

#include "sfcsim/fixed.hpp"

namespace sfcsim {

using NodeId = int;

// Dense symmetric N x N matrix.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n, T fill = T{}) : n_(n), data_(n * n, fill) {}

    std::size_t size() const { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    // Writes both (i,j) and (j,i).
    void set_sym(std::size_t i, std::size_t j, T v) {
        (*this)(i, j) = v;
        (*this)(j, i) = v;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

/// Physical network state at a single timestamp.
class SubstrateSnapshot {
public:
    SubstrateSnapshot() = default;
    explicit SubstrateSnapshot(std::size_t node_count);

    std::size_t node_count() const { return cpu_.size(); }

    bool adjacent(NodeId a, NodeId b) const { return adjacency_(a, b) != 0; }
    // Latency and bandwidth of a present edge; InvalidPath if the edge is absent.
    Millis latency(NodeId a, NodeId b) const;
    Amount link_band(NodeId a, NodeId b) const;
    // Capacity of (a,b), zero when the edge is absent.
    Amount link_band_or_zero(NodeId a, NodeId b) const {
        return adjacent(a, b) ? band_(a, b) : Amount{};
    }

    Amount node_cpu(NodeId n) const { return cpu_[n]; }
    Amount node_ram(NodeId n) const { return ram_[n]; }
    std::span<const Amount> node_cpu() const { return cpu_; }
    std::span<const Amount> node_ram() const { return ram_; }

    // Neighbors of n in ascending index order.
    std::vector<NodeId> neighbors(NodeId n) const;

    void add_edge(NodeId a, NodeId b, Millis latency, Amount band);
    void remove_edge(NodeId a, NodeId b);
    void set_node(NodeId n, Amount cpu, Amount ram);

    // Throws ValidationError describing the first violated invariant.
    void validate() const;

    friend bool operator==(const SubstrateSnapshot&, const SubstrateSnapshot&) = default;

private:
    SquareMatrix<unsigned char> adjacency_;
    SquareMatrix<Millis> latency_;
    SquareMatrix<Amount> band_;
    std::vector<Amount> cpu_;
    std::vector<Amount> ram_;
};

/// Ordered timestamped snapshots; lookup uses floor semantics.
class SubstrateTopology {
public:
    SubstrateTopology(std::vector<double> time_points, std::vector<SubstrateSnapshot> snapshots);

    std::span<const double> time_points() const { return time_points_; }
    const SubstrateSnapshot& snapshot(std::size_t i) const { return snapshots_[i]; }
    std::span<const SubstrateSnapshot> snapshots() const { return snapshots_; }
    std::size_t size() const { return snapshots_.size(); }
    std::size_t node_count() const { return snapshots_.front().node_count(); }
    double start_time() const { return time_points_.front(); }
    double last_time() const { return time_points_.back(); }

    // Index of the latest time point <= t.
    std::size_t index_at(double t) const;

    friend bool operator==(const SubstrateTopology&, const SubstrateTopology&) = default;

private:
    std::vector<double> time_points_;
    std::vector<SubstrateSnapshot> snapshots_;
};

struct PhysicalPath {
    std::vector<NodeId> nodes;

    NodeId front() const { return nodes.front(); }
    NodeId back() const { return nodes.back(); }
    std::size_t hop_count() const { return nodes.empty() ? 0 : nodes.size() - 1; }

    friend bool operator==(const PhysicalPath&, const PhysicalPath&) = default;
};

const SubstrateSnapshot& snapshot_at(const SubstrateTopology& topo, double t);

/// Minimum-latency simple path from src to dst over edges whose residual
/// bandwidth is at least min_band. Ties go to the lexicographically smallest
/// node sequence. src == dst yields the single-node path.
std::optional<PhysicalPath> shortest_feasible_path(const SubstrateSnapshot& snap, NodeId src, NodeId dst,
                                                   Amount min_band, const SquareMatrix<Amount>& residual_band);

// Same, filtering against the snapshot's full link capacities.
std::optional<PhysicalPath> shortest_feasible_path(const SubstrateSnapshot& snap, NodeId src, NodeId dst,
                                                   Amount min_band = Amount{});

Millis path_latency(const SubstrateSnapshot& snap, const PhysicalPath& path);

// True when the path is simple, in range, and every hop is an edge of snap.
bool path_valid(const SubstrateSnapshot& snap, const PhysicalPath& path);

SubstrateTopology topology_from_json(const nlohmann::json& j);
nlohmann::json topology_to_json(const SubstrateTopology& topo);

}  // namespace sfcsim

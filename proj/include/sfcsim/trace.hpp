#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sfcsim/mano.hpp"

namespace sfcsim {

// Declaration order is the same-instant dispatch priority.
enum class EventKind { TopologyChange = 0, SfcDeparture = 1, SfcArrival = 2 };

enum class Outcome { Applied, Accepted, Rejected, Released, Migrated, Terminated, Skipped };

std::string_view to_string(EventKind k);
std::string_view to_string(Outcome o);

struct TraceRecord {
    double time = 0;
    std::uint64_t seq = 0;  // assigned by TraceLog, strictly increasing
    EventKind kind = EventKind::TopologyChange;
    std::optional<SfcId> sfc_id;
    Outcome outcome = Outcome::Applied;
    std::optional<FailureReason> reason;
    std::optional<EmbeddingPlan> plan;  // accepted / migrated only
    std::string detail;
};

struct UtilizationSample {
    double time = 0;
    NodeId node = 0;
    Amount cpu_used, cpu_capacity, ram_used, ram_capacity;

    double cpu_used_fraction() const;
    double ram_used_fraction() const;
};

struct CountPoint {
    double time = 0;
    int count = 0;

    friend bool operator==(const CountPoint&, const CountPoint&) = default;
};

struct TraceSummary {
    int arrivals = 0;
    int accepted = 0;
    int rejected = 0;
    int terminated_early = 0;
};

/// Append-only audit log of one simulation run.
class TraceLog {
public:
    void record(TraceRecord r);
    // One utilization sample per node, taken after an event is handled.
    void sample(double time, const ResourceLedger& ledger);

    const std::vector<TraceRecord>& records() const { return records_; }
    const std::vector<UtilizationSample>& utilization() const { return utilization_; }

private:
    std::vector<TraceRecord> records_;
    std::vector<UtilizationSample> utilization_;
};

TraceSummary summarize(const TraceLog& log);

// accepted / arrivals; 1.0 when there were no arrivals.
double acceptance_ratio(const TraceLog& log);

std::map<FailureReason, int> failure_breakdown(const TraceLog& log);

// Active-SFC count after the last record at each distinct record time.
std::vector<CountPoint> running_count_from_log(const TraceLog& log);

// Writes events.csv, utilization.csv, running_count.csv and summary.csv,
// overwriting existing files. Throws IoError naming the failing path.
void emit_csv(const TraceLog& log, const std::filesystem::path& out_dir);

// Fixed six-decimal rendering used for every numeric CSV field.
std::string format_fixed(double v);

}  // namespace sfcsim

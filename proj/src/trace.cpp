#include "sfcsim/trace.hpp"

#include <cstdio>
#include <fstream>

#include "sfcsim/errors.hpp"

namespace sfcsim {

std::string_view to_string(EventKind k) {
    switch (k) {
        case EventKind::TopologyChange: return "topology_change";
        case EventKind::SfcDeparture: return "departure";
        case EventKind::SfcArrival: return "arrival";
    }
    return "unknown";
}

std::string_view to_string(Outcome o) {
    switch (o) {
        case Outcome::Applied: return "applied";
        case Outcome::Accepted: return "accepted";
        case Outcome::Rejected: return "rejected";
        case Outcome::Released: return "released";
        case Outcome::Migrated: return "migrated";
        case Outcome::Terminated: return "terminated";
        case Outcome::Skipped: return "skipped";
    }
    return "unknown";
}

double UtilizationSample::cpu_used_fraction() const {
    return cpu_capacity.is_zero() ? 0.0 : cpu_used.to_double() / cpu_capacity.to_double();
}

double UtilizationSample::ram_used_fraction() const {
    return ram_capacity.is_zero() ? 0.0 : ram_used.to_double() / ram_capacity.to_double();
}

void TraceLog::record(TraceRecord r) {
    r.seq = records_.size();
    records_.push_back(std::move(r));
}

void TraceLog::sample(double time, const ResourceLedger& ledger) {
    for (std::size_t i = 0; i < ledger.node_count(); ++i) {
        const auto n = static_cast<NodeId>(i);
        utilization_.push_back(
            {time, n, ledger.cpu_used(n), ledger.cpu_capacity(n), ledger.ram_used(n), ledger.ram_capacity(n)});
    }
}

TraceSummary summarize(const TraceLog& log) {
    TraceSummary s;
    for (const auto& r : log.records()) {
        switch (r.outcome) {
            case Outcome::Accepted: ++s.accepted; ++s.arrivals; break;
            case Outcome::Rejected: ++s.rejected; ++s.arrivals; break;
            case Outcome::Terminated: ++s.terminated_early; break;
            default: break;
        }
    }
    return s;
}

double acceptance_ratio(const TraceLog& log) {
    const TraceSummary s = summarize(log);
    return s.arrivals == 0 ? 1.0 : static_cast<double>(s.accepted) / s.arrivals;
}

std::map<FailureReason, int> failure_breakdown(const TraceLog& log) {
    std::map<FailureReason, int> out;
    for (const auto& r : log.records()) {
        if ((r.outcome == Outcome::Rejected || r.outcome == Outcome::Terminated) && r.reason) ++out[*r.reason];
    }
    return out;
}

std::vector<CountPoint> running_count_from_log(const TraceLog& log) {
    std::vector<CountPoint> out;
    int active = 0;
    for (const auto& r : log.records()) {
        if (r.outcome == Outcome::Accepted) ++active;
        if (r.outcome == Outcome::Released || r.outcome == Outcome::Terminated) --active;
        if (!out.empty() && out.back().time == r.time) {
            out.back().count = active;
        } else {
            out.push_back({r.time, active});
        }
    }
    return out;
}

std::string format_fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace

void emit_csv(const TraceLog& log, const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());

    {
        const auto path = out_dir / "events.csv";
        auto out = open_out(path);
        out << "time,seq,kind,sfc_id,outcome,reason\n";
        for (const auto& r : log.records()) {
            out << format_fixed(r.time) << ',' << r.seq << ',' << to_string(r.kind) << ','
                << (r.sfc_id ? std::to_string(*r.sfc_id) : "") << ',' << to_string(r.outcome) << ','
                << (r.reason ? to_string(*r.reason) : "") << '\n';
        }
        finish(out, path);
    }
    {
        const auto path = out_dir / "utilization.csv";
        auto out = open_out(path);
        out << "time,node,cpu_used,cpu_capacity,ram_used_mb,ram_capacity_mb\n";
        for (const auto& u : log.utilization()) {
            out << format_fixed(u.time) << ',' << u.node << ',' << u.cpu_used.str() << ',' << u.cpu_capacity.str()
                << ',' << u.ram_used.str() << ',' << u.ram_capacity.str() << '\n';
        }
        finish(out, path);
    }
    {
        const auto path = out_dir / "running_count.csv";
        auto out = open_out(path);
        out << "time,count\n";
        for (const auto& p : running_count_from_log(log)) out << format_fixed(p.time) << ',' << p.count << '\n';
        finish(out, path);
    }
    {
        const auto path = out_dir / "summary.csv";
        auto out = open_out(path);
        const TraceSummary s = summarize(log);
        out << "arrivals,accepted,rejected,terminated_early,acceptance_ratio\n";
        if (s.arrivals > 0 || !log.records().empty()) {
            out << s.arrivals << ',' << s.accepted << ',' << s.rejected << ',' << s.terminated_early << ','
                << format_fixed(acceptance_ratio(log)) << '\n';
            const auto breakdown = failure_breakdown(log);
            out << "reason,count\n";
            for (FailureReason reason : kAllFailureReasons) {
                auto it = breakdown.find(reason);
                out << to_string(reason) << ',' << (it == breakdown.end() ? 0 : it->second) << '\n';
            }
        }
        finish(out, path);
    }
}

}  // namespace sfcsim

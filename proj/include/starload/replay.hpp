#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "closedform.hpp"
#include "model.hpp"

namespace starload {

enum class Phase { Receive, Compute };

inline const char* to_string(Phase p) {
    return p == Phase::Receive ? "receive" : "compute";
}

struct TimelineEntry {
    std::string node;
    Phase phase;
    double start = 0.0;
    double end = 0.0;
};

/// Event-by-event reconstruction of one run. Entries for workers with a zero
/// share have zero length but are kept, so indices line up with the network.
struct Timeline {
    std::vector<TimelineEntry> entries;
    double makespan = 0.0;
    std::vector<double> per_node_finish;  ///< compute completion per node, root first
};

/// Replays the given load split under a protocol's timing rules without using
/// any closed-form knowledge. The root computes its share over [0, a0*w0*tcp].
/// Sequential: worker i's transfer begins when worker i-1's transfer ends and
/// it computes while receiving. Staggered: all transfers begin at 0, each
/// worker computes after its transfer completes. Simultaneous: all transfers
/// and all computation begin at 0.
///
/// The timeline is built for a unit load and then scaled, so the makespan is
/// exactly linear in total_load. Throws StarvationError if a loaded worker
/// would consume data faster than its link delivers under a protocol that
/// computes while receiving.
inline Timeline replay(const StarNetwork& net, Protocol protocol, std::span<const double> alphas,
                       double total_load = 1.0) {
    const std::size_t m = net.worker_count();
    if (alphas.size() != m + 1)
        throw std::invalid_argument("expected " + std::to_string(m + 1) + " load fractions, got " +
                                    std::to_string(alphas.size()));
    double sum = 0.0;
    for (double a : alphas) {
        if (!(a >= 0.0)) throw std::invalid_argument("load fractions must be >= 0");
        sum += a;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("load fractions must sum to 1 (got " + std::to_string(sum) +
                                    ")");
    if (!(total_load > 0.0)) throw std::invalid_argument("total load must be > 0");

    const double tcp = net.intensities().t_cp();
    const double tcm = net.intensities().t_cm();

    Timeline tl;
    tl.entries.reserve(1 + 2 * m);
    tl.per_node_finish.reserve(1 + m);
    const double root_end = alphas[0] * (net.root().omega() * tcp);
    tl.entries.push_back({net.root().label(), Phase::Compute, 0.0, root_end});
    tl.per_node_finish.push_back(root_end);

    double cursor = 0.0;  // start of the next sequential transfer
    for (std::size_t i = 0; i < m; ++i) {
        const auto& w = net.workers()[i];
        const double a = alphas[i + 1];
        const double rx = a * (w.link.z() * tcm);
        const double cp = a * (w.processor.omega() * tcp);

        double receive_start = 0.0;
        double compute_start = 0.0;
        switch (protocol) {
            case Protocol::Sequential:
                receive_start = cursor;
                compute_start = cursor;
                cursor += rx;
                break;
            case Protocol::Staggered:
                receive_start = 0.0;
                compute_start = rx;
                break;
            case Protocol::Simultaneous:
                receive_start = 0.0;
                compute_start = 0.0;
                break;
        }
        if (a > 0.0 && protocol != Protocol::Staggered &&
            w.link.z() * tcm > w.processor.omega() * tcp)
            throw StarvationError(w.processor.label(), compute_start * total_load);

        tl.entries.push_back({w.processor.label(), Phase::Receive, receive_start,
                              receive_start + rx});
        tl.entries.push_back({w.processor.label(), Phase::Compute, compute_start,
                              compute_start + cp});
        tl.per_node_finish.push_back(compute_start + cp);
    }

    if (total_load != 1.0) {
        for (auto& e : tl.entries) {
            e.start *= total_load;
            e.end *= total_load;
        }
        for (auto& t : tl.per_node_finish) t *= total_load;
    }
    for (double t : tl.per_node_finish)
        if (t > tl.makespan) tl.makespan = t;
    return tl;
}

/// What the replayer saw when cross-checking a closed-form schedule.
struct VerificationReport {
    double completion_spread = 0.0;  ///< max - min finish among loaded nodes
    double makespan_delta = 0.0;     ///< |replayed makespan - claimed finish time|
    double tolerance = 1e-9;         ///< relative gate both quantities must clear
    bool pass = false;
};

/// Replays a schedule and checks the two things the closed form promises:
/// every loaded node stops at the same instant, and that instant matches the
/// claimed finish time.
inline VerificationReport verify_schedule(const StarNetwork& net, Protocol protocol,
                                          const Schedule& schedule) {
    const Timeline tl = replay(net, protocol, schedule.alphas);
    double lo = 0.0, hi = 0.0;
    bool seen = false;
    for (std::size_t i = 0; i < tl.per_node_finish.size(); ++i) {
        if (!(schedule.alphas[i] > 0.0)) continue;
        const double t = tl.per_node_finish[i];
        if (!seen || t < lo) lo = t;
        if (!seen || t > hi) hi = t;
        seen = true;
    }
    VerificationReport report;
    report.completion_spread = seen ? hi - lo : 0.0;
    report.makespan_delta = std::abs(tl.makespan - schedule.finish_time);
    const double scale = schedule.finish_time;
    report.pass = report.completion_spread <= report.tolerance * scale &&
                  report.makespan_delta <= report.tolerance * scale;
    return report;
}

}  // namespace starload

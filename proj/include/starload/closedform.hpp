#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "model.hpp"

namespace starload {

/// Intermediate quantities of the closed-form solution, for tracing.
struct DerivationTrace {
    double k1 = 0.0;        ///< alpha_1 / alpha_0
    std::vector<double> q;  ///< q[j] = alpha_{j+2} / alpha_{j+1}, 1-based worker indices
    std::optional<double> sigma;  ///< z*t_cm / (omega*t_cp), homogeneous workers only
    std::optional<double> k;      ///< per-worker share ratio, homogeneous workers only
};

/// Optimal split of a unit load: fractions alpha_0..alpha_m (root first) and
/// the common finish time. All participants stop computing at finish_time.
struct Schedule {
    Protocol protocol;
    std::vector<double> alphas;
    double finish_time = 0.0;
    DerivationTrace trace;
};

namespace detail {

// Builds the schedule from the two recurrence ingredients. alpha_1 comes from
// normalization, alpha_0 = alpha_1 / k1, and each further share is the
// predecessor times its ratio.
inline Schedule assemble_schedule(Protocol protocol, const StarNetwork& net, double k1,
                                  std::vector<double> q) {
    double bracket = 1.0 / k1 + 1.0;
    double prod = 1.0;
    for (double ratio : q) {
        prod *= ratio;
        bracket += prod;
    }
    const double a1 = 1.0 / bracket;
    std::vector<double> alphas;
    alphas.reserve(q.size() + 2);
    alphas.push_back(a1 / k1);
    alphas.push_back(a1);
    for (double ratio : q) alphas.push_back(alphas.back() * ratio);

    Schedule s{protocol, std::move(alphas), 0.0, DerivationTrace{k1, std::move(q), {}, {}}};
    s.finish_time = s.alphas[0] * (net.root().omega() * net.intensities().t_cp());
    return s;
}

inline Schedule root_only_schedule(Protocol protocol, const StarNetwork& net) {
    return {protocol,
            {1.0},
            net.root().omega() * net.intensities().t_cp(),
            DerivationTrace{}};
}

}  // namespace detail

/// Optimal fractions when the root transmits to one worker at a time and each
/// worker computes while its data streams in. Requires every worker with a
/// successor to satisfy omega*t_cp > z*t_cm.
inline Schedule solve_sequential(const StarNetwork& net) {
    detail::require_feasible(net, Protocol::Sequential);
    if (net.worker_count() == 0) return detail::root_only_schedule(Protocol::Sequential, net);

    const auto& ws = net.workers();
    const double tcp = net.intensities().t_cp();
    const double tcm = net.intensities().t_cm();
    const double k1 = net.root().omega() / ws[0].processor.omega();
    std::vector<double> q;
    q.reserve(ws.size() - 1);
    for (std::size_t i = 1; i < ws.size(); ++i) {
        const auto& prev = ws[i - 1];
        q.push_back((prev.processor.omega() * tcp - prev.link.z() * tcm) /
                    (ws[i].processor.omega() * tcp));
    }
    Schedule s = detail::assemble_schedule(Protocol::Sequential, net, k1, std::move(q));
    if (detail::workers_homogeneous(net))
        s.trace.sigma = (ws[0].link.z() * tcm) / (ws[0].processor.omega() * tcp);
    return s;
}

/// Optimal fractions when all transmissions start together and each worker
/// computes only once its whole fragment has arrived.
inline Schedule solve_staggered(const StarNetwork& net) {
    if (net.worker_count() == 0) return detail::root_only_schedule(Protocol::Staggered, net);

    const auto& ws = net.workers();
    const double tcp = net.intensities().t_cp();
    const double tcm = net.intensities().t_cm();
    const double k1 =
        (net.root().omega() * tcp) / (ws[0].processor.omega() * tcp + ws[0].link.z() * tcm);
    std::vector<double> q;
    q.reserve(ws.size() - 1);
    for (std::size_t i = 1; i < ws.size(); ++i) {
        const auto& prev = ws[i - 1];
        q.push_back((prev.processor.omega() * tcp + prev.link.z() * tcm) /
                    (ws[i].processor.omega() * tcp + ws[i].link.z() * tcm));
    }
    Schedule s = detail::assemble_schedule(Protocol::Staggered, net, k1, std::move(q));
    if (detail::workers_homogeneous(net))
        s.trace.k = (net.root().omega() * tcp) /
                    (ws[0].processor.omega() * tcp + ws[0].link.z() * tcm);
    return s;
}

/// Optimal fractions when all transmissions start together and every worker
/// computes from time zero. Shares are proportional to computing speed and do
/// not depend on the links; requires z*t_cm <= omega*t_cp on every worker.
inline Schedule solve_simultaneous(const StarNetwork& net) {
    detail::require_feasible(net, Protocol::Simultaneous);
    if (net.worker_count() == 0) return detail::root_only_schedule(Protocol::Simultaneous, net);

    const auto& ws = net.workers();
    const double k1 = net.root().omega() / ws[0].processor.omega();
    std::vector<double> q;
    q.reserve(ws.size() - 1);
    for (std::size_t i = 1; i < ws.size(); ++i)
        q.push_back(ws[i - 1].processor.omega() / ws[i].processor.omega());
    Schedule s = detail::assemble_schedule(Protocol::Simultaneous, net, k1, std::move(q));
    if (detail::workers_homogeneous(net))
        s.trace.k = net.root().omega() / ws[0].processor.omega();
    return s;
}

/// Dispatches to the solver for the given protocol.
inline Schedule solve(const StarNetwork& net, Protocol protocol) {
    switch (protocol) {
        case Protocol::Sequential: return solve_sequential(net);
        case Protocol::Staggered: return solve_staggered(net);
        case Protocol::Simultaneous: return solve_simultaneous(net);
    }
    throw std::invalid_argument("unknown protocol value");
}

}  // namespace starload

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "model.hpp"

namespace starload {

/// Speed gain of the whole star over the root alone, from the closed forms.
/// Root-only networks give 1. Throws InfeasibleError when the network breaks
/// the protocol's assumptions.
inline double dlt_speedup(const StarNetwork& net, Protocol protocol) {
    detail::require_feasible(net, protocol);
    if (net.worker_count() == 0) return 1.0;

    const auto& ws = net.workers();
    const double tcp = net.intensities().t_cp();
    const double tcm = net.intensities().t_cm();
    const double w0 = net.root().omega();

    switch (protocol) {
        case Protocol::Sequential: {
            const double k1 = w0 / ws[0].processor.omega();
            double acc = 1.0;
            double prod = 1.0;
            for (std::size_t i = 1; i < ws.size(); ++i) {
                const auto& prev = ws[i - 1];
                prod *= (prev.processor.omega() * tcp - prev.link.z() * tcm) /
                        (ws[i].processor.omega() * tcp);
                acc += prod;
            }
            return 1.0 + k1 * acc;
        }
        case Protocol::Staggered: {
            double acc = 0.0;
            for (const auto& w : ws) acc += 1.0 / (w.processor.omega() * tcp + w.link.z() * tcm);
            return 1.0 + (w0 * tcp) * acc;
        }
        case Protocol::Simultaneous: {
            double acc = 0.0;
            for (const auto& w : ws) acc += 1.0 / w.processor.omega();
            return 1.0 + w0 * acc;
        }
    }
    throw std::invalid_argument("unknown protocol value");
}

/// Same speedup for m identical workers, via the specialized homogeneous
/// forms instead of the recurrence. For the sequential handout the partial
/// geometric sum in sigma = z*t_cm / (omega*t_cp) is evaluated term by term
/// for small m and through expm1/log1p for large m, which stays exact as
/// sigma approaches 0 (free links give the plain 1 + m * omega0/omega limit).
inline double dlt_speedup_homogeneous(std::size_t m, double omega0, double omega, double z,
                                      const Intensities& intensities, Protocol protocol) {
    if (m == 0) throw std::invalid_argument("need at least one worker");
    if (!(omega0 > 0.0) || !(omega > 0.0)) throw std::invalid_argument("omega must be > 0");
    if (!(z >= 0.0)) throw std::invalid_argument("z must be >= 0");

    const double tcp = intensities.t_cp();
    const double tcm = intensities.t_cm();
    switch (protocol) {
        case Protocol::Sequential: {
            const double sigma = (z * tcm) / (omega * tcp);
            if (m >= 2 && !(sigma < 1.0))
                throw InfeasibleError({{1, "p1",
                                        "sequential handout requires omega*t_cp > z*t_cm for "
                                        "every worker that feeds a successor",
                                        omega * tcp, z * tcm}});
            double bracket;
            if (m <= 64) {
                bracket = 0.0;
                double term = 1.0;
                for (std::size_t i = 0; i < m; ++i) {
                    bracket += term;
                    term *= 1.0 - sigma;
                }
            } else if (sigma == 0.0) {
                bracket = static_cast<double>(m);
            } else {
                bracket = -std::expm1(static_cast<double>(m) * std::log1p(-sigma)) / sigma;
            }
            return 1.0 + (omega0 / omega) * bracket;
        }
        case Protocol::Staggered: {
            const double k = (omega0 * tcp) / (omega * tcp + z * tcm);
            return 1.0 + k * static_cast<double>(m);
        }
        case Protocol::Simultaneous: {
            if (z * tcm > omega * tcp)
                throw InfeasibleError({{1, "p1", "simultaneous start requires z*t_cm <= omega*t_cp",
                                        omega * tcp, z * tcm}});
            return 1.0 + (omega0 / omega) * static_cast<double>(m);
        }
    }
    throw std::invalid_argument("unknown protocol value");
}

/// Overall speedup when only a fraction f of the work can use the parallel
/// facility whose speedup is s. Exact at the endpoints: f = 0 gives 1, f = 1
/// gives s, and an infinite facility gives the 1/(1-f) ceiling.
inline double amdahl_overall(double f, double s) {
    if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("f must be in [0, 1]");
    if (!(s >= 1.0)) throw std::invalid_argument("facility speedup must be >= 1");
    if (f == 0.0) return 1.0;
    if (f == 1.0) return s;
    if (std::isinf(s)) return 1.0 / (1.0 - f);
    return 1.0 / ((1.0 - f) + f / s);
}

/// Run time of a job whose serial execution takes t_s when a fraction f of it
/// runs on a facility with speedup s.
inline double amdahl_execution_time(double f, double s, double t_s) {
    if (!(f >= 0.0 && f <= 1.0)) throw std::invalid_argument("f must be in [0, 1]");
    if (!(s >= 1.0)) throw std::invalid_argument("facility speedup must be >= 1");
    if (!(t_s > 0.0)) throw std::invalid_argument("serial time must be > 0");
    if (std::isinf(s)) return (1.0 - f) * t_s;
    return (1.0 - f) * t_s + (f / s) * t_s;
}

struct SweepRow {
    double f = 0.0;
    double one_minus_f = 0.0;
    double f_over_sp = 0.0;
    double s_overall = 0.0;
};

/// Overall-speedup curve over a grid of parallelizable fractions, for one
/// network and protocol. The mode is carried along as a row label.
struct SpeedupCurve {
    Protocol protocol;
    ProcessingMode mode;
    double s_dlt = 0.0;
    std::vector<SweepRow> rows;
};

/// Evaluates the overall speedup across f_grid (sorted ascending first).
inline SpeedupCurve sweep_f(const StarNetwork& net, Protocol protocol, std::vector<double> f_grid,
                            ProcessingMode mode) {
    const double s = dlt_speedup(net, protocol);
    std::sort(f_grid.begin(), f_grid.end());
    SpeedupCurve curve{protocol, mode, s, {}};
    curve.rows.reserve(f_grid.size());
    for (double f : f_grid)
        curve.rows.push_back({f, 1.0 - f, f / s, amdahl_overall(f, s)});
    return curve;
}

}  // namespace starload

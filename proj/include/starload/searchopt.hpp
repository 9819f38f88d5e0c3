#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "model.hpp"

namespace starload {

/// Outcome of the brute-force makespan minimization.
struct SearchResult {
    std::vector<double> best_alphas;
    double best_makespan = 0.0;
    std::uint64_t evaluations = 0;
    double grid_step = 0.0;  ///< effective exhaustive resolution actually used
};

namespace detail {

// Flat makespan evaluator with the same timing rules (and the same floating
// point association) as replay(). Returns +infinity for splits that would
// starve a loaded worker.
class MakespanEval {
  public:
    MakespanEval(const StarNetwork& net, Protocol protocol) : protocol_(protocol) {
        const double tcp = net.intensities().t_cp();
        const double tcm = net.intensities().t_cm();
        root_cost_ = net.root().omega() * tcp;
        for (const auto& w : net.workers()) {
            rx_.push_back(w.link.z() * tcm);
            cp_.push_back(w.processor.omega() * tcp);
            starves_.push_back(w.link.z() * tcm > w.processor.omega() * tcp);
        }
    }

    double operator()(const double* a) const {
        constexpr double kInf = std::numeric_limits<double>::infinity();
        double worst = a[0] * root_cost_;
        const std::size_t m = cp_.size();
        switch (protocol_) {
            case Protocol::Sequential: {
                double cursor = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    const double ai = a[i + 1];
                    if (ai > 0.0 && starves_[i]) return kInf;
                    const double end = cursor + ai * cp_[i];
                    cursor += ai * rx_[i];
                    if (end > worst) worst = end;
                }
                return worst;
            }
            case Protocol::Staggered: {
                for (std::size_t i = 0; i < m; ++i) {
                    const double ai = a[i + 1];
                    const double end = ai * rx_[i] + ai * cp_[i];
                    if (end > worst) worst = end;
                }
                return worst;
            }
            case Protocol::Simultaneous: {
                for (std::size_t i = 0; i < m; ++i) {
                    const double ai = a[i + 1];
                    if (ai > 0.0 && starves_[i]) return kInf;
                    const double end = ai * cp_[i];
                    if (end > worst) worst = end;
                }
                return worst;
            }
        }
        return kInf;
    }

  private:
    Protocol protocol_;
    double root_cost_ = 0.0;
    std::vector<double> rx_, cp_;
    std::vector<bool> starves_;
};

inline double simplex_grid_points(std::uint64_t divisions, std::size_t m) {
    // C(divisions + m, m) evaluated in floating point; m <= 4 keeps this exact
    double count = 1.0;
    for (std::size_t i = 1; i <= m; ++i)
        count *= static_cast<double>(divisions + i) / static_cast<double>(i);
    return count;
}

// Zero-sum integer offset vectors with max-norm radius n - 1, in
// lexicographic order. Radius n - 1 matters: lowering a makespan that several
// nodes attain at once needs directions like (n-1, -1, ..., -1).
inline std::vector<std::vector<int>> descent_directions(std::size_t n) {
    std::vector<std::vector<int>> dirs;
    const int radius = static_cast<int>(n) - 1;
    std::vector<int> d(n, 0);
    auto rec = [&](auto&& self, std::size_t idx, int sum) -> void {
        if (idx == n) {
            if (sum == 0) {
                for (int v : d)
                    if (v != 0) {
                        dirs.push_back(d);
                        break;
                    }
            }
            return;
        }
        for (int v = -radius; v <= radius; ++v) {
            d[idx] = v;
            self(self, idx + 1, sum + v);
        }
    };
    rec(rec, 0, 0);
    return dirs;
}

}  // namespace detail

/// Brute-force cross-check of the closed form: exhaustively evaluates the
/// replay makespan on a simplex grid, then refines the best point by
/// neighborhood descent with a halving step until the step drops below 1e-6.
///
/// The exhaustive resolution is coarsened when the requested grid_step would
/// produce more than a few million grid points (the result reports the
/// resolution actually used); the refinement recovers precision far below
/// either resolution. Ties keep the lexicographically smallest fractions.
/// Limited to m <= 4 workers.
inline SearchResult minimize_makespan(const StarNetwork& net, Protocol protocol,
                                      double grid_step) {
    const std::size_t m = net.worker_count();
    if (m > 4)
        throw std::invalid_argument("brute-force search supports at most 4 workers (got " +
                                    std::to_string(m) + ")");
    if (!(grid_step > 0.0 && grid_step <= 0.5))
        throw std::invalid_argument("grid_step must be in (0, 0.5]");

    constexpr double kBudget = 2.5e6;
    const std::size_t n = m + 1;
    std::uint64_t divisions = static_cast<std::uint64_t>(std::llround(1.0 / grid_step));
    if (divisions < 1) divisions = 1;
    while (divisions > 1 && detail::simplex_grid_points(divisions, m) > kBudget) --divisions;

    const detail::MakespanEval eval(net, protocol);
    SearchResult result;
    result.grid_step = 1.0 / static_cast<double>(divisions);

    std::vector<std::uint64_t> counts(n, 0);
    std::vector<double> point(n, 0.0);
    std::vector<double> best(n, 0.0);
    double best_value = std::numeric_limits<double>::infinity();
    std::uint64_t evaluations = 0;

    auto enumerate = [&](auto&& self, std::size_t idx, std::uint64_t left) -> void {
        if (idx + 1 == n) {
            counts[idx] = left;
            for (std::size_t j = 0; j < n; ++j)
                point[j] = static_cast<double>(counts[j]) / static_cast<double>(divisions);
            const double value = eval(point.data());
            ++evaluations;
            if (value < best_value) {
                best_value = value;
                best = point;
            }
            return;
        }
        for (std::uint64_t k = 0; k <= left; ++k) {
            counts[idx] = k;
            self(self, idx + 1, left - k);
        }
    };
    enumerate(enumerate, 0, divisions);

    const auto directions = detail::descent_directions(n);
    std::vector<double> candidate(n, 0.0);
    double step = result.grid_step;
    constexpr std::uint64_t kEvalGuard = 200'000'000;
    while (step >= 1e-6 && evaluations < kEvalGuard) {
        bool improved = false;
        for (const auto& dir : directions) {
            bool feasible = true;
            for (std::size_t j = 0; j < n; ++j) {
                candidate[j] = best[j] + static_cast<double>(dir[j]) * step;
                if (candidate[j] < 0.0) {
                    feasible = false;
                    break;
                }
            }
            if (!feasible) continue;
            const double value = eval(candidate.data());
            ++evaluations;
            if (value < best_value) {
                best_value = value;
                best = candidate;
                improved = true;
                break;
            }
        }
        if (!improved) step *= 0.5;
    }

    result.best_alphas = std::move(best);
    result.best_makespan = best_value;
    result.evaluations = evaluations;
    return result;
}

}  // namespace starload

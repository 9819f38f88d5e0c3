#pragma once

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace starload {

/// How the root hands load out to its workers.
enum class Protocol { Sequential, Staggered, Simultaneous };

/// Which processing resources take part in a run.
enum class ProcessingMode { Local, Cloud, Combined };

inline const char* to_string(Protocol p) {
    switch (p) {
        case Protocol::Sequential: return "sequential";
        case Protocol::Staggered: return "staggered";
        case Protocol::Simultaneous: return "simultaneous";
    }
    throw std::invalid_argument("unknown protocol value");
}

inline const char* to_string(ProcessingMode m) {
    switch (m) {
        case ProcessingMode::Local: return "local";
        case ProcessingMode::Cloud: return "cloud";
        case ProcessingMode::Combined: return "combined";
    }
    throw std::invalid_argument("unknown mode value");
}

inline Protocol parse_protocol(const std::string& name) {
    if (name == "sequential") return Protocol::Sequential;
    if (name == "staggered") return Protocol::Staggered;
    if (name == "simultaneous") return Protocol::Simultaneous;
    throw std::invalid_argument("unknown protocol '" + name +
                                "' (expected sequential|staggered|simultaneous)");
}

inline ProcessingMode parse_mode(const std::string& name) {
    if (name == "local") return ProcessingMode::Local;
    if (name == "cloud") return ProcessingMode::Cloud;
    if (name == "combined") return ProcessingMode::Combined;
    throw std::invalid_argument("unknown mode '" + name + "' (expected local|cloud|combined)");
}

/// Cost constants that scale the per-node rates into time. A load fraction a
/// takes a * omega * t_cp to compute and a * z * t_cm to transmit.
class Intensities {
  public:
    Intensities(double t_cp, double t_cm) : t_cp_(t_cp), t_cm_(t_cm) {
        if (!(t_cp > 0.0)) throw std::invalid_argument("t_cp must be > 0");
        if (!(t_cm >= 0.0)) throw std::invalid_argument("t_cm must be >= 0");
    }
    double t_cp() const { return t_cp_; }
    double t_cm() const { return t_cm_; }

  private:
    double t_cp_;
    double t_cm_;
};

/// A compute node. omega is its inverse computing speed; smaller is faster.
class Processor {
  public:
    Processor(double omega, std::string label) : omega_(omega), label_(std::move(label)) {
        if (!(omega > 0.0))
            throw std::invalid_argument("processor omega must be > 0 (node '" + label_ + "')");
    }
    double omega() const { return omega_; }
    const std::string& label() const { return label_; }

  private:
    double omega_;
    std::string label_;
};

/// The link feeding a worker. z is its inverse speed; z = 0 is a free link.
class Link {
  public:
    explicit Link(double z) : z_(z) {
        if (!(z >= 0.0)) throw std::invalid_argument("link z must be >= 0");
    }
    double z() const { return z_; }

  private:
    double z_;
};

/// One worker: a processor plus the dedicated link that feeds it.
struct Worker {
    Processor processor;
    Link link;
};

/// A remote worker that can be attached to a local star.
struct CloudSpec {
    Processor processor;
    Link link;
    CloudSpec(double omega, double z, std::string label = "cloud")
        : processor(omega, std::move(label)), link(z) {}
    Worker worker() const { return {processor, link}; }
};

/// A single-level tree: the root holds all load and feeds m workers over
/// dedicated links. Immutable once constructed.
class StarNetwork {
  public:
    StarNetwork(Processor root, std::vector<Worker> workers, Intensities intensities)
        : root_(std::move(root)), workers_(std::move(workers)), intensities_(intensities) {}

    const Processor& root() const { return root_; }
    const std::vector<Worker>& workers() const { return workers_; }
    const Intensities& intensities() const { return intensities_; }
    std::size_t worker_count() const { return workers_.size(); }

  private:
    Processor root_;
    std::vector<Worker> workers_;
    Intensities intensities_;
};

/// Amount of divisible work plus its parallelizable share. A fraction f of
/// the serial run distributes across the network, the rest stays serial.
class Workload {
  public:
    explicit Workload(double total = 1.0, double f = 1.0,
                      std::optional<double> serial_time = std::nullopt)
        : total_(total), f_(f), serial_time_(serial_time) {
        if (!(total > 0.0)) throw std::invalid_argument("workload total must be > 0");
        if (!(f >= 0.0 && f <= 1.0))
            throw std::invalid_argument("parallel fraction f must be in [0, 1]");
        if (serial_time_ && !(*serial_time_ > 0.0))
            throw std::invalid_argument("serial_time must be > 0");
    }
    double total() const { return total_; }
    double f() const { return f_; }
    std::optional<double> serial_time() const { return serial_time_; }

  private:
    double total_;
    double f_;
    std::optional<double> serial_time_;
};

/// One failed protocol precondition with the two quantities that clashed.
struct AssumptionViolation {
    std::size_t child_index;  ///< 1-based position among the workers
    std::string label;
    std::string rule;
    double compute_side;  ///< omega * t_cp
    double comm_side;     ///< z * t_cm

    std::string message() const {
        std::ostringstream os;
        os << "child " << child_index << " ('" << label << "'): " << rule
           << " (omega*t_cp = " << compute_side << ", z*t_cm = " << comm_side << ")";
        return os.str();
    }
};

/// Thrown when a network breaks the chosen protocol's assumptions.
class InfeasibleError : public std::runtime_error {
  public:
    explicit InfeasibleError(std::vector<AssumptionViolation> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}
    const std::vector<AssumptionViolation>& violations() const { return violations_; }

  private:
    static std::string join(const std::vector<AssumptionViolation>& vs) {
        std::string out = "infeasible configuration:";
        for (const auto& v : vs) out += "\n  " + v.message();
        return out;
    }
    std::vector<AssumptionViolation> violations_;
};

/// Thrown by the replayer when a worker would consume its data faster than
/// the link delivers it.
class StarvationError : public std::runtime_error {
  public:
    StarvationError(std::string label, double time)
        : std::runtime_error("worker '" + label + "' starves at t = " + std::to_string(time)),
          label_(std::move(label)),
          time_(time) {}
    const std::string& label() const { return label_; }
    double time() const { return time_; }

  private:
    std::string label_;
    double time_;
};

/// Checks the feasibility conditions of a protocol on a network. Returns one
/// entry per violating worker; an empty result means the combination is usable.
///
/// Sequential handout needs every worker before the last to compute a unit
/// slower than it forwards one (strictly), or the next share degenerates.
/// Simultaneous start needs every worker to receive at least as fast as it
/// computes, or it runs dry mid-fragment. Staggered start has no condition.
inline std::vector<AssumptionViolation> validate(const StarNetwork& net, Protocol protocol) {
    std::vector<AssumptionViolation> out;
    const double tcp = net.intensities().t_cp();
    const double tcm = net.intensities().t_cm();
    const auto& ws = net.workers();
    if (protocol == Protocol::Sequential) {
        for (std::size_t i = 0; i + 1 < ws.size(); ++i) {
            const double compute = ws[i].processor.omega() * tcp;
            const double comm = ws[i].link.z() * tcm;
            if (!(compute > comm))
                out.push_back({i + 1, ws[i].processor.label(),
                               "sequential handout requires omega*t_cp > z*t_cm for every "
                               "worker that feeds a successor",
                               compute, comm});
        }
    } else if (protocol == Protocol::Simultaneous) {
        for (std::size_t i = 0; i < ws.size(); ++i) {
            const double compute = ws[i].processor.omega() * tcp;
            const double comm = ws[i].link.z() * tcm;
            if (comm > compute)
                out.push_back({i + 1, ws[i].processor.label(),
                               "simultaneous start requires z*t_cm <= omega*t_cp", compute,
                               comm});
        }
    }
    return out;
}

namespace detail {

inline void require_feasible(const StarNetwork& net, Protocol protocol) {
    auto violations = validate(net, protocol);
    if (!violations.empty()) throw InfeasibleError(std::move(violations));
}

inline bool workers_homogeneous(const StarNetwork& net) {
    const auto& ws = net.workers();
    for (std::size_t i = 1; i < ws.size(); ++i)
        if (ws[i].processor.omega() != ws[0].processor.omega() ||
            ws[i].link.z() != ws[0].link.z())
            return false;
    return !ws.empty();
}

}  // namespace detail

/// Assembles the network a run actually uses: the local star alone, the root
/// plus the remote worker alone, or the local star with the remote worker
/// placed in front of the local ones.
inline StarNetwork build_scenario(const StarNetwork& base, const std::optional<CloudSpec>& cloud,
                                  ProcessingMode mode) {
    if (mode == ProcessingMode::Local) return base;
    if (!cloud)
        throw std::invalid_argument(std::string("mode '") + to_string(mode) +
                                    "' requires a cloud worker");
    std::vector<Worker> ws;
    ws.reserve(mode == ProcessingMode::Combined ? base.worker_count() + 1 : 1);
    ws.push_back(cloud->worker());
    if (mode == ProcessingMode::Combined)
        ws.insert(ws.end(), base.workers().begin(), base.workers().end());
    return StarNetwork(base.root(), std::move(ws), base.intensities());
}

/// A star whose workers all share the same processor and link rates.
inline StarNetwork homogeneous_network(std::size_t m, double omega0, double omega, double z,
                                       Intensities intensities) {
    std::vector<Worker> ws;
    ws.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        ws.push_back(Worker{Processor(omega, "p" + std::to_string(i + 1)), Link(z)});
    return StarNetwork(Processor(omega0, "root"), std::move(ws), intensities);
}

/// A named, ready-to-run setup: base star, optional remote worker, and the
/// run's mode and protocol.
struct Scenario {
    StarNetwork base;
    std::optional<CloudSpec> cloud;
    ProcessingMode mode = ProcessingMode::Local;
    Protocol protocol = Protocol::Sequential;

    StarNetwork network() const { return build_scenario(base, cloud, mode); }
};

}  // namespace starload

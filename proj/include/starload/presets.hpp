#pragma once

#include <string>
#include <vector>

#include "model.hpp"

namespace starload {

/// The bundled scenarios. Both heterogeneous variants share the same four
/// worker speeds and differ only in which workers own the two slowest links:
/// "het-reconstructed" pairs them as (6, 3) and (7, 5), "het-printed" as
/// (6, 5) and (7, 3). "het" is an alias for "het-reconstructed", which is the
/// ordering the bundled sequential reference tables correspond to. "homo" is
/// four identical workers on fast links. Every preset uses t_cp = 2, t_cm = 1
/// and carries the same remote worker (omega 0.3 behind a z = 0.1 link).
inline Scenario preset(const std::string& name) {
    const Intensities intensities(2.0, 1.0);
    const CloudSpec cloud(0.3, 0.1);
    const Processor root(2.0, "root");
    if (name == "het-printed") {
        std::vector<Worker> ws{{Processor(4.0, "p1"), Link(1.5)},
                               {Processor(5.0, "p2"), Link(2.2)},
                               {Processor(6.0, "p3"), Link(5.0)},
                               {Processor(7.0, "p4"), Link(3.0)}};
        return {StarNetwork(root, std::move(ws), intensities), cloud};
    }
    if (name == "het-reconstructed" || name == "het") {
        std::vector<Worker> ws{{Processor(4.0, "p1"), Link(1.5)},
                               {Processor(5.0, "p2"), Link(2.2)},
                               {Processor(6.0, "p3"), Link(3.0)},
                               {Processor(7.0, "p4"), Link(5.0)}};
        return {StarNetwork(root, std::move(ws), intensities), cloud};
    }
    if (name == "homo")
        return {homogeneous_network(4, 3.0, 3.0, 0.1, intensities), cloud};
    throw std::invalid_argument("unknown preset '" + name +
                                "' (expected het|het-reconstructed|het-printed|homo)");
}

inline std::vector<std::string> preset_names() {
    return {"het-reconstructed", "het-printed", "homo"};
}

}  // namespace starload

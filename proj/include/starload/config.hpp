#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "model.hpp"

namespace starload {

/// Thrown for malformed or incomplete scenario files.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline double require_number(const nlohmann::json& node, const std::string& where) {
    if (!node.is_number()) throw ConfigError("config: " + where + " must be a number");
    return node.get<double>();
}

inline const nlohmann::json& require_field(const nlohmann::json& obj, const char* key,
                                           const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ConfigError("config: missing field " + where);
    return *it;
}

inline std::string optional_label(const nlohmann::json& obj, const std::string& fallback) {
    auto it = obj.find("label");
    if (it == obj.end()) return fallback;
    if (!it->is_string()) throw ConfigError("config: label must be a string");
    return it->get<std::string>();
}

inline void reject_unknown_keys(const nlohmann::json& obj, const std::vector<const char*>& known,
                                const std::string& where) {
    for (const auto& item : obj.items()) {
        bool ok = false;
        for (const char* k : known)
            if (item.key() == k) {
                ok = true;
                break;
            }
        if (!ok) throw ConfigError("config: unknown field '" + item.key() + "' in " + where);
    }
}

}  // namespace detail

/// Parses a scenario from JSON text. Schema:
///
///   {
///     "t_cp": 2, "t_cm": 1,
///     "root": {"omega": 2},
///     "children": [{"omega": 4, "z": 1.5}, ...],
///     "cloud": {"omega": 0.3, "z": 0.1},
///     "mode": "combined",
///     "protocol": "sequential"
///   }
///
/// root and children accept an optional "label" (children default to p1..pm).
/// cloud, mode, and protocol are optional; mode defaults to local and
/// protocol to sequential. Every error names the offending field.
inline Scenario parse_config(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("config: top level must be an object");
    detail::reject_unknown_keys(
        doc, {"t_cp", "t_cm", "root", "children", "cloud", "mode", "protocol"}, "top level");

    const double t_cp = detail::require_number(detail::require_field(doc, "t_cp", "t_cp"), "t_cp");
    const double t_cm = detail::require_number(detail::require_field(doc, "t_cm", "t_cm"), "t_cm");
    if (!(t_cp > 0.0)) throw ConfigError("config: t_cp must be > 0");
    if (!(t_cm >= 0.0)) throw ConfigError("config: t_cm must be >= 0");

    const auto& root_node = detail::require_field(doc, "root", "root");
    if (!root_node.is_object()) throw ConfigError("config: root must be an object");
    detail::reject_unknown_keys(root_node, {"omega", "label"}, "root");
    const double root_omega =
        detail::require_number(detail::require_field(root_node, "omega", "root.omega"),
                               "root.omega");
    if (!(root_omega > 0.0)) throw ConfigError("config: root.omega must be > 0");

    const auto& children_node = detail::require_field(doc, "children", "children");
    if (!children_node.is_array()) throw ConfigError("config: children must be an array");
    std::vector<Worker> workers;
    workers.reserve(children_node.size());
    for (std::size_t i = 0; i < children_node.size(); ++i) {
        const auto& child = children_node[i];
        const std::string where = "children[" + std::to_string(i) + "]";
        if (!child.is_object()) throw ConfigError("config: " + where + " must be an object");
        detail::reject_unknown_keys(child, {"omega", "z", "label"}, where);
        const double omega = detail::require_number(
            detail::require_field(child, "omega", where + ".omega"), where + ".omega");
        const double z = detail::require_number(detail::require_field(child, "z", where + ".z"),
                                                where + ".z");
        if (!(omega > 0.0)) throw ConfigError("config: " + where + ".omega must be > 0");
        if (!(z >= 0.0)) throw ConfigError("config: " + where + ".z must be >= 0");
        workers.push_back(Worker{
            Processor(omega, detail::optional_label(child, "p" + std::to_string(i + 1))),
            Link(z)});
    }

    std::optional<CloudSpec> cloud;
    if (auto it = doc.find("cloud"); it != doc.end()) {
        if (!it->is_object()) throw ConfigError("config: cloud must be an object");
        detail::reject_unknown_keys(*it, {"omega", "z", "label"}, "cloud");
        const double omega = detail::require_number(
            detail::require_field(*it, "omega", "cloud.omega"), "cloud.omega");
        const double z =
            detail::require_number(detail::require_field(*it, "z", "cloud.z"), "cloud.z");
        if (!(omega > 0.0)) throw ConfigError("config: cloud.omega must be > 0");
        if (!(z >= 0.0)) throw ConfigError("config: cloud.z must be >= 0");
        cloud = CloudSpec(omega, z, detail::optional_label(*it, "cloud"));
    }

    Scenario scenario{StarNetwork(Processor(root_omega, detail::optional_label(root_node, "root")),
                                  std::move(workers), Intensities(t_cp, t_cm)),
                      std::move(cloud)};
    if (auto it = doc.find("mode"); it != doc.end()) {
        if (!it->is_string()) throw ConfigError("config: mode must be a string");
        try {
            scenario.mode = parse_mode(it->get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    }
    if (auto it = doc.find("protocol"); it != doc.end()) {
        if (!it->is_string()) throw ConfigError("config: protocol must be a string");
        try {
            scenario.protocol = parse_protocol(it->get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    }
    if (scenario.mode != ProcessingMode::Local && !scenario.cloud)
        throw ConfigError("config: mode '" + std::string(to_string(scenario.mode)) +
                          "' requires a cloud section");
    return scenario;
}

/// Reads and parses a scenario file.
inline Scenario load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

}  // namespace starload

// Command-line front end for the star-network load scheduling analyzer.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <starload/starload.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitVerification = 3;

struct CommonOptions {
    std::string config_path;
    std::string preset_name;
    std::string mode;
    std::string protocol;
    std::string out_path;
    int precision = 3;
};

void add_source_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "scenario file (JSON)");
    cmd->add_option("--preset", opts.preset_name,
                    "bundled scenario: het|het-reconstructed|het-printed|homo");
    cmd->add_option("--mode", opts.mode, "processing mode: local|cloud|combined");
    cmd->add_option("--protocol", opts.protocol,
                    "distribution protocol: sequential|staggered|simultaneous");
}

void add_output_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--out", opts.out_path, "write the result to a file instead of stdout");
    cmd->add_option("--precision", opts.precision, "decimal places for printed values")
        ->check(CLI::Range(0, 12));
}

starload::Scenario resolve_scenario(const CommonOptions& opts) {
    if (opts.config_path.empty() == opts.preset_name.empty())
        throw starload::ConfigError("exactly one of --config or --preset is required");
    starload::Scenario scenario = opts.config_path.empty()
                                      ? starload::preset(opts.preset_name)
                                      : starload::load_config(opts.config_path);
    if (!opts.mode.empty()) scenario.mode = starload::parse_mode(opts.mode);
    if (!opts.protocol.empty()) scenario.protocol = starload::parse_protocol(opts.protocol);
    return scenario;
}

void write_result(const std::string& text, const CommonOptions& opts) {
    if (opts.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw starload::ConfigError("cannot open output file '" + opts.out_path + "'");
    out << text;
}

std::vector<double> parse_alpha_list(const std::string& text) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string item =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::invalid_argument("--alphas: '" + item + "' is not a number");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return values;
}

std::vector<double> parse_f_grid(const std::string& text) {
    double start = 0.0, stop = 0.0, step = 0.0;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &start, &stop, &step, &extra) != 3)
        throw std::invalid_argument("--f-grid: expected start:stop:step");
    if (!(step > 0.0)) throw std::invalid_argument("--f-grid: step must be > 0");
    if (stop < start) throw std::invalid_argument("--f-grid: stop must be >= start");
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double f = start + i * step;
        if (f > stop + step * 1e-9) break;
        grid.push_back(f);
    }
    return grid;
}

std::string describe_scenario(const starload::Scenario& scenario) {
    std::string out;
    out += "protocol: " + std::string(starload::to_string(scenario.protocol)) + "\n";
    out += "mode: " + std::string(starload::to_string(scenario.mode)) + "\n";
    return out;
}

int run_solve(const CommonOptions& opts, bool trace) {
    const starload::Scenario scenario = resolve_scenario(opts);
    const starload::StarNetwork net = scenario.network();
    const starload::Schedule schedule = starload::solve(net, scenario.protocol);

    std::string out = describe_scenario(scenario);
    out += "workers: " + std::to_string(net.worker_count()) + "\n";
    out += "alpha[0] " + net.root().label() + ": " +
           starload::detail::fixed(schedule.alphas[0], opts.precision) + "\n";
    for (std::size_t i = 0; i < net.worker_count(); ++i)
        out += "alpha[" + std::to_string(i + 1) + "] " + net.workers()[i].processor.label() +
               ": " + starload::detail::fixed(schedule.alphas[i + 1], opts.precision) + "\n";
    out += "finish_time: " + starload::detail::fixed(schedule.finish_time, opts.precision) + "\n";
    if (trace) {
        out += "trace.k1: " + starload::detail::fixed(schedule.trace.k1, opts.precision) + "\n";
        for (std::size_t j = 0; j < schedule.trace.q.size(); ++j)
            out += "trace.q[" + std::to_string(j + 2) + "]: " +
                   starload::detail::fixed(schedule.trace.q[j], opts.precision) + "\n";
        if (schedule.trace.sigma)
            out += "trace.sigma: " + starload::detail::fixed(*schedule.trace.sigma, opts.precision) +
                   "\n";
        if (schedule.trace.k)
            out += "trace.k: " + starload::detail::fixed(*schedule.trace.k, opts.precision) + "\n";
    }
    write_result(out, opts);
    return kExitOk;
}

int run_speedup(const CommonOptions& opts) {
    const starload::Scenario scenario = resolve_scenario(opts);
    const double s = starload::dlt_speedup(scenario.network(), scenario.protocol);
    std::string out = describe_scenario(scenario);
    out += "s_dlt: " + starload::detail::fixed(s, opts.precision) + "\n";
    write_result(out, opts);
    return kExitOk;
}

int run_sweep(const CommonOptions& opts, const std::string& grid_spec,
              const std::string& format_name) {
    const starload::Scenario scenario = resolve_scenario(opts);
    const starload::SpeedupCurve curve =
        starload::sweep_f(scenario.network(), scenario.protocol, parse_f_grid(grid_spec),
                          scenario.mode);
    write_result(starload::emit_table(curve, starload::parse_format(format_name), opts.precision),
                 opts);
    return kExitOk;
}

int run_simulate(const CommonOptions& opts, const std::string& alphas_spec) {
    const starload::Scenario scenario = resolve_scenario(opts);
    const starload::StarNetwork net = scenario.network();
    std::vector<double> alphas;
    if (alphas_spec.empty())
        alphas = starload::solve(net, scenario.protocol).alphas;
    else
        alphas = parse_alpha_list(alphas_spec);
    const starload::Timeline timeline = starload::replay(net, scenario.protocol, alphas);
    write_result(starload::emit_gantt(timeline, opts.precision), opts);
    return kExitOk;
}

int run_verify(const CommonOptions& opts) {
    const starload::Scenario scenario = resolve_scenario(opts);
    const starload::StarNetwork net = scenario.network();
    const starload::Schedule schedule = starload::solve(net, scenario.protocol);
    const starload::VerificationReport report =
        starload::verify_schedule(net, scenario.protocol, schedule);

    char buf[64];
    std::string out = describe_scenario(scenario);
    out += "finish_time: " + starload::detail::fixed(schedule.finish_time, 6) + "\n";
    std::snprintf(buf, sizeof buf, "%.3e", report.completion_spread);
    out += "completion_spread: " + std::string(buf) + "\n";
    std::snprintf(buf, sizeof buf, "%.3e", report.makespan_delta);
    out += "makespan_delta: " + std::string(buf) + "\n";
    out += "replay_check: " + std::string(report.pass ? "PASS" : "FAIL") + "\n";

    bool search_ok = true;
    if (net.worker_count() <= 4) {
        const starload::SearchResult search =
            starload::minimize_makespan(net, scenario.protocol, 1e-3);
        search_ok = search.best_makespan <= schedule.finish_time + 1e-3 &&
                    search.best_makespan >= schedule.finish_time - 1e-6;
        std::snprintf(buf, sizeof buf, "%.6f", search.grid_step);
        out += "search_grid_step: " + std::string(buf) + "\n";
        out += "search_evaluations: " + std::to_string(search.evaluations) + "\n";
        out += "search_best: " + starload::detail::fixed(search.best_makespan, 6) + "\n";
        std::snprintf(buf, sizeof buf, "%.3e", search.best_makespan - schedule.finish_time);
        out += "search_gap: " + std::string(buf) + "\n";
        out += "search_check: " + std::string(search_ok ? "PASS" : "FAIL") + "\n";
    } else {
        out += "search_check: skipped (more than 4 workers)\n";
    }

    const bool ok = report.pass && search_ok;
    out += "verdict: " + std::string(ok ? "PASS" : "FAIL") + "\n";
    write_result(out, opts);
    return ok ? kExitOk : kExitVerification;
}

int run_reproduce(const CommonOptions& opts, const std::string& format_name) {
    const auto cells = starload::reproduce_reference_tables();
    const auto summary = starload::summarize(cells);
    std::string out =
        starload::emit_comparisons(cells, starload::parse_format(format_name), opts.precision);
    out += "# match=" + std::to_string(summary.match) +
           " rounding_deviation=" + std::to_string(summary.rounding_deviation) +
           " published_inconsistency=" + std::to_string(summary.published_inconsistency) + "\n";
    write_result(out, opts);
    return kExitOk;
}

int run_validate(const CommonOptions& opts) {
    const starload::Scenario scenario = resolve_scenario(opts);
    const auto violations = starload::validate(scenario.network(), scenario.protocol);
    if (violations.empty()) {
        write_result("ok: network satisfies the " +
                         std::string(starload::to_string(scenario.protocol)) +
                         " protocol assumptions\n",
                     opts);
        return kExitOk;
    }
    std::string out;
    for (const auto& v : violations) out += v.message() + "\n";
    write_result(out, opts);
    return kExitInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"divisible-load scheduling analyzer for single-level tree networks"};
    app.require_subcommand(1);

    CommonOptions opts;
    bool trace = false;
    std::string alphas_spec;
    std::string grid_spec = "0:1:0.1";
    std::string format_name = "csv";

    CLI::App* solve = app.add_subcommand("solve", "optimal load fractions and finish time");
    add_source_options(solve, opts);
    add_output_options(solve, opts);
    solve->add_flag("--trace", trace, "print the derivation quantities");

    CLI::App* speedup = app.add_subcommand("speedup", "closed-form speedup over the root alone");
    add_source_options(speedup, opts);
    add_output_options(speedup, opts);

    CLI::App* sweep = app.add_subcommand("sweep", "overall speedup across parallel fractions");
    add_source_options(sweep, opts);
    add_output_options(sweep, opts);
    sweep->add_option("--f-grid", grid_spec, "fraction grid as start:stop:step");
    sweep->add_option("--format", format_name, "output format: csv|markdown");

    CLI::App* simulate = app.add_subcommand("simulate", "replay a split into a gantt timeline");
    add_source_options(simulate, opts);
    add_output_options(simulate, opts);
    simulate->add_option("--alphas", alphas_spec,
                         "comma-separated load fractions (default: the optimal split)");

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check the closed form against replay and brute-force search");
    add_source_options(verify, opts);
    add_output_options(verify, opts);

    CLI::App* reproduce =
        app.add_subcommand("reproduce", "recompute the bundled reference tables cell by cell");
    add_output_options(reproduce, opts);
    reproduce->add_option("--format", format_name, "output format: csv|markdown");

    CLI::App* validate = app.add_subcommand("validate", "check protocol assumptions");
    add_source_options(validate, opts);
    add_output_options(validate, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (solve->parsed()) return run_solve(opts, trace);
        if (speedup->parsed()) return run_speedup(opts);
        if (sweep->parsed()) return run_sweep(opts, grid_spec, format_name);
        if (simulate->parsed()) return run_simulate(opts, alphas_spec);
        if (verify->parsed()) return run_verify(opts);
        if (reproduce->parsed()) return run_reproduce(opts, format_name);
        if (validate->parsed()) return run_validate(opts);
        std::cerr << "no command selected\n";
        return kExitConfig;
    } catch (const starload::InfeasibleError& e) {
        std::cerr << e.what() << "\n";
        return kExitInfeasible;
    } catch (const starload::StarvationError& e) {
        std::cerr << e.what() << "\n";
        return kExitInfeasible;
    } catch (const starload::ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitConfig;
    }
}

// End-to-end checks of the command-line tool. Spawns the binary given as
// argv[1] through the shell and inspects exit codes and captured output.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

std::string g_binary;
int g_failures = 0;
int g_checks = 0;

#define CHECK(cond, msg)                                                          \
    do {                                                                          \
        ++g_checks;                                                               \
        if (!(cond)) {                                                            \
            std::fprintf(stderr, "[FAIL] %s:%d %s\n", __FILE__, __LINE__, (msg)); \
            ++g_failures;                                                         \
        }                                                                         \
    } while (0)

struct RunResult {
    int code = -1;
    std::string output;
};

RunResult run(const std::string& args, bool merge_stderr = false) {
    const std::string cmd =
        "\"" + g_binary + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::fprintf(stderr, "[FAIL] cannot spawn: %s\n", cmd.c_str());
        ++g_failures;
        return result;
    }
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
    const int status = pclose(pipe);
    result.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

std::size_t line_count(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

const char* kInfeasibleJson =
    R"({"t_cp": 2, "t_cm": 1, "root": {"omega": 1},
        "children": [{"omega": 1, "z": 3, "label": "a"}, {"omega": 1, "z": 0, "label": "b"}]})";

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <path-to-binary>\n");
        return 2;
    }
    g_binary = argv[1];

    // solve: pinned finish time and split
    const RunResult solve = run("solve --preset homo --mode local --protocol simultaneous");
    CHECK(solve.code == 0, "solve exits 0");
    CHECK(contains(solve.output, "protocol: simultaneous\n"), "solve names the protocol");
    CHECK(contains(solve.output, "mode: local\n"), "solve names the mode");
    CHECK(contains(solve.output, "workers: 4\n"), "solve counts workers");
    CHECK(contains(solve.output, "alpha[0] root: 0.200\n"), "solve prints the root fraction");
    CHECK(contains(solve.output, "alpha[4] p4: 0.200\n"), "solve prints worker fractions");
    CHECK(contains(solve.output, "finish_time: 1.200\n"), "solve prints the finish time");

    // byte-identical rerun
    CHECK(run("solve --preset homo --mode local --protocol simultaneous").output == solve.output,
          "solve output is deterministic");

    // trace output
    const RunResult trace =
        run("solve --preset het --mode local --protocol sequential --trace");
    CHECK(trace.code == 0, "solve --trace exits 0");
    CHECK(contains(trace.output, "trace.k1: 0.500\n"), "trace prints k1");
    CHECK(contains(trace.output, "trace.q[2]: "), "trace prints the fraction ratios");
    CHECK(!contains(trace.output, "trace.sigma"), "no sigma on a heterogeneous network");
    const RunResult trace_homo =
        run("solve --preset homo --mode local --protocol sequential --trace");
    CHECK(contains(trace_homo.output, "trace.sigma: 0.017\n"), "homogeneous trace prints sigma");

    // speedup
    const RunResult sp = run("speedup --preset homo --mode cloud --protocol sequential");
    CHECK(sp.code == 0, "speedup exits 0");
    CHECK(contains(sp.output, "s_dlt: 11.000\n"), "speedup prints the pinned cloud value");
    CHECK(contains(run("speedup --preset het --mode combined --protocol staggered --precision 6")
                       .output,
                   "s_dlt: 7.940400\n"),
          "precision flag widens the output");

    // sweep golden
    const RunResult sweep =
        run("sweep --preset homo --mode local --protocol simultaneous --f-grid 0:1:0.5");
    CHECK(sweep.code == 0, "sweep exits 0");
    CHECK(sweep.output ==
              "f,1-f,f/sp,Ss\n"
              "0.000,1.000,0.000,1.000\n"
              "0.500,0.500,0.100,1.667\n"
              "1.000,0.000,0.200,5.000\n",
          "sweep csv matches the golden table");
    CHECK(line_count(run("sweep --preset homo --mode local --protocol simultaneous").output) == 12,
          "default grid yields 11 rows plus header");
    CHECK(contains(run("sweep --preset homo --mode local --protocol simultaneous "
                       "--f-grid 0:1:0.5 --format markdown")
                       .output,
                   "| f | 1-f | f/sp | Ss |\n| --- | --- | --- | --- |\n"),
          "markdown format");
    CHECK(run("sweep --preset homo --f-grid nonsense").code == 1, "bad f-grid exits 1");

    // simulate
    const RunResult sim = run(
        "simulate --preset het --mode local --protocol sequential --alphas 0.2,0.2,0.2,0.2,0.2");
    CHECK(sim.code == 0, "simulate exits 0");
    CHECK(sim.output.rfind("node,phase,start,end\n", 0) == 0, "gantt header comes first");
    CHECK(contains(sim.output, "p4,compute,1.340,4.140\n"), "pinned timeline row");
    const RunResult sim_default = run("simulate --preset het --mode local --protocol staggered");
    CHECK(sim_default.code == 0, "simulate with the optimal split exits 0");
    CHECK(contains(sim_default.output, "root,compute,0.000,1.797\n"),
          "optimal split root row matches the closed form");
    CHECK(run("simulate --preset het --alphas 0.5,0.5").code == 1,
          "wrong alpha count exits 1");
    CHECK(run("simulate --preset het --alphas 0.2,x,0.2,0.2,0.2", true).code == 1,
          "non-numeric alphas exit 1");

    // verify
    const RunResult verify = run("verify --preset het --mode local --protocol staggered");
    CHECK(verify.code == 0, "verify exits 0");
    CHECK(contains(verify.output, "replay_check: PASS\n"), "replay check passes");
    CHECK(contains(verify.output, "search_grid_step: "), "verify reports the grid step");
    CHECK(contains(verify.output, "search_check: PASS\n"), "search check passes");
    CHECK(contains(verify.output, "verdict: PASS\n"), "verdict passes");
    const RunResult verify5 = run("verify --preset homo --mode combined --protocol sequential");
    CHECK(verify5.code == 0, "verify exits 0 with search skipped");
    CHECK(contains(verify5.output, "search_check: skipped (more than 4 workers)\n"),
          "search is skipped past four workers");
    CHECK(contains(verify5.output, "verdict: PASS\n"), "skipped search still passes");

    // reproduce
    const RunResult reproduce = run("reproduce");
    CHECK(reproduce.code == 0, "reproduce exits 0");
    CHECK(reproduce.output.rfind("table,row,column,published,computed,abs_delta,rel_delta,status\n",
                                 0) == 0,
          "reproduce header");
    CHECK(contains(reproduce.output,
                   "# match=201 rounding_deviation=0 published_inconsistency=15\n"),
          "reproduce summary line");
    CHECK(contains(run("reproduce --format markdown").output, "| 4.4 | f=1.0 | combined |"),
          "reproduce markdown rows");

    // validate
    const RunResult validate = run("validate --preset het --protocol sequential");
    CHECK(validate.code == 0, "validate exits 0 on a feasible network");
    CHECK(validate.output == "ok: network satisfies the sequential protocol assumptions\n",
          "validate ok line");

    write_file("cli_scratch_infeasible.json", kInfeasibleJson);
    const RunResult bad_validate = run("validate --config cli_scratch_infeasible.json");
    CHECK(bad_validate.code == 2, "validate exits 2 on violations");
    CHECK(contains(bad_validate.output, "child 1"), "violation names the child index");
    CHECK(contains(bad_validate.output, "'a'"), "violation names the child label");
    const RunResult bad_solve = run("solve --config cli_scratch_infeasible.json", true);
    CHECK(bad_solve.code == 2, "solve exits 2 on an infeasible network");
    CHECK(contains(bad_solve.output, "child 1"), "solve diagnostic names the child");
    CHECK(run("simulate --config cli_scratch_infeasible.json --alphas 0.4,0.3,0.3", true).code ==
              2,
          "starved replay exits 2");
    CHECK(run("solve --config cli_scratch_infeasible.json --protocol staggered").code == 0,
          "the same network is fine under the staggered start");
    std::remove("cli_scratch_infeasible.json");

    // config errors
    write_file("cli_scratch_bad.json", "{ not json");
    const RunResult bad_json = run("solve --config cli_scratch_bad.json", true);
    CHECK(bad_json.code == 1, "malformed config exits 1");
    CHECK(contains(bad_json.output, "config:"), "config diagnostic prefix");
    std::remove("cli_scratch_bad.json");
    CHECK(run("solve", true).code == 1, "missing scenario source exits 1");
    CHECK(run("solve --preset homo --config x.json", true).code == 1,
          "both scenario sources exit 1");
    CHECK(run("solve --preset unknown", true).code == 1, "unknown preset exits 1");
    CHECK(run("solve --preset homo --bogus", true).code == 1, "unknown flag exits 1");
    CHECK(run("solve --preset homo --mode sideways", true).code == 1, "unknown mode exits 1");
    CHECK(run("solve --preset homo --precision 20", true).code == 1,
          "out-of-range precision exits 1");
    CHECK(run("--help").code == 0, "--help exits 0");
    CHECK(run("solve --help").code == 0, "subcommand help exits 0");

    // --out writes exactly what stdout would carry
    const RunResult redirected = run(
        "solve --preset homo --mode local --protocol simultaneous --out cli_scratch_out.txt");
    CHECK(redirected.code == 0, "--out exits 0");
    CHECK(redirected.output.empty(), "--out leaves stdout empty");
    CHECK(read_file("cli_scratch_out.txt") == solve.output, "--out bytes equal stdout bytes");
    std::remove("cli_scratch_out.txt");

    if (g_failures) {
        std::fprintf(stderr, "cli: %d of %d checks failed\n", g_failures, g_checks);
        return 1;
    }
    std::printf("cli: all %d checks passed\n", g_checks);
    return 0;
}

#include <catch2/catch_amalgamated.hpp>

#include <starload/emit.hpp>
#include <starload/presets.hpp>

using namespace starload;
using Catch::Matchers::ContainsSubstring;

namespace {

StarNetwork preset_network(const std::string& name, ProcessingMode mode) {
    const Scenario s = preset(name);
    return build_scenario(s.base, s.cloud, mode);
}

}  // namespace

TEST_CASE("fixed-point cells") {
    REQUIRE(detail::fixed(1.0 / 3.0, 3) == "0.333");
    REQUIRE(detail::fixed(2.0, 0) == "2");
    REQUIRE(detail::fixed(1.2345649, 6) == "1.234565");
    REQUIRE(detail::fixed(-0.0, 3) == "0.000");
    REQUIRE(detail::fixed(-1.5, 1) == "-1.5");
}

TEST_CASE("format names") {
    REQUIRE(parse_format("csv") == TableFormat::Csv);
    REQUIRE(parse_format("markdown") == TableFormat::Markdown);
    REQUIRE_THROWS_AS(parse_format("tsv"), std::invalid_argument);
}

TEST_CASE("speedup curve as csv") {
    const StarNetwork net = preset_network("homo", ProcessingMode::Local);
    const SpeedupCurve curve =
        sweep_f(net, Protocol::Simultaneous, {0.0, 0.5, 1.0}, ProcessingMode::Local);
    REQUIRE(emit_table(curve, TableFormat::Csv) ==
            "f,1-f,f/sp,Ss\n"
            "0.000,1.000,0.000,1.000\n"
            "0.500,0.500,0.100,1.667\n"
            "1.000,0.000,0.200,5.000\n");
}

TEST_CASE("speedup curve as markdown") {
    const StarNetwork net = preset_network("homo", ProcessingMode::Local);
    const SpeedupCurve curve =
        sweep_f(net, Protocol::Simultaneous, {0.0, 1.0}, ProcessingMode::Local);
    REQUIRE(emit_table(curve, TableFormat::Markdown) ==
            "| f | 1-f | f/sp | Ss |\n"
            "| --- | --- | --- | --- |\n"
            "| 0.000 | 1.000 | 0.000 | 1.000 |\n"
            "| 1.000 | 0.000 | 0.200 | 5.000 |\n");
}

TEST_CASE("value grid rendering") {
    const ValueGrid grid{"network", {"local", "cloud"}, {{"homo", {1.2, 0.5454545454545454}}}};
    REQUIRE(emit_table(grid, TableFormat::Csv) ==
            "network,local,cloud\n"
            "homo,1.200,0.545\n");
    REQUIRE(emit_table(grid, TableFormat::Markdown, 2) ==
            "| network | local | cloud |\n"
            "| --- | --- | --- |\n"
            "| homo | 1.20 | 0.55 |\n");
}

TEST_CASE("gantt rows are ordered and zero-length intervals dropped") {
    const StarNetwork net = preset_network("het", ProcessingMode::Local);
    const std::vector<double> alphas{0.5, 0.5, 0.0, 0.0, 0.0};
    const Timeline t = replay(net, Protocol::Staggered, alphas, 2.0);
    const std::string csv = emit_gantt(t);
    REQUIRE(csv ==
            "node,phase,start,end\n"
            "p1,receive,0.000,1.500\n"
            "root,compute,0.000,4.000\n"
            "p1,compute,1.500,9.500\n");
}

TEST_CASE("gantt of a sequential replay") {
    const StarNetwork net = preset_network("het", ProcessingMode::Local);
    const Timeline t = replay(net, Protocol::Sequential, std::vector<double>(5, 0.2));
    const std::string csv = emit_gantt(t);
    REQUIRE_THAT(csv, ContainsSubstring("p4,compute,1.340,4.140\n"));
    REQUIRE_THAT(csv, ContainsSubstring("p1,compute,0.000,1.600\n"));
    // receives share their start with computes: transfer rows come first
    const auto recv = csv.find("p2,receive,0.300");
    const auto comp = csv.find("p2,compute,0.300");
    REQUIRE(recv != std::string::npos);
    REQUIRE(comp != std::string::npos);
    REQUIRE(recv < comp);
}

TEST_CASE("emitters are deterministic") {
    const StarNetwork net = preset_network("het", ProcessingMode::Combined);
    const SpeedupCurve curve =
        sweep_f(net, Protocol::Sequential, {0.0, 0.25, 0.5, 0.75, 1.0}, ProcessingMode::Combined);
    REQUIRE(emit_table(curve, TableFormat::Csv) == emit_table(curve, TableFormat::Csv));
    const Timeline t = replay(net, Protocol::Sequential, solve(net, Protocol::Sequential).alphas);
    REQUIRE(emit_gantt(t) == emit_gantt(t));
}

#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

#include "cli_runner.hpp"

using holext::testing::run_command;
using nlohmann::json;

namespace {

const std::string kCli = HOLEXT_CLI_PATH;

std::filesystem::path scratch(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("holext_cli_test_" + name);
}

std::string synth(const std::string& expr, const std::string& name, int n = 1024) {
    const auto path = scratch(name).string();
    const auto r = run_command(kCli + " synth '" + expr + "' --n " + std::to_string(n) + " --out " + path);
    REQUIRE_MESSAGE(r.exit_code == 0, expr);
    return path;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("synth writes the sample schema") {
    const auto r = run_command(kCli + " synth 'z^2' --n 16");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("n") == 16);
    CHECK(j.at("values").size() == 16);
    CHECK(j.at("values")[4] == json::array({-1.0, 0.0}));

    const auto bad = run_command(kCli + " synth 'z^(' --n 16");
    CHECK(bad.exit_code == 2);
    CHECK(bad.out.empty());
    CHECK(run_command(kCli + " synth '1/(z-1)' --n 16").exit_code == 2);
    CHECK(run_command(kCli + " synth 'z' --n 12").exit_code == 2);
}

TEST_CASE("analyze exit statuses") {
    const auto analytic = run_command(kCli + " analyze " + synth("z^5", "z5.json"));
    CHECK(analytic.exit_code == 0);
    CHECK(json::parse(analytic.out).at("status") == "Extendible");

    const auto family = run_command(kCli + " analyze " + synth("z^3 + 0.5*z^-1", "family.json"));
    CHECK(family.exit_code == 3);
    const json v = json::parse(family.out);
    CHECK(v.at("status") == "NotExtendible");
    CHECK(v.at("worst_moment").at("n") == 0);
    CHECK(std::abs(v.at("worst_moment").at("modulus").get<double>() - 0.5) < 1e-9);

    const auto gray = run_command(kCli + " analyze " + synth("z + 3e-8*z^-1", "gray.json"));
    CHECK(gray.exit_code == 4);

    const auto corrupt = scratch("corrupt.json");
    {
        std::ofstream out(corrupt);
        out << R"({"n": 16, "values": [[1, 0)";
    }
    const auto broken = run_command(kCli + " analyze " + corrupt.string());
    CHECK(broken.exit_code == 2);
    CHECK(broken.out.empty());
    CHECK(run_command(kCli + " analyze /nonexistent/file.json").exit_code == 2);
}

TEST_CASE("witness exit statuses") {
    const auto out_path = scratch("cert.json").string();
    const auto family = run_command(kCli + " witness " + synth("z^3 + 0.5*z^-1", "wfamily.json") + " --out " + out_path);
    REQUIRE(family.exit_code == 0);
    const json cert = json::parse(family.out);
    CHECK(cert.at("winding") == -1);
    CHECK(cert.at("route") == "direct");
    std::ifstream saved(out_path);
    CHECK(json::parse(saved) == cert);

    CHECK(run_command(kCli + " witness " + synth("z^7", "w7.json")).exit_code == 5);

    const auto lifted = run_command(kCli + " witness " + synth("z^-2", "wm2.json"));
    REQUIRE(lifted.exit_code == 0);
    CHECK(json::parse(lifted.out).at("route").contains("pole_lift"));
}

TEST_CASE("prop41 and oracle") {
    const auto campaign = run_command(kCli + " prop41 0 1 --trials 10 --seed 7 --radius 1");
    REQUIRE(campaign.exit_code == 0);
    const json report = json::parse(campaign.out);
    CHECK(report.at("failures").empty());
    CHECK(report.at("seed") == 7);
    CHECK(run_command(kCli + " prop41 2 2 --trials 10").exit_code == 2);
    CHECK(run_command(kCli + " prop41 2 3 --trials 0").exit_code == 2);

    const auto a = json::parse(run_command(kCli + " oracle '(z-0.5)/(z-3)'").out);
    CHECK(a.at("oracle_winding") == 1);
    CHECK(a.at("numeric_winding") == 1);
    CHECK(a.at("agree") == true);
    CHECK(json::parse(run_command(kCli + " oracle 'z^-1'").out).at("oracle_winding") == -1);
    const auto b = run_command(kCli + " oracle '(z^4+0.5)/z'");
    CHECK(b.exit_code == 0);
    CHECK(json::parse(b.out).at("numeric_winding") == 3);
}

}  // TEST_SUITE

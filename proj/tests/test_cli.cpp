#include "weylbill/cli.hpp"
#include "weylbill/specfun.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

using weylbill::kPi;
namespace cli = weylbill::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "weylbill-cli");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const char* name) {
    return std::string(WEYLBILL_DATA_DIR) + "/" + name;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

} // namespace

TEST_CASE("weyl report for the unit square") {
    const auto r = run({"weyl", "--geometry", data("square.bil"), "--bc", "dirichlet", "--format", "json"});
    REQUIRE(r.code == cli::ok);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "weyl");
    CHECK(j["results"]["const_coef"]["value"].get<double>() == doctest::Approx(1.0 / (4 * kPi)).epsilon(1e-15));
    CHECK(j["results"]["inv_sqrt_coef"]["value"].get<double>() == doctest::Approx(-1.0 / (2 * kPi)).epsilon(1e-15));
    CHECK(j["results"]["delta_coef"]["value"].get<double>() == doctest::Approx(0.25).epsilon(1e-15));
    for (const auto& [name, field] : j["results"].items()) {
        CAPTURE(name);
        CHECK(field.contains("units"));
        CHECK_FALSE(field["meaning"].get<std::string>().empty());
    }
    CHECK(j["rows"].size() == 4);
}

TEST_CASE("corner table") {
    const auto r = run({"corner", "--alpha-grid", "0.1:1.5:15", "--format", "csv"});
    REQUIRE(r.code == cli::ok);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 16);
    CHECK(ls[0].rfind("alpha,weyl,orbit,edge_correction,total_semiclassical,ratio", 0) == 0);
    const auto obtuse = run({"corner", "--alpha-grid", "1.0:3.0:5", "--format", "json"});
    REQUIRE(obtuse.code == cli::ok);
    const auto j = nlohmann::json::parse(obtuse.out);
    REQUIRE(j["rows"].size() == 5);
    CHECK(j["rows"][4]["orbit"].is_null());
    CHECK_FALSE(j["rows"][4]["absent_reason"].get<std::string>().empty());
}

TEST_CASE("ledger table") {
    const auto r = run({"ledger", "--bc", "dirichlet", "--format", "json"});
    REQUIRE(r.code == cli::ok);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["rows"].size() == 17);
    CHECK(j["rows"][16]["signature"] == "total");
    CHECK(j["rows"][16]["area_units"] == "1");
    CHECK(j["rows"][16]["length_units"] == "-1");
    CHECK(j["rows"][16]["delta_units"] == "1/16 - (1/16)/pi^2");
    CHECK(j["results"]["delta_total"]["value"].get<double>() ==
          doctest::Approx(1.0 / 16 - 1.0 / (16 * kPi * kPi)).epsilon(1e-15));
    const auto csv = run({"ledger", "--format", "csv"});
    const auto ls = lines(csv.out);
    CHECK(ls.front() == "field,value,units,meaning");
    CHECK(std::count(ls.begin(), ls.end(), std::string{}) == 1);
}

TEST_CASE("green comparison and fold calibration") {
    const auto g = run({"green", "--y", "1", "--k", "1"});
    REQUIRE(g.code == cli::ok);
    const auto j = nlohmann::json::parse(g.out);
    CHECK(j["results"]["time_vs_hankel_abs_diff"]["value"].get<double>() < 1e-8);
    CHECK(j["results"]["stationary_density_ratio"]["value"].get<double>() == doctest::Approx(std::sqrt(2.0)));
    CHECK(run({"green", "--y", "1", "--k", "1", "--tol", "1e-300"}).code == cli::non_convergence);

    const auto f = run({"fold", "--alpha", "1.5707963267948966", "--tau-list", "0.025,0.0125,0.00625", "--grid", "2"});
    REQUIRE(f.code == cli::ok);
    const auto fj = nlohmann::json::parse(f.out);
    CHECK(fj["rows"][0]["ratio_to_stationary"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(fj["results"]["corner_constant"]["value"].get<double>() ==
          doctest::Approx(1.0 / 16 - 1.0 / (16 * kPi * kPi)).epsilon(1e-3));
}

TEST_CASE("staircase and monodromy run") {
    const auto s = run({"staircase", "--shape", "rectangle", "--emax", "2000", "--window", "300:2000"});
    REQUIRE(s.code == cli::ok);
    CHECK(nlohmann::json::parse(s.out)["results"].contains("mean"));
    const auto m = run({"monodromy", "--geometry", data("disk.bil"), "--start", "0.2,0.1", "--bounces", "4"});
    REQUIRE(m.code == cli::ok);
    const auto mj = nlohmann::json::parse(m.out);
    CHECK(mj["results"]["birkhoff_det"]["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mj["rows"].size() == 4);
}

TEST_CASE("identical arguments give byte-identical output") {
    const std::vector<std::vector<std::string>> cases = {
        {"weyl", "--geometry", data("quarter_disk.bil"), "--format", "csv"},
        {"corner", "--alpha-grid", "0.2:2.8:7"},
        {"ledger", "--bc", "neumann"},
        {"green", "--y", "0.5", "--k", "2", "--format", "csv"},
        {"monodromy", "--geometry", data("square.bil"), "--start", "0.5,0.3", "--bounces", "3", "--seed", "4"}};
    for (const auto& c : cases) {
        const auto a = run(c), b = run(c);
        CHECK(a.code == cli::ok);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == cli::usage);
    CHECK(run({"nonsense"}).code == cli::usage);
    CHECK(run({"weyl"}).code == cli::usage);
    CHECK(run({"weyl", "--geometry", data("square.bil"), "--format", "xml"}).code == cli::usage);
    CHECK(run({"corner", "--alpha-grid", "1:2"}).code == cli::usage);
    CHECK(run({"corner", "--alpha-grid", "0:4:3"}).code == cli::usage);
    CHECK(run({"staircase", "--shape", "rectangle", "--emax", "200", "--window", "100:200"}).code == cli::usage);
    CHECK(run({"weyl", "--geometry", WEYLBILL_DATA_DIR}).code != cli::ok);
    CHECK(run({"monodromy", "--geometry", data("square.bil"), "--start", "0.5,0.4472135954999579", "--bounces", "1"})
              .code == cli::geometry);
    CHECK(run({"--help"}).code == cli::ok);
    const auto bad = run({"weyl", "--geometry", data("square.bil"), "--bc", "robin"});
    CHECK(bad.code == cli::usage);
    CHECK_FALSE(bad.err.empty());
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ucinv/matrix_io.hpp"
#include "ucinv/reports.hpp"
#include "ucinv/scenarios.hpp"
#include "ucinv/verify.hpp"

#include <random>
#include <sstream>

using ucinv::Matrix;

TEST_CASE("matrix csv round-trips binary64 values exactly") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix a(4, 3);
    for (Eigen::Index i = 0; i < 4; ++i)
        for (Eigen::Index j = 0; j < 3; ++j) a(i, j) = dist(rng) * std::pow(10.0, i * 5 - 8);
    a(0, 0) = 0.1;
    a(1, 1) = -1.0 / 3.0;
    a(2, 2) = 1e-300;
    std::stringstream ss;
    ucinv::write_matrix_csv(ss, a);
    const Matrix back = ucinv::read_matrix_csv(ss);
    REQUIRE(back.rows() == a.rows());
    REQUIRE(back.cols() == a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) CHECK(back(i, j) == a(i, j));
}

TEST_CASE("matrix csv rejects malformed input") {
    std::stringstream ragged("1,2\n3\n");
    CHECK_THROWS_AS(ucinv::read_matrix_csv(ragged), std::invalid_argument);
    std::stringstream garbage("1,two\n");
    CHECK_THROWS_AS(ucinv::read_matrix_csv(garbage), std::invalid_argument);
    std::stringstream empty("");
    CHECK_THROWS_AS(ucinv::read_matrix_csv(empty), std::invalid_argument);
}

TEST_CASE("the registry covers every experimental cell") {
    const auto& reg = ucinv::scenario_registry();
    const std::vector<std::string> expected = {
        "arm-mp-m",    "arm-mp-m-dt4",  "arm-mp-cm",    "arm-mp-cm-dt4",
        "arm-uc-m",    "arm-uc-m-dt4",  "arm-uc-cm",    "arm-uc-cm-dt4",
        "rover-mp-m",  "rover-mp-cm",   "rover-mp-cm-rot30",
        "rover-uc-m",  "rover-uc-cm",   "rover-uc-cm-rot30",
        "rover-mixed-m", "rover-mixed-cm", "rover-mixed-cm-rot30"};
    CHECK(reg.size() == expected.size());
    for (const std::string& name : expected) {
        CAPTURE(name);
        CHECK(ucinv::find_scenario(name) != nullptr);
    }
    CHECK(ucinv::find_scenario("no-such-scenario") == nullptr);
    // names are unique
    for (std::size_t i = 0; i < reg.size(); ++i)
        for (std::size_t j = i + 1; j < reg.size(); ++j) CHECK(reg[i].name != reg[j].name);
}

TEST_CASE("the arm meters scenario passes its expectations") {
    const ucinv::ScenarioOutcome outcome = ucinv::run_scenario(*ucinv::find_scenario("arm-mp-m"));
    for (const ucinv::CheckResult& c : outcome.checks) {
        CAPTURE(c.label);
        CAPTURE(c.deviation);
        CHECK(c.passed);
    }
    CHECK(outcome.passed);
}

TEST_CASE("trajectory csv carries the documented header and degree units") {
    const ucinv::ScenarioOutcome outcome = ucinv::run_scenario(*ucinv::find_scenario("arm-mp-m"));
    std::stringstream ss;
    ucinv::write_trajectory_csv(ss, outcome.result);
    std::string header;
    std::getline(ss, header);
    CHECK(header == "t,qd_1,qd_2,qd_3,q_1,q_2,q_3,v_1,v_2,v_3,residual");
    std::string first;
    std::getline(ss, first);
    std::stringstream row(first);
    std::string cell;
    std::vector<double> cells;
    while (std::getline(row, cell, ',')) cells.push_back(std::stod(cell));
    REQUIRE(cells.size() == 11);
    CHECK(cells[0] == 0.0);
    CHECK(cells[1] == doctest::Approx(-27.881).epsilon(1e-3));  // degree/s
    CHECK(cells[2] == doctest::Approx(-12.12).epsilon(1e-2));
    CHECK(cells[3] == doctest::Approx(1.5426).epsilon(1e-3));   // m/s, solved sign
    CHECK(cells[7] == doctest::Approx(2.0).epsilon(1e-9));      // achieved v_x
    CHECK(cells[10] < 1e-9);                                    // residual
    // line count: header + one row per step
    std::size_t lines = 2;  // header + first row already consumed
    std::string rest;
    while (std::getline(ss, rest)) ++lines;
    CHECK(lines == 1 + outcome.result.records.size());
}

TEST_CASE("summary json reports expectations, divergence, and balancing") {
    const ucinv::ScenarioOutcome outcome =
        ucinv::run_scenario(*ucinv::find_scenario("rover-uc-m"));
    const ucinv::Json j = ucinv::summary_json(outcome, "rover-uc-m");
    CHECK(j["scenario"] == "rover-uc-m");
    CHECK(j["config"]["inverse"] == "uc");
    CHECK(j["pass"].is_boolean());
    CHECK(j["divergence"].contains("diverged"));
    CHECK(j["balancing"]["decompositions"].get<int>() > 0);
    CHECK(j["expectations"].is_array());
    CHECK(!j["expectations"].empty());
    for (const auto& check : j["expectations"]) {
        CHECK(check.contains("source"));
        CHECK((check["source"] == "tabulated" || check["source"] == "derived"));
    }
}

TEST_CASE("verify suite names and unknown-suite handling") {
    const auto& names = ucinv::verify_suite_names();
    CHECK(names.size() == 6);
    CHECK_THROWS_AS(ucinv::run_verify("bogus", 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(ucinv::run_verify("penrose", 1, 0), std::invalid_argument);
    const auto reports = ucinv::run_verify("penrose", 42, 25);
    REQUIRE(reports.size() == 1);
    CHECK(reports.front().passed);
    const auto all = ucinv::run_verify("all", 42, 10);
    CHECK(all.size() == names.size());
}

TEST_CASE("verify reports are deterministic for a fixed seed") {
    const auto a = ucinv::run_verify("kron", 99, 20);
    const auto b = ucinv::run_verify("kron", 99, 20);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].checks.size() == b[i].checks.size());
        for (std::size_t c = 0; c < a[i].checks.size(); ++c) {
            CHECK(a[i].checks[c].worst == b[i].checks[c].worst);
        }
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "lsn/casestudy.hpp"

using namespace lsn;

namespace {

CaseStudyScenario tiny_scenario() {
  CaseStudyScenario sc;
  sc.tmpl = {53.0, 6, 6, 0, 1600.0};
  sc.cells = {{20.0, 0.0, 1.0, true}, {30.0, 50.0, 1.0, true}};
  sc.demands = {{0, 1, 1.0}};
  sc.requirements.lambda = 2.0;
  sc.grid = {60.0, 2};
  sc.vis = {5.0, 80.0};
  sc.i_limit = 10;
  sc.max_r = 4;
  return sc;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("decay projection arithmetic") {
  const auto flat = decay_projection(500, 0.0, 3);
  REQUIRE(flat.size() == 4);
  for (const auto& p : flat) CHECK(p.satellites == 500);

  const auto starlink = decay_projection(1000, 0.026, 3);
  REQUIRE(starlink.size() == 4);
  CHECK(starlink[0].satellites == 1000);
  CHECK(starlink[1].satellites == 974);
  CHECK(starlink[2].satellites == 949);
  CHECK(starlink[3].satellites == 924);

  CHECK_THROWS_AS(decay_projection(100, 1.5, 2), std::invalid_argument);
}

TEST_CASE("decay projection is strictly decreasing until rounding floors it") {
  const auto points = decay_projection(2000, 0.1, 6);
  for (std::size_t i = 1; i < points.size(); ++i)
    CHECK(points[i].satellites < points[i - 1].satellites);
}

TEST_CASE("zero or tiny budgets give zero survivability") {
  const auto sc = tiny_scenario();
  CHECK(max_survivability_for_count(0, sc) == 0);
  CHECK(max_survivability_for_count(1, sc) == 0);  // one satellite cannot serve both cells
}

TEST_CASE("achievable survivability grows with the satellite budget") {
  const auto sc = tiny_scenario();
  const int small = max_survivability_for_count(9, sc);
  const int large = max_survivability_for_count(36, sc);
  CHECK(small <= large);
  CHECK(large >= 1);
}

TEST_CASE("deployment curve matches pointwise inverse calls") {
  const auto sc = tiny_scenario();
  LaunchHistory history;
  history.entries = {{"2023-01-01", 0}, {"2023-06-01", 16}, {"2024-01-01", 36}};
  const auto curve = deployment_curve(history, sc);
  REQUIRE(curve.size() == 3);
  CHECK(curve[0].r_min == 0);
  for (std::size_t i = 0; i < curve.size(); ++i) {
    CHECK(curve[i].r_min ==
          max_survivability_for_count(history.entries[i].cumulative_satellites, sc));
  }
  for (std::size_t i = 1; i < curve.size(); ++i) CHECK(curve[i].r_min >= curve[i - 1].r_min);

  CHECK_THROWS_AS(deployment_curve(LaunchHistory{}, sc), std::invalid_argument);
}

TEST_CASE("launch history csv parsing") {
  const auto ok = write_temp("lsn_hist_ok.csv",
                             "date,cumulative_satellites\n"
                             "2020-01-01,60\n"
                             "2020-06-01,420\n");
  const auto history = load_launch_history(ok);
  REQUIRE(history.entries.size() == 2);
  CHECK(history.entries[1].cumulative_satellites == 420);
  std::remove(ok.c_str());

  const auto unordered = write_temp("lsn_hist_bad.csv",
                                    "date,cumulative_satellites\n"
                                    "2020-06-01,420\n"
                                    "2020-01-01,60\n");
  CHECK_THROWS_AS(load_launch_history(unordered), std::runtime_error);
  std::remove(unordered.c_str());

  const auto empty = write_temp("lsn_hist_empty.csv", "date,cumulative_satellites\n");
  CHECK_THROWS_AS(load_launch_history(empty), std::runtime_error);
  std::remove(empty.c_str());
}

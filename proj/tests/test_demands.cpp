#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "lsn/demands.hpp"

using namespace lsn;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("two eligible cells force the single pair") {
  std::vector<Cell> cells{{0.0, 0.0, 1000.0, true}, {10.0, 10.0, 500.0, true}};
  const auto demands = generate_demands(cells, 1, 0.001, 42);
  REQUIRE(demands.size() == 1);
  CHECK(demands[0].src_cell != demands[0].dst_cell);
  const double expected = 0.001 * cells[demands[0].src_cell].population;
  CHECK(demands[0].size_gbps == doctest::Approx(expected));
}

TEST_CASE("same seed reproduces the demand list") {
  std::vector<Cell> cells;
  for (int i = 0; i < 10; ++i) cells.push_back({i * 5.0, i * 10.0, 100.0 + i, true});
  const auto a = generate_demands(cells, 12, 0.01, 7);
  const auto b = generate_demands(cells, 12, 0.01, 7);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].src_cell == b[i].src_cell);
    CHECK(a[i].dst_cell == b[i].dst_cell);
    CHECK(a[i].size_gbps == b[i].size_gbps);
  }
}

TEST_CASE("sizes follow source population for any seed") {
  std::vector<Cell> cells;
  for (int i = 0; i < 10; ++i) cells.push_back({i * 5.0, i * 10.0, 250.0, true});
  for (std::uint64_t seed : {1ULL, 99ULL}) {
    const auto demands = generate_demands(cells, 20, 0.004, seed);
    CHECK(demands.size() == 20);
    for (const auto& d : demands) {
      CHECK(d.size_gbps == doctest::Approx(1.0));  // 0.004 * 250
      CHECK(cells[d.src_cell].service_available);
      CHECK(cells[d.dst_cell].service_available);
      CHECK(d.size_gbps > 0.0);
    }
  }
}

TEST_CASE("ineligible cells are never demand endpoints") {
  std::vector<Cell> cells{{0.0, 0.0, 100.0, true},
                          {10.0, 0.0, 100.0, false},  // no service
                          {20.0, 0.0, 0.0, true},     // no population
                          {30.0, 0.0, 100.0, true}};
  const auto demands = generate_demands(cells, 2, 0.1, 3);
  for (const auto& d : demands) {
    CHECK((d.src_cell == 0 || d.src_cell == 3));
    CHECK((d.dst_cell == 0 || d.dst_cell == 3));
  }
  CHECK_THROWS_AS(generate_demands({cells[0], cells[1]}, 1, 0.1, 3), std::invalid_argument);
}

TEST_CASE("cells csv round trip") {
  const auto path = write_temp("lsn_cells_ok.csv",
                               "lat_deg,lon_deg,population,service_available\n"
                               "0.0,0.0,1000000,true\n"
                               "45.5,-73.6,1780000,false\n");
  const auto cells = load_cells(path);
  REQUIRE(cells.size() == 2);
  CHECK(cells[0].population == doctest::Approx(1e6));
  CHECK(cells[0].service_available);
  CHECK_FALSE(cells[1].service_available);
  std::remove(path.c_str());
}

TEST_CASE("header-only file yields an empty list") {
  const auto path =
      write_temp("lsn_cells_empty.csv", "lat_deg,lon_deg,population,service_available\n");
  CHECK(load_cells(path).empty());
  std::remove(path.c_str());
}

TEST_CASE("malformed and duplicate rows are rejected") {
  const auto bad = write_temp("lsn_cells_bad.csv",
                              "lat_deg,lon_deg,population,service_available\n"
                              "0.0,abc,5,true\n");
  CHECK_THROWS_WITH_AS(load_cells(bad), doctest::Contains("line 2"), std::runtime_error);

  const auto dup = write_temp("lsn_cells_dup.csv",
                              "lat_deg,lon_deg,population,service_available\n"
                              "1.0,2.0,5,true\n"
                              "1.0,2.0,9,false\n");
  CHECK_THROWS_WITH_AS(load_cells(dup), doctest::Contains("duplicate"), std::runtime_error);
  std::remove(bad.c_str());
  std::remove(dup.c_str());
}

TEST_CASE("uniform grid stays inside the hot band") {
  const auto cells = uniform_cell_grid(5, 8, 1000.0);
  CHECK(cells.size() == 40);
  for (const auto& c : cells) {
    CHECK(c.lat_deg >= -70.0);
    CHECK(c.lat_deg <= 70.0);
    CHECK(c.population == 1000.0);
  }
}

TEST_CASE("requirements map is symmetric") {
  Requirements req;
  req.r_min = 1;
  req.set_r(3, 1, 4);
  CHECK(req.r_for(1, 3) == 4);
  CHECK(req.r_for(3, 1) == 4);
  CHECK(req.r_for(0, 2) == 1);
  CHECK(req.max_r_for(1, 5) == 4);
  CHECK(req.max_r_for(0, 5) == 1);
}

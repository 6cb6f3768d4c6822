#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lsn/search.hpp"
#include "support/oracle.hpp"

using namespace lsn;

namespace {

const TimeGrid kGrid{60.0, 2};
const LinkBudget kBudget{};
const VisibilityParams kVis{5.0, 80.0};

ConstellationConfig shape(int orbits, int per_orbit, double alt = 550.0) {
  return {53.0, orbits, per_orbit, 0, alt};
}

}  // namespace

TEST_CASE("shrink hand traces") {
  const auto a = shrink(shape(5, 20), 0);
  CHECK(a.num_orbits == 5);
  CHECK(a.sats_per_orbit == 10);

  const auto b = shrink(shape(20, 5), 0);
  CHECK(b.num_orbits == 10);
  CHECK(b.sats_per_orbit == 5);

  CHECK_THROWS_AS(shrink(shape(2, 2), 4), std::invalid_argument);
}

TEST_CASE("shrink always makes strict progress") {
  for (int orbits : {1, 2, 3, 7}) {
    for (int per_orbit : {1, 2, 5, 9}) {
      const int n = orbits * per_orbit;
      if (n <= 1) continue;
      const auto next = shrink(shape(orbits, per_orbit), 1);
      CHECK(next.total_satellites() < n);
      CHECK(next.num_orbits >= 1);
      CHECK(next.sats_per_orbit >= 1);
    }
  }
}

TEST_CASE("expand hand traces") {
  const auto a = expand(shape(5, 20), 200);
  CHECK(a.num_orbits == 7);
  CHECK(a.sats_per_orbit == 20);

  const auto b = expand(shape(20, 5), 200);
  CHECK(b.num_orbits == 20);
  CHECK(b.sats_per_orbit == 7);

  // floors to zero: minimal progress bumps by one unit
  const auto c = expand(shape(1, 1), 2);
  CHECK(c.total_satellites() == 2);
  CHECK(c.num_orbits == 2);  // O <= M branch adds an orbit

  CHECK_THROWS_AS(expand(shape(2, 2), 4), std::invalid_argument);
}

TEST_CASE("phasing is clamped when the shape changes") {
  ConstellationConfig cfg = shape(4, 5);
  cfg.phasing = 17;
  const auto small = shrink(cfg, 1);
  CHECK(small.phasing < small.total_satellites());
  CHECK(small.phasing >= 0);
}

TEST_CASE("survivable bound degenerates to one satellite when r is zero") {
  Requirements req;
  req.r_min = 0;
  const auto bound =
      survivable_bound(shape(6, 6), {{20.0, 0.0, 1.0, true}}, req, kGrid, kVis);
  CHECK(bound.n_min == 1);
  CHECK(bound.coverage_satisfied);
}

TEST_CASE("survivable bound is monotone in r_min") {
  std::vector<Cell> cells{{10.0, 0.0, 1.0, true}, {25.0, 30.0, 1.0, true}};
  const ConstellationConfig tmpl = shape(6, 6, 1600.0);
  int prev = 0;
  for (int r = 1; r <= 2; ++r) {
    Requirements req;
    req.r_min = r;
    const auto bound = survivable_bound(tmpl, cells, req, kGrid, kVis);
    CHECK(bound.n_min >= prev);
    prev = bound.n_min;
  }
}

TEST_CASE("survivable bound flags impossible coverage") {
  // unavailable everywhere: template cannot cover a polar cell with an
  // equatorial one-satellite shell
  Requirements req;
  req.r_min = 1;
  const auto bound =
      survivable_bound({0.001, 1, 1, 0, 550.0}, {{89.0, 0.0, 1.0, true}}, req, kGrid, kVis);
  CHECK_FALSE(bound.coverage_satisfied);
  CHECK(bound.n_min == 1);  // template size
}

TEST_CASE("search on a tiny scenario matches the exhaustive optimum scale") {
  std::vector<Cell> cells{{20.0, 0.0, 1.0, true}, {30.0, 50.0, 1.0, true}};
  std::vector<Demand> demands{{0, 1, 1.0}};
  Requirements req;
  req.r_min = 1;
  req.lambda = 2.0;
  const TimeGrid grid{60.0, 2};
  const ConstellationConfig initial = shape(6, 6, 1600.0);

  const SearchResult result =
      search(initial, cells, demands, req, grid, kBudget, kVis, 20);
  REQUIRE(result.best.has_value());
  CHECK(result.best_n <= initial.total_satellites());
  CHECK(result.best_n == result.best->total_satellites());
  // the winner re-passes the feasibility check
  CHECK(feasibility_check(*result.best, cells, demands, req, grid, kBudget, kVis).feasible);

  const auto optimum = lsn::test::exhaustive_min_constellation(
      initial, cells, demands, req, grid, kBudget, kVis, 36);
  REQUIRE(optimum.has_value());
  CHECK(result.best_n >= optimum->n);
}

TEST_CASE("search respects the iteration limit and records a trace") {
  std::vector<Cell> cells{{20.0, 0.0, 1.0, true}, {30.0, 50.0, 1.0, true}};
  std::vector<Demand> demands{{0, 1, 1.0}};
  Requirements req;
  req.r_min = 1;
  const SearchResult result =
      search(shape(6, 6, 1600.0), cells, demands, req, kGrid, kBudget, kVis, 3);
  CHECK(result.iterations_used <= 3);
  CHECK(result.trace.size() == static_cast<std::size_t>(result.iterations_used));
  for (std::size_t i = 1; i < result.trace.size(); ++i)
    CHECK(result.trace[i].iteration == result.trace[i - 1].iteration + 1);
}

TEST_CASE("infeasible everywhere yields no best") {
  // r=4 from a 2x2 start with nowhere to expand
  std::vector<Cell> cells{{20.0, 0.0, 1.0, true}, {30.0, 50.0, 1.0, true}};
  std::vector<Demand> demands{{0, 1, 1.0}};
  Requirements req;
  req.r_min = 6;
  const SearchResult result =
      search(shape(2, 2), cells, demands, req, kGrid, kBudget, kVis, 8);
  CHECK_FALSE(result.best.has_value());
  CHECK(result.best_n == 0);
  for (const auto& entry : result.trace) CHECK_FALSE(entry.feasible);
}

TEST_CASE("requirement monotonicity trends on a fixed scenario") {
  std::vector<Cell> cells{{20.0, 0.0, 1.0, true}, {30.0, 50.0, 1.0, true}};
  std::vector<Demand> demands{{0, 1, 1.0}};
  const TimeGrid grid{60.0, 2};
  const ConstellationConfig initial = shape(6, 6, 1600.0);

  auto best_n_for = [&](int r, double lambda) {
    Requirements req;
    req.r_min = r;
    req.lambda = lambda;
    const auto result = search(initial, cells, demands, req, grid, kBudget, kVis, 20);
    return result.best ? result.best_n : initial.total_satellites() + 1;
  };

  CHECK(best_n_for(1, 2.0) <= best_n_for(2, 2.0));
  CHECK(best_n_for(1, 3.0) <= best_n_for(1, 1.5));
}

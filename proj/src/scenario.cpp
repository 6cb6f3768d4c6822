#include "lsn/scenario.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace lsn {

namespace {

using nlohmann::json;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("config parse error in " + path + ": " + e.what());
  }
  return doc;
}

}  // namespace

Scenario load_scenario(const std::string& path, const ScenarioOverrides& overrides) {
  const json doc = load_json(path);
  Scenario sc;

  try {
    const auto& cons = doc.at("constellation");
    sc.constellation.inclination_deg = cons.at("inc_deg").get<double>();
    sc.constellation.num_orbits = cons.at("orbits").get<int>();
    sc.constellation.sats_per_orbit = cons.at("sats_per_orbit").get<int>();
    sc.constellation.phasing = cons.value("phasing", 0);
    sc.constellation.altitude_km = cons.at("altitude_km").get<double>();
    sc.constellation.validate();

    const auto& grid = doc.at("grid");
    sc.grid.slot_duration_s = grid.value("slot_duration_s", 60.0);
    if (overrides.num_slots) {
      sc.grid.num_slots = *overrides.num_slots;
    } else if (grid.contains("num_slots")) {
      sc.grid.num_slots = grid.at("num_slots").get<int>();
    } else {
      // Default horizon: one sidereal day, after which the ground-track
      // geometry repeats for the epoch-aligned model.
      sc.grid.num_slots =
          static_cast<int>(std::ceil(kSiderealDayS / sc.grid.slot_duration_s));
    }
    sc.grid.validate();

    if (doc.contains("budget")) {
      const auto& b = doc.at("budget");
      sc.budget.isl_capacity_gbps = b.value("isl_capacity_gbps", 20.0);
      sc.budget.gsl_capacity_gbps = b.value("gsl_capacity_gbps", 4.0);
      sc.budget.n_isl = b.value("n_isl", 4);
      sc.budget.sat_max_uplink_gbps = b.value("sat_max_uplink_gbps", 20.0);
      sc.budget.sat_max_downlink_gbps = b.value("sat_max_downlink_gbps", 20.0);
    }
    sc.budget.validate();

    if (doc.contains("geometry")) {
      const auto& g = doc.at("geometry");
      sc.vis.min_elevation_deg = g.value("min_elevation_deg", 25.0);
      sc.vis.min_los_altitude_km = g.value("min_los_altitude_km", 80.0);
    }

    if (doc.contains("cells_file")) {
      std::filesystem::path cells_path = doc.at("cells_file").get<std::string>();
      if (cells_path.is_relative())
        cells_path = std::filesystem::path(path).parent_path() / cells_path;
      sc.cells = load_cells(cells_path.string());
    } else if (doc.contains("cells")) {
      for (const auto& c : doc.at("cells")) {
        sc.cells.push_back({c.at("lat_deg").get<double>(), c.at("lon_deg").get<double>(),
                            c.value("population", 1.0), c.value("service_available", true)});
      }
    } else {
      throw std::runtime_error("config needs cells_file or an inline cells list");
    }

    sc.seed = overrides.seed ? *overrides.seed : doc.value("seed", std::uint64_t{0});

    const auto& dem = doc.at("demands");
    if (dem.contains("explicit")) {
      for (const auto& d : dem.at("explicit")) {
        sc.demands.push_back({d.at("src").get<int>(), d.at("dst").get<int>(),
                              d.at("size_gbps").get<double>()});
      }
    } else {
      const std::uint64_t seed = dem.value("seed", sc.seed);
      sc.demands = generate_demands(sc.cells, dem.at("pair_count").get<int>(),
                                    dem.at("rate_per_capita").get<double>(), seed);
    }

    if (doc.contains("requirements")) {
      const auto& req = doc.at("requirements");
      sc.requirements.r_min = req.value("r_min", 1);
      sc.requirements.lambda = req.value("lambda", 1.0);
      if (req.contains("r_pairs")) {
        for (const auto& p : req.at("r_pairs"))
          sc.requirements.set_r(p.at("a").get<int>(), p.at("b").get<int>(),
                                p.at("r").get<int>());
      }
    }
    sc.requirements.validate();

    if (doc.contains("search")) sc.i_limit = doc.at("search").value("i_limit", 20);
    if (overrides.i_limit) sc.i_limit = *overrides.i_limit;
    if (sc.i_limit < 1) throw std::runtime_error("i_limit must be at least 1");
  } catch (const json::exception& e) {
    throw std::runtime_error("invalid config " + path + ": " + e.what());
  }
  return sc;
}

std::string search_result_json(const SearchResult& result) {
  json doc;
  if (result.best) {
    doc["best"] = {{"inc_deg", result.best->inclination_deg},
                   {"orbits", result.best->num_orbits},
                   {"sats_per_orbit", result.best->sats_per_orbit},
                   {"phasing", result.best->phasing},
                   {"altitude_km", result.best->altitude_km}};
  } else {
    doc["best"] = nullptr;
  }
  doc["best_n"] = result.best_n;
  doc["iterations_used"] = result.iterations_used;
  doc["trace"] = json::array();
  for (const auto& entry : result.trace) {
    doc["trace"].push_back({{"iter", entry.iteration},
                            {"orbits", entry.orbits},
                            {"sats_per_orbit", entry.sats_per_orbit},
                            {"n", entry.n},
                            {"feasible", entry.feasible}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace lsn

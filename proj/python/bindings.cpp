#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lsn/casestudy.hpp"
#include "lsn/resilience.hpp"
#include "lsn/scenario.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "LEO constellation design engine: time-varying topology, "
              "hop-bounded disjoint-path feasibility and minimum-satellite search";

  py::class_<lsn::Vec3>(mod, "Vec3")
      .def(py::init<double, double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0,
           py::arg("z") = 0.0)
      .def_readwrite("x", &lsn::Vec3::x)
      .def_readwrite("y", &lsn::Vec3::y)
      .def_readwrite("z", &lsn::Vec3::z)
      .def("norm", &lsn::Vec3::norm)
      .def("__repr__", [](const lsn::Vec3& v) {
        return "Vec3(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ", " +
               std::to_string(v.z) + ")";
      });

  py::class_<lsn::ConstellationConfig>(mod, "ConstellationConfig")
      .def(py::init([](double inc, int orbits, int per_orbit, int phasing, double alt) {
             lsn::ConstellationConfig cfg{inc, orbits, per_orbit, phasing, alt};
             cfg.validate();
             return cfg;
           }),
           py::arg("inclination_deg"), py::arg("num_orbits"), py::arg("sats_per_orbit"),
           py::arg("phasing") = 0, py::arg("altitude_km") = 550.0)
      .def_readwrite("inclination_deg", &lsn::ConstellationConfig::inclination_deg)
      .def_readwrite("num_orbits", &lsn::ConstellationConfig::num_orbits)
      .def_readwrite("sats_per_orbit", &lsn::ConstellationConfig::sats_per_orbit)
      .def_readwrite("phasing", &lsn::ConstellationConfig::phasing)
      .def_readwrite("altitude_km", &lsn::ConstellationConfig::altitude_km)
      .def("total_satellites", &lsn::ConstellationConfig::total_satellites);

  py::class_<lsn::SatelliteId>(mod, "SatelliteId")
      .def(py::init<int, int>(), py::arg("orbit"), py::arg("slot"))
      .def_readwrite("orbit", &lsn::SatelliteId::orbit)
      .def_readwrite("slot", &lsn::SatelliteId::slot);

  py::class_<lsn::Cell>(mod, "Cell")
      .def(py::init<double, double, double, bool>(), py::arg("lat_deg"), py::arg("lon_deg"),
           py::arg("population") = 1.0, py::arg("service_available") = true)
      .def_readwrite("lat_deg", &lsn::Cell::lat_deg)
      .def_readwrite("lon_deg", &lsn::Cell::lon_deg)
      .def_readwrite("population", &lsn::Cell::population)
      .def_readwrite("service_available", &lsn::Cell::service_available);

  py::class_<lsn::TimeGrid>(mod, "TimeGrid")
      .def(py::init<double, int>(), py::arg("slot_duration_s") = 60.0,
           py::arg("num_slots") = 1)
      .def_readwrite("slot_duration_s", &lsn::TimeGrid::slot_duration_s)
      .def_readwrite("num_slots", &lsn::TimeGrid::num_slots);

  py::class_<lsn::VisibilityParams>(mod, "VisibilityParams")
      .def(py::init<double, double>(), py::arg("min_elevation_deg") = 25.0,
           py::arg("min_los_altitude_km") = 80.0)
      .def_readwrite("min_elevation_deg", &lsn::VisibilityParams::min_elevation_deg)
      .def_readwrite("min_los_altitude_km", &lsn::VisibilityParams::min_los_altitude_km);

  py::class_<lsn::LinkBudget>(mod, "LinkBudget")
      .def(py::init<>())
      .def_readwrite("isl_capacity_gbps", &lsn::LinkBudget::isl_capacity_gbps)
      .def_readwrite("gsl_capacity_gbps", &lsn::LinkBudget::gsl_capacity_gbps)
      .def_readwrite("n_isl", &lsn::LinkBudget::n_isl)
      .def_readwrite("sat_max_uplink_gbps", &lsn::LinkBudget::sat_max_uplink_gbps)
      .def_readwrite("sat_max_downlink_gbps", &lsn::LinkBudget::sat_max_downlink_gbps);

  py::class_<lsn::Demand>(mod, "Demand")
      .def(py::init<int, int, double>(), py::arg("src_cell"), py::arg("dst_cell"),
           py::arg("size_gbps"))
      .def_readwrite("src_cell", &lsn::Demand::src_cell)
      .def_readwrite("dst_cell", &lsn::Demand::dst_cell)
      .def_readwrite("size_gbps", &lsn::Demand::size_gbps);

  py::class_<lsn::Requirements>(mod, "Requirements")
      .def(py::init([](int r_min, double lambda) {
             lsn::Requirements req;
             req.r_min = r_min;
             req.lambda = lambda;
             req.validate();
             return req;
           }),
           py::arg("r_min") = 1, py::arg("lambda_") = 1.0)
      .def_readwrite("r_min", &lsn::Requirements::r_min)
      .def_readwrite("lambda_", &lsn::Requirements::lambda)
      .def("set_r", &lsn::Requirements::set_r)
      .def("r_for", &lsn::Requirements::r_for);

  py::class_<lsn::Snapshot>(mod, "Snapshot")
      .def_readonly("slot", &lsn::Snapshot::slot)
      .def("num_sats", &lsn::Snapshot::num_sats)
      .def("num_nodes", &lsn::Snapshot::num_nodes)
      .def("cell_node", &lsn::Snapshot::cell_node)
      .def("edge_list", &lsn::Snapshot::edge_list)
      .def_property_readonly("num_isl_edges",
                             [](const lsn::Snapshot& s) { return s.isl_edges.size(); })
      .def_property_readonly("num_gsl_edges",
                             [](const lsn::Snapshot& s) { return s.gsl_edges.size(); });

  py::class_<lsn::SimpleGraph>(mod, "SimpleGraph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return lsn::SimpleGraph{n, edges};
           }),
           py::arg("n"), py::arg("edges"))
      .def_readwrite("n", &lsn::SimpleGraph::n)
      .def_readwrite("edges", &lsn::SimpleGraph::edges);

  py::enum_<lsn::FailureKind>(mod, "FailureKind")
      .value("none", lsn::FailureKind::none)
      .value("survivability", lsn::FailureKind::survivability)
      .value("uplink_capacity", lsn::FailureKind::uplink_capacity)
      .value("downlink_capacity", lsn::FailureKind::downlink_capacity);

  py::class_<lsn::FeasibilityReport>(mod, "FeasibilityReport")
      .def_readonly("feasible", &lsn::FeasibilityReport::feasible)
      .def_readonly("failing_slot", &lsn::FeasibilityReport::failing_slot)
      .def_readonly("failing_demand", &lsn::FeasibilityReport::failing_demand)
      .def_readonly("kind", &lsn::FeasibilityReport::kind)
      .def_readonly("achieved_r", &lsn::FeasibilityReport::achieved_r);

  py::class_<lsn::TraceEntry>(mod, "TraceEntry")
      .def_readonly("iteration", &lsn::TraceEntry::iteration)
      .def_readonly("orbits", &lsn::TraceEntry::orbits)
      .def_readonly("sats_per_orbit", &lsn::TraceEntry::sats_per_orbit)
      .def_readonly("n", &lsn::TraceEntry::n)
      .def_readonly("feasible", &lsn::TraceEntry::feasible);

  py::class_<lsn::SearchResult>(mod, "SearchResult")
      .def_readonly("best", &lsn::SearchResult::best)
      .def_readonly("best_n", &lsn::SearchResult::best_n)
      .def_readonly("trace", &lsn::SearchResult::trace)
      .def_readonly("iterations_used", &lsn::SearchResult::iterations_used);

  py::enum_<lsn::FailureModel>(mod, "FailureModel")
      .value("solar_storm", lsn::FailureModel::solar_storm)
      .value("random_fail", lsn::FailureModel::random_fail);

  py::class_<lsn::FailureScenario>(mod, "FailureScenario")
      .def(py::init<>())
      .def_readwrite("model", &lsn::FailureScenario::model)
      .def_readwrite("storm_epicenter", &lsn::FailureScenario::storm_epicenter)
      .def_readwrite("storm_kill_count", &lsn::FailureScenario::storm_kill_count)
      .def_readwrite("random_fail_prob", &lsn::FailureScenario::random_fail_prob)
      .def_readwrite("rng_seed", &lsn::FailureScenario::rng_seed);

  mod.def("orbit_period_s", &lsn::orbit_period_s, py::arg("altitude_km"));
  mod.def("satellite_position", &lsn::satellite_position, py::arg("config"), py::arg("sat"),
          py::arg("t"), py::arg("grid"));
  mod.def("cell_position", &lsn::cell_position, py::arg("cell"), py::arg("t"),
          py::arg("grid"));
  mod.def("gsl_visible", &lsn::gsl_visible, py::arg("cell"), py::arg("sat"), py::arg("t"),
          py::arg("config"), py::arg("grid"), py::arg("min_elevation_deg"));
  mod.def("isl_visible", &lsn::isl_visible, py::arg("sat_a"), py::arg("sat_b"), py::arg("t"),
          py::arg("config"), py::arg("grid"), py::arg("min_los_altitude_km"));
  mod.def("build_snapshot", &lsn::build_snapshot, py::arg("config"), py::arg("cells"),
          py::arg("t"), py::arg("grid"), py::arg("budget"),
          py::arg("vis") = lsn::VisibilityParams{});
  mod.def("shortest_hops", &lsn::shortest_hops, py::arg("snapshot"), py::arg("node_a"),
          py::arg("node_b"));
  mod.def("generate_demands", &lsn::generate_demands, py::arg("cells"),
          py::arg("pair_count"), py::arg("rate_per_capita"), py::arg("rng_seed"));
  mod.def("load_cells", &lsn::load_cells, py::arg("path"));
  mod.def("uniform_cell_grid", &lsn::uniform_cell_grid, py::arg("lat_steps"),
          py::arg("lon_steps"), py::arg("population"));
  mod.def("max_disjoint_paths", &lsn::max_disjoint_paths, py::arg("graph"), py::arg("src"),
          py::arg("dst"), py::arg("hop_bound"));
  mod.def("classical_max_flow", &lsn::classical_max_flow, py::arg("graph"), py::arg("src"),
          py::arg("dst"));
  mod.def(
      "exact_disjoint_paths",
      [](const lsn::SimpleGraph& g, int src, int dst, int hop_bound) {
        return lsn::exact_disjoint_paths(g, src, dst, hop_bound);
      },
      py::arg("graph"), py::arg("src"), py::arg("dst"), py::arg("hop_bound"));
  mod.def("feasibility_check", &lsn::feasibility_check, py::arg("config"), py::arg("cells"),
          py::arg("demands"), py::arg("requirements"), py::arg("grid"), py::arg("budget"),
          py::arg("vis") = lsn::VisibilityParams{});
  mod.def("shrink", &lsn::shrink, py::arg("config"), py::arg("n_min"));
  mod.def("expand", &lsn::expand, py::arg("config"), py::arg("n_max"));
  mod.def("search", &lsn::search, py::arg("initial"), py::arg("cells"), py::arg("demands"),
          py::arg("requirements"), py::arg("grid"), py::arg("budget"),
          py::arg("vis") = lsn::VisibilityParams{}, py::arg("i_limit") = 20);
  mod.def("apply_failures", &lsn::apply_failures, py::arg("snapshot"), py::arg("scenario"));
  mod.def("reachability_ratio", &lsn::reachability_ratio, py::arg("damaged"),
          py::arg("intact"), py::arg("demands"), py::arg("lambda_"));
  mod.def(
      "decay_projection",
      [](int n0, double aar, int years) {
        std::vector<std::pair<int, int>> out;
        for (const auto& p : lsn::decay_projection(n0, aar, years))
          out.emplace_back(p.year, p.satellites);
        return out;
      },
      py::arg("n0"), py::arg("aar"), py::arg("years"));
}

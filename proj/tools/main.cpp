#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lsn/casestudy.hpp"
#include "lsn/resilience.hpp"
#include "lsn/scenario.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> slots;
  std::optional<int> i_limit;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "scenario config (JSON)")->required();
  cmd->add_option("--out", opts.out_path, "output file")->required();
  cmd->add_option("--seed", opts.seed, "override the scenario rng seed");
  cmd->add_option("--slots", opts.slots, "override the number of time slots");
  cmd->add_option("--i-limit", opts.i_limit, "override the search iteration limit");
}

lsn::Scenario load(const CommonOpts& opts) {
  return lsn::load_scenario(opts.config_path, {opts.seed, opts.slots, opts.i_limit});
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write output: " + path);
  out << content;
}

int run_optimize(const CommonOpts& opts) {
  const lsn::Scenario sc = load(opts);
  std::cerr << "optimize: initial " << sc.constellation.num_orbits << "x"
            << sc.constellation.sats_per_orbit << ", " << sc.demands.size()
            << " demands, " << sc.grid.num_slots << " slots\n";
  const lsn::SearchResult result =
      lsn::search(sc.constellation, sc.cells, sc.demands, sc.requirements, sc.grid,
                  sc.budget, sc.vis, sc.i_limit);
  write_file(opts.out_path, lsn::search_result_json(result));
  if (!result.best) {
    std::cerr << "optimize: no feasible configuration found\n";
    return 2;
  }
  std::cerr << "optimize: best N = " << result.best_n << " after "
            << result.iterations_used << " iterations\n";
  return 0;
}

int run_sweep(const CommonOpts& opts, const std::string& param,
              const std::vector<double>& values, const std::string& param2,
              const std::vector<double>& values2) {
  static const std::vector<std::string> known = {"r_min", "capacity", "lambda",
                                                 "altitude", "inclination"};
  auto recognized = [&](const std::string& p) {
    return std::find(known.begin(), known.end(), p) != known.end();
  };
  if (!recognized(param) || values.empty()) {
    std::cerr << "sweep: unknown or empty parameter axis '" << param << "'\n";
    return 1;
  }
  if (!param2.empty() && (!recognized(param2) || values2.empty())) {
    std::cerr << "sweep: unknown or empty parameter axis '" << param2 << "'\n";
    return 1;
  }

  const lsn::Scenario base = load(opts);
  auto apply = [](lsn::Scenario sc, const std::string& p, double v) {
    if (p == "r_min") {
      sc.requirements.r_min = static_cast<int>(std::llround(v));
    } else if (p == "capacity") {
      for (auto& d : sc.demands) d.size_gbps *= v;
    } else if (p == "lambda") {
      sc.requirements.lambda = v;
    } else if (p == "altitude") {
      sc.constellation.altitude_km = v;
    } else {
      sc.constellation.inclination_deg = v;
    }
    return sc;
  };

  std::ostringstream csv;
  csv << param;
  if (!param2.empty()) csv << "," << param2;
  csv << ",best_n,iterations,feasible\n";

  const std::vector<double> inner = param2.empty() ? std::vector<double>{0.0} : values2;
  for (double v : values) {
    for (double v2 : inner) {
      lsn::Scenario sc = apply(base, param, v);
      if (!param2.empty()) sc = apply(sc, param2, v2);
      std::cerr << "sweep: " << param << "=" << v;
      if (!param2.empty()) std::cerr << " " << param2 << "=" << v2;
      std::cerr << "\n";
      const lsn::SearchResult result =
          lsn::search(sc.constellation, sc.cells, sc.demands, sc.requirements, sc.grid,
                      sc.budget, sc.vis, sc.i_limit);
      csv << v;
      if (!param2.empty()) csv << "," << v2;
      csv << "," << result.best_n << "," << result.iterations_used << ","
          << (result.best ? 1 : 0) << "\n";
    }
  }
  write_file(opts.out_path, csv.str());
  return 0;
}

int run_resilience(const CommonOpts& opts, const std::string& model,
                   const std::vector<double>& severities, int trials) {
  if (severities.empty() || trials < 1) {
    std::cerr << "resilience: need a severity list and at least one trial\n";
    return 1;
  }
  lsn::FailureModel fm;
  if (model == "solar_storm") {
    fm = lsn::FailureModel::solar_storm;
  } else if (model == "random") {
    fm = lsn::FailureModel::random_fail;
  } else {
    std::cerr << "resilience: unknown failure model '" << model << "'\n";
    return 1;
  }

  const lsn::Scenario sc = load(opts);
  const lsn::Snapshot intact =
      lsn::build_snapshot(sc.constellation, sc.cells, 0, sc.grid, sc.budget, sc.vis);

  std::ostringstream csv;
  csv << "severity,mean_reachability,stddev,trials\n";
  for (double severity : severities) {
    std::vector<double> ratios;
    for (int trial = 0; trial < trials; ++trial) {
      lsn::FailureScenario fs;
      fs.model = fm;
      fs.rng_seed = sc.seed + static_cast<std::uint64_t>(trial);
      if (fm == lsn::FailureModel::solar_storm) {
        fs.storm_kill_count = static_cast<int>(std::llround(severity));
        // random epicenter per trial so the storm mean varies across seeds
        std::mt19937_64 rng(fs.rng_seed);
        const int sat = static_cast<int>(rng() % intact.num_sats());
        fs.storm_epicenter = {sat / sc.constellation.sats_per_orbit,
                              sat % sc.constellation.sats_per_orbit};
      } else {
        fs.random_fail_prob = severity;
      }
      const lsn::Snapshot damaged = lsn::apply_failures(intact, fs);
      ratios.push_back(
          lsn::reachability_ratio(damaged, intact, sc.demands, sc.requirements.lambda));
    }
    double mean = 0.0;
    for (double r : ratios) mean += r;
    mean /= ratios.size();
    double var = 0.0;
    for (double r : ratios) var += (r - mean) * (r - mean);
    var /= ratios.size();
    csv << severity << "," << mean << "," << std::sqrt(var) << "," << trials << "\n";
  }
  write_file(opts.out_path, csv.str());
  return 0;
}

int run_casestudy(const CommonOpts& opts, const std::string& history_path, double aar,
                  int years) {
  const lsn::Scenario sc = load(opts);
  const lsn::LaunchHistory history = lsn::load_launch_history(history_path);

  lsn::CaseStudyScenario cs;
  cs.tmpl = sc.constellation;
  cs.cells = sc.cells;
  cs.demands = sc.demands;
  cs.requirements = sc.requirements;
  cs.grid = sc.grid;
  cs.budget = sc.budget;
  cs.vis = sc.vis;
  cs.i_limit = sc.i_limit;

  const auto curve = lsn::deployment_curve(history, cs);
  const int n0 = history.entries.back().cumulative_satellites;
  const auto decay = lsn::decay_projection(n0, aar, years);

  json doc;
  doc["deployment_curve"] = json::array();
  for (const auto& p : curve)
    doc["deployment_curve"].push_back(
        {{"date", p.date}, {"satellites", p.satellites}, {"r_min", p.r_min}});
  doc["decay_projection"] = json::array();
  for (const auto& p : decay)
    doc["decay_projection"].push_back({{"year", p.year}, {"satellites", p.satellites}});
  write_file(opts.out_path, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LEO constellation design: minimum-satellite search under "
               "survivability, capacity and delay requirements"};
  app.require_subcommand(1);

  CommonOpts optimize_opts;
  auto* optimize = app.add_subcommand("optimize", "find the minimum feasible constellation");
  add_common(optimize, optimize_opts);

  CommonOpts sweep_opts;
  std::string sweep_param, sweep_param2;
  std::vector<double> sweep_values, sweep_values2;
  auto* sweep = app.add_subcommand("sweep", "optimize across a parameter axis");
  add_common(sweep, sweep_opts);
  sweep->add_option("--param", sweep_param, "r_min|capacity|lambda|altitude|inclination")
      ->required();
  sweep->add_option("--values", sweep_values, "parameter values")->delimiter(',');
  sweep->add_option("--param2", sweep_param2, "optional second axis (cross product)");
  sweep->add_option("--values2", sweep_values2, "second-axis values")->delimiter(',');

  CommonOpts res_opts;
  std::string res_model = "random";
  std::vector<double> res_severities;
  int res_trials = 30;
  auto* resilience = app.add_subcommand("resilience", "failure injection and reachability");
  add_common(resilience, res_opts);
  resilience->add_option("--model", res_model, "solar_storm|random");
  resilience->add_option("--severities", res_severities,
                         "kill counts (storm) or probabilities (random)")
      ->delimiter(',');
  resilience->add_option("--trials", res_trials, "trials per severity");

  CommonOpts case_opts;
  std::string history_path;
  double aar = 0.026;
  int years = 3;
  auto* casestudy = app.add_subcommand("casestudy", "deployment curve and decay projection");
  add_common(casestudy, case_opts);
  casestudy->add_option("--history", history_path, "launch-history CSV")->required();
  casestudy->add_option("--aar", aar, "annual decay rate");
  casestudy->add_option("--years", years, "projection horizon in years");

  CLI11_PARSE(app, argc, argv);

  try {
    if (optimize->parsed()) return run_optimize(optimize_opts);
    if (sweep->parsed())
      return run_sweep(sweep_opts, sweep_param, sweep_values, sweep_param2, sweep_values2);
    if (resilience->parsed())
      return run_resilience(res_opts, res_model, res_severities, res_trials);
    if (casestudy->parsed()) return run_casestudy(case_opts, history_path, aar, years);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lsn/orbits.hpp"

namespace lsn {

struct Demand {
  int src_cell = 0;
  int dst_cell = 0;
  double size_gbps = 0.0;

  bool operator==(const Demand&) const = default;
};

/// Per-pair survivability plus the hop-stretch factor. r lookups fall back to
/// r_min; overrides are stored symmetrically.
struct Requirements {
  int r_min = 1;
  double lambda = 1.0;
  std::map<std::pair<int, int>, int> r_overrides;

  int r_for(int cell_a, int cell_b) const;
  void set_r(int cell_a, int cell_b, int r);
  int max_r_for(int cell, int num_cells) const;
  void validate() const;
};

std::vector<Demand> generate_demands(const std::vector<Cell>& cells, int pair_count,
                                     double rate_per_capita, std::uint64_t rng_seed);

/// Cell CSV: header `lat_deg,lon_deg,population,service_available`.
std::vector<Cell> load_cells(const std::string& path);

/// Uniform lat/lon grid inside the +-70 degree band, for synthetic scenarios.
std::vector<Cell> uniform_cell_grid(int lat_steps, int lon_steps, double population);

}  // namespace lsn

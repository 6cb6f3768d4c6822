#include "lsn/demands.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lsn {

int Requirements::r_for(int cell_a, int cell_b) const {
  auto key = std::minmax(cell_a, cell_b);
  auto it = r_overrides.find({key.first, key.second});
  return it == r_overrides.end() ? r_min : it->second;
}

void Requirements::set_r(int cell_a, int cell_b, int r) {
  auto key = std::minmax(cell_a, cell_b);
  r_overrides[{key.first, key.second}] = r;
}

int Requirements::max_r_for(int cell, int num_cells) const {
  int r = r_min;
  for (int other = 0; other < num_cells; ++other) {
    if (other != cell) r = std::max(r, r_for(cell, other));
  }
  return r;
}

void Requirements::validate() const {
  if (r_min < 0) throw std::invalid_argument("r_min must be non-negative");
  if (lambda < 1.0) throw std::invalid_argument("lambda must be at least 1");
  for (const auto& [pair, r] : r_overrides)
    if (r < 0) throw std::invalid_argument("per-pair r must be non-negative");
}

std::vector<Demand> generate_demands(const std::vector<Cell>& cells, int pair_count,
                                     double rate_per_capita, std::uint64_t rng_seed) {
  if (pair_count < 1) throw std::invalid_argument("pair_count must be positive");
  if (rate_per_capita <= 0.0) throw std::invalid_argument("rate_per_capita must be positive");

  std::vector<int> eligible;
  for (int c = 0; c < static_cast<int>(cells.size()); ++c) {
    if (cells[c].service_available && cells[c].population > 0.0) eligible.push_back(c);
  }
  if (eligible.size() < 2)
    throw std::invalid_argument("need at least two service-available cells with population");

  const std::size_t max_pairs = eligible.size() * (eligible.size() - 1);
  if (static_cast<std::size_t>(pair_count) > max_pairs)
    throw std::invalid_argument("pair_count exceeds the number of distinct cell pairs");

  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
  std::set<std::pair<int, int>> seen;
  std::vector<Demand> demands;
  while (demands.size() < static_cast<std::size_t>(pair_count)) {
    const int src = eligible[pick(rng)];
    const int dst = eligible[pick(rng)];
    if (src == dst || !seen.emplace(src, dst).second) continue;
    demands.push_back({src, dst, rate_per_capita * cells[src].population});
  }
  return demands;
}

namespace {

bool parse_bool(const std::string& token, int line_no) {
  if (token == "true") return true;
  if (token == "false") return false;
  throw std::runtime_error("cells csv line " + std::to_string(line_no) +
                           ": service_available must be true or false");
}

}  // namespace

std::vector<Cell> load_cells(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cells file: " + path);

  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("cells file is empty: " + path);

  std::vector<Cell> cells;
  std::set<std::pair<double, double>> seen;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string lat_s, lon_s, pop_s, avail_s;
    if (!std::getline(row, lat_s, ',') || !std::getline(row, lon_s, ',') ||
        !std::getline(row, pop_s, ',') || !std::getline(row, avail_s))
      throw std::runtime_error("cells csv line " + std::to_string(line_no) +
                               ": expected 4 comma-separated fields");
    Cell cell;
    try {
      cell.lat_deg = std::stod(lat_s);
      cell.lon_deg = std::stod(lon_s);
      cell.population = std::stod(pop_s);
    } catch (const std::exception&) {
      throw std::runtime_error("cells csv line " + std::to_string(line_no) +
                               ": malformed numeric field");
    }
    // trim a trailing \r from CRLF files
    while (!avail_s.empty() && (avail_s.back() == '\r' || avail_s.back() == ' '))
      avail_s.pop_back();
    cell.service_available = parse_bool(avail_s, line_no);
    if (cell.lat_deg < -90.0 || cell.lat_deg > 90.0)
      throw std::runtime_error("cells csv line " + std::to_string(line_no) +
                               ": latitude out of range");
    if (cell.population < 0.0)
      throw std::runtime_error("cells csv line " + std::to_string(line_no) +
                               ": population must be non-negative");
    if (!seen.emplace(cell.lat_deg, cell.lon_deg).second)
      throw std::runtime_error("cells csv line " + std::to_string(line_no) +
                               ": duplicate (lat, lon) cell");
    cells.push_back(cell);
  }
  return cells;
}

std::vector<Cell> uniform_cell_grid(int lat_steps, int lon_steps, double population) {
  if (lat_steps < 1 || lon_steps < 1)
    throw std::invalid_argument("grid steps must be positive");
  std::vector<Cell> cells;
  for (int i = 0; i < lat_steps; ++i) {
    const double lat = lat_steps == 1 ? 0.0 : -70.0 + 140.0 * i / (lat_steps - 1);
    for (int j = 0; j < lon_steps; ++j) {
      const double lon = -180.0 + 360.0 * j / lon_steps;
      cells.push_back({lat, lon, population, true});
    }
  }
  return cells;
}

}  // namespace lsn

#include "lsn/orbits.hpp"

#include <stdexcept>

namespace lsn {

void ConstellationConfig::validate() const {
  if (num_orbits < 1 || sats_per_orbit < 1)
    throw std::invalid_argument("constellation needs at least one orbit and one satellite per orbit");
  if (phasing < 0 || phasing >= total_satellites())
    throw std::invalid_argument("phasing must lie in [0, O*M)");
  if (inclination_deg <= 0.0 || inclination_deg > 180.0)
    throw std::invalid_argument("inclination must lie in (0, 180]");
  if (altitude_km <= 0.0)
    throw std::invalid_argument("altitude must be positive");
}

void TimeGrid::validate() const {
  if (slot_duration_s <= 0.0) throw std::invalid_argument("slot duration must be positive");
  if (num_slots < 1) throw std::invalid_argument("need at least one time slot");
}

double orbit_period_s(double altitude_km) {
  const double a = kEarthRadiusKm + altitude_km;
  return 2.0 * kPi * std::sqrt(a * a * a / kMuEarthKm3S2);
}

namespace {

void check_sat(const ConstellationConfig& config, const SatelliteId& sat) {
  if (sat.orbit < 0 || sat.orbit >= config.num_orbits || sat.slot < 0 ||
      sat.slot >= config.sats_per_orbit)
    throw std::invalid_argument("satellite index out of range for constellation");
}

}  // namespace

Vec3 satellite_position(const ConstellationConfig& config, const SatelliteId& sat,
                        int t, const TimeGrid& grid) {
  check_sat(config, sat);
  const double a = kEarthRadiusKm + config.altitude_km;
  const double mean_motion = std::sqrt(kMuEarthKm3S2 / (a * a * a));  // rad/s
  const int total = config.total_satellites();

  const double raan = 2.0 * kPi * sat.orbit / config.num_orbits;
  const double anomaly0 = 2.0 * kPi * sat.slot / config.sats_per_orbit +
                          2.0 * kPi * config.phasing * sat.orbit / total;
  const double u = anomaly0 + mean_motion * (t * grid.slot_duration_s);
  const double inc = deg2rad(config.inclination_deg);

  // In-plane point, tilted by inclination about x, then rotated by RAAN about z.
  const double xp = a * std::cos(u);
  const double yp = a * std::sin(u);
  const double xi = xp;
  const double yi = yp * std::cos(inc);
  const double zi = yp * std::sin(inc);
  return {xi * std::cos(raan) - yi * std::sin(raan),
          xi * std::sin(raan) + yi * std::cos(raan), zi};
}

Vec3 cell_position(const Cell& cell, int t, const TimeGrid& grid) {
  if (cell.lat_deg < -90.0 || cell.lat_deg > 90.0)
    throw std::invalid_argument("latitude out of range");
  const double omega = 2.0 * kPi / kSiderealDayS;
  const double lat = deg2rad(cell.lat_deg);
  const double lon = deg2rad(cell.lon_deg) + omega * (t * grid.slot_duration_s);
  return {kEarthRadiusKm * std::cos(lat) * std::cos(lon),
          kEarthRadiusKm * std::cos(lat) * std::sin(lon),
          kEarthRadiusKm * std::sin(lat)};
}

bool gsl_visible(const Cell& cell, const SatelliteId& sat, int t,
                 const ConstellationConfig& config, const TimeGrid& grid,
                 double min_elevation_deg) {
  const Vec3 c = cell_position(cell, t, grid);
  const Vec3 s = satellite_position(config, sat, t, grid);
  const Vec3 to_sat = s - c;
  const double elevation = std::asin(to_sat.normalized().dot(c.normalized()));
  return elevation >= deg2rad(min_elevation_deg);
}

bool isl_visible(const SatelliteId& sat_a, const SatelliteId& sat_b, int t,
                 const ConstellationConfig& config, const TimeGrid& grid,
                 double min_los_altitude_km) {
  if (sat_a == sat_b) throw std::invalid_argument("isl_visible needs two distinct satellites");
  const Vec3 p1 = satellite_position(config, sat_a, t, grid);
  const Vec3 p2 = satellite_position(config, sat_b, t, grid);
  const Vec3 d = p2 - p1;
  const double dd = d.dot(d);
  if (dd == 0.0) return true;  // coincident positions, segment degenerate
  const double s = -p1.dot(d) / dd;
  if (s <= 0.0 || s >= 1.0) return true;  // closest approach outside the segment
  const double closest = (p1 + d * s).norm();
  return closest >= kEarthRadiusKm + min_los_altitude_km;
}

}  // namespace lsn

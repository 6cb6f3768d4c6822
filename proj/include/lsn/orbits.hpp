#pragma once

#include "lsn/geometry.hpp"

namespace lsn {

/// Walker Delta shell: O evenly spaced circular orbits at one inclination and
/// altitude, M evenly spaced satellites per orbit, inter-plane phasing H.
struct ConstellationConfig {
  double inclination_deg = 53.0;
  int num_orbits = 1;
  int sats_per_orbit = 1;
  int phasing = 0;
  double altitude_km = 550.0;

  int total_satellites() const { return num_orbits * sats_per_orbit; }
  void validate() const;
};

struct SatelliteId {
  int orbit = 0;
  int slot = 0;

  bool operator==(const SatelliteId&) const = default;
};

/// Aggregated terrestrial service area, pinned to a lat/lon point.
struct Cell {
  double lat_deg = 0.0;
  double lon_deg = 0.0;
  double population = 0.0;
  bool service_available = true;
};

struct TimeGrid {
  double slot_duration_s = 60.0;
  int num_slots = 1;

  void validate() const;
};

struct VisibilityParams {
  double min_elevation_deg = 25.0;
  double min_los_altitude_km = 80.0;
};

double orbit_period_s(double altitude_km);

/// Inertial position of a satellite at slot t. Circular two-body orbit; at the
/// epoch orbit 0 / slot 0 sits at RAAN=0, anomaly=0 on the +x axis.
Vec3 satellite_position(const ConstellationConfig& config, const SatelliteId& sat,
                        int t, const TimeGrid& grid);

/// Inertial position of a ground cell at slot t (spherical Earth rotating at
/// the sidereal rate, longitude 0 on +x at the epoch).
Vec3 cell_position(const Cell& cell, int t, const TimeGrid& grid);

/// True iff the satellite is at least min_elevation_deg above the cell's
/// local horizon at slot t.
bool gsl_visible(const Cell& cell, const SatelliteId& sat, int t,
                 const ConstellationConfig& config, const TimeGrid& grid,
                 double min_elevation_deg);

/// True iff the straight segment between the two satellites stays above
/// min_los_altitude_km over the spherical Earth.
bool isl_visible(const SatelliteId& sat_a, const SatelliteId& sat_b, int t,
                 const ConstellationConfig& config, const TimeGrid& grid,
                 double min_los_altitude_km);

}  // namespace lsn

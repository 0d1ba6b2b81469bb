#pragma once

#include <map>
#include <string>

#include "core/common.hpp"

namespace rimnull {

// Geometric/electrical description of the reflector, feed and rim annulus.
//
// The feed is a y-oriented electrically short dipole whose field is shaped by
// (cos theta_f)^q. The rim annulus is the outer `rim_width_m` of the projected
// aperture; the boundary angle theta_1 follows from diameter_m - 2*rim_width_m.
struct DishConfig {
    double diameter_m = 18.0;
    double rim_width_m = 0.5;
    double frequency_hz = 1.5e9;
    double feed_taper_q = 1.14;
    double subtended_half_angle_rad = 0.0;  // theta_0; 0 means "calibrate from edge_illumination_db"
    double edge_illumination_db = -11.0;
    double fixed_mesh_density = 8.0;        // samples per wavelength of projected aperture
    double element_side_wavelengths = 0.5;

    double wavelength_m() const { return kSpeedOfLight / frequency_hz; }
    double wavenumber() const { return 2.0 * kPi / wavelength_m(); }
    double focal_length_m() const {
        return 0.25 * diameter_m / std::tan(0.5 * subtended_half_angle_rad);
    }

    void validate() const;
};

// Edge illumination of the calibrated feed: the ratio of the aperture field at
// the rim to the field at the vertex. For a parabola the surface-current
// obliquity cancels the projection factor, leaving
//   (cos theta)^q * (1 + cos theta) / 2
// which includes the space attenuation of the feed-to-rim path.
double edge_illumination(double theta0_rad, double feed_taper_q);

// Solves edge_illumination(theta0, q) = 10^(edge_db/20) for theta0 by bisection.
double calibrate_subtended_half_angle(double feed_taper_q, double edge_db);

// Returns a fully-resolved default configuration (theta_0 calibrated).
DishConfig default_config();

// ---- key/value config files -------------------------------------------------
//
// Plain "key = value" lines, '#' comments. Angles in files are degrees.
// Unknown keys are an error. subtended_half_angle_deg may be "auto".

DishConfig parse_config(const std::map<std::string, std::string>& kv);
DishConfig load_config(const std::string& path);
std::map<std::string, std::string> load_key_values(const std::string& path);
std::map<std::string, std::string> config_key_values(const DishConfig& cfg);
void save_config(const DishConfig& cfg, const std::string& path);

// Stable digest over the canonical serialization; changes iff a field changes.
uint64_t config_digest(const DishConfig& cfg);

}  // namespace rimnull

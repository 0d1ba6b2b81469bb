#pragma once

#include <vector>

#include "core/common.hpp"
#include "core/dish_config.hpp"

namespace rimnull {

// One reconfigurable rim element. `current` is the physical-optics surface
// current at the element center (including the aperture projection factor) at
// the design frequency; current * area_m2 is the element's contribution weight
// in the radiation integral.
struct RimElement {
    int index = 0;
    Vec3 position_m;
    std::array<cplx, 3> current;  // A/m
    double area_m2 = 0;           // projected area
};

// Realized discretization of the dish.
//
// The radiation integral is evaluated in the projected-aperture form: each
// patch/element carries a real current-direction vector that already includes
// the surface obliquity, a projected area, and the feed path length R_f which
// supplies the only frequency-dependent phase. All field evaluations at any
// frequency reuse this discretization.
class Geometry {
public:
    explicit Geometry(const DishConfig& cfg);

    const DishConfig& config() const { return cfg_; }
    std::size_t element_count() const { return elem_rf_.size(); }
    std::size_t fixed_mesh_size() const { return mesh_rf_.size(); }

    std::vector<RimElement> elements() const;  // materialized view (export, tests)

    double focal_length_m() const { return focal_; }
    double fixed_outer_radius_m() const { return rho_fixed_end_; }
    int rim_ring_count() const { return static_cast<int>(ring_counts_.size()); }
    const std::vector<int>& rim_ring_element_counts() const { return ring_counts_; }

    // per-element azimuth and ring index (cluster construction, export)
    const std::vector<double>& element_azimuth() const { return elem_phi_; }
    const std::vector<int>& element_ring() const { return elem_ring_; }

    // Directive-gain normalization: G(psi) = gain_normalization() * |S(psi)|^2
    // where S is a stored field sum; the feed's radiated power is integrated
    // numerically at build time and cached. Frequency-corrected variant below.
    double gain_normalization() const { return c_norm_; }
    double gain_normalization(double frequency_hz) const;

    // Fraction of the feed's radiated power intercepted by the dish.
    double spillover_fraction() const { return spillover_; }

    // flat arrays used by the field evaluators (SoA layout)
    struct Arrays {
        const double *px, *py, *pz;  // positions
        const double *vx, *vy, *vz;  // current direction * projected area
        const double* rf;            // feed path length
        std::size_t n;
    };
    Arrays mesh_arrays() const;
    Arrays element_arrays() const;

private:
    DishConfig cfg_;
    double focal_ = 0;
    double rho_fixed_end_ = 0;
    double c_norm_ = 0;
    double feed_power_integral_ = 0;  // integral of the feed pattern over the forward hemisphere
    double spillover_ = 0;
    std::vector<int> ring_counts_;

    std::vector<double> mesh_px_, mesh_py_, mesh_pz_, mesh_vx_, mesh_vy_, mesh_vz_, mesh_rf_;
    std::vector<double> elem_px_, elem_py_, elem_pz_, elem_vx_, elem_vy_, elem_vz_, elem_rf_;
    std::vector<double> elem_area_, elem_phi_;
    std::vector<int> elem_ring_;

    friend Geometry build_geometry(const DishConfig&);
};

Geometry build_geometry(const DishConfig& cfg);

// Columnar export: index, x, y, z, Re/Im of the three current components, area.
void export_geometry(const Geometry& g, const std::string& path);

}  // namespace rimnull

#pragma once

#include <span>
#include <vector>

#include "core/geometry.hpp"
#include "core/weights.hpp"

namespace rimnull {

// Fixed-field scalar and per-element field vector for one observation angle.
// Fields are the co-pol (y) components of the radiation sums; the common
// far-field factor is normalized out, so gains come from gain_normalization().
struct FieldBundle {
    double psi_rad = 0;
    cplx fixed_field;                 // E_f^{s,co}(psi)
    std::vector<cplx> element_vector; // e_psi, one entry per rim element
};

// H-plane pattern cut. copol/crosspol are total fields (fixed + weighted rim);
// gain_dbi is the co-pol directive gain, -inf where the field is exactly zero.
struct PatternCut {
    std::vector<double> angles_rad;
    std::vector<cplx> copol_field;
    std::vector<cplx> crosspol_field;
    std::vector<double> gain_dbi;
};

// Co-pol fixed field at angle psi. frequency_hz <= 0 means the design frequency.
cplx fixed_field(const Geometry& g, double psi_rad, double frequency_hz = 0);

// Fixed field including the cross-pol (x) projection of the transverse far field.
struct FieldPair {
    cplx copol;
    cplx crosspol;
};
FieldPair fixed_field_full(const Geometry& g, double psi_rad, double frequency_hz = 0);

FieldBundle element_field_vector(const Geometry& g, double psi_rad, double frequency_hz = 0);

// Per-element co-pol and cross-pol projections (total_pattern internals).
void element_field_components(const Geometry& g, double psi_rad, double frequency_hz,
                              std::vector<cplx>& copol, std::vector<cplx>& crosspol);

PatternCut total_pattern(const Geometry& g, const WeightVector& w,
                         std::span<const double> angles_rad, int threads = 1,
                         double frequency_hz = 0);

double gain_dbi_of(const Geometry& g, cplx field, double frequency_hz = 0);

// Boresight directive gain of the dish with unity rim weights.
double quiescent_boresight_dbi(const Geometry& g);

// Boresight gain referenced to the power intercepted by the dish, relative to
// the uniform-aperture bound 4*pi*A/lambda^2: the illumination (taper)
// efficiency of the realized aperture distribution.
double aperture_efficiency(const Geometry& g);

// Far field of an undivided dish of projected radius [0, radius_m], one
// quadrature at the geometry's mesh density (consistency checks).
cplx undivided_dish_field(const DishConfig& cfg, double radius_m, double psi_rad);

// Cached fixed field + element vectors on a fine angle grid with linear
// interpolation between grid points (moving-source bookkeeping).
class AngleGridCache {
public:
    AngleGridCache(const Geometry& g, double psi_min_rad, double psi_max_rad,
                   double spacing_rad = deg2rad(0.002), int threads = 1);

    double psi_min() const { return psi_min_; }
    double psi_max() const { return psi_min_ + spacing_ * (count() - 1); }
    double spacing() const { return spacing_; }
    std::size_t count() const { return fixed_.size(); }

    cplx fixed_at(std::size_t i) const { return fixed_[i]; }
    std::span<const cplx> elements_at(std::size_t i) const {
        return {elem_.data() + i * n_, n_};
    }

    struct Bracket {
        std::size_t lo;
        double frac;  // in [0,1): interpolation weight toward lo+1
    };
    Bracket bracket(double psi_rad) const;

    // Interpolated total field given precomputed rim sums at the two bracket points.
    cplx interpolate(const Bracket& b, cplx rim_lo, cplx rim_hi) const {
        return (1.0 - b.frac) * (fixed_[b.lo] + rim_lo) + b.frac * (fixed_[b.lo + 1] + rim_hi);
    }

private:
    double psi_min_, spacing_;
    std::size_t n_;
    std::vector<cplx> fixed_;
    std::vector<cplx> elem_;  // count x n, row-major
};

}  // namespace rimnull

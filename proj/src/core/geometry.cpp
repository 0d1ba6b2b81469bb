#include "core/geometry.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace rimnull {

namespace {

// Surface current direction at (rho, phi), including the projection factor
// sec(alpha) so that (vector * projected area) is the radiation-integral
// weight. J = 2 n x H_inc with H_inc from the y-oriented dipole feed shaped by
// (cos theta_f)^q and the 1/R_f spherical spreading. The common factor
// -j omega mu0 e^{-j beta r} / (4 pi r) is normalized out of stored fields.
struct PatchCurrent {
    Vec3 v;      // real direction * amplitude (phase lives in e^{-j beta R_f})
    double rf;   // feed path length
    double z;    // height on the paraboloid
};

PatchCurrent patch_current(double rho, double phi, double focal, double q) {
    double x = rho * std::cos(phi);
    double y = rho * std::sin(phi);
    double z = rho * rho / (4.0 * focal);
    double rf = z + focal;  // parabola: |s - focus| = z + F
    Vec3 rhat = {x / rf, y / rf, (z - focal) / rf};
    double cos_tf = (focal - z) / rf;
    // H ~ rhat x yhat
    Vec3 h = {-rhat.z, 0.0, rhat.x};
    Vec3 n = {-x / (2.0 * focal), -y / (2.0 * focal), 1.0};
    double nn = norm(n);
    n = (1.0 / nn) * n;
    double sec_alpha = nn;  // normal tilt equals the surface slope factor
    double amp = 2.0 * std::pow(cos_tf, q) * sec_alpha / (rf * kEta0);
    return {amp * cross(n, h), rf, z};
}

}  // namespace

Geometry::Geometry(const DishConfig& cfg) : cfg_(cfg) {}

Geometry build_geometry(const DishConfig& cfg) {
    cfg.validate();
    Geometry g(cfg);
    const double lam = cfg.wavelength_m();
    const double side = cfg.element_side_wavelengths * lam;
    const double q = cfg.feed_taper_q;
    g.focal_ = cfg.focal_length_m();
    const double focal = g.focal_;
    const double r_out = cfg.diameter_m / 2.0;
    const double r_in = r_out - cfg.rim_width_m;

    if (cfg.rim_width_m < side)
        throw std::invalid_argument("rim annulus narrower than one element side");

    // Rim elements: concentric rings tiling the projected annulus [r_in, r_out],
    // ring pitch ~ one element side, elements evenly spaced in azimuth.
    int n_rings = std::max(1, static_cast<int>(std::lround(cfg.rim_width_m / side)));
    double dr = cfg.rim_width_m / n_rings;
    int index = 0;
    for (int i = 0; i < n_rings; ++i) {
        double rho = r_in + (i + 0.5) * dr;
        int cnt = static_cast<int>(std::floor(2.0 * kPi * rho / side));
        if (cnt < 1) throw std::invalid_argument("degenerate rim ring");
        g.ring_counts_.push_back(cnt);
        double area = dr * (2.0 * kPi * rho / cnt);
        for (int j = 0; j < cnt; ++j) {
            double phi = (j + 0.5) * 2.0 * kPi / cnt;
            PatchCurrent pc = patch_current(rho, phi, focal, q);
            g.elem_px_.push_back(rho * std::cos(phi));
            g.elem_py_.push_back(rho * std::sin(phi));
            g.elem_pz_.push_back(pc.z);
            g.elem_vx_.push_back(pc.v.x * area);
            g.elem_vy_.push_back(pc.v.y * area);
            g.elem_vz_.push_back(pc.v.z * area);
            g.elem_rf_.push_back(pc.rf);
            g.elem_area_.push_back(area);
            g.elem_phi_.push_back(phi);
            g.elem_ring_.push_back(i);
            ++index;
        }
    }
    g.rho_fixed_end_ = r_in;

    // Fixed-surface quadrature: midpoint rule on rings of the projected disk
    // [0, r_in] at fixed_mesh_density samples per wavelength.
    double dmesh = lam / cfg.fixed_mesh_density;
    int nr = std::max(2, static_cast<int>(std::ceil(r_in / dmesh)));
    double drm = r_in / nr;
    for (int i = 0; i < nr; ++i) {
        double rho = (i + 0.5) * drm;
        int cnt = std::max(8, static_cast<int>(std::ceil(2.0 * kPi * rho / dmesh)));
        double area = drm * (2.0 * kPi * rho / cnt);
        for (int j = 0; j < cnt; ++j) {
            double phi = (j + 0.5) * 2.0 * kPi / cnt;
            PatchCurrent pc = patch_current(rho, phi, focal, q);
            g.mesh_px_.push_back(rho * std::cos(phi));
            g.mesh_py_.push_back(rho * std::sin(phi));
            g.mesh_pz_.push_back(pc.z);
            g.mesh_vx_.push_back(pc.v.x * area);
            g.mesh_vy_.push_back(pc.v.y * area);
            g.mesh_vz_.push_back(pc.v.z * area);
            g.mesh_rf_.push_back(pc.rf);
        }
    }

    // Gain normalization: G = 4 pi U / P_rad with P_rad integrated from the
    // feed pattern (dipole transverse factor * cos^2q) over the forward
    // hemisphere. Azimuth integral done in closed form, polar by Simpson.
    auto integrand = [q](double th) {
        double c = std::cos(th);
        return kPi * (1.0 + c * c) * std::pow(c, 2.0 * q) * std::sin(th);
    };
    auto simpson = [&](double a, double b, int n) {
        double h = (b - a) / n;
        double s = integrand(a) + integrand(b);
        for (int i = 1; i < n; ++i) s += integrand(a + i * h) * (i % 2 ? 4.0 : 2.0);
        return s * h / 3.0;
    };
    g.feed_power_integral_ = simpson(0.0, kPi / 2.0, 4096);
    g.spillover_ = simpson(0.0, cfg.subtended_half_angle_rad, 4096) / g.feed_power_integral_;
    double omega = 2.0 * kPi * cfg.frequency_hz;
    g.c_norm_ = (omega * kMu0) * (omega * kMu0) / (4.0 * kPi * g.feed_power_integral_);
    return g;
}

double Geometry::gain_normalization(double frequency_hz) const {
    if (frequency_hz <= 0 || frequency_hz == cfg_.frequency_hz) return c_norm_;
    double ratio = frequency_hz / cfg_.frequency_hz;
    return c_norm_ * ratio * ratio;
}

Geometry::Arrays Geometry::mesh_arrays() const {
    return {mesh_px_.data(), mesh_py_.data(), mesh_pz_.data(),
            mesh_vx_.data(), mesh_vy_.data(), mesh_vz_.data(),
            mesh_rf_.data(), mesh_rf_.size()};
}

Geometry::Arrays Geometry::element_arrays() const {
    return {elem_px_.data(), elem_py_.data(), elem_pz_.data(),
            elem_vx_.data(), elem_vy_.data(), elem_vz_.data(),
            elem_rf_.data(), elem_rf_.size()};
}

std::vector<RimElement> Geometry::elements() const {
    std::vector<RimElement> out(element_count());
    double beta = cfg_.wavenumber();
    for (std::size_t n = 0; n < out.size(); ++n) {
        RimElement& e = out[n];
        e.index = static_cast<int>(n);
        e.position_m = {elem_px_[n], elem_py_[n], elem_pz_[n]};
        cplx ph = std::polar(1.0, -beta * elem_rf_[n]);
        double a = elem_area_[n];
        e.current = {elem_vx_[n] / a * ph, elem_vy_[n] / a * ph, elem_vz_[n] / a * ph};
        e.area_m2 = a;
    }
    return out;
}

void export_geometry(const Geometry& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write file: " + path);
    out << "# index x_m y_m z_m re_jx im_jx re_jy im_jy re_jz im_jz area_m2\n";
    char buf[512];
    for (const RimElement& e : g.elements()) {
        std::snprintf(buf, sizeof buf,
                      "%d %.17g %.17g %.17g %.17g %.17g %.17g %.17g %.17g %.17g %.17g\n",
                      e.index, e.position_m.x, e.position_m.y, e.position_m.z,
                      e.current[0].real(), e.current[0].imag(), e.current[1].real(),
                      e.current[1].imag(), e.current[2].real(), e.current[2].imag(), e.area_m2);
        out << buf;
    }
}

}  // namespace rimnull

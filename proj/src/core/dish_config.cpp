#include "core/dish_config.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rimnull {

void DishConfig::validate() const {
    if (!(diameter_m > 0)) throw std::invalid_argument("diameter_m must be > 0");
    if (!(rim_width_m > 0) || !(rim_width_m < diameter_m / 2))
        throw std::invalid_argument("rim_width_m must satisfy 0 < rim_width_m < diameter_m/2");
    if (!(frequency_hz > 0)) throw std::invalid_argument("frequency_hz must be > 0");
    if (!(feed_taper_q >= 0)) throw std::invalid_argument("feed_taper_q must be >= 0");
    if (!(subtended_half_angle_rad > 0) || !(subtended_half_angle_rad < kPi / 2))
        throw std::invalid_argument("subtended_half_angle_rad must be in (0, pi/2)");
    if (!(fixed_mesh_density >= 2))
        throw std::invalid_argument("fixed_mesh_density must be >= 2 samples/wavelength");
    if (!(element_side_wavelengths > 0))
        throw std::invalid_argument("element_side_wavelengths must be > 0");
}

double edge_illumination(double theta0_rad, double feed_taper_q) {
    double c = std::cos(theta0_rad);
    return std::pow(c, feed_taper_q) * 0.5 * (1.0 + c);
}

double calibrate_subtended_half_angle(double feed_taper_q, double edge_db) {
    if (!(edge_db < 0)) throw std::invalid_argument("edge_illumination_db must be < 0");
    double target = undb20(edge_db);
    double lo = 1e-6, hi = kPi / 2 - 1e-6;
    if (edge_illumination(hi, feed_taper_q) > target)
        throw std::invalid_argument("edge illumination target unreachable for this feed taper");
    for (int i = 0; i < 200; ++i) {
        double mid = 0.5 * (lo + hi);
        if (edge_illumination(mid, feed_taper_q) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

DishConfig default_config() {
    DishConfig cfg;
    cfg.subtended_half_angle_rad =
        calibrate_subtended_half_angle(cfg.feed_taper_q, cfg.edge_illumination_db);
    cfg.validate();
    return cfg;
}

namespace {

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        while (pos < value.size() && std::isspace(static_cast<unsigned char>(value[pos]))) ++pos;
        if (pos != value.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw parse_error("invalid numeric value for '" + key + "': " + value);
    }
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

DishConfig parse_config(const std::map<std::string, std::string>& kv) {
    static const std::set<std::string> known = {
        "diameter_m",        "rim_width_m",          "frequency_hz",
        "feed_taper_q",      "subtended_half_angle_deg", "edge_illumination_db",
        "fixed_mesh_density", "element_side_wavelengths"};
    DishConfig cfg;
    bool auto_theta = true;
    for (const auto& [k, v] : kv) {
        if (!known.count(k)) throw parse_error("unknown config key '" + k + "'");
        if (k == "diameter_m") cfg.diameter_m = parse_double(k, v);
        else if (k == "rim_width_m") cfg.rim_width_m = parse_double(k, v);
        else if (k == "frequency_hz") cfg.frequency_hz = parse_double(k, v);
        else if (k == "feed_taper_q") cfg.feed_taper_q = parse_double(k, v);
        else if (k == "edge_illumination_db") cfg.edge_illumination_db = parse_double(k, v);
        else if (k == "fixed_mesh_density") cfg.fixed_mesh_density = parse_double(k, v);
        else if (k == "element_side_wavelengths") cfg.element_side_wavelengths = parse_double(k, v);
        else if (k == "subtended_half_angle_deg") {
            if (v == "auto") {
                auto_theta = true;
            } else {
                cfg.subtended_half_angle_rad = deg2rad(parse_double(k, v));
                auto_theta = false;
            }
        }
    }
    if (auto_theta)
        cfg.subtended_half_angle_rad =
            calibrate_subtended_half_angle(cfg.feed_taper_q, cfg.edge_illumination_db);
    cfg.validate();
    return cfg;
}

std::map<std::string, std::string> load_key_values(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto notspace = [](unsigned char c) { return !std::isspace(c); };
        auto b = std::find_if(line.begin(), line.end(), notspace);
        auto e = std::find_if(line.rbegin(), line.rend(), notspace).base();
        if (b >= e) continue;
        std::string body(b, e);
        auto eq = body.find('=');
        if (eq == std::string::npos) throw parse_error("expected 'key = value'", lineno);
        auto trim = [&](std::string s) {
            auto b2 = std::find_if(s.begin(), s.end(), notspace);
            auto e2 = std::find_if(s.rbegin(), s.rend(), notspace).base();
            return (b2 < e2) ? std::string(b2, e2) : std::string();
        };
        std::string key = trim(body.substr(0, eq));
        std::string val = trim(body.substr(eq + 1));
        if (key.empty() || val.empty()) throw parse_error("empty key or value", lineno);
        if (kv.count(key)) throw parse_error("duplicate key '" + key + "'", lineno);
        kv[key] = val;
    }
    return kv;
}

DishConfig load_config(const std::string& path) { return parse_config(load_key_values(path)); }

std::map<std::string, std::string> config_key_values(const DishConfig& cfg) {
    return {
        {"diameter_m", fmt_double(cfg.diameter_m)},
        {"rim_width_m", fmt_double(cfg.rim_width_m)},
        {"frequency_hz", fmt_double(cfg.frequency_hz)},
        {"feed_taper_q", fmt_double(cfg.feed_taper_q)},
        {"subtended_half_angle_deg", fmt_double(rad2deg(cfg.subtended_half_angle_rad))},
        {"edge_illumination_db", fmt_double(cfg.edge_illumination_db)},
        {"fixed_mesh_density", fmt_double(cfg.fixed_mesh_density)},
        {"element_side_wavelengths", fmt_double(cfg.element_side_wavelengths)},
    };
}

void save_config(const DishConfig& cfg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write file: " + path);
    for (const auto& [k, v] : config_key_values(cfg)) out << k << " = " << v << "\n";
}

uint64_t config_digest(const DishConfig& cfg) {
    std::ostringstream ss;
    for (const auto& [k, v] : config_key_values(cfg)) ss << k << "=" << v << "\n";
    return fnv1a64(ss.str());
}

}  // namespace rimnull

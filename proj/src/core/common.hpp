#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

namespace rimnull {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0;          // m/s
inline constexpr double kMu0 = 4e-7 * kPi;                    // H/m
inline constexpr double kEta0 = kMu0 * kSpeedOfLight;         // free-space impedance

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

inline double db10(double linear) {
    if (linear <= 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(linear);
}
inline double undb10(double db) { return std::pow(10.0, db / 10.0); }
inline double undb20(double db) { return std::pow(10.0, db / 20.0); }

struct Vec3 {
    double x = 0, y = 0, z = 0;
};

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

// SplitMix64; used to derive independent sub-stream seeds from one base seed.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t base, uint64_t stream) {
    return splitmix64(base ^ splitmix64(stream + 0x0b4b5557ULL));
}

// FNV-1a 64-bit, for config digests.
inline uint64_t fnv1a64(const std::string& s) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

// Runs fn(i) for i in [0, n) on up to `threads` workers. Work is split into
// contiguous blocks so results must not depend on execution order.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::size_t nw = std::min<std::size_t>(threads, n);
    std::vector<std::thread> pool;
    pool.reserve(nw);
    for (std::size_t w = 0; w < nw; ++w) {
        std::size_t lo = n * w / nw;
        std::size_t hi = n * (w + 1) / nw;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

// Parse failure carrying a 1-based line number (0 when not line-addressable).
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t line = 0)
        : std::runtime_error(line ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

}  // namespace rimnull

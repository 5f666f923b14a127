#pragma once
// Band dispersion on the one-dimensional lattice and its half-angle variable.
//
// The single-particle dispersion is w(k) = cos(k) - gamma on k in [-pi, pi).
// The substitution t = tan(k/2) maps the band to the real line; in that
// variable the weighted space L^2(dmu), dmu = 2 dt/(t^2+1), carries the
// analysis.  The derived profile functions s1, s2, s3 arise from repeated
// application of the transform m -> -t m'(t) starting from the dispersion
// itself; s1(tan(k/2)) = sin^2(k) gives the group-velocity profile.

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "ness/jet.hpp"

namespace ness {

struct BandEdgeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DispersionParams {
    double gamma = 0.0;  // chemical-potential offset in (-1, 1)

    DispersionParams(double g = 0.0) : gamma(g) { validate(); }
    void validate() const {
        if (!(std::abs(gamma) < 1.0))
            throw std::domain_error("dispersion: gamma must lie in (-1,1), got " +
                                    std::to_string(gamma));
    }
};

inline double omega(double k, const DispersionParams& p) { return std::cos(k) - p.gamma; }

inline double t_of_k(double k) {
    if (!(std::abs(k) < M_PI))
        throw std::domain_error("t_of_k: pole at k = +-pi (and undefined beyond)");
    return std::tan(0.5 * k);
}
inline double k_of_t(double t) { return 2.0 * std::atan(t); }

// dispersion expressed in the half-angle variable: cos(k(t)) - gamma
template <class T>
T dispersion_of_t(const T& t, const DispersionParams& p) {
    return 2.0 / (t * t + 1.0) - 1.0 - p.gamma;
}
inline double dispersion_of_t(double t, const DispersionParams& p) {
    return 2.0 / (t * t + 1.0) - 1.0 - p.gamma;
}

// velocity-squared profile sin^2(k) in the half-angle variable
template <class T>
T s1(const T& t) {
    T t2 = t * t;
    T d = 1.0 + t2;
    return 4.0 * t2 / (d * d);
}
inline double s1(double t) {
    double t2 = t * t, d = 1.0 + t2;
    return 4.0 * t2 / (d * d);
}

template <class T>
T s2(const T& t) {
    T t2 = t * t;
    T d = 1.0 + t2;
    return 8.0 * (t2 - 1.0) * t2 / (d * d * d);
}
inline double s2(double t) {
    double t2 = t * t, d = 1.0 + t2;
    return 8.0 * (t2 - 1.0) * t2 / (d * d * d);
}

template <class T>
T s3(const T& t) {
    T t2 = t * t;
    T t4 = t2 * t2;
    T d = 1.0 + t2;
    return 16.0 * (t2 - 4.0 * t4 + t4 * t2) / (d * d * d * d);
}
inline double s3(double t) {
    double t2 = t * t, t4 = t2 * t2, d = 1.0 + t2;
    return 16.0 * (t2 - 4.0 * t4 + t4 * t2) / (d * d * d * d);
}

// level set {t : s1(t) >= v}: the union of [-t_hi, -t_lo] and [t_lo, t_hi]
// with t_lo * t_hi = 1.  Equivalently sin^2(k) >= v, i.e. k at least
// k_min = asin(sqrt(v)) away from the band edges.
struct SupportRegion {
    double v = 0.0;
    double t_lo = 0.0, t_hi = 0.0;

    bool contains(double t) const {
        double a = std::abs(t);
        return a >= t_lo && a <= t_hi;
    }
    // the positive-k image [k_min, pi - k_min]
    double k_min() const { return std::asin(std::sqrt(v)); }
    double k_max() const { return M_PI - k_min(); }
};

inline SupportRegion support_region(double v) {
    if (!(v > 0.0 && v < 1.0))
        throw std::domain_error("support_region: v must lie in (0,1), got " + std::to_string(v));
    double sv = std::sqrt(v), s1mv = std::sqrt(1.0 - v);
    return SupportRegion{v, (1.0 - s1mv) / sv, (1.0 + s1mv) / sv};
}

// solution set of w(k) = x on [-pi, pi): either empty or a symmetric pair
// {+k_star, -k_star}, each carrying the delta-function weight 1/|w'(k_star)|
struct ShellRoot {
    double k_star = 0.0;  // in (-pi, 0) or (0, pi)
    double weight = 0.0;  // 1/|sin(k_star)|
};

struct MomentumShell {
    double target = 0.0;
    std::vector<ShellRoot> roots;  // non-negative root first, then its negative partner
    bool empty() const { return roots.empty(); }
};

inline MomentumShell solve_shell(double x, const DispersionParams& p, double edge_tol = 1e-9) {
    double c = x + p.gamma;  // cos(k_star)
    if (std::abs(std::abs(c) - 1.0) < edge_tol)
        throw BandEdgeError("solve_shell: target " + std::to_string(x) +
                            " lies at the band edge (cos = " + std::to_string(c) + ")");
    MomentumShell shell;
    shell.target = x;
    if (std::abs(c) > 1.0) return shell;
    double k = std::acos(c);
    double w = 1.0 / std::sqrt(1.0 - c * c);
    shell.roots = {{k, w}, {-k, w}};
    return shell;
}

}  // namespace ness

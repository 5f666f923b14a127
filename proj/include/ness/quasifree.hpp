#pragma once
// The two-temperature quasi-free steady state: momentum occupation rho(k)
// with different inverse temperatures on the two half-bands, the doubled
// form-factor components, steady-state two-point functions by adaptive
// quadrature, and n-point functions as determinants of two-point blocks.

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

#include "ness/dispersion.hpp"
#include "ness/radial.hpp"

namespace ness {

struct WindowTooSmallError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TemperaturePair {
    double beta_plus = 1.0;   // inverse temperature for momenta k in [0, pi)
    double beta_minus = 1.0;  // inverse temperature for momenta k in [-pi, 0)

    void validate() const {
        if (!(beta_plus > 0.0 && beta_minus > 0.0) || !std::isfinite(beta_plus) ||
            !std::isfinite(beta_minus))
            throw std::domain_error("temperatures: both betas must be positive and finite");
    }
    bool equilibrium() const { return beta_plus == beta_minus; }
};

// form factor: a radial profile in the half-angle variable, evaluated in
// momentum space through t = tan(k/2)
class FormFactor {
  public:
    FormFactor() = default;
    explicit FormFactor(RadialFunction radial) : radial_(std::move(radial)) {}

    cdouble at_k(double k) const {
        if (std::abs(std::abs(k) - M_PI) < 1e-15) return 0.0;  // t -> infinity limit
        return radial_.eval(std::tan(0.5 * k));
    }
    cdouble at_t(double t) const { return radial_.eval(t); }
    const RadialFunction& radial() const { return radial_; }

    // the default smooth family: b(x) = exp(-1/(1-x^2)) on (-1,1) mapped
    // affinely onto [lo, hi] in the t-coordinate
    static FormFactor bump_on_interval(double lo, double hi) {
        if (!(lo < hi)) throw std::domain_error("bump_on_interval: need lo < hi");
        return FormFactor(RadialFunction::from_rule(
            [lo, hi](const Jet& t) {
                Jet x = (2.0 * t - (lo + hi)) / (hi - lo);
                double xv = x.value().real();
                if (xv <= -1.0 || xv >= 1.0) return Jet(0.0);
                return exp(-1.0 / (1.0 - x * x));
            },
            3, {{lo, hi}}));
    }

    static FormFactor constant_one() { return FormFactor(RadialFunction::constant(1.0)); }

  private:
    RadialFunction radial_;
};

// momentum occupation of the steady state; the positive half-band carries
// beta_plus, the negative one beta_minus
double rho_of_k(double k, const TemperaturePair& temps, const DispersionParams& params);

// max over a uniform grid of k in (0,pi) of |rho(k) - rho(-k)|
double momentum_asymmetry(const TemperaturePair& temps, const DispersionParams& params,
                          int grid = 2048);

struct DoubledVectors {
    cdouble g1_1, g1_2, g2_1, g2_2;
};

// components (1-rho)^{1/2} f, rho^{1/2} conj(f), rho^{1/2} f, (1-rho)^{1/2} conj(f)
DoubledVectors doubled_vectors(double k, const FormFactor& f, const TemperaturePair& temps,
                               const DispersionParams& params);

struct CovarianceMatrix {
    std::vector<int> sites;
    Eigen::MatrixXcd M;  // M(i,j) = <a*(delta_{sites[i]}) a(delta_{sites[j]})>

    int index_of(int site) const {
        for (size_t i = 0; i < sites.size(); ++i)
            if (sites[i] == site) return static_cast<int>(i);
        throw WindowTooSmallError("site " + std::to_string(site) + " not in covariance window");
    }
};

// <delta_m, rho delta_n> = (1/2pi) integral e^{ik(n-m)} rho(k) dk, split at
// the occupation discontinuities k = -pi, 0
cdouble ness_two_point(int m, int n, const TemperaturePair& temps, const DispersionParams& params,
                       double rel_tol = 1e-10);

// covariance on an explicit site list (Toeplitz in n-m by translation
// invariance of the state; mirrored across the diagonal so Hermiticity is
// exact)
CovarianceMatrix ness_covariance(const std::vector<int>& sites, const TemperaturePair& temps,
                                 const DispersionParams& params, double rel_tol = 1e-10);

// convenience window [-half_width, half_width]
CovarianceMatrix ness_covariance(int half_width, const TemperaturePair& temps,
                                 const DispersionParams& params, double rel_tol = 1e-10);

// sparse vector on lattice sites
using SiteVector = std::vector<std::pair<int, cdouble>>;

// Wick determinant: 0 if list lengths differ, else det <f_i, rho g_j>
cdouble n_point(const std::vector<SiteVector>& fs, const std::vector<SiteVector>& gs,
                const CovarianceMatrix& C);

}  // namespace ness

#include "ness/quasifree.hpp"

#include <cmath>

#include "ness/quadrature.hpp"

namespace ness {

namespace {
// reduce to the fundamental domain [-pi, pi)
double reduce_k(double k) {
    double r = std::remainder(k, 2.0 * M_PI);  // in [-pi, pi]
    if (r >= M_PI) r -= 2.0 * M_PI;
    return r;
}
}  // namespace

double rho_of_k(double k, const TemperaturePair& temps, const DispersionParams& params) {
    temps.validate();
    params.validate();
    double kr = reduce_k(k);
    double beta = (kr >= 0.0) ? temps.beta_plus : temps.beta_minus;
    return 1.0 / (1.0 + std::exp(beta * omega(kr, params)));
}

double momentum_asymmetry(const TemperaturePair& temps, const DispersionParams& params,
                          int grid) {
    double worst = 0.0;
    for (int j = 0; j < grid; ++j) {
        double k = M_PI * (j + 0.5) / grid;
        worst = std::max(worst,
                         std::abs(rho_of_k(k, temps, params) - rho_of_k(-k, temps, params)));
    }
    return worst;
}

DoubledVectors doubled_vectors(double k, const FormFactor& f, const TemperaturePair& temps,
                               const DispersionParams& params) {
    double rho = rho_of_k(k, temps, params);
    double sp = std::sqrt(1.0 - rho), sm = std::sqrt(rho);
    cdouble fv = f.at_k(k), fc = std::conj(fv);
    return DoubledVectors{sp * fv, sm * fc, sm * fv, sp * fc};
}

cdouble ness_two_point(int m, int n, const TemperaturePair& temps, const DispersionParams& params,
                       double rel_tol) {
    const int delta = n - m;
    auto integrand = [&](double k) -> cdouble {
        return std::exp(cdouble(0.0, k * delta)) * rho_of_k(k, temps, params);
    };
    // the occupation jumps at k = 0 and at the seam k = -pi when the two
    // temperatures differ; integrating each half-band separately keeps the
    // panels smooth
    cdouble acc = integrate_adaptive(integrand, -M_PI, 0.0, rel_tol);
    acc += integrate_adaptive(integrand, 0.0, M_PI, rel_tol);
    return acc / (2.0 * M_PI);
}

CovarianceMatrix ness_covariance(const std::vector<int>& sites, const TemperaturePair& temps,
                                 const DispersionParams& params, double rel_tol) {
    if (sites.empty()) throw std::domain_error("ness_covariance: window must be nonempty");
    for (size_t i = 0; i < sites.size(); ++i)
        for (size_t j = i + 1; j < sites.size(); ++j)
            if (sites[i] == sites[j])
                throw std::domain_error("ness_covariance: window sites must be distinct");

    const int n = static_cast<int>(sites.size());
    // the state is translation invariant: entries depend only on the site
    // difference, computed once per nonnegative difference and mirrored
    std::vector<int> diffs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int d = sites[j] - sites[i];
            if (d >= 0) diffs.push_back(d);
        }
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());

    std::vector<cdouble> c_of(diffs.size());
    for (size_t i = 0; i < diffs.size(); ++i)
        c_of[i] = ness_two_point(0, diffs[i], temps, params, rel_tol);
    auto lookup = [&](int d) {
        auto it = std::lower_bound(diffs.begin(), diffs.end(), d);
        return c_of[static_cast<size_t>(it - diffs.begin())];
    };

    CovarianceMatrix C;
    C.sites = sites;
    C.M.resize(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int d = sites[j] - sites[i];
            C.M(i, j) = (d >= 0) ? lookup(d) : std::conj(lookup(-d));
        }
    return C;
}

CovarianceMatrix ness_covariance(int half_width, const TemperaturePair& temps,
                                 const DispersionParams& params, double rel_tol) {
    std::vector<int> sites;
    for (int s = -half_width; s <= half_width; ++s) sites.push_back(s);
    return ness_covariance(sites, temps, params, rel_tol);
}

cdouble n_point(const std::vector<SiteVector>& fs, const std::vector<SiteVector>& gs,
                const CovarianceMatrix& C) {
    if (fs.size() != gs.size()) return 0.0;
    const int n = static_cast<int>(fs.size());
    if (n == 0) return 1.0;  // empty product
    Eigen::MatrixXcd A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cdouble acc = 0.0;
            for (const auto& [ms, fa] : fs[i])
                for (const auto& [ns, ga] : gs[j])
                    acc += std::conj(fa) * ga * C.M(C.index_of(ms), C.index_of(ns));
            A(i, j) = acc;
        }
    return A.determinant();
}

}  // namespace ness

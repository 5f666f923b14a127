#pragma once
// The level-shift operator Gamma(e) on an eigenspace of the doubled system
// spectrum, assembled from energy-shell sums of doubled form-factor
// contributions; kernel/gap analysis; the quadratic-scaling gap scan; and
// the exact-rational active-term analysis of the coupling threshold
// lambda_1 = C min{ v^{100/26}, (v/g)^{100/182}, g^{100/11}, (v g)^{100/18} }.

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ness/dispersion.hpp"
#include "ness/quasifree.hpp"
#include "ness/small_system.hpp"

namespace ness {

struct LevelShiftOperator {
    double e = 0.0;
    std::vector<std::pair<int, int>> basis;  // pairs (n,m) with E_n - E_m = e, lexicographic
    Eigen::MatrixXcd G;
};

// sum over all ordered pairs (n,m) with E_n - E_m != e of the two
// energy-shell contributions: roots of w(k) = e - E_nm enter with the first
// doubled components, roots of w(k) = E_nm - e with the second; each root
// contributes its delta weight times a rank-one outer product
LevelShiftOperator assemble_gamma(double e, const SmallSystem& sys, const FormFactor& f,
                                  const TemperaturePair& temps, const DispersionParams& params,
                                  double pair_tol = 1e-9, double edge_tol = 1e-9);

// direct scalar evaluation of the diagonal-pair quadratic form at e = 0
// (nondegenerate spectrum required); an independent route used as an oracle
// for assemble_gamma(0)
double gamma0_quadratic_form(const Eigen::VectorXcd& c, const SmallSystem& sys,
                             const FormFactor& f, const TemperaturePair& temps,
                             const DispersionParams& params, double pair_tol = 1e-9,
                             double edge_tol = 1e-9);

struct KernelReport {
    Eigen::VectorXd eigenvalues;  // ascending
    double min_eig = 0.0;
    double norm = 0.0;         // largest eigenvalue magnitude
    int kernel_dim = 0;        // eigenvalues below kernel_tol * norm
    Eigen::MatrixXcd kernel_basis;  // orthonormal columns
    double gamma_e = 0.0;      // smallest eigenvalue above the kernel cut
    bool gap_defined = false;  // false when every eigenvalue is in the kernel
};

KernelReport kernel_report(const LevelShiftOperator& op, double kernel_tol = 1e-8);

struct GapScanRow {
    double delta_beta = 0.0;
    double gamma0 = 0.0;  // smallest eigenvalue of Gamma(0)
};

struct GapScanResult {
    std::vector<GapScanRow> rows;
    double slope = 0.0;  // log-log least-squares slope over rows with delta_beta > 0
};

// beta_pm = beta_center +/- delta/2 for each delta; records min eig Gamma(0)
GapScanResult gap_scan(const SmallSystem& sys, const FormFactor& f,
                       const DispersionParams& params, double beta_center,
                       const std::vector<double>& deltas);

// exact rational p/q with int64 arithmetic (cross-multiplied comparisons)
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational of(std::int64_t n, std::int64_t d);
    Rational times(std::int64_t k) const { return of(num * k, den); }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
    }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

struct Lambda1Term {
    const char* name;   // e.g. "(v*g)^(100/18)"
    Rational v_exp;     // exponent of v
    Rational g_exp;     // exponent of gamma_e
};

// the four-term exponent lattice {100/26, 100/182, 100/11, 100/18}
const std::vector<Lambda1Term>& lambda1_terms();

double lambda1_scaling(double v, double gamma_e, double C);
int lambda1_active_index(double v, double gamma_e);

// active term as v -> 0 with gamma_e fixed: the term with the largest exact
// v-exponent, together with that exponent
std::pair<int, Rational> lambda1_smallv_active();
// active term as delta_beta -> 0 under gamma_e = delta_beta^2 with v fixed:
// largest exponent of delta_beta, i.e. 2 * g_exp
std::pair<int, Rational> lambda1_smalldelta_active();

}  // namespace ness

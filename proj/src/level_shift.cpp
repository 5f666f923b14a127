#include "ness/level_shift.hpp"

#include <cmath>
#include <numeric>

namespace ness {

LevelShiftOperator assemble_gamma(double e, const SmallSystem& sys, const FormFactor& f,
                                  const TemperaturePair& temps, const DispersionParams& params,
                                  double pair_tol, double edge_tol) {
    temps.validate();
    params.validate();
    const auto spec = liouville_spectrum(sys, pair_tol);

    LevelShiftOperator op;
    op.e = e;
    {
        bool found = false;
        for (const auto& lvl : spec.levels)
            if (std::abs(lvl.e - e) <= pair_tol) {
                op.e = lvl.e;
                op.basis = lvl.pairs;  // already lexicographic
                found = true;
                break;
            }
        if (!found)
            throw NotAnEigenvalueError("assemble_gamma: " + std::to_string(e) +
                                       " is not an eigenvalue of the doubled spectrum");
    }

    const int D = static_cast<int>(op.basis.size());
    const int d = sys.dim();
    op.G = Eigen::MatrixXcd::Zero(D, D);
    const Eigen::MatrixXcd& Y = sys.Y();

    // contribution of one shell root: w over the (a,b) basis,
    //   w_(a,b) = delta_{b,m} Y(n,a) g1 - delta_{a,n} conj(Y(m,b)) g2,
    // accumulated as weight * conj(w) w^T
    Eigen::VectorXcd w(D);
    auto accumulate = [&](int n, int m, double k_star, double weight, cdouble g1, cdouble g2) {
        for (int idx = 0; idx < D; ++idx) {
            auto [a, b] = op.basis[idx];
            cdouble val = 0.0;
            if (b == m) val += Y(n, a) * g1;
            if (a == n) val -= std::conj(Y(m, b)) * g2;
            w[idx] = val;
        }
        (void)k_star;
        op.G.noalias() += weight * (w.conjugate() * w.transpose());
    };

    for (int n = 0; n < d; ++n)
        for (int m = 0; m < d; ++m) {
            double E_nm = sys.energies()[n] - sys.energies()[m];
            if (std::abs(E_nm - op.e) <= pair_tol) continue;  // excluded eigenspace

            // first sum: shells of w(k) = e - E_nm, first doubled components
            MomentumShell s1 = solve_shell(op.e - E_nm, params, edge_tol);
            for (const auto& root : s1.roots) {
                DoubledVectors g = doubled_vectors(root.k_star, f, temps, params);
                accumulate(n, m, root.k_star, root.weight, g.g1_1, g.g2_1);
            }
            // second sum: shells of w(k) = E_nm - e, second doubled components
            MomentumShell s2 = solve_shell(E_nm - op.e, params, edge_tol);
            for (const auto& root : s2.roots) {
                DoubledVectors g = doubled_vectors(root.k_star, f, temps, params);
                accumulate(n, m, root.k_star, root.weight, g.g1_2, g.g2_2);
            }
        }
    return op;
}

double gamma0_quadratic_form(const Eigen::VectorXcd& c, const SmallSystem& sys,
                             const FormFactor& f, const TemperaturePair& temps,
                             const DispersionParams& params, double pair_tol, double edge_tol) {
    temps.validate();
    params.validate();
    const int d = sys.dim();
    if (c.size() != d) throw std::domain_error("gamma0_quadratic_form: |c| must equal d");
    for (int i = 0; i + 1 < d; ++i)
        if (std::abs(sys.energies()[i + 1] - sys.energies()[i]) <= pair_tol)
            throw std::domain_error(
                "gamma0_quadratic_form: requires a nondegenerate energy spectrum");

    double acc = 0.0;
    for (int n = 0; n < d; ++n)
        for (int m = 0; m < d; ++m) {
            if (n == m) continue;
            double y2 = std::norm(sys.Y()(m, n));
            if (y2 == 0.0) continue;

            // roots of w(q) = E_m - E_n: terms |c_m (1-rho)^{1/2} - c_n rho^{1/2}|^2
            MomentumShell sh1 = solve_shell(sys.energies()[m] - sys.energies()[n], params,
                                            edge_tol);
            for (const auto& root : sh1.roots) {
                double rho = rho_of_k(root.k_star, temps, params);
                cdouble amp = c[m] * std::sqrt(1.0 - rho) - c[n] * std::sqrt(rho);
                acc += y2 * std::norm(amp) * std::norm(f.at_k(root.k_star)) * root.weight;
            }
            // roots of w(q) = E_n - E_m: terms |c_m rho^{1/2} - c_n (1-rho)^{1/2}|^2
            MomentumShell sh2 = solve_shell(sys.energies()[n] - sys.energies()[m], params,
                                            edge_tol);
            for (const auto& root : sh2.roots) {
                double rho = rho_of_k(root.k_star, temps, params);
                cdouble amp = c[m] * std::sqrt(rho) - c[n] * std::sqrt(1.0 - rho);
                acc += y2 * std::norm(amp) * std::norm(f.at_k(root.k_star)) * root.weight;
            }
        }
    return acc;
}

KernelReport kernel_report(const LevelShiftOperator& op, double kernel_tol) {
    const int D = static_cast<int>(op.G.rows());
    double herm_dev = (op.G - op.G.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > 1e-12)
        throw std::domain_error("kernel_report: operator not Hermitian, deviation " +
                                std::to_string(herm_dev));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op.G);
    KernelReport rep;
    rep.eigenvalues = es.eigenvalues();
    rep.min_eig = rep.eigenvalues.minCoeff();
    rep.norm = rep.eigenvalues.cwiseAbs().maxCoeff();

    // strict cut below; a norm-zero operator would otherwise classify nothing
    // as kernel and report a spurious gap of zero
    const double cut = kernel_tol * rep.norm;
    std::vector<int> kernel_cols;
    for (int i = 0; i < D; ++i)
        if (rep.eigenvalues[i] < cut || rep.norm == 0.0) kernel_cols.push_back(i);
    rep.kernel_dim = static_cast<int>(kernel_cols.size());
    rep.kernel_basis.resize(D, rep.kernel_dim);
    for (int j = 0; j < rep.kernel_dim; ++j)
        rep.kernel_basis.col(j) = es.eigenvectors().col(kernel_cols[j]);

    if (rep.kernel_dim == 0) {
        rep.gamma_e = rep.min_eig;
        rep.gap_defined = true;
    } else if (rep.kernel_dim < D) {
        rep.gamma_e = rep.eigenvalues[kernel_cols.size()];  // eigenvalues are ascending
        rep.gap_defined = true;
    } else {
        rep.gamma_e = 0.0;  // zero operator: no gap to report
        rep.gap_defined = false;
    }
    return rep;
}

GapScanResult gap_scan(const SmallSystem& sys, const FormFactor& f,
                       const DispersionParams& params, double beta_center,
                       const std::vector<double>& deltas) {
    GapScanResult out;
    for (double db : deltas) {
        if (!(beta_center - 0.5 * db > 0.0))
            throw std::domain_error("gap_scan: beta_center - delta/2 must stay positive");
        TemperaturePair temps{beta_center + 0.5 * db, beta_center - 0.5 * db};
        LevelShiftOperator op = assemble_gamma(0.0, sys, f, temps, params);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(op.G);
        out.rows.push_back({db, es.eigenvalues().minCoeff()});
    }
    // log-log least squares over the positive-delta rows
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const auto& row : out.rows) {
        if (!(row.delta_beta > 0.0) || !(row.gamma0 > 0.0)) continue;
        double x = std::log(row.delta_beta), y = std::log(row.gamma0);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++n;
    }
    out.slope = (n >= 2) ? (n * sxy - sx * sy) / (n * sxx - sx * sx) : 0.0;
    return out;
}

Rational Rational::of(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return Rational{n / g, d / g};
}

const std::vector<Lambda1Term>& lambda1_terms() {
    static const std::vector<Lambda1Term> terms = {
        {"v^(100/26)", Rational::of(100, 26), Rational::of(0, 1)},
        {"(v/g)^(100/182)", Rational::of(100, 182), Rational::of(-100, 182)},
        {"g^(100/11)", Rational::of(0, 1), Rational::of(100, 11)},
        {"(v*g)^(100/18)", Rational::of(100, 18), Rational::of(100, 18)},
    };
    return terms;
}

namespace {
double term_value(const Lambda1Term& t, double v, double g) {
    return std::pow(v, double(t.v_exp.num) / double(t.v_exp.den)) *
           std::pow(g, double(t.g_exp.num) / double(t.g_exp.den));
}
}  // namespace

double lambda1_scaling(double v, double gamma_e, double C) {
    if (!(v > 0.0 && v < 1.0)) throw std::domain_error("lambda1_scaling: need v in (0,1)");
    if (!(gamma_e > 0.0)) throw std::domain_error("lambda1_scaling: need gamma_e > 0");
    if (!(C > 0.0)) throw std::domain_error("lambda1_scaling: need C > 0");
    double best = term_value(lambda1_terms()[0], v, gamma_e);
    for (size_t i = 1; i < lambda1_terms().size(); ++i)
        best = std::min(best, term_value(lambda1_terms()[i], v, gamma_e));
    return C * best;
}

int lambda1_active_index(double v, double gamma_e) {
    int best = 0;
    double bv = term_value(lambda1_terms()[0], v, gamma_e);
    for (size_t i = 1; i < lambda1_terms().size(); ++i) {
        double tv = term_value(lambda1_terms()[i], v, gamma_e);
        if (tv < bv) {
            bv = tv;
            best = static_cast<int>(i);
        }
    }
    return best;
}

std::pair<int, Rational> lambda1_smallv_active() {
    // as v -> 0 the smallest term is the one with the largest v-exponent
    const auto& terms = lambda1_terms();
    int best = 0;
    for (size_t i = 1; i < terms.size(); ++i)
        if (terms[best].v_exp < terms[i].v_exp) best = static_cast<int>(i);
    return {best, terms[best].v_exp};
}

std::pair<int, Rational> lambda1_smalldelta_active() {
    // substituting gamma_e = delta^2 gives delta-exponent 2*g_exp (+ constant
    // v-powers); the smallest term has the largest delta-exponent
    const auto& terms = lambda1_terms();
    int best = 0;
    for (size_t i = 1; i < terms.size(); ++i)
        if (terms[best].g_exp.times(2) < terms[i].g_exp.times(2)) best = static_cast<int>(i);
    return {best, terms[best].g_exp.times(2)};
}

}  // namespace ness

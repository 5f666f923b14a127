#include "ness/lattice.hpp"

#include <cmath>

namespace ness {

Eigen::MatrixXd build_h_matrix(const LatticeWindow& window, const DispersionParams& params) {
    window.validate();
    params.validate();
    const int n = window.n_sites();
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        h(i, i) = -params.gamma;
        if (i + 1 < n) h(i, i + 1) = h(i + 1, i) = 0.5;
    }
    return h;
}

ChainEigensystem chain_eigensystem(int n, const DispersionParams& params) {
    ChainEigensystem sys;
    sys.eps.resize(n);
    sys.Q.resize(n, n);
    const double norm = std::sqrt(2.0 / (n + 1));
    // energies cos(j pi/(n+1)) - gamma decrease in j; emit ascending
    for (int col = 0; col < n; ++col) {
        int j = n - col;
        sys.eps[col] = std::cos(j * M_PI / (n + 1)) - params.gamma;
        for (int i = 0; i < n; ++i) sys.Q(i, col) = norm * std::sin(j * (i + 1) * M_PI / (n + 1));
    }
    return sys;
}

namespace {

// thermal covariance (1 + e^{beta h})^{-1} of a uniform open chain
Eigen::MatrixXd fermi_block(int n, double beta, const DispersionParams& params) {
    ChainEigensystem sys = chain_eigensystem(n, params);
    Eigen::VectorXd occ(n);
    for (int j = 0; j < n; ++j) occ[j] = 1.0 / (1.0 + std::exp(beta * sys.eps[j]));
    return sys.Q * occ.asDiagonal() * sys.Q.transpose();
}

}  // namespace

CovarianceMatrix initial_two_temperature_covariance(const LatticeWindow& window,
                                                    const TemperaturePair& temps,
                                                    const DispersionParams& params) {
    window.validate();
    temps.validate();
    const int M = window.half_width;
    const int n = window.n_sites();
    // left block: sites -M..-1 (M sites) at beta_minus;
    // right block: sites 0..M (M+1 sites) at beta_plus
    Eigen::MatrixXd left = fermi_block(M, temps.beta_minus, params);
    Eigen::MatrixXd right = fermi_block(M + 1, temps.beta_plus, params);

    CovarianceMatrix C;
    C.sites = window.sites();
    C.M = Eigen::MatrixXcd::Zero(n, n);
    C.M.topLeftCorner(M, M) = left.cast<cdouble>();
    C.M.bottomRightCorner(M + 1, M + 1) = right.cast<cdouble>();
    return C;
}

Evolver::Evolver(const LatticeWindow& window, const DispersionParams& params)
    : window_(window), eig_(chain_eigensystem(window.n_sites(), params)) {
    window.validate();
    params.validate();
}

EvolutionState Evolver::evolve(const EvolutionState& state, double dt) const {
    const int n = window_.n_sites();
    if (state.C.M.rows() != n)
        throw std::domain_error("evolve: state size does not match the window");
    if (dt == 0.0) return state;
    Eigen::VectorXcd phase(n);
    for (int j = 0; j < n; ++j) phase[j] = std::exp(cdouble(0.0, dt * eig_.eps[j]));
    Eigen::MatrixXcd U = eig_.Q.cast<cdouble>() * phase.asDiagonal() *
                         eig_.Q.transpose().cast<cdouble>();
    EvolutionState out;
    out.C.sites = state.C.sites;
    out.C.M = U * state.C.M * U.adjoint();
    out.time = state.time + dt;
    return out;
}

ErgodicMeanResult ergodic_mean(const LatticeWindow& window, const TemperaturePair& temps,
                               const DispersionParams& params, double T, int samples,
                               int probe_half_width) {
    window.validate();
    if (!(T > 0.0)) throw std::domain_error("ergodic_mean: need T > 0");
    if (samples < 2) throw std::domain_error("ergodic_mean: need samples >= 2");
    if (probe_half_width < 0 || probe_half_width > window.half_width)
        throw std::domain_error("ergodic_mean: probe must fit inside the window");

    const int n = window.n_sites();
    ChainEigensystem sys = chain_eigensystem(n, params);
    CovarianceMatrix C0 = initial_two_temperature_covariance(window, temps, params);

    // work in the eigenbasis: B = Q^T C0 Q, and the mean over uniform sample
    // times t_s = s T/(samples-1) of e^{ith} C0 e^{-ith} has entries
    // K(eps_a - eps_b) B_ab with the geometric-sum kernel K below -- exactly
    // the arithmetic mean of the sampled covariances
    Eigen::MatrixXd B = sys.Q.transpose() * C0.M.real() * sys.Q;
    const double step = T / (samples - 1);
    auto kernel = [&](double de) -> cdouble {
        double x = de * step;
        if (std::abs(std::sin(0.5 * x)) < 1e-14) return 1.0;
        return std::exp(cdouble(0.0, 0.5 * (samples - 1) * x)) * std::sin(0.5 * samples * x) /
               (std::sin(0.5 * x) * static_cast<double>(samples));
    };

    const int np = 2 * probe_half_width + 1;
    // probe rows of Q: site s has matrix row s + half_width
    Eigen::MatrixXd Qp(np, n);
    for (int i = 0; i < np; ++i) Qp.row(i) = sys.Q.row(i - probe_half_width + window.half_width);

    // mean_probe = Qp (K o B) Qp^T, streamed column-by-column
    Eigen::MatrixXcd W(np, n);
    Eigen::VectorXcd col(n);
    for (int b = 0; b < n; ++b) {
        for (int a = 0; a < n; ++a) col[a] = kernel(sys.eps[a] - sys.eps[b]) * B(a, b);
        W.col(b) = Qp.cast<cdouble>() * col;
    }
    Eigen::MatrixXcd mean = W * Qp.transpose().cast<cdouble>();

    ErgodicMeanResult out;
    for (int s = -probe_half_width; s <= probe_half_width; ++s) out.mean.sites.push_back(s);
    out.mean.M = std::move(mean);
    out.horizon_warning = (T >= window.half_width - probe_half_width);
    out.T = T;
    out.samples = samples;
    return out;
}

}  // namespace ness

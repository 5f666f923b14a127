#pragma once
// Finite-lattice free dynamics: the tridiagonal hopping Hamiltonian on a
// symmetric window of sites, the decoupled two-temperature initial
// covariance, spectral time evolution, and ergodic (time-averaged) means of
// local correlations for comparison against the steady-state predictions.

#include <Eigen/Dense>

#include "ness/dispersion.hpp"
#include "ness/quasifree.hpp"

namespace ness {

struct LatticeWindow {
    int half_width = 1;  // sites -half_width .. half_width

    int n_sites() const { return 2 * half_width + 1; }
    std::vector<int> sites() const {
        std::vector<int> s;
        for (int i = -half_width; i <= half_width; ++i) s.push_back(i);
        return s;
    }
    void validate() const {
        if (half_width < 1) throw std::domain_error("lattice window: need half_width >= 1");
    }
};

// (h f)(n) = (f(n-1) + f(n+1))/2 - gamma f(n), open ends
Eigen::MatrixXd build_h_matrix(const LatticeWindow& window, const DispersionParams& params);

// closed-form eigensystem of the uniform open chain of n sites: standing
// sine waves with energies cos(j pi/(n+1)) - gamma, returned ascending
struct ChainEigensystem {
    Eigen::VectorXd eps;
    Eigen::MatrixXd Q;  // columns are orthonormal eigenvectors
};
ChainEigensystem chain_eigensystem(int n, const DispersionParams& params);

// decoupled Gibbs halves: the bond between sites -1 and 0 is removed, the
// left block (sites < 0) is thermal at beta_minus, the right block
// (sites >= 0) at beta_plus, matching the momentum-occupation convention
CovarianceMatrix initial_two_temperature_covariance(const LatticeWindow& window,
                                                    const TemperaturePair& temps,
                                                    const DispersionParams& params);

struct EvolutionState {
    CovarianceMatrix C;
    double time = 0.0;
};

// spectral propagator, diagonalized once per window
class Evolver {
  public:
    Evolver(const LatticeWindow& window, const DispersionParams& params);

    // C(t+dt) = e^{i dt h} C(t) e^{-i dt h}  (sign fixed by convergence to
    // the steady state built on the momentum-occupation convention; see the
    // stationarity and ergodic-mean tests)
    EvolutionState evolve(const EvolutionState& state, double dt) const;

    const LatticeWindow& window() const { return window_; }
    const ChainEigensystem& eigensystem() const { return eig_; }

  private:
    LatticeWindow window_;
    ChainEigensystem eig_;
};

struct ErgodicMeanResult {
    CovarianceMatrix mean;       // restricted to the probe sites
    bool horizon_warning = false;  // ballistic front may have reached the wall
    double T = 0.0;
    int samples = 0;
};

// arithmetic mean of C(t_j) over uniform t_j in [0, T] restricted to the
// probe window [-probe_half_width, probe_half_width], evaluated in the
// eigenbasis through the closed-form geometric-sum kernel (algebraically
// identical to averaging the sampled covariances; see tests)
ErgodicMeanResult ergodic_mean(const LatticeWindow& window, const TemperaturePair& temps,
                               const DispersionParams& params, double T, int samples,
                               int probe_half_width);

}  // namespace ness

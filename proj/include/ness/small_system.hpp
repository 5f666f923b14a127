#pragma once
// The d-level system: Hamiltonian spectrum in its eigenbasis, the Hermitian
// coupling matrix Y, the doubled-operator spectrum {E_n - E_m}, the index
// sets attached to each of its eigenvalues, the coupling constant delta0,
// and Gibbs vectors.

#include <Eigen/Dense>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ness {

struct AmbiguousSpectrumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotAnEigenvalueError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class SmallSystem {
  public:
    // energies must be ascending (ties allowed; strictness is an assumption
    // checked by the validator, not a construction constraint); Y must be
    // Hermitian within herm_tol and supplied in the energy eigenbasis
    SmallSystem(Eigen::VectorXd energies, Eigen::MatrixXcd Y, double herm_tol = 1e-14);

    int dim() const { return static_cast<int>(energies_.size()); }
    const Eigen::VectorXd& energies() const { return energies_; }
    const Eigen::MatrixXcd& Y() const { return Y_; }

  private:
    Eigen::VectorXd energies_;
    Eigen::MatrixXcd Y_;
};

// one eigenvalue e of the doubled operator together with all pairs (n,m)
// satisfying E_n - E_m = e
struct LiouvilleLevel {
    double e = 0.0;
    std::vector<std::pair<int, int>> pairs;  // lexicographic order
};

struct LiouvilleSpectrum {
    std::vector<LiouvilleLevel> levels;  // ascending in e
};

// group all d^2 energy differences; differences within pair_tol of each other
// must be exactly equal, otherwise the spectrum is reported ambiguous
LiouvilleSpectrum liouville_spectrum(const SmallSystem& sys, double pair_tol = 1e-9);

struct IndexSets {
    double e = 0.0;
    std::vector<std::vector<int>> N_l_of;  // N_l^{(j)} = {i : E_i - E_j = e}
    std::vector<std::vector<int>> N_r_of;  // N_r^{(i)} = {j : E_i - E_j = e}
    std::vector<int> N_l, N_r;             // unions over j resp. i
    std::vector<int> N_l_c, N_r_c;         // complements in {0..d-1}
};

IndexSets index_sets(const SmallSystem& sys, double e, double pair_tol = 1e-9);

// half the sum of the two minimal restricted-block eigenvalues entering the
// coupling assumption; defined only for nonzero eigenvalues e
double delta0(const SmallSystem& sys, double e, double pair_tol = 1e-9);

// normalized thermal vector c_n = e^{-beta E_n / 2} / sqrt(Z)
Eigen::VectorXd gibbs_vector(const SmallSystem& sys, double beta);

}  // namespace ness

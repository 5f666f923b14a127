#include "ness/small_system.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ness {

SmallSystem::SmallSystem(Eigen::VectorXd energies, Eigen::MatrixXcd Y, double herm_tol)
    : energies_(std::move(energies)), Y_(std::move(Y)) {
    const int d = static_cast<int>(energies_.size());
    if (d < 1) throw std::domain_error("small system: need at least one level");
    if (Y_.rows() != d || Y_.cols() != d)
        throw std::domain_error("small system: Y must be d x d");
    for (int i = 0; i + 1 < d; ++i)
        if (energies_[i + 1] < energies_[i])
            throw std::domain_error("small system: energies must be ascending");
    double herm_dev = (Y_ - Y_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > herm_tol)
        throw std::domain_error("small system: Y not Hermitian, max deviation " +
                                std::to_string(herm_dev));
}

LiouvilleSpectrum liouville_spectrum(const SmallSystem& sys, double pair_tol) {
    const int d = sys.dim();
    struct Entry {
        double e;
        std::pair<int, int> pair;
    };
    std::vector<Entry> entries;
    entries.reserve(static_cast<size_t>(d) * d);
    for (int n = 0; n < d; ++n)
        for (int m = 0; m < d; ++m)
            entries.push_back({sys.energies()[n] - sys.energies()[m], {n, m}});
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.e != b.e) return a.e < b.e;
        return a.pair < b.pair;
    });

    LiouvilleSpectrum spec;
    for (const auto& ent : entries) {
        if (spec.levels.empty() || ent.e - spec.levels.back().e > pair_tol) {
            spec.levels.push_back({ent.e, {ent.pair}});
        } else if (ent.e == spec.levels.back().e) {
            spec.levels.back().pairs.push_back(ent.pair);
        } else {
            // distinct values closer than the grouping tolerance: refusing to
            // merge or separate silently
            throw AmbiguousSpectrumError(
                "energy differences " + std::to_string(spec.levels.back().e) + " and " +
                std::to_string(ent.e) + " are distinct but closer than pair_tol");
        }
    }
    for (auto& lvl : spec.levels) std::sort(lvl.pairs.begin(), lvl.pairs.end());
    return spec;
}

namespace {

const LiouvilleLevel& find_level(const LiouvilleSpectrum& spec, double e, double pair_tol) {
    for (const auto& lvl : spec.levels)
        if (std::abs(lvl.e - e) <= pair_tol) return lvl;
    throw NotAnEigenvalueError(std::to_string(e) +
                               " is not an eigenvalue of the doubled spectrum");
}

std::vector<int> complement(const std::vector<int>& s, int d) {
    std::vector<int> out;
    for (int i = 0; i < d; ++i)
        if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
    return out;
}

// lambda_min of the PSD block M M^dagger where M = A(rows, cols)
double min_eig_restricted(const Eigen::MatrixXcd& A, const std::vector<int>& rows,
                          const std::vector<int>& cols) {
    const int r = static_cast<int>(rows.size()), c = static_cast<int>(cols.size());
    Eigen::MatrixXcd M(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) M(i, j) = A(rows[i], cols[j]);
    if (c == 0) return 0.0;
    Eigen::MatrixXcd B = M * M.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(B);
    return es.eigenvalues().minCoeff();
}

}  // namespace

IndexSets index_sets(const SmallSystem& sys, double e, double pair_tol) {
    const auto spec = liouville_spectrum(sys, pair_tol);
    const auto& lvl = find_level(spec, e, pair_tol);
    const int d = sys.dim();

    IndexSets s;
    s.e = lvl.e;
    s.N_l_of.assign(d, {});
    s.N_r_of.assign(d, {});
    for (const auto& [n, m] : lvl.pairs) {
        s.N_l_of[m].push_back(n);  // n with E_n - E_m = e
        s.N_r_of[n].push_back(m);  // m with E_n - E_m = e
        s.N_l.push_back(n);
        s.N_r.push_back(m);
    }
    auto uniq = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    uniq(s.N_l);
    uniq(s.N_r);
    for (auto& v : s.N_l_of) uniq(v);
    for (auto& v : s.N_r_of) uniq(v);
    s.N_l_c = complement(s.N_l, d);
    s.N_r_c = complement(s.N_r, d);
    return s;
}

double delta0(const SmallSystem& sys, double e, double pair_tol) {
    if (std::abs(e) <= pair_tol)
        throw std::domain_error("delta0 is defined only for nonzero eigenvalues");
    const auto s = index_sets(sys, e, pair_tol);
    const Eigen::MatrixXcd Ybar = sys.Y().conjugate();

    // min over n in N_l of lambda_min( p_{N_r^{(n)}} Ybar p_{N_r^c} Ybar p_{N_r^{(n)}} )
    double min1 = std::numeric_limits<double>::infinity();
    for (int n : s.N_l) min1 = std::min(min1, min_eig_restricted(Ybar, s.N_r_of[n], s.N_r_c));
    // min over m in N_r of lambda_min( p_{N_l^{(m)}} Y p_{N_l^c} Y p_{N_l^{(m)}} )
    double min2 = std::numeric_limits<double>::infinity();
    for (int m : s.N_r) min2 = std::min(min2, min_eig_restricted(sys.Y(), s.N_l_of[m], s.N_l_c));

    return 0.5 * (min1 + min2);
}

Eigen::VectorXd gibbs_vector(const SmallSystem& sys, double beta) {
    if (!(beta >= 0)) throw std::domain_error("gibbs_vector: beta must be nonnegative");
    const int d = sys.dim();
    const double e_min = sys.energies().minCoeff();
    Eigen::VectorXd c(d);
    for (int n = 0; n < d; ++n) c[n] = std::exp(-0.5 * beta * (sys.energies()[n] - e_min));
    return c / c.norm();
}

}  // namespace ness

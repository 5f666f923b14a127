#pragma once
// Machine checks of the model assumptions for a concrete instance: form
// factor support and smoothness, resonance shells inside the admissible
// region, spectral nondegeneracy with a form-factor lower bound, and the
// coupling constant delta0 -- plus the two-level reference instance.

#include <string>
#include <vector>

#include "json.hpp"
#include "ness/dispersion.hpp"
#include "ness/level_shift.hpp"
#include "ness/quasifree.hpp"
#include "ness/small_system.hpp"

namespace ness {

struct ModelInstance {
    DispersionParams params;
    SmallSystem sys;
    FormFactor f;
    TemperaturePair temps;
    double v = 0.25;       // support-region level
    double a_bound = 0.5;  // required lower bound for |f| on resonance shells
    double lambda = 0.01;  // coupling constant (carried, not checked)
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> witnesses;
    std::vector<std::string> warnings;
    nlohmann::ordered_json details;  // measured numbers (deterministic key order)
};

struct ValidationReport {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    nlohmann::ordered_json to_json(const ModelInstance& inst) const;
};

// support of f inside the admissible region and finiteness of the third
// generator power on f (grid-refinement growth study)
CheckResult check_support_and_smoothness(const ModelInstance& inst);

// every difference of distinct doubled-spectrum eigenvalues must have a
// nonempty momentum shell lying inside the admissible region
CheckResult check_resonances(const ModelInstance& inst);

// strictly ascending energies and |f| >= a_bound on every shell point
CheckResult check_nondegeneracy_and_formfactor(const ModelInstance& inst);

// delta0 > 0 for every nonzero eigenvalue, and no vanishing off-diagonal
// coupling matrix element
CheckResult check_coupling(const ModelInstance& inst);

ValidationReport validate_instance(const ModelInstance& inst);

// the two-level reference instance: energies (-b, b), off-diagonal coupling,
// gamma = 0, and an even momentum plateau equal to 1 near every resonance
// shell; requires 0 < b < cos(k_v)/4 with sin^2(k_v) = v
ModelInstance build_appendix_instance(double v, double b, const TemperaturePair& temps);

}  // namespace ness

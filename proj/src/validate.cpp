#include "ness/validate.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "ness/radial.hpp"

namespace ness {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// norms of p^3 f across successive grid refinements; the finite-difference
// step is tied to the node spacing so genuine non-smoothness shows up as
// unbounded growth
struct P3Study {
    std::vector<double> norms;
    double max_ratio = 0.0;
    bool divergent = false;
};

P3Study p3_refinement_study(const RadialFunction& f0) {
    P3Study study;
    double total_len = 0.0;
    if (f0.has_declared_support())
        for (const auto& iv : f0.support()) total_len += iv.hi - iv.lo;
    else
        total_len = 2.0 * f0.grid().t_max;

    for (int level = 0; level < 3; ++level) {
        int nodes = f0.grid().nodes << level;
        double spacing = total_len / nodes;
        RadialFunction f = f0.with_grid({f0.grid().t_max, nodes});
        if (f.finite_difference_only()) f = f.with_fd_step(spacing);
        study.norms.push_back(norm_mu(apply_p(apply_p(apply_p(f)))));
    }
    for (size_t i = 0; i + 1 < study.norms.size(); ++i) {
        if (study.norms[i] == 0.0) continue;
        study.max_ratio = std::max(study.max_ratio, study.norms[i + 1] / study.norms[i]);
    }
    study.divergent = study.max_ratio > 4.0;
    return study;
}

}  // namespace

CheckResult check_support_and_smoothness(const ModelInstance& inst) {
    CheckResult res;
    res.name = "support_and_smoothness";
    res.pass = true;
    const SupportRegion region = support_region(inst.v);
    const RadialFunction& rf = inst.f.radial();
    const double tol = 1e-12;

    if (rf.has_declared_support()) {
        for (const auto& iv : rf.support()) {
            bool in_pos = iv.lo >= region.t_lo - tol && iv.hi <= region.t_hi + tol;
            bool in_neg = iv.lo >= -region.t_hi - tol && iv.hi <= -region.t_lo + tol;
            if (!in_pos && !in_neg) {
                res.pass = false;
                res.witnesses.push_back("declared support [" + fmt(iv.lo) + ", " + fmt(iv.hi) +
                                        "] escapes the admissible region |t| in [" +
                                        fmt(region.t_lo) + ", " + fmt(region.t_hi) + "]");
            }
        }
    }
    // grid scan: the function must vanish off the admissible region even if
    // the declared support metadata is wrong or absent
    const int scan_n = 4001;
    const double t_max = rf.grid().t_max;
    int violations = 0;
    for (int i = 0; i < scan_n; ++i) {
        double t = -t_max + 2.0 * t_max * i / (scan_n - 1);
        if (region.contains(t)) continue;
        double a = std::abs(rf.eval(t));
        if (a > 1e-12) {
            res.pass = false;
            if (++violations <= 3)
                res.witnesses.push_back("f(" + fmt(t) + ") = " + fmt(a) +
                                        " outside the admissible region");
        }
    }

    P3Study study = p3_refinement_study(rf);
    if (study.divergent) {
        res.pass = false;
        res.witnesses.push_back("p^3 norm grows under grid refinement (ratio " +
                                fmt(study.max_ratio) + " > 4): f not in the generator domain");
    }
    if (rf.finite_difference_only())
        res.warnings.push_back(
            "no analytic derivative rules: p^3 used finite differences (degraded tolerance)");

    res.details["p3_norms"] = study.norms;
    res.details["p3_max_refinement_ratio"] = study.max_ratio;
    res.details["region_t_lo"] = region.t_lo;
    res.details["region_t_hi"] = region.t_hi;
    return res;
}

CheckResult check_resonances(const ModelInstance& inst) {
    CheckResult res;
    res.name = "resonances";
    res.pass = true;
    const SupportRegion region = support_region(inst.v);
    const auto spec = liouville_spectrum(inst.sys);

    for (const auto& li : spec.levels)
        for (const auto& lj : spec.levels) {
            if (li.e == lj.e) continue;
            double target = li.e - lj.e;
            MomentumShell shell;
            try {
                shell = solve_shell(target, inst.params);
            } catch (const BandEdgeError&) {
                res.pass = false;
                res.witnesses.push_back("eigenvalue difference " + fmt(target) +
                                        " puts the shell at the band edge");
                continue;
            }
            if (shell.empty()) {
                res.pass = false;
                res.witnesses.push_back("no momentum shell for eigenvalue difference " +
                                        fmt(target));
                continue;
            }
            const ShellRoot& root = shell.roots.front();  // nonnegative root
            double t = t_of_k(root.k_star);
            if (!region.contains(t)) {
                res.pass = false;
                res.witnesses.push_back("shell k = " + fmt(root.k_star) +
                                        " for difference " + fmt(target) +
                                        " lies outside the admissible region (t = " + fmt(t) +
                                        ")");
            }
            if (root.weight > 1e3)
                res.warnings.push_back("marginal shell for difference " + fmt(target) +
                                       ": delta weight " + fmt(root.weight) + " exceeds 1e3");
        }
    return res;
}

CheckResult check_nondegeneracy_and_formfactor(const ModelInstance& inst) {
    CheckResult res;
    res.name = "nondegeneracy_and_formfactor";
    res.pass = true;

    const auto& E = inst.sys.energies();
    for (int i = 0; i + 1 < inst.sys.dim(); ++i)
        if (!(E[i + 1] > E[i])) {
            res.pass = false;
            res.witnesses.push_back("degenerate energies E_" + std::to_string(i) + " = E_" +
                                    std::to_string(i + 1) + " = " + fmt(E[i]));
        }

    const auto spec = liouville_spectrum(inst.sys);
    double measured_min = std::numeric_limits<double>::infinity();
    for (const auto& li : spec.levels)
        for (const auto& lj : spec.levels) {
            if (li.e == lj.e) continue;
            MomentumShell shell;
            try {
                shell = solve_shell(li.e - lj.e, inst.params);
            } catch (const BandEdgeError&) {
                continue;  // witnessed by the resonance check
            }
            for (const auto& root : shell.roots) {
                double a = std::abs(inst.f.at_k(root.k_star));
                if (a < measured_min) measured_min = a;
                if (a < inst.a_bound) {
                    res.pass = false;
                    res.witnesses.push_back("|f(" + fmt(root.k_star) + ")| = " + fmt(a) +
                                            " below the required bound " + fmt(inst.a_bound));
                }
            }
        }
    res.details["measured_min_abs_f_on_shells"] =
        std::isfinite(measured_min) ? measured_min : 0.0;
    res.details["required_a_bound"] = inst.a_bound;
    return res;
}

CheckResult check_coupling(const ModelInstance& inst) {
    CheckResult res;
    res.name = "coupling";
    res.pass = true;

    const auto spec = liouville_spectrum(inst.sys);
    for (const auto& lvl : spec.levels) {
        if (lvl.e == 0.0) continue;
        double d0 = delta0(inst.sys, lvl.e);
        res.details["delta0_at_" + fmt(lvl.e)] = d0;
        if (!(d0 > 1e-12)) {
            res.pass = false;
            res.witnesses.push_back("delta0(" + fmt(lvl.e) + ") = " + fmt(d0) +
                                    " is not strictly positive");
        }
    }
    for (int m = 0; m < inst.sys.dim(); ++m)
        for (int n = 0; n < inst.sys.dim(); ++n) {
            if (m == n) continue;
            if (std::abs(inst.sys.Y()(m, n)) == 0.0) {
                res.pass = false;
                res.witnesses.push_back("coupling matrix element Y(" + std::to_string(m) + "," +
                                        std::to_string(n) + ") vanishes");
            }
        }
    return res;
}

ValidationReport validate_instance(const ModelInstance& inst) {
    ValidationReport rep;
    rep.checks.push_back(check_support_and_smoothness(inst));
    rep.checks.push_back(check_resonances(inst));
    rep.checks.push_back(check_nondegeneracy_and_formfactor(inst));
    rep.checks.push_back(check_coupling(inst));
    return rep;
}

nlohmann::ordered_json ValidationReport::to_json(const ModelInstance& inst) const {
    nlohmann::ordered_json j;
    j["instance"]["gamma"] = inst.params.gamma;
    j["instance"]["energies"] = std::vector<double>(
        inst.sys.energies().data(), inst.sys.energies().data() + inst.sys.dim());
    j["instance"]["beta_plus"] = inst.temps.beta_plus;
    j["instance"]["beta_minus"] = inst.temps.beta_minus;
    j["instance"]["v"] = inst.v;
    j["instance"]["a_bound"] = inst.a_bound;
    j["instance"]["lambda"] = inst.lambda;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["witnesses"] = c.witnesses;
        cj["warnings"] = c.warnings;
        cj["details"] = c.details;
        j["checks"].push_back(cj);
    }
    j["all_pass"] = all_pass();
    return j;
}

ModelInstance build_appendix_instance(double v, double b, const TemperaturePair& temps) {
    if (!(v > 0.0 && v < 1.0))
        throw std::domain_error("reference instance: v must lie in (0,1)");
    const double k_v = std::asin(std::sqrt(v));
    if (!(b > 0.0 && b < 0.25 * std::cos(k_v)))
        throw std::domain_error("reference instance: need 0 < b < cos(k_v)/4 = " +
                                std::to_string(0.25 * std::cos(k_v)));
    temps.validate();

    const double k4 = std::acos(4.0 * b);  // innermost shell momentum
    // the plateau must be identically 1 around every shell point yet keep its
    // support inside the admissible region; the neighborhood radius shrinks
    // near the admissibility boundary where the shells approach the region's
    // edge
    const double gap = k4 - k_v;
    const double r = std::min(0.02, 0.25 * gap);
    FormFactor f(RadialFunction::even_k_plateau(k4 - 2.0 * r, M_PI - k4 + 2.0 * r, r));

    Eigen::VectorXd energies(2);
    energies << -b, b;
    Eigen::MatrixXcd Y(2, 2);
    Y << 0.0, 1.0, 1.0, 0.0;

    return ModelInstance{DispersionParams{0.0}, SmallSystem(energies, Y), f, temps, v, 0.9,
                         0.01};
}

}  // namespace ness

#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "ness/level_shift.hpp"
#include "ness/validate.hpp"

using namespace ness;
using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

namespace {

SmallSystem two_level(double b) {
    VectorXd e(2);
    e << -b, b;
    MatrixXcd y(2, 2);
    y << 0.0, 1.0, 1.0, 0.0;
    return SmallSystem(e, y);
}

double quad_form(const LevelShiftOperator& op, const VectorXcd& x) {
    return (x.adjoint() * op.G * x).value().real();
}

}  // namespace

TEST_CASE("single-pair level operator has the closed-form norm") {
    // two levels at +-b with swap coupling and a flat form factor: the
    // eigenspace of e = 2b is one-dimensional and the four shell
    // contributions sum occupations pairwise to one, leaving
    //   Gamma(2b) = 4 / sqrt(1 - (2b)^2)
    // independent of the temperatures.
    const double b = 0.1;
    SmallSystem sys = two_level(b);
    FormFactor flat = FormFactor::constant_one();
    DispersionParams params{0.0};

    for (auto temps : {TemperaturePair{1.0, 1.0}, TemperaturePair{2.0, 1.0},
                       TemperaturePair{0.4, 3.0}}) {
        LevelShiftOperator op = assemble_gamma(2.0 * b, sys, flat, temps, params);
        REQUIRE(op.basis.size() == 1);
        CHECK(op.basis[0] == std::pair<int, int>{1, 0});
        double expected = 4.0 / std::sqrt(1.0 - 4.0 * b * b);
        CHECK(std::abs(op.G(0, 0).real() - expected) <= 1e-12);
        CHECK(std::abs(op.G(0, 0).imag()) <= 1e-15);
    }
    // frozen digits of 4/sqrt(0.96)
    LevelShiftOperator op = assemble_gamma(0.2, sys, flat, TemperaturePair{2.0, 1.0}, params);
    CHECK(std::abs(op.G(0, 0).real() - 4.08248290463863) <= 1e-13);
}

TEST_CASE("level operator rejects values off the doubled spectrum") {
    SmallSystem sys = two_level(0.1);
    FormFactor flat = FormFactor::constant_one();
    CHECK_THROWS_AS(
        assemble_gamma(0.37, sys, flat, TemperaturePair{1.0, 1.0}, DispersionParams{0.0}),
        NotAnEigenvalueError);
}

TEST_CASE("level operator surfaces band-edge shells as hard errors") {
    // energy difference 1.0 equals the half band width: the shell for the
    // zero eigenvalue sits exactly at the band edge
    VectorXd e(2);
    e << -0.5, 0.5;
    MatrixXcd y(2, 2);
    y << 0.0, 1.0, 1.0, 0.0;
    SmallSystem sys(e, y);
    FormFactor flat = FormFactor::constant_one();
    CHECK_THROWS_AS(
        assemble_gamma(0.0, sys, flat, TemperaturePair{1.0, 1.0}, DispersionParams{0.0}),
        BandEdgeError);
}

TEST_CASE("zero-eigenvalue operator agrees with the direct quadratic form") {
    struct Case {
        VectorXd e;
        MatrixXcd y;
        double gamma;
        TemperaturePair temps;
    };
    std::vector<Case> cases;
    {
        VectorXd e(2);
        e << -0.1, 0.1;
        MatrixXcd y(2, 2);
        y << 0.0, 1.0, 1.0, 0.0;
        cases.push_back({e, y, 0.0, {2.0, 1.0}});
    }
    {
        VectorXd e(2);
        e << -0.3, 0.25;
        MatrixXcd y(2, 2);
        y << 0.5, cdouble(0.3, 0.4), cdouble(0.3, -0.4), -0.2;
        cases.push_back({e, y, 0.25, {1.7, 0.6}});
    }
    {
        VectorXd e(3);
        e << -0.3, 0.05, 0.45;
        MatrixXcd y = MatrixXcd::Ones(3, 3);
        cases.push_back({e, y, 0.0, {2.0, 1.0}});
    }
    {
        VectorXd e(3);
        e << -0.25, 0.125, 0.5;
        MatrixXcd y(3, 3);
        y << 0.1, cdouble(1.0, -0.5), cdouble(0.2, 0.1),  //
            cdouble(1.0, 0.5), -0.3, cdouble(0.0, 0.8),   //
            cdouble(0.2, -0.1), cdouble(0.0, -0.8), 0.7;
        cases.push_back({e, y, -0.2, {0.9, 1.4}});
    }
    {
        VectorXd e(4);
        e << -0.4, -0.1, 0.2, 0.45;
        MatrixXcd y(4, 4);
        y << 0.0, 1.0, 0.5, 0.25,  //
            1.0, 0.2, 2.0, 0.5,    //
            0.5, 2.0, -0.1, 1.0,   //
            0.25, 0.5, 1.0, 0.3;
        cases.push_back({e, y, 0.1, {1.0, 1.0}});
    }

    FormFactor f = FormFactor::bump_on_interval(0.05, 8.0);
    std::mt19937 rng(77001u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (const auto& c : cases) {
        SmallSystem sys(c.e, c.y);
        DispersionParams params{c.gamma};
        LevelShiftOperator op = assemble_gamma(0.0, sys, f, c.temps, params);
        REQUIRE(static_cast<int>(op.basis.size()) == sys.dim());

        for (int trial = 0; trial < 100; ++trial) {
            VectorXcd x(sys.dim());
            for (int i = 0; i < sys.dim(); ++i) x[i] = cdouble(u(rng), u(rng));
            double via_matrix = quad_form(op, x);
            double direct = gamma0_quadratic_form(x, sys, f, c.temps, params);
            CHECK(std::abs(via_matrix - direct) <= 1e-10 * std::max(1.0, std::abs(direct)));
        }
    }
}

TEST_CASE("level operators are Hermitian and positive semidefinite") {
    ModelInstance inst = build_appendix_instance(0.25, 0.1, TemperaturePair{2.0, 1.0});
    for (double e : {-0.2, 0.0, 0.2}) {
        LevelShiftOperator op =
            assemble_gamma(e, inst.sys, inst.f, inst.temps, inst.params);
        CHECK((op.G - op.G.adjoint()).cwiseAbs().maxCoeff() <= 1e-13);
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(op.G);
        double norm = es.eigenvalues().cwiseAbs().maxCoeff();
        CHECK(es.eigenvalues().minCoeff() >= -1e-12 * std::max(1.0, norm));
    }
}

TEST_CASE("a vanishing form factor produces the zero operator and no gap") {
    SmallSystem sys = two_level(0.1);
    FormFactor zero(RadialFunction::constant(0.0));
    LevelShiftOperator op =
        assemble_gamma(0.0, sys, zero, TemperaturePair{2.0, 1.0}, DispersionParams{0.0});
    CHECK(op.G.cwiseAbs().maxCoeff() == 0.0);
    KernelReport rep = kernel_report(op);
    CHECK(rep.kernel_dim == 2);
    CHECK(rep.gamma_e == 0.0);
    CHECK(!rep.gap_defined);
}

TEST_CASE("equilibrium zero-eigenvalue kernel is the thermal vector") {
    for (double beta : {0.5, 1.0, 2.0}) {
        ModelInstance inst = build_appendix_instance(0.25, 0.1, TemperaturePair{beta, beta});
        LevelShiftOperator op =
            assemble_gamma(0.0, inst.sys, inst.f, inst.temps, inst.params);
        KernelReport rep = kernel_report(op, 1e-10);
        REQUIRE(rep.kernel_dim == 1);
        CHECK(rep.gap_defined);
        CHECK(rep.gamma_e > 1e-3);

        VectorXd c = gibbs_vector(inst.sys, beta);
        cdouble overlap = 0.0;
        for (int i = 0; i < 2; ++i) overlap += c[i] * std::conj(rep.kernel_basis(i, 0));
        CHECK(std::abs(overlap) > 1.0 - 1e-8);
    }
}

TEST_CASE("unequal temperatures close the kernel at every eigenvalue") {
    ModelInstance inst = build_appendix_instance(0.25, 0.1, TemperaturePair{2.0, 1.0});
    for (double e : {-0.2, 0.0, 0.2}) {
        LevelShiftOperator op =
            assemble_gamma(e, inst.sys, inst.f, inst.temps, inst.params);
        KernelReport rep = kernel_report(op);
        CHECK(rep.kernel_dim == 0);
        CHECK(rep.min_eig > 1e-8);
        CHECK(rep.gamma_e == rep.min_eig);
    }
}

TEST_CASE("kernel report refuses non-Hermitian input") {
    LevelShiftOperator op;
    op.e = 0.0;
    op.basis = {{0, 0}, {1, 1}};
    op.G = MatrixXcd::Zero(2, 2);
    op.G(0, 1) = 1.0;  // not Hermitian
    CHECK_THROWS_AS(kernel_report(op), std::domain_error);
}

TEST_CASE("phase changes of the form factor leave the operator invariant") {
    ModelInstance inst = build_appendix_instance(0.25, 0.1, TemperaturePair{2.0, 1.0});
    FormFactor rotated(cdouble(std::cos(0.7), std::sin(0.7)) * inst.f.radial());
    LevelShiftOperator a = assemble_gamma(0.2, inst.sys, inst.f, inst.temps, inst.params);
    LevelShiftOperator b = assemble_gamma(0.2, inst.sys, rotated, inst.temps, inst.params);
    CHECK((a.G - b.G).cwiseAbs().maxCoeff() <= 1e-13);
}

TEST_CASE("gap scan shows quadratic closing of the smallest eigenvalue") {
    ModelInstance inst = build_appendix_instance(0.25, 0.1, TemperaturePair{1.0, 1.0});
    std::vector<double> deltas = {0.001, 0.002, 0.005, 0.01, 0.02, 0.05};
    GapScanResult scan = gap_scan(inst.sys, inst.f, inst.params, 1.0, deltas);
    REQUIRE(scan.rows.size() == deltas.size());
    for (size_t i = 0; i < scan.rows.size(); ++i) {
        CHECK(scan.rows[i].delta_beta == deltas[i]);
        CHECK(scan.rows[i].gamma0 > 0.0);
        if (i > 0) CHECK(scan.rows[i].gamma0 > scan.rows[i - 1].gamma0);
    }
    CHECK(scan.slope > 1.95);
    CHECK(scan.slope < 2.05);

    // the equal-temperature row sits on the kernel: eigensolver noise only
    GapScanResult eq = gap_scan(inst.sys, inst.f, inst.params, 1.0, {0.0});
    REQUIRE(eq.rows.size() == 1);
    CHECK(std::abs(eq.rows[0].gamma0) <= 1e-10);
}

TEST_CASE("gap scan refuses non-positive inverse temperatures") {
    ModelInstance inst = build_appendix_instance(0.25, 0.1, TemperaturePair{1.0, 1.0});
    CHECK_THROWS_AS(gap_scan(inst.sys, inst.f, inst.params, 0.01, {0.1}), std::domain_error);
}

TEST_CASE("exact rationals normalize, compare and scale without rounding") {
    CHECK(Rational::of(100, 26) == Rational::of(50, 13));
    CHECK(Rational::of(-3, -6) == Rational::of(1, 2));
    CHECK(Rational::of(3, -6) == Rational::of(-1, 2));
    CHECK(Rational::of(0, 5) == Rational::of(0, 1));
    CHECK_THROWS_AS(Rational::of(1, 0), std::domain_error);

    CHECK(Rational::of(100, 26) < Rational::of(100, 18));
    CHECK(!(Rational::of(100, 18) < Rational::of(100, 26)));
    CHECK(Rational::of(-100, 182) < Rational::of(0, 1));
    CHECK(Rational::of(100, 182).times(2) == Rational::of(100, 91));
    CHECK(Rational::of(50, 13).str() == "50/13");
}

TEST_CASE("threshold terms carry the fixed exponent lattice") {
    const auto& terms = lambda1_terms();
    REQUIRE(terms.size() == 4);
    CHECK(terms[0].v_exp == Rational::of(50, 13));    // v^(100/26)
    CHECK(terms[1].v_exp == Rational::of(50, 91));    // (v/g)^(100/182)
    CHECK(terms[1].g_exp == Rational::of(-50, 91));
    CHECK(terms[2].g_exp == Rational::of(100, 11));   // g^(100/11)
    CHECK(terms[3].v_exp == Rational::of(50, 9));     // (v*g)^(100/18)
    CHECK(terms[3].g_exp == Rational::of(50, 9));
}

TEST_CASE("threshold scaling takes the minimum term and respects its domain") {
    double v = 0.5, g = 0.5, C = 2.0;
    double expect = C * std::min({std::pow(v, 100.0 / 26.0),
                                  std::pow(v / g, 100.0 / 182.0),
                                  std::pow(g, 100.0 / 11.0),
                                  std::pow(v * g, 100.0 / 18.0)});
    CHECK(std::abs(lambda1_scaling(v, g, C) - expect) <= 1e-15 * expect);

    CHECK_THROWS_AS(lambda1_scaling(0.0, 0.5, 1.0), std::domain_error);
    CHECK_THROWS_AS(lambda1_scaling(0.5, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(lambda1_scaling(0.5, 0.5, 0.0), std::domain_error);
}

TEST_CASE("asymptotically active terms are found by exact comparison") {
    // v -> 0 with the gap fixed: the product term dominates, exponent 50/9
    auto [vi, vexp] = lambda1_smallv_active();
    CHECK(vi == 3);
    CHECK(vexp == Rational::of(50, 9));

    // gap -> 0 as delta^2 with v fixed: the pure-gap term wins, exponent 200/11
    auto [di, dexp] = lambda1_smalldelta_active();
    CHECK(di == 2);
    CHECK(dexp == Rational::of(200, 11));

    // numerical cross-check of the active-term selector in both regimes
    CHECK(lambda1_active_index(1e-6, 0.3) == 3);
    CHECK(lambda1_active_index(0.3, 1e-6) == 2);
}

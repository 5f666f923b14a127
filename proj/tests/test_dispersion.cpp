#include "doctest.h"

#include <cmath>
#include <limits>
#include <vector>

#include "ness/dispersion.hpp"

using namespace ness;

namespace {

// Independent oracle: bisection root of a continuous function with a sign
// change on [a, b].  Used to cross-check every closed form in this module.
template <typename F>
double bisect(F f, double a, double b) {
    double fa = f(a);
    REQUIRE(fa * f(b) < 0.0);
    for (int i = 0; i < 200; ++i) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (fm == 0.0) return m;
        if (fa * fm < 0.0) {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

TEST_CASE("band function evaluates cos(k) - gamma") {
    DispersionParams flat{0.0};
    CHECK(omega(0.0, flat) == 1.0);
    CHECK(std::abs(omega(M_PI / 2.0, flat)) < 1e-16);
    CHECK(omega(M_PI, flat) == -1.0);

    DispersionParams shifted{0.25};
    CHECK(std::abs(omega(M_PI / 3.0, shifted) - 0.25) < 1e-15);
}

TEST_CASE("band parameters outside (-1,1) are rejected at construction") {
    CHECK_THROWS_AS(DispersionParams{1.0}, std::domain_error);
    CHECK_THROWS_AS(DispersionParams{-1.0}, std::domain_error);
    CHECK_THROWS_AS(DispersionParams{1.2}, std::domain_error);
    CHECK_THROWS_AS(DispersionParams{-7.0}, std::domain_error);
    CHECK_NOTHROW(DispersionParams{0.999999});
    CHECK_NOTHROW(DispersionParams{-0.999999});
}

TEST_CASE("half-angle coordinate round-trips and hits its pole") {
    for (double k : {-3.0, -1.2, -0.3, 0.0, 0.4, 1.9, 3.1}) {
        CHECK(std::abs(k_of_t(t_of_k(k)) - k) < 1e-14);
    }
    for (double t : {-25.0, -1.0, -0.01, 0.0, 0.7, 3.0, 120.0}) {
        CHECK(std::abs(t_of_k(k_of_t(t)) - t) < 1e-12 * std::max(1.0, std::abs(t)));
    }
    CHECK(t_of_k(0.0) == 0.0);
    CHECK(std::abs(t_of_k(M_PI / 2.0) - 1.0) < 1e-15);
    CHECK_THROWS_AS(t_of_k(M_PI), std::domain_error);
    CHECK_THROWS_AS(t_of_k(-M_PI), std::domain_error);
    CHECK_THROWS_AS(t_of_k(4.0), std::domain_error);
}

TEST_CASE("sin^2 profile in the half-angle variable matches sin^2(k)") {
    // s1(tan(k/2)) must reproduce sin^2(k) across the whole band.
    const int n = 20001;
    double max_dev = 0.0;
    for (int i = 0; i < n; ++i) {
        double k = -M_PI + 1e-6 + (2.0 * M_PI - 2e-6) * i / (n - 1);
        double t = t_of_k(k);
        double s = std::sin(k);
        max_dev = std::max(max_dev, std::abs(s1(t) - s * s));
    }
    CHECK(max_dev <= 1e-12);

    CHECK(s1(0.0) == 0.0);
    CHECK(s1(1.0) == 1.0);
    CHECK(std::abs(s1(t_of_k(M_PI / 3.0)) - 0.75) < 1e-15);
}

TEST_CASE("scaling-derivative chain: each profile is -t d/dt of the previous") {
    // Oracle: central finite differences of s1 and s2, step tuned so the
    // truncation error sits far below the tolerance.
    const double h = 1e-5;
    for (double t : {-4.0, -1.3, -0.7, 0.35, 1.0, 2.2, 6.0}) {
        double ds1 = (s1(t + h) - s1(t - h)) / (2.0 * h);
        double ds2 = (s2(t + h) - s2(t - h)) / (2.0 * h);
        CHECK(std::abs(-t * ds1 - s2(t)) < 1e-6);
        CHECK(std::abs(-t * ds2 - s3(t)) < 1e-6);
    }
    // Fixed points of the chain at t = 0.
    CHECK(s2(0.0) == 0.0);
    CHECK(s3(0.0) == 0.0);
    // s2 vanishes at the maximum of s1.
    CHECK(std::abs(s2(1.0)) < 1e-15);
}

TEST_CASE("velocity support region matches a root-finding oracle") {
    // Oracle: bracket the boundary of { t > 0 : s1(t) >= v } by bisection,
    // using that s1 increases on (0,1) and decreases on (1,inf).
    for (double v : {0.1, 0.25, 0.5, 0.8, 0.99}) {
        double lo_oracle = bisect([v](double t) { return s1(t) - v; }, 1e-12, 1.0);
        double hi_oracle = bisect([v](double t) { return s1(t) - v; }, 1.0, 1e7);
        SupportRegion r = support_region(v);
        CHECK(std::abs(r.t_lo - lo_oracle) < 1e-9 * std::max(1.0, lo_oracle));
        CHECK(std::abs(r.t_hi - hi_oracle) < 1e-9 * std::max(1.0, hi_oracle));
    }
}

TEST_CASE("velocity support region closed-form values and invariants") {
    SupportRegion r = support_region(0.5);
    CHECK(std::abs(r.t_lo - (std::sqrt(2.0) - 1.0)) < 1e-12);
    CHECK(std::abs(r.t_hi - (std::sqrt(2.0) + 1.0)) < 1e-12);

    for (double v : {0.05, 0.2, 0.5, 0.77, 0.95}) {
        SupportRegion s = support_region(v);
        // The region is a reciprocal pair around t = 1.
        CHECK(std::abs(s.t_lo * s.t_hi - 1.0) <= 1e-12);
        CHECK(s.t_lo < 1.0);
        CHECK(s.t_hi > 1.0);
        CHECK(s.contains(1.0));
        // Boundary values sit on the level set.
        CHECK(std::abs(s1(s.t_lo) - v) < 1e-10);
        CHECK(std::abs(s1(s.t_hi) - v) < 1e-10);
        // Momentum-space description: sin^2(k) >= v starts at asin(sqrt(v)).
        CHECK(std::abs(s.k_min() - std::asin(std::sqrt(v))) < 1e-12);
        CHECK(std::abs(s.k_max() - (M_PI - std::asin(std::sqrt(v)))) < 1e-12);
    }

    // Shrinking v grows the region (nesting).
    SupportRegion a = support_region(0.3), b = support_region(0.6);
    CHECK(a.t_lo < b.t_lo);
    CHECK(a.t_hi > b.t_hi);

    CHECK_THROWS_AS(support_region(0.0), std::domain_error);
    CHECK_THROWS_AS(support_region(1.0), std::domain_error);
    CHECK_THROWS_AS(support_region(-0.3), std::domain_error);
    CHECK_THROWS_AS(support_region(2.0), std::domain_error);
}

TEST_CASE("momentum shell matches a bisection oracle and carries unit flux") {
    DispersionParams p{0.25};
    for (double x : {-1.1, -0.6, 0.0, 0.3, 0.7}) {
        double c = x + p.gamma;
        if (std::abs(c) >= 1.0) continue;
        // Oracle: cos(k) - gamma = x has a unique root in (0, pi).
        double k_oracle = bisect([&](double k) { return omega(k, p) - x; }, 1e-12, M_PI - 1e-12);
        MomentumShell shell = solve_shell(x, p);
        REQUIRE(shell.roots.size() == 2);
        CHECK(shell.roots[0].k_star >= 0.0);
        CHECK(std::abs(shell.roots[0].k_star - k_oracle) < 1e-12);
        CHECK(shell.roots[1].k_star == -shell.roots[0].k_star);
        CHECK(shell.roots[1].weight == shell.roots[0].weight);
        // Weight is the inverse band slope; flux through the shell is one.
        for (const ShellRoot& root : shell.roots) {
            CHECK(std::abs(omega(root.k_star, p) - x) <= 1e-12);
            CHECK(std::abs(root.weight * std::abs(std::sin(root.k_star)) - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("momentum shell at a half-filled band") {
    MomentumShell shell = solve_shell(0.0, DispersionParams{0.0});
    REQUIRE(shell.roots.size() == 2);
    CHECK(std::abs(shell.roots[0].k_star - M_PI / 2.0) < 1e-15);
    CHECK(std::abs(shell.roots[0].weight - 1.0) < 1e-15);

    MomentumShell third = solve_shell(0.5, DispersionParams{0.0});
    REQUIRE(third.roots.size() == 2);
    CHECK(std::abs(third.roots[0].k_star - M_PI / 3.0) < 1e-14);
    CHECK(std::abs(third.roots[0].weight - 2.0 / std::sqrt(3.0)) < 1e-13);
}

TEST_CASE("momentum shell is empty off the band and refuses its edges") {
    DispersionParams p{0.0};
    CHECK(solve_shell(2.0, p).empty());
    CHECK(solve_shell(-1.5, p).empty());
    CHECK(solve_shell(2.0, p).roots.empty());

    // Within edge_tol of the band edge the slope diverges: hard error.
    CHECK_THROWS_AS(solve_shell(1.0, p), BandEdgeError);
    CHECK_THROWS_AS(solve_shell(-1.0, p), BandEdgeError);
    CHECK_THROWS_AS(solve_shell(1.0 - 1e-10, p), BandEdgeError);
    CHECK_THROWS_AS(solve_shell(-1.0 + 1e-10, p), BandEdgeError);
    // Just outside the guard band the solve still succeeds, with a large weight.
    MomentumShell near_edge = solve_shell(1.0 - 1e-6, p);
    REQUIRE(near_edge.roots.size() == 2);
    CHECK(near_edge.roots[0].weight > 500.0);

    // The guard tracks the shifted band: target = 1 - gamma sits at the edge.
    DispersionParams shifted{0.25};
    CHECK_THROWS_AS(solve_shell(0.75, shifted), BandEdgeError);
    CHECK(!solve_shell(0.5, shifted).empty());
}

TEST_CASE("shell solves stay consistent across a dense target sweep") {
    DispersionParams p{-0.3};
    const int n = 2000;
    for (int i = 0; i < n; ++i) {
        double x = -0.69 + (i + 0.5) * (1.38 / n);  // stays clear of both edges
        MomentumShell shell = solve_shell(x, p);
        REQUIRE(shell.roots.size() == 2);
        for (const ShellRoot& root : shell.roots) {
            CHECK(std::abs(omega(root.k_star, p) - x) <= 1e-12);
            CHECK(std::abs(root.weight * std::abs(std::sin(root.k_star)) - 1.0) <= 1e-12);
        }
    }
}

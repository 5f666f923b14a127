#pragma once
// Gauss-Legendre quadrature: fixed composite panels for weighted norms on the
// real line, and an adaptive bisection rule for momentum-space integrals with
// a relative-tolerance target.  Failure to converge is a hard numerical error.

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ness {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// nodes/weights on [-1,1], computed once per order by Newton iteration on
// the Legendre recurrence
class GaussLegendre {
  public:
    explicit GaussLegendre(int n) : nodes_(n), weights_(n) {
        for (int i = 0; i < n; ++i) {
            double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            nodes_[i] = x;
            weights_[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }

    static const GaussLegendre& order16() {
        static const GaussLegendre g(16);
        return g;
    }
    static const GaussLegendre& order15() {
        static const GaussLegendre g(15);
        return g;
    }

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

  private:
    std::vector<double> nodes_, weights_;
};

// single-panel Gauss-Legendre on [a,b]
template <class F>
auto gl_panel(F&& f, double a, double b, const GaussLegendre& rule) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    auto acc = decltype(f(mid))(0.0);
    for (size_t i = 0; i < rule.nodes().size(); ++i)
        acc += rule.weights()[i] * f(mid + half * rule.nodes()[i]);
    return half * acc;
}

// fixed composite rule: `panels` equal panels of 16-point Gauss-Legendre
template <class F>
auto integrate_panels(F&& f, double a, double b, int panels) {
    const auto& rule = GaussLegendre::order16();
    auto acc = decltype(f(a))(0.0);
    for (int p = 0; p < panels; ++p) {
        double lo = a + (b - a) * p / panels;
        double hi = a + (b - a) * (p + 1) / panels;
        acc += gl_panel(f, lo, hi, rule);
    }
    return acc;
}

namespace detail {

template <class F, class V>
V adaptive_rec(F& f, double a, double b, double tol, int depth, int max_depth) {
    const auto& rule = GaussLegendre::order15();
    V whole = gl_panel(f, a, b, rule);
    double mid = 0.5 * (a + b);
    V left = gl_panel(f, a, mid, rule);
    V right = gl_panel(f, mid, b, rule);
    double err = std::abs(whole - (left + right));
    if (err <= tol) return left + right;
    if (depth >= max_depth)
        throw QuadratureError("adaptive quadrature failed to reach tolerance on [" +
                              std::to_string(a) + "," + std::to_string(b) + "], error estimate " +
                              std::to_string(err));
    return adaptive_rec<F, V>(f, a, mid, 0.5 * tol, depth + 1, max_depth) +
           adaptive_rec<F, V>(f, mid, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

// adaptive bisection to a relative tolerance (with a small absolute floor so
// integrals that happen to vanish do not demand infinite refinement)
template <class F>
auto integrate_adaptive(F&& f, double a, double b, double rel_tol = 1e-10,
                        double abs_floor = 1e-14, int max_depth = 40) {
    using V = decltype(f(a));
    const auto& rule = GaussLegendre::order15();
    V rough = gl_panel(f, a, b, rule);
    double tol = std::max(rel_tol * std::abs(rough), abs_floor);
    return detail::adaptive_rec<std::remove_reference_t<F>, V>(f, a, b, tol, 0, max_depth);
}

}  // namespace ness

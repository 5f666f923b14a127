#pragma once
// Functions on the half-angle line and the rescaling flow acting on them.
//
// A RadialFunction is a complex function of t together with analytic
// derivative rules (propagated by Jet arithmetic) up to third order, an
// optional declared support, and a quadrature grid for norms in
// L^2(dmu), dmu = 2 dt/(t^2+1).  The dilation unitary
//   (u(theta) g)(t) = e^{theta/2} sqrt((t^2+1)/(e^{2 theta} t^2+1)) g(e^theta t)
// is an isometry of that space; its generator is
//   (p f)(t) = -i ( f/2 - t^2/(t^2+1) f + t f' ).
// Functions built without derivative rules fall back to five-point finite
// differences when a derivative is required, with correspondingly degraded
// accuracy.

#include <algorithm>
#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "ness/jet.hpp"
#include "ness/quadrature.hpp"

namespace ness {

struct Interval {
    double lo = 0.0, hi = 0.0;
};

// sort and merge overlapping/adjacent intervals
inline std::vector<Interval> merge_intervals(std::vector<Interval> v) {
    if (v.empty()) return v;
    std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> out{v.front()};
    for (size_t i = 1; i < v.size(); ++i) {
        if (v[i].lo <= out.back().hi)
            out.back().hi = std::max(out.back().hi, v[i].hi);
        else
            out.push_back(v[i]);
    }
    return out;
}

struct QuadratureGrid {
    double t_max = 50.0;  // truncation radius for undeclared supports
    int nodes = 4096;     // total 16-point panels * 16 across the full range
};

class RadialFunction {
  public:
    using Rule = std::function<Jet(const Jet&)>;

    RadialFunction() : rule_([](const Jet&) { return Jet(0.0); }) {}

    static RadialFunction from_rule(Rule r, int order, std::vector<Interval> support = {}) {
        RadialFunction f;
        f.rule_ = std::move(r);
        f.order_ = order;
        f.support_ = merge_intervals(std::move(support));
        return f;
    }

    // value-only function: derivative applications use finite differences
    static RadialFunction from_values(std::function<cdouble(double)> v,
                                      std::vector<Interval> support = {}) {
        return from_rule(
            [fn = std::move(v)](const Jet& t) {
                Jet r(fn(t.value().real()));
                r.order = 0;
                return r;
            },
            0, std::move(support));
    }

    static RadialFunction constant(cdouble c) {
        return from_rule([c](const Jet&) { return Jet(c); }, 3);
    }

    // exp(-(t-center)^2 / width^2), analytic, unbounded support
    static RadialFunction gaussian(double center = 0.0, double width = 1.0) {
        return from_rule(
            [center, width](const Jet& t) {
                Jet u = (t - center) / width;
                return exp(-(u * u));
            },
            3);
    }

    // C-infinity ramp: 0 for x<=0, 1 for x>=1
    static Jet smoothstep(const Jet& x) {
        double xv = x.value().real();
        if (xv <= 0.0) return Jet(0.0);
        if (xv >= 1.0) return Jet(1.0);
        Jet g = exp(-1.0 / x);
        Jet h = exp(-1.0 / (1.0 - x));
        return g / (g + h);
    }

    // C-infinity plateau supported on [lo, hi], identically 1 on [lo+w, hi-w]
    static RadialFunction plateau(double lo, double hi, double w) {
        if (!(w > 0.0 && hi - lo > 2.0 * w))
            throw std::domain_error("plateau: need 0 < w < (hi-lo)/2");
        return from_rule(
            [lo, hi, w](const Jet& t) {
                return smoothstep((t - lo) / w) * smoothstep((hi - t) / w);
            },
            3, {{lo, hi}});
    }

    // even plateau in momentum space: support k in [k_lo, k_hi] and its
    // mirror image, expressed in the half-angle variable t = tan(k/2)
    static RadialFunction even_k_plateau(double k_lo, double k_hi, double w) {
        if (!(0.0 < k_lo && k_hi < M_PI && w > 0.0 && k_hi - k_lo > 2.0 * w))
            throw std::domain_error("even_k_plateau: need 0 < k_lo < k_hi < pi, 0 < w < (k_hi-k_lo)/2");
        double t_lo = std::tan(0.5 * k_lo), t_hi = std::tan(0.5 * k_hi);
        return from_rule(
            [k_lo, k_hi, w](const Jet& t) {
                Jet k = 2.0 * atan(t);
                Jet pos = smoothstep((k - k_lo) / w) * smoothstep((k_hi - k) / w);
                Jet kn = -1.0 * k;
                Jet neg = smoothstep((kn - k_lo) / w) * smoothstep((k_hi - kn) / w);
                return pos + neg;
            },
            3, {{t_lo, t_hi}, {-t_hi, -t_lo}});
    }

    Jet jet_at(double t) const { return rule_(Jet::seed(t)); }
    cdouble eval(double t) const { return rule_(Jet::seed(t)).value(); }
    cdouble operator()(double t) const { return eval(t); }

    int order() const { return order_; }
    bool finite_difference_only() const { return order_ == 0; }
    const std::vector<Interval>& support() const { return support_; }
    bool has_declared_support() const { return !support_.empty(); }
    const QuadratureGrid& grid() const { return grid_; }
    double fd_step() const { return fd_step_; }
    const Rule& rule() const { return rule_; }

    RadialFunction with_grid(QuadratureGrid g) const {
        RadialFunction f = *this;
        f.grid_ = g;
        return f;
    }
    RadialFunction with_fd_step(double h) const {
        RadialFunction f = *this;
        f.fd_step_ = h;
        return f;
    }
    RadialFunction with_support(std::vector<Interval> s) const {
        RadialFunction f = *this;
        f.support_ = merge_intervals(std::move(s));
        return f;
    }

  private:
    Rule rule_;
    int order_ = 3;
    std::vector<Interval> support_;
    QuadratureGrid grid_;
    double fd_step_ = 1e-4;
};

// ---- arithmetic (pointwise); support handling keeps norms correct ----

inline RadialFunction operator*(cdouble c, const RadialFunction& f) {
    auto out = RadialFunction::from_rule([c, r = f.rule()](const Jet& t) { return c * r(t); },
                                         f.order(), f.support());
    return out.with_grid(f.grid()).with_fd_step(f.fd_step());
}

inline RadialFunction operator+(const RadialFunction& a, const RadialFunction& b) {
    std::vector<Interval> sup;
    if (a.has_declared_support() && b.has_declared_support()) {
        sup = a.support();
        sup.insert(sup.end(), b.support().begin(), b.support().end());
    }
    auto out = RadialFunction::from_rule(
        [ra = a.rule(), rb = b.rule()](const Jet& t) { return ra(t) + rb(t); },
        std::min(a.order(), b.order()), std::move(sup));
    return out.with_grid(a.grid()).with_fd_step(a.fd_step());
}

inline RadialFunction operator-(const RadialFunction& a, const RadialFunction& b) {
    return a + (cdouble(-1.0) * b);
}

// ---- the rescaling flow ----

// dilation unitary u(theta): support contracts by e^{-theta}
inline RadialFunction apply_u(double theta, const RadialFunction& f) {
    double es = std::exp(theta), eh = std::exp(0.5 * theta);
    std::vector<Interval> sup;
    for (const auto& iv : f.support()) sup.push_back({iv.lo / es, iv.hi / es});
    auto out = RadialFunction::from_rule(
        [es, eh, r = f.rule()](const Jet& t) {
            Jet inner = es * t;
            Jet pref = eh * sqrt((t * t + 1.0) / (inner * inner + 1.0));
            return pref * r(inner);
        },
        f.order(), std::move(sup));
    return out.with_grid(f.grid()).with_fd_step(f.fd_step());
}

// plain dilation of a multiplication operator's symbol: m(e^theta t)
inline RadialFunction rescale_multiplication(double theta, const RadialFunction& m) {
    double es = std::exp(theta);
    std::vector<Interval> sup;
    for (const auto& iv : m.support()) sup.push_back({iv.lo / es, iv.hi / es});
    auto out = RadialFunction::from_rule([es, r = m.rule()](const Jet& t) { return r(es * t); },
                                         m.order(), std::move(sup));
    return out.with_grid(m.grid()).with_fd_step(m.fd_step());
}

namespace detail {
// five-point central difference of a value-only function
inline cdouble fd_derivative(const RadialFunction& f, double t, double h) {
    return (-f.eval(t + 2 * h) + 8.0 * f.eval(t + h) - 8.0 * f.eval(t - h) + f.eval(t - 2 * h)) /
           (12.0 * h);
}
}  // namespace detail

// generator of the dilation group: (p f)(t) = -i (f/2 - t^2/(t^2+1) f + t f')
inline RadialFunction apply_p(const RadialFunction& f) {
    const cdouble mi(0.0, -1.0);
    if (f.order() >= 1) {
        auto out = RadialFunction::from_rule(
            [mi, r = f.rule()](const Jet& t) {
                Jet ft = r(t);
                Jet fp = ft.derivative();
                return mi * (0.5 * ft - (t * t) / (t * t + 1.0) * ft + t * fp);
            },
            f.order() - 1, f.support());
        return out.with_grid(f.grid()).with_fd_step(f.fd_step());
    }
    double h = f.fd_step();
    auto out = RadialFunction::from_rule(
        [mi, f, h](const Jet& tj) {
            double t = tj.value().real();
            cdouble v = f.eval(t);
            cdouble d = detail::fd_derivative(f, t, h);
            Jet r(mi * (0.5 * v - t * t / (t * t + 1.0) * v + t * d));
            r.order = 0;
            return r;
        },
        0, f.support());
    return out.with_grid(f.grid()).with_fd_step(f.fd_step());
}

// transform m -> -t m'(t) mapping dispersion to s1 to s2 to s3
inline RadialFunction q_transform(const RadialFunction& m) {
    if (m.order() >= 1) {
        auto out = RadialFunction::from_rule(
            [r = m.rule()](const Jet& t) { return -1.0 * (t * r(t).derivative()); }, m.order() - 1,
            m.support());
        return out.with_grid(m.grid()).with_fd_step(m.fd_step());
    }
    double h = m.fd_step();
    auto out = RadialFunction::from_rule(
        [m, h](const Jet& tj) {
            double t = tj.value().real();
            Jet r(-t * detail::fd_derivative(m, t, h));
            r.order = 0;
            return r;
        },
        0, m.support());
    return out.with_grid(m.grid()).with_fd_step(m.fd_step());
}

// ---- norms and inner products in L^2(dmu), dmu = 2 dt/(t^2+1) ----

namespace detail {
inline std::vector<Interval> integration_domain(const std::vector<Interval>& sup,
                                                const QuadratureGrid& g) {
    if (sup.empty()) return {{-g.t_max, g.t_max}};
    return sup;
}
inline int panels_for(const std::vector<Interval>& domain, const QuadratureGrid& g) {
    int per = std::max<int>(64, g.nodes / 16 / static_cast<int>(domain.size()));
    return per;
}
}  // namespace detail

template <class F>
auto integrate_mu(F&& f, const std::vector<Interval>& domain, int panels_per_interval) {
    auto acc = decltype(f(0.0))(0.0);
    for (const auto& iv : domain)
        acc += integrate_panels([&](double t) { return f(t) * (2.0 / (t * t + 1.0)); }, iv.lo,
                                iv.hi, panels_per_interval);
    return acc;
}

inline cdouble inner_mu(const RadialFunction& f, const RadialFunction& g) {
    std::vector<Interval> dom;
    if (f.has_declared_support() && g.has_declared_support()) {
        auto sup = f.support();
        sup.insert(sup.end(), g.support().begin(), g.support().end());
        dom = merge_intervals(sup);
    } else {
        dom = detail::integration_domain({}, f.grid());
    }
    int panels = detail::panels_for(dom, f.grid());
    return integrate_mu([&](double t) { return std::conj(f.eval(t)) * g.eval(t); }, dom, panels);
}

inline double norm_mu(const RadialFunction& f) {
    auto dom = detail::integration_domain(f.support(), f.grid());
    int panels = detail::panels_for(dom, f.grid());
    double n2 = integrate_mu([&](double t) { return std::norm(f.eval(t)); }, dom, panels);
    return std::sqrt(std::max(0.0, n2));
}

}  // namespace ness

#pragma once
// Forward-mode derivative jets: a value together with Taylor coefficients up
// to third order at a point.  Function objects built from these propagate
// analytic derivatives through arithmetic, so momentum-operator applications
// and q-transforms get exact derivative rules instead of finite differences.
//
// Coefficients follow the Taylor convention a[k] = f^(k)/k!.  Each jet tracks
// how many of its coefficients are trustworthy (`order`); applying an
// operation that consumes a derivative (e.g. derivative()) lowers the order.

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace ness {

using cdouble = std::complex<double>;

struct Jet {
    static constexpr int kMaxOrder = 3;
    std::array<cdouble, kMaxOrder + 1> a{};  // Taylor coefficients a[k] = f^(k)/k!
    int order = kMaxOrder;                   // coefficients 0..order are valid

    Jet() = default;
    // constant jet: all derivatives vanish, fully trusted
    Jet(cdouble c) { a[0] = c; }
    Jet(double c) { a[0] = c; }

    // the evaluation variable itself: value t, slope 1
    static Jet seed(double t) {
        Jet j;
        j.a[0] = t;
        j.a[1] = 1.0;
        return j;
    }

    cdouble value() const { return a[0]; }

    // k-th derivative (not Taylor coefficient); requires k <= order
    cdouble deriv(int k) const {
        if (k > order) throw std::logic_error("jet: derivative order exceeds valid order");
        double fact = 1.0;
        for (int i = 2; i <= k; ++i) fact *= i;
        return a[k] * fact;
    }

    // jet of f' at the same point; one order shorter
    Jet derivative() const {
        if (order < 1) throw std::logic_error("jet: cannot differentiate an order-0 jet");
        Jet r;
        r.order = order - 1;
        for (int k = 0; k < order; ++k) r.a[k] = double(k + 1) * a[k + 1];
        return r;
    }

    Jet conjugate() const {
        Jet r = *this;
        for (auto& c : r.a) c = std::conj(c);
        return r;
    }
};

namespace detail {
inline void clamp_tail(Jet& j) {
    for (int k = j.order + 1; k <= Jet::kMaxOrder; ++k) j.a[k] = 0.0;
}
}  // namespace detail

inline Jet operator+(const Jet& x, const Jet& y) {
    Jet r;
    r.order = std::min(x.order, y.order);
    for (int k = 0; k <= r.order; ++k) r.a[k] = x.a[k] + y.a[k];
    detail::clamp_tail(r);
    return r;
}

inline Jet operator-(const Jet& x, const Jet& y) {
    Jet r;
    r.order = std::min(x.order, y.order);
    for (int k = 0; k <= r.order; ++k) r.a[k] = x.a[k] - y.a[k];
    detail::clamp_tail(r);
    return r;
}

inline Jet operator-(const Jet& x) {
    Jet r = x;
    for (auto& c : r.a) c = -c;
    return r;
}

inline Jet operator*(const Jet& x, const Jet& y) {
    Jet r;
    r.order = std::min(x.order, y.order);
    for (int k = 0; k <= r.order; ++k) {
        cdouble s = 0.0;
        for (int j = 0; j <= k; ++j) s += x.a[j] * y.a[k - j];
        r.a[k] = s;
    }
    detail::clamp_tail(r);
    return r;
}

// reciprocal by the standard Taylor recursion
inline Jet reciprocal(const Jet& x) {
    if (x.a[0] == cdouble(0.0)) throw std::domain_error("jet: reciprocal of zero value");
    Jet r;
    r.order = x.order;
    r.a[0] = 1.0 / x.a[0];
    for (int k = 1; k <= r.order; ++k) {
        cdouble s = 0.0;
        for (int j = 1; j <= k; ++j) s += x.a[j] * r.a[k - j];
        r.a[k] = -s / x.a[0];
    }
    detail::clamp_tail(r);
    return r;
}

inline Jet operator/(const Jet& x, const Jet& y) { return x * reciprocal(y); }

inline Jet sqrt(const Jet& x) {
    Jet r;
    r.order = x.order;
    r.a[0] = std::sqrt(x.a[0]);
    if (r.a[0] == cdouble(0.0)) {
        // square root is not differentiable at 0; only the value survives
        r.order = 0;
        detail::clamp_tail(r);
        return r;
    }
    for (int k = 1; k <= r.order; ++k) {
        cdouble s = 0.0;
        for (int j = 1; j < k; ++j) s += r.a[j] * r.a[k - j];
        r.a[k] = (x.a[k] - s) / (2.0 * r.a[0]);
    }
    detail::clamp_tail(r);
    return r;
}

inline Jet exp(const Jet& x) {
    Jet r;
    r.order = x.order;
    r.a[0] = std::exp(x.a[0]);
    for (int k = 0; k < r.order; ++k) {
        // (k+1) e_{k+1} = sum_{j=0..k} (j+1) x_{j+1} e_{k-j}
        cdouble s = 0.0;
        for (int j = 0; j <= k; ++j) s += double(j + 1) * x.a[j + 1] * r.a[k - j];
        r.a[k + 1] = s / double(k + 1);
    }
    detail::clamp_tail(r);
    return r;
}

// arctangent of a real-valued jet (imaginary parts must vanish in exact
// arithmetic; they are carried along linearly which is fine for our use)
inline Jet atan(const Jet& x) {
    Jet r;
    r.order = x.order;
    r.a[0] = std::atan(x.a[0].real());
    if (r.order >= 1) {
        Jet u = reciprocal(Jet(1.0) + x * x);  // 1/(1+x^2)
        for (int k = 0; k < r.order; ++k) {
            // (k+1) r_{k+1} = coefficients of x' * u
            cdouble s = 0.0;
            for (int j = 0; j <= k; ++j) s += double(j + 1) * x.a[j + 1] * u.a[k - j];
            r.a[k + 1] = s / double(k + 1);
        }
    }
    detail::clamp_tail(r);
    return r;
}

inline Jet operator+(const Jet& x, double c) { return x + Jet(c); }
inline Jet operator+(double c, const Jet& x) { return Jet(c) + x; }
inline Jet operator-(const Jet& x, double c) { return x - Jet(c); }
inline Jet operator-(double c, const Jet& x) { return Jet(c) - x; }
inline Jet operator*(const Jet& x, double c) { return x * Jet(c); }
inline Jet operator*(double c, const Jet& x) { return Jet(c) * x; }
inline Jet operator*(const Jet& x, cdouble c) { return x * Jet(c); }
inline Jet operator*(cdouble c, const Jet& x) { return Jet(c) * x; }
inline Jet operator/(const Jet& x, double c) { return x * Jet(1.0 / c); }
inline Jet operator/(double c, const Jet& x) { return Jet(c) * reciprocal(x); }

}  // namespace ness

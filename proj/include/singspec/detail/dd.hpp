#pragma once

#include <cmath>

// Minimal double-double arithmetic (~31 significant digits).  Used where a
// series suffers catastrophic cancellation that long double cannot absorb:
// the K0/K1 series at mid-range arguments and the Ei series for strongly
// negative arguments.  Only the handful of operations those series need.

namespace singspec::detail {

struct dd {
    double hi = 0.0;
    double lo = 0.0;
    constexpr dd() = default;
    constexpr dd(double h, double l = 0.0) : hi(h), lo(l) {}
    double value() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
    double s = a + b;
    double bv = s - a;
    return {s, (a - (s - bv)) + (b - bv)};
}

// requires |a| >= |b| or a == 0
inline dd quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd add(dd a, dd b) {
    dd s = two_sum(a.hi, b.hi);
    return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline dd neg(dd a) { return {-a.hi, -a.lo}; }
inline dd sub(dd a, dd b) { return add(a, neg(b)); }

inline dd mul(dd a, dd b) {
    dd p = two_prod(a.hi, b.hi);
    return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline dd mul(dd a, double b) {
    dd p = two_prod(a.hi, b);
    return quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline dd div(dd a, dd b) {
    double q1 = a.hi / b.hi;
    dd r = sub(a, mul(b, q1));
    double q2 = r.hi / b.hi;
    r = sub(r, mul(b, q2));
    double q3 = r.hi / b.hi;
    dd q = two_sum(q1, q2);
    return quick_two_sum(q.hi, q.lo + q3);
}

inline dd div(dd a, double b) { return div(a, dd(b)); }

inline constexpr dd DD_LN2{0.6931471805599453, 2.3190468138462996e-17};
inline constexpr dd DD_EULER_GAMMA{0.5772156649015329, -4.942915152430645e-18};

// log of a positive double, accurate to dd precision.  Range-reduce with
// frexp, then atanh series around 1.
inline dd dd_log(double x) {
    int e = 0;
    double m = std::frexp(x, &e);  // x = m * 2^e, m in [0.5, 1)
    if (m < 0.70710678118654752) {
        m *= 2.0;
        e -= 1;
    }
    // log m = 2 atanh(t), t = (m-1)/(m+1), |t| <= 0.1716
    dd t = div(dd(m - 1.0), dd(m + 1.0));
    dd t2 = mul(t, t);
    dd term = t;
    dd sum = t;
    for (int k = 3; k < 60; k += 2) {
        term = mul(term, t2);
        dd c = div(term, static_cast<double>(k));
        sum = add(sum, c);
        if (std::fabs(c.hi) < 1e-35 * std::fabs(sum.hi)) break;
    }
    return add(mul(sum, 2.0), mul(DD_LN2, static_cast<double>(e)));
}

}  // namespace singspec::detail

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

#include "singspec/constants.hpp"
#include "singspec/detail/dd.hpp"
#include "singspec/errors.hpp"

// Special-function kernel: J0, J1, Y0, Y1 for complex argument (power series,
// |z| <= Z_MAX), I0, K0, I1, K1 for positive real argument, real-axis
// large-argument Bessel evaluation, and the exponential integral Ei.
//
// Everything here is self-contained: series in long double (or double-double
// where cancellation demands it), amplitude-phase asymptotics beyond the
// series disc.  All functions are pure and thread-safe.

namespace singspec {

using Complex = std::complex<double>;

namespace detail {

using CL = std::complex<long double>;

inline constexpr long double LD_PI = 3.14159265358979323846264338328L;
inline constexpr long double LD_EULER = 0.577215664901532860606512090082L;
inline constexpr long double LD_LN2 = 0.693147180559945309417232121458L;

// One pass over the ascending series shared by J0, Y0, J1, Y1:
//   j0s  = sum z2^k / (k!)^2                    (z2 = -z^2/4)
//   hs   = sum H_k z2^k / (k!)^2
//   j1s  = sum z2^k / (k! (k+1)!)
//   h1s  = sum H_{k+1} z2^k / (k! (k+1)!)
struct BesselSeriesSums {
    CL j0s, hs, j1s, h1s;
};

inline BesselSeriesSums bessel_series_sums(CL z) {
    CL z2 = -(z * z) / 4.0L;
    CL t0 = 1.0L, t1 = 1.0L;
    BesselSeriesSums s{t0, 0.0L, t1, 1.0L};  // H_1 = 1 times t1_0
    long double h = 0.0L;
    for (int k = 1; k < 240; ++k) {
        t0 *= z2 / static_cast<long double>(k) / static_cast<long double>(k);
        t1 *= z2 / static_cast<long double>(k) /
              static_cast<long double>(k + 1);
        h += 1.0L / k;
        s.j0s += t0;
        s.hs += h * t0;
        s.j1s += t1;
        s.h1s += (h + 1.0L / (k + 1)) * t1;
        if (std::abs(t0) < 1e-25L * (std::abs(s.j0s) + 1e-30L) &&
            std::abs(t1) < 1e-25L * (std::abs(s.j1s) + 1e-30L))
            break;
    }
    return s;
}

inline void require_series_domain(Complex z) {
    if (std::abs(z) > Z_MAX)
        throw std::domain_error("bessel series: |z| > Z_MAX");
}

inline void require_off_cut(Complex z) {
    if (z == Complex(0.0, 0.0))
        throw std::domain_error("bessel: z = 0");
    if (z.imag() == 0.0 && z.real() < 0.0)
        throw std::domain_error("bessel: z on branch cut (negative reals)");
}

}  // namespace detail

inline Complex j0(Complex z) {
    detail::require_series_domain(z);
    detail::CL zl(z.real(), z.imag());
    auto s = detail::bessel_series_sums(zl);
    return Complex(static_cast<double>(s.j0s.real()),
                   static_cast<double>(s.j0s.imag()));
}

inline Complex y0(Complex z) {
    detail::require_series_domain(z);
    detail::require_off_cut(z);
    detail::CL zl(z.real(), z.imag());
    auto s = detail::bessel_series_sums(zl);
    detail::CL lg = std::log(zl) - detail::LD_LN2 + detail::LD_EULER;
    detail::CL y = (2.0L / detail::LD_PI) * (lg * s.j0s - s.hs);
    return Complex(static_cast<double>(y.real()),
                   static_cast<double>(y.imag()));
}

// (J1, Y1) via the term-wise differentiated series; J1 = -J0', Y1 = -Y0'.
inline std::pair<Complex, Complex> j1_y1(Complex z) {
    detail::require_series_domain(z);
    detail::require_off_cut(z);
    detail::CL zl(z.real(), z.imag());
    auto s = detail::bessel_series_sums(zl);
    detail::CL lg = std::log(zl) - detail::LD_LN2 + detail::LD_EULER;
    detail::CL j1 = (zl / 2.0L) * s.j1s;
    // d/dz of sum H_k z2^k/(k!)^2 equals -(z/2) h1s
    detail::CL y1 =
        (2.0L / detail::LD_PI) *
        (-s.j0s / zl + lg * j1 - (zl / 2.0L) * s.h1s);
    return {Complex(static_cast<double>(j1.real()),
                    static_cast<double>(j1.imag())),
            Complex(static_cast<double>(y1.real()),
                    static_cast<double>(y1.imag()))};
}

namespace detail {

struct Bessel0Real {
    double j0, y0, j1, y1;
};

// J0, Y0, J1, Y1 at real x > 0 with no upper limit on x: series below
// HANKEL_SWITCH, amplitude-phase (Hankel) asymptotics above.  The switch is
// placed where the optimally-truncated asymptotic error (~e^{-2x}) is below
// 1e-16 relative.
inline constexpr double HANKEL_SWITCH = 20.0;

inline Bessel0Real bessel0_real_series(double x) {
    CL zl(static_cast<long double>(x), 0.0L);
    auto s = bessel_series_sums(zl);
    long double lg = std::log(static_cast<long double>(x)) - LD_LN2 + LD_EULER;
    long double j0v = s.j0s.real();
    long double y0v = (2.0L / LD_PI) * (lg * j0v - s.hs.real());
    long double j1v = (x / 2.0L) * s.j1s.real();
    long double y1v = (2.0L / LD_PI) *
                      (-j0v / x + lg * j1v - (x / 2.0L) * s.h1s.real());
    return {static_cast<double>(j0v), static_cast<double>(y0v),
            static_cast<double>(j1v), static_cast<double>(y1v)};
}

// P/Q amplitude-phase sums for order nu at 1/x; optimal truncation.
inline void hankel_pq(double x, double mu4, double& p, double& q) {
    double a = 1.0;  // a_0
    p = 1.0;
    q = 0.0;
    double prev = 1.0;
    for (int k = 1; k <= 40; ++k) {
        double f = 2.0 * k - 1.0;
        a *= (mu4 - f * f) / (8.0 * k);
        double term = a / std::pow(x, k);
        if (std::fabs(term) > prev) break;
        prev = std::fabs(term);
        int m = k % 4;  // i^k pattern: sign and P/Q routing
        if (m == 1) q += term;
        else if (m == 2) p -= term;
        else if (m == 3) q -= term;
        else p += term;
        if (std::fabs(term) < 1e-18) break;
    }
}

inline Bessel0Real bessel0_real(double x) {
    if (!(x > 0.0))
        throw std::domain_error("bessel0_real: x <= 0");
    if (x < HANKEL_SWITCH) return bessel0_real_series(x);
    double p0, q0, p1, q1;
    hankel_pq(x, 0.0, p0, q0);
    hankel_pq(x, 4.0, p1, q1);
    double c = std::sqrt(2.0 / (PI * x));
    double chi0 = x - PI / 4.0;
    double chi1 = x - 3.0 * PI / 4.0;
    double c0 = std::cos(chi0), s0 = std::sin(chi0);
    double c1 = std::cos(chi1), s1 = std::sin(chi1);
    return {c * (p0 * c0 - q0 * s0), c * (p0 * s0 + q0 * c0),
            c * (p1 * c1 - q1 * s1), c * (p1 * s1 + q1 * c1)};
}

struct ModBessel {
    double i0, k0, i1, k1;
};

// Scaled pair: i0e = I0(x) e^{-x}, k0e = K0(x) e^{x}, likewise order 1.
struct ModBesselScaled {
    double i0e, k0e, i1e, k1e;
};

inline constexpr double MODIFIED_SWITCH = 15.0;

// Ascending series in double-double.  The K-series subtracts two quantities
// that agree to ~13 digits at x near 15, which is exactly why dd is needed.
inline ModBessel mod_bessel_series(double x) {
    dd q = mul(two_prod(x, x), 0.25);  // x^2/4 exactly rounded
    dd lc = add(sub(dd_log(x), DD_LN2), DD_EULER_GAMMA);  // log x - log2 + g
    dd t0(1.0), t1(1.0);
    dd i0(1.0), hs(0.0);
    dd i1s(1.0), hhs(1.0);  // hhs holds (H_k + H_{k+1}) u_k; k=0 term: H_1 = 1
    dd h(0.0);
    for (int k = 1; k < 160; ++k) {
        t0 = div(mul(t0, q), static_cast<double>(k) * k);
        t1 = div(mul(t1, q), static_cast<double>(k) * (k + 1.0));
        h = add(h, div(dd(1.0), static_cast<double>(k)));  // running H_k
        dd hk1 = add(h, div(dd(1.0), static_cast<double>(k + 1)));
        i0 = add(i0, t0);
        hs = add(hs, mul(t0, h));
        i1s = add(i1s, t1);
        hhs = add(hhs, mul(t1, add(h, hk1)));
        if (std::fabs(t0.hi) < 1e-33 * std::fabs(i0.hi)) break;
    }
    dd k0 = add(neg(mul(lc, i0)), hs);
    dd i1 = mul(i1s, 0.5 * x);
    dd k1 = add(add(div(dd(1.0), dd(x)), mul(lc, i1)),
                neg(mul(hhs, 0.25 * x)));
    return {i0.value(), k0.value(), i1.value(), k1.value()};
}

inline ModBesselScaled mod_bessel_scaled_asym(double x) {
    double si0 = 1.0, sk0 = 1.0, si1 = 1.0, sk1 = 1.0;
    double a0 = 1.0, a1 = 1.0, prev = 1.0;
    int sgn = -1;
    for (int k = 1; k <= 40; ++k) {
        double f = 2.0 * k - 1.0;
        a0 *= (0.0 - f * f) / (8.0 * k);
        a1 *= (4.0 - f * f) / (8.0 * k);
        double t0 = a0 / std::pow(x, k);
        double t1 = a1 / std::pow(x, k);
        if (std::fabs(t0) > prev) break;
        prev = std::fabs(t0);
        si0 += sgn * t0;
        sk0 += t0;
        si1 += sgn * t1;
        sk1 += t1;
        sgn = -sgn;
        if (std::fabs(t0) < 1e-18 && std::fabs(t1) < 1e-18) break;
    }
    double ci = 1.0 / std::sqrt(2.0 * PI * x);
    double ck = std::sqrt(PI / (2.0 * x));
    return {ci * si0, ck * sk0, ci * si1, ck * sk1};
}

inline ModBesselScaled mod_bessel_scaled(double x) {
    if (!(x > 0.0))
        throw std::domain_error("mod_bessel: x <= 0");
    if (x > MODIFIED_SWITCH) return mod_bessel_scaled_asym(x);
    ModBessel m = mod_bessel_series(x);
    double em = std::exp(-x), ep = std::exp(x);
    return {m.i0 * em, m.k0 * ep, m.i1 * em, m.k1 * ep};
}

inline ModBessel mod_bessel(double x) {
    if (!(x > 0.0))
        throw std::domain_error("mod_bessel: x <= 0");
    if (x <= MODIFIED_SWITCH) return mod_bessel_series(x);
    if (x > 700.0)
        throw std::domain_error("mod_bessel: overflow range, use scaled form");
    ModBesselScaled s = mod_bessel_scaled_asym(x);
    double ep = std::exp(x), em = std::exp(-x);
    return {s.i0e * ep, s.k0e * em, s.i1e * ep, s.k1e * em};
}

// Ei for x < 0 beyond the series range: optimally truncated divergent
// expansion e^x/x (1 + 1!/x + 2!/x^2 + ...).
inline double ei_asymptotic_neg(double x) {
    double sum = 1.0, term = 1.0;
    for (int k = 1; k <= 60; ++k) {
        double next = term * k / x;
        if (std::fabs(next) >= std::fabs(term)) break;
        term = next;
        sum += term;
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    return std::exp(x) / x * sum;
}

// Ei continued to complex z off the positive real axis (principal log(-z)).
inline Complex ei_complex(Complex z) {
    if (z == Complex(0.0, 0.0))
        throw std::domain_error("ei_complex: z = 0");
    if (z.imag() == 0.0 && z.real() > 0.0)
        throw std::domain_error("ei_complex: z on positive real axis");
    if (std::abs(z) > 30.0) {
        // only reached with Re z strongly negative; value is negligible there
        CL zl(z.real(), z.imag());
        CL sum = 1.0L, term = 1.0L;
        for (int k = 1; k <= 60; ++k) {
            CL next = term * static_cast<long double>(k) / zl;
            if (std::abs(next) >= std::abs(term)) break;
            term = next;
            sum += term;
        }
        CL v = std::exp(zl) / zl * sum;
        return Complex(static_cast<double>(v.real()),
                       static_cast<double>(v.imag()));
    }
    CL zl(z.real(), z.imag());
    CL term = 1.0L, sum = 0.0L;
    for (int k = 1; k < 200; ++k) {
        term *= zl / static_cast<long double>(k);
        CL c = term / static_cast<long double>(k);
        sum += c;
        if (std::abs(c) < 1e-22L * (std::abs(sum) + 1e-25L) &&
            static_cast<double>(k) > std::abs(z))
            break;
    }
    CL v = LD_EULER + std::log(-zl) + sum;
    return Complex(static_cast<double>(v.real()),
                   static_cast<double>(v.imag()));
}

}  // namespace detail

inline std::pair<double, double> i0_k0(double x) {
    if (!(x > 0.0))
        throw std::domain_error("i0_k0: requires x > 0");
    detail::ModBessel m = detail::mod_bessel(x);
    return {m.i0, m.k0};
}

// Ei(x) for x < 0 only (the regime the spectral formulas need).
inline double ei(double x) {
    if (!(x < 0.0))
        throw std::domain_error("ei: requires x < 0");
    if (x < -30.0) return detail::ei_asymptotic_neg(x);
    using namespace detail;
    dd term(1.0), sum(0.0);
    for (int k = 1; k < 160; ++k) {
        term = div(mul(term, x), static_cast<double>(k));  // x^k / k!
        sum = add(sum, div(term, static_cast<double>(k)));
        if (std::fabs(term.hi) / k < 1e-34 && k > -x) break;
    }
    dd lg = dd_log(-x);
    return add(add(DD_EULER_GAMMA, lg), sum).value();
}

}  // namespace singspec

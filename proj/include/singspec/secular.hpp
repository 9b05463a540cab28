#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "singspec/constants.hpp"
#include "singspec/errors.hpp"
#include "singspec/problem.hpp"
#include "singspec/specfun.hpp"

// The secular function F whose zeros are the eigenvalues.  We work with the
// homogenized form
//
//   F_hom(mu) = c1 [ (pi/2) Y0(muR) - (log mu - log2 + gamma) J0(muR) ]
//             - s1 J0(muR),
//
// which equals cos(theta1) times the tan-theta form and degenerates to
// -J0(muR) for the Friedrichs realization, so one code path covers every
// boundary angle.  On the imaginary axis mu = ix this becomes
//
//   F_hom(ix) = -a(x) I0(xR) - c1 K0(xR),   a(x) = c1 (log x - log2 + gamma) + s1,
//
// which is real.  Throughout, kappa = log2 - gamma - tan(theta1).

namespace singspec {

struct SecularValue {
    Complex f;
    Complex df;  // d/dmu
};

struct AsymptoticSeries {
    // Present when the expansion carries a 1/(x (log x - k)) leading term;
    // stores (amplitude, k).
    std::optional<std::pair<double, double>> leading_log;
    // (exponent, coefficient) pairs, exponents strictly decreasing.
    std::vector<std::pair<double, double>> power_coeffs;
    double valid_from = 0.0;

    double eval(double x) const {
        double v = 0.0;
        if (leading_log) {
            auto [amp, k] = *leading_log;
            v += amp / (x * (std::log(x) - k));
        }
        for (auto [e, c] : power_coeffs) v += c * std::pow(x, e);
        return v;
    }
};

inline double kappa(const BoundaryCondition& bc0) {
    if (bc0.is_vertical())
        throw FriedrichsUndefined("kappa: undefined for the Friedrichs angle");
    return LOG2_MINUS_GAMMA - bc0.tan_theta();
}

inline SecularValue secular_f(Complex mu, const SpectralProblem& p) {
    p.require_dirichlet_at_R("secular_f");
    detail::require_off_cut(mu);
    Complex u = mu * p.R;
    if (std::abs(u) > Z_MAX)
        throw std::domain_error("secular_f: |mu R| > Z_MAX");
    double c1 = p.bc0.c, s1 = p.bc0.s;
    Complex j0v = j0(u);
    Complex y0v = y0(u);
    auto [j1v, y1v] = j1_y1(u);
    Complex lm = std::log(mu) - LOG2_MINUS_GAMMA;
    Complex f = c1 * (0.5 * PI * y0v - lm * j0v) - s1 * j0v;
    // d/dmu, using J0' = -J1, Y0' = -Y1 (arguments scale by R)
    Complex df = c1 * (-0.5 * PI * p.R * y1v - j0v / mu + lm * p.R * j1v) +
                 s1 * p.R * j1v;
    return {f, df};
}

// d/dmu log(F_hom(mu)/mu^2) for a zero-mode realization, stable down to
// mu = 0.  The log terms of (pi/2) Y0 - (log mu - log 2 + gamma) J0 cancel
// exactly, leaving F = (c1 log R - s1) J0(mu R) - c1 hs(mu R); the first
// coefficient vanishes precisely in the zero-mode case, so
//   mu F' - 2 F = 2 c1 (hs - u h1s),  u = -(mu R)^2 / 4,
// with hs, h1s the entire series of the Bessel kernel.  secular_f would
// compute the same ratio through an O(mu^2) cancellation of O(1) terms.
inline Complex zero_mode_log_deriv(Complex mu, const SpectralProblem& p) {
    p.require_dirichlet_at_R("zero_mode_log_deriv");
    if (std::fabs(p.bc0.c * std::log(p.R) - p.bc0.s) > 1e-12)
        throw std::domain_error("zero_mode_log_deriv: no zero mode");
    detail::require_off_cut(mu);
    if (std::abs(mu) * p.R > Z_MAX)
        throw std::domain_error("zero_mode_log_deriv: |mu R| > Z_MAX");
    detail::CL z(mu.real() * p.R, mu.imag() * p.R);
    auto s = detail::bessel_series_sums(z);
    detail::CL u = -(z * z) / 4.0L;
    detail::CL mul(mu.real(), mu.imag());
    detail::CL r = -2.0L * (s.hs - u * s.h1s) / (mul * s.hs);
    return Complex(static_cast<double>(r.real()),
                   static_cast<double>(r.imag()));
}

// (F_hom(ix), d/dx F_hom(ix)) for x > 0.  Overflows for xR beyond ~700;
// log_deriv_imag below never does.
inline std::pair<double, double> secular_f_imag(double x,
                                                const SpectralProblem& p) {
    p.require_dirichlet_at_R("secular_f_imag");
    if (!(x > 0.0)) throw std::domain_error("secular_f_imag: x <= 0");
    double c1 = p.bc0.c, s1 = p.bc0.s;
    double a = c1 * (std::log(x) - LOG2_MINUS_GAMMA) + s1;
    detail::ModBessel m = detail::mod_bessel(x * p.R);
    double f = -a * m.i0 - c1 * m.k0;
    double df = -(c1 / x) * m.i0 - a * p.R * m.i1 + c1 * p.R * m.k1;
    return {f, df};
}

// d/dx log F_hom(ix), stable for arbitrarily large x: beyond the I/K series
// range the e^{xR} growth cancels in the ratio and the K-terms are
// exponentially negligible.
inline double log_deriv_imag(double x, const SpectralProblem& p) {
    p.require_dirichlet_at_R("log_deriv_imag");
    if (!(x > 0.0)) throw std::domain_error("log_deriv_imag: x <= 0");
    double c1 = p.bc0.c, s1 = p.bc0.s;
    double a = c1 * (std::log(x) - LOG2_MINUS_GAMMA) + s1;
    double xr = x * p.R;
    double f, df, scale;
    if (xr <= detail::MODIFIED_SWITCH) {
        detail::ModBessel m = detail::mod_bessel(xr);
        f = -a * m.i0 - c1 * m.k0;
        df = -(c1 / x) * m.i0 - a * p.R * m.i1 + c1 * p.R * m.k1;
        scale = std::fabs(a) * m.i0 + std::fabs(c1) * m.k0 + 1.0;
    } else {
        detail::ModBesselScaled m = detail::mod_bessel_scaled(xr);
        double damp = xr < 350.0 ? std::exp(-2.0 * xr) : 0.0;
        f = -a * m.i0e - c1 * m.k0e * damp;
        df = -(c1 / x) * m.i0e - a * p.R * m.i1e + c1 * p.R * m.k1e * damp;
        scale = std::fabs(a) * m.i0e + 1.0;
    }
    if (std::fabs(f) < 1e-14 * scale)
        throw PoleAt(x, "log_deriv_imag: F(ix) vanishes (eigenvalue hit)");
    return df / f;
}

// Eq.-asymF expansion of d/dx log F_hom(ix):
//   1/(x (log x - kappa)) + R - 1/(2x) - 1/(8 x^2 R) + O(x^{-3})
inline AsymptoticSeries secular_asymptotic(const SpectralProblem& p) {
    AsymptoticSeries s;
    if (p.is_friedrichs())
        throw FriedrichsUndefined(
            "secular_asymptotic: log term undefined for Friedrichs");
    double k = kappa(p.bc0);
    s.leading_log = {1.0, k};
    s.power_coeffs = {{0.0, p.R}, {-1.0, -0.5}, {-2.0, -1.0 / (8.0 * p.R)}};
    s.valid_from = std::max(30.0 / p.R, 2.0 * std::exp(k));
    return s;
}

// General Robin condition at r = R:
//   F_gen(mu) = cos(theta2) dp/dr(R, mu) + sin(theta2) p(R, mu)
// with p the (homogenized) r=0-admissible solution.  Reduces to
// sqrt(R) F_hom for Dirichlet.
inline SecularValue secular_general(Complex mu, const SpectralProblem& p) {
    detail::require_off_cut(mu);
    Complex u = mu * p.R;
    if (std::abs(u) > Z_MAX)
        throw std::domain_error("secular_general: |mu R| > Z_MAX");
    double c1 = p.bc0.c, s1 = p.bc0.s;
    double c2 = p.bcR.c, s2 = p.bcR.s;
    Complex j0v = j0(u);
    Complex y0v = y0(u);
    auto [j1v, y1v] = j1_y1(u);
    Complex lm = std::log(mu) - LOG2_MINUS_GAMMA;
    Complex B = 0.5 * PI * y0v - lm * j0v;
    Complex Bp = -0.5 * PI * y1v + lm * j1v;        // d/du
    Complex Bpp = -0.5 * PI * (y0v - y1v / u) +      // d2/du2 via Z1' = Z0 - Z1/u
                  lm * (j0v - j1v / u);
    double sR = std::sqrt(p.R);
    Complex g = c1 * B - s1 * j0v;
    Complex gp = c1 * Bp + s1 * j1v;                 // d/du of g
    Complex pR = sR * g;
    Complex ppR = g / (2.0 * sR) + mu * sR * gp;
    Complex f = c2 * ppR + s2 * pR;
    // mu-derivatives (B also depends on mu through log mu)
    Complex dg = c1 * (p.R * Bp - j0v / mu) + s1 * p.R * j1v;
    Complex dgp = c1 * (p.R * Bpp + j1v / mu) + s1 * p.R * (j0v - j1v / u);
    Complex dpR = sR * dg;
    Complex dppR = dg / (2.0 * sR) + sR * gp + mu * sR * dgp;
    Complex df = c2 * dppR + s2 * dpR;
    return {f, df};
}

namespace detail {

// Real-mu secular value for eigenvalue sweeps; valid for any mu > 0 (uses
// the large-argument Bessel path beyond the series disc).  For Dirichlet
// this is sqrt(R) * F_hom -- same zeros.
inline double secular_real_any(double mu, const SpectralProblem& p) {
    Bessel0Real b = bessel0_real(mu * p.R);
    double lm = std::log(mu) - LOG2_MINUS_GAMMA;
    double B = 0.5 * PI * b.y0 - lm * b.j0;
    double Bp = -0.5 * PI * b.y1 + lm * b.j1;
    double g = p.bc0.c * B - p.bc0.s * b.j0;
    double gp = p.bc0.c * Bp + p.bc0.s * b.j1;
    double sR = std::sqrt(p.R);
    double pR = sR * g;
    double ppR = g / (2.0 * sR) + mu * sR * gp;
    return p.bcR.c * ppR + p.bcR.s * pR;
}

// F_gen(ix) (real, scaled by e^{-xR} beyond the I/K series range); only the
// sign and zeros matter to callers.
inline double secular_general_imag_scaled(double x, const SpectralProblem& p) {
    double c1 = p.bc0.c, s1 = p.bc0.s;
    double c2 = p.bcR.c, s2 = p.bcR.s;
    double a = c1 * (std::log(x) - LOG2_MINUS_GAMMA) + s1;
    double xr = x * p.R;
    double g, gp;  // g(xR) and d/du g
    if (xr <= MODIFIED_SWITCH) {
        ModBessel m = mod_bessel(xr);
        g = -a * m.i0 - c1 * m.k0;
        gp = -a * m.i1 + c1 * m.k1;
    } else {
        ModBesselScaled m = mod_bessel_scaled(xr);
        double damp = xr < 350.0 ? std::exp(-2.0 * xr) : 0.0;
        g = -a * m.i0e - c1 * m.k0e * damp;
        gp = -a * m.i1e + c1 * m.k1e * damp;
    }
    double sR = std::sqrt(p.R);
    double pR = sR * g;
    double ppR = g / (2.0 * sR) + x * sR * gp;
    return c2 * ppR + s2 * pR;
}

// mu -> 0 limit of F_gen (exists for every angle pair):
//   p(r) -> sqrt(r) (c1 log r - s1),  p'(r) -> (c1 log r - s1)/(2 sqrt r) + c1/sqrt r
inline double secular_general_at_zero(const SpectralProblem& p) {
    double c1 = p.bc0.c, s1 = p.bc0.s;
    double w = c1 * std::log(p.R) - s1;
    double sR = std::sqrt(p.R);
    return p.bcR.c * (w / (2.0 * sR) + c1 / sR) + p.bcR.s * sR * w;
}

}  // namespace detail

}  // namespace singspec

#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "singspec/constants.hpp"
#include "singspec/errors.hpp"
#include "singspec/problem.hpp"
#include "singspec/quadrature.hpp"
#include "singspec/secular.hpp"
#include "singspec/spectrum.hpp"

// Spectral zeta function via the contour representation
//
//   zeta(s) = (sin pi s / pi) int_{|t|}^inf x^{-2s} d/dx log F(ix) dx
//           + (1/2 pi i) int_{gamma_t} mu^{-2s} F'(mu)/F(mu) dmu,
//
// its analytic continuation to a neighbourhood of s = 0 (where it splits
// into the explicit -(e^{-2 s kappa} sin(pi s)/pi) log s branch term plus a
// regular part), and the regularized determinant, including the zero-mode
// branch that replaces F by F/mu^2.
//
// All complex powers and logs use the principal branch; every contour stays
// in the closed right half-plane, so the cut is never crossed.

namespace singspec {

struct ContourSpec {
    enum class Shape { Semicircle, Rectangle };
    double t_abs = 1e-4;  // anchor |t|; path runs from i t_abs to -i t_abs
    Shape shape = Shape::Semicircle;
    double width = 0.0;  // Re extent (Rectangle only); where the path
                         // crosses the positive real axis
    // where the path meets the real axis
    double real_crossing() const {
        return shape == Shape::Semicircle ? t_abs : width;
    }
    double max_radius() const {
        return shape == Shape::Semicircle ? t_abs : std::hypot(t_abs, width);
    }
};

inline ContourSpec semicircle_contour(double t_abs) {
    ContourSpec c;
    c.t_abs = t_abs;
    c.shape = ContourSpec::Shape::Semicircle;
    return c;
}

inline ContourSpec rectangle_contour(double t_abs, double width) {
    ContourSpec c;
    c.t_abs = t_abs;
    c.shape = ContourSpec::Shape::Rectangle;
    c.width = width;
    return c;
}

namespace detail {

// integral of g(mu) dmu along the contour from +i t to -i t
template <class G>
Complex contour_integrate(G&& g, const ContourSpec& c, double tol) {
    const Complex I(0.0, 1.0);
    if (c.shape == ContourSpec::Shape::Semicircle) {
        double t = c.t_abs;
        auto f = [&](double phi) {
            Complex mu = t * std::exp(Complex(0.0, phi));
            return g(mu) * (I * mu);  // dmu = i mu dphi
        };
        return integrate(f, 0.5 * PI, -0.5 * PI, tol);
    }
    double t = c.t_abs, w = c.width;
    auto top = [&](double x) { return g(Complex(x, t)); };
    auto side = [&](double y) { return g(Complex(w, y)) * I; };
    auto bot = [&](double x) { return g(Complex(x, -t)); };
    return integrate(top, 0.0, w, tol) + integrate(side, t, -t, tol) +
           integrate(bot, w, 0.0, tol);
}

struct ContourContext {
    double mu1 = 0.0;            // first positive root of F_hom
    std::optional<double> xstar;  // imaginary-axis root sqrt(-lambda_minus)
};

inline ContourContext contour_context(const SpectralProblem& p) {
    ContourContext ctx;
    ctx.mu1 = std::sqrt(positive_eigenvalues(p, 1).front());
    if (auto neg = negative_eigenvalue(p)) ctx.xstar = std::sqrt(-*neg);
    return ctx;
}

// Common validity checks; enclose_negative distinguishes the zeta contours
// (which must enclose +-i x*) from the small-anchor determinant contour
// (which must not).
inline void check_contour(const SpectralProblem& p, const ContourSpec& c,
                          const ContourContext& ctx, bool enclose_negative) {
    if (!(c.t_abs > 0.0))
        throw std::domain_error("ContourSpec: t_abs <= 0");
    if (c.shape == ContourSpec::Shape::Rectangle && !(c.width > 0.0))
        throw std::domain_error("ContourSpec: rectangle needs width > 0");
    if (c.max_radius() * p.R > Z_MAX)
        throw ContourTooClose("contour leaves the |mu R| <= Z_MAX disc");
    if (c.real_crossing() > ctx.mu1 - 1e-3)
        throw ContourTooClose(
            "contour crosses the real axis at or beyond the first positive "
            "root of F");
    if (ctx.xstar) {
        double x = *ctx.xstar;
        if (std::fabs(c.t_abs - x) < 1e-3)
            throw ContourTooClose(
                "contour endpoint within margin of the imaginary-axis root");
        if (enclose_negative && c.t_abs < x)
            throw NegativeEigenvalueContour(
                "zeta contour must enclose +-i sqrt(|lambda_-|); enlarge "
                "t_abs (rectangle shape keeps the real crossing small)");
    }
}

}  // namespace detail

// A contour suitable for the zeta representation of p: anchor above e^kappa
// (so the Lemma 6.2 tail applies) and above any imaginary-axis root, real
// crossing below the first positive root.
inline ContourSpec auto_contour(const SpectralProblem& p) {
    p.require_dirichlet_at_R("auto_contour");
    detail::ContourContext ctx = detail::contour_context(p);
    double lo = 1e-3 / p.R;
    if (!p.is_friedrichs())
        lo = std::max(lo, 1.05 * std::exp(kappa(p.bc0)));
    if (ctx.xstar) lo = std::max(lo, 1.05 * *ctx.xstar);
    double hi = std::min(0.9 * ctx.mu1, Z_MAX / p.R);
    if (lo < hi) return semicircle_contour(0.5 * (lo + hi));
    // the anchor must sit above mu1; cross the real axis early instead
    ContourSpec c = rectangle_contour(std::max(lo, 1.1 / p.R), 0.5 * ctx.mu1);
    if (c.max_radius() * p.R > Z_MAX)
        throw NegativeEigenvalueContour(
            "auto_contour: required anchor leaves the series disc");
    return c;
}

// Lemma 6.2: (LHS by direct quadrature, RHS via Ei).
//   int_{t}^inf x^{-2s}/(x (log x - kappa)) dx = -e^{-2 s kappa} Ei(-2s(log t - kappa))
inline std::pair<Complex, Complex> log_int_identity(Complex s, double t_abs,
                                                    double kap) {
    if (!(std::log(t_abs) > kap))
        throw std::domain_error("log_int_identity: requires log t > kappa");
    if (!(s.real() > 0.0))
        throw std::domain_error("log_int_identity: requires Re s > 0");
    Complex w0 = 2.0 * s * (std::log(t_abs) - kap);
    // LHS: after u = log x and w = 2s(u - kappa), the integral is
    // e^{-2 s kappa} int_{w0}^{inf} e^{-w}/w dw along a ray to large real w.
    Complex wend(std::max(45.0, std::abs(w0) + 45.0), 0.0);
    auto f = [&](double tau) {
        Complex w = w0 + tau * (wend - w0);
        return std::exp(-w) / w * (wend - w0);
    };
    Complex lhs = std::exp(-2.0 * s * kap) * integrate(f, 0.0, 1.0, 1e-12);
    Complex rhs = -std::exp(-2.0 * s * kap) * detail::ei_complex(-w0);
    return {lhs, rhs};
}

// Direct spectral sum over positive eigenvalues with an Euler-Maclaurin
// tail built on the McMahon root model; Dirichlet at R, no negative
// eigenvalue (those route through the contour representation).
inline Complex zeta_spectral(Complex s, const SpectralProblem& p,
                             int n_terms) {
    p.require_dirichlet_at_R("zeta_spectral");
    if (!(s.real() > 0.6))
        throw std::domain_error("zeta_spectral: requires Re s > 0.6");
    if (n_terms < 50) throw std::domain_error("zeta_spectral: n_terms < 50");
    if (negative_eigenvalue(p))
        throw std::domain_error(
            "zeta_spectral: negative eigenvalue present; use zeta_contour");
    std::vector<double> lam = positive_eigenvalues(p, n_terms);
    Complex sum = 0.0;
    for (auto it = lam.rbegin(); it != lam.rend(); ++it)
        sum += std::exp(-s * std::log(*it));
    // tail model: mu_j R ~ z(j) + delta(j) with z(j) the McMahon curve of J0
    // zeros and delta the log shift -(pi/2)/(log(z/R) - kappa); exact for
    // Friedrichs (delta = 0).
    double kap = p.is_friedrichs() ? 0.0 : kappa(p.bc0);
    bool fr = p.is_friedrichs();
    auto muR = [&](double y) {
        double b = (y - 0.25) * PI;
        double z = b + 1.0 / (8.0 * b) - 31.0 / (384.0 * b * b * b) +
                   3779.0 / (15360.0 * std::pow(b, 5));
        if (!fr) z += -0.5 * PI / (std::log(z / p.R) - kap);
        return z;
    };
    auto g = [&](double y) {
        return std::exp(-2.0 * s * std::log(muR(y) / p.R));
    };
    double y0 = n_terms + 0.5;
    // integral of g on [y0, inf): closed form for the pure power part
    // b(y) = (pi (y - 1/4)/R)^{-2s}, numerics for the rest
    Complex base_int = std::exp(-2.0 * s * std::log(PI / p.R)) *
                       std::exp((1.0 - 2.0 * s) * std::log(y0 - 0.25)) /
                       (2.0 * s - 1.0);
    auto rest = [&](double u) {  // y = e^u
        double y = std::exp(u);
        Complex b = std::exp(-2.0 * s * std::log(PI * (y - 0.25) / p.R));
        return (g(y) - b) * y;
    };
    Complex rest_int = integrate(rest, std::log(y0), std::log(1e6), 1e-11);
    Complex gp = (g(y0 + 0.01) - g(y0 - 0.01)) / 0.02;
    Complex tail = base_int + rest_int - gp / 24.0;
    if (std::abs(tail) > 0.5 * std::abs(sum) + 10.0)
        throw SlowConvergence("zeta_spectral: tail dominates at this s");
    return sum + tail;
}

namespace detail {

// axis integrand d/dx log F(ix) in the variable u = log x, weighted by
// x^{1-2s}
inline Complex axis_integral(Complex s, double from, double to,
                             const SpectralProblem& p, double tol) {
    auto f = [&](double u) {
        double x = std::exp(u);
        return std::exp((1.0 - 2.0 * s) * u) * log_deriv_imag(x, p);
    };
    return integrate(f, std::log(from), std::log(to), tol);
}

inline Complex pow_c(double x, Complex e) {
    return std::exp(e * std::log(x));
}

}  // namespace detail

inline Complex zeta_contour(Complex s, const SpectralProblem& p,
                            const ContourSpec& c) {
    p.require_dirichlet_at_R("zeta_contour");
    if (!(s.real() > 0.5))
        throw std::domain_error("zeta_contour: requires Re s > 1/2 "
                                "(use zeta_decompose near s = 0)");
    detail::ContourContext ctx = detail::contour_context(p);
    detail::check_contour(p, c, ctx, /*enclose_negative=*/true);
    double t = c.t_abs;
    double tol = quad_tol();
    Complex axis = detail::axis_integral(s, t, X_MAX, p, tol);
    // asymptotic tail beyond X_MAX, term by term (Eq. asymF + Lemma 6.2)
    Complex tail = p.R * detail::pow_c(X_MAX, 1.0 - 2.0 * s) / (2.0 * s - 1.0) -
                   detail::pow_c(X_MAX, -2.0 * s) / (4.0 * s) -
                   detail::pow_c(X_MAX, -2.0 * s - 1.0) /
                       (8.0 * p.R * (2.0 * s + 1.0));
    if (!p.is_friedrichs()) {
        double kap = kappa(p.bc0);
        tail -= std::exp(-2.0 * s * kap) *
                detail::ei_complex(-2.0 * s * (std::log(X_MAX) - kap));
    }
    auto g = [&](Complex mu) {
        SecularValue F = secular_f(mu, p);
        return std::exp(-2.0 * s * std::log(mu)) * F.df / F.f;
    };
    Complex arc = detail::contour_integrate(g, c, tol) / Complex(0.0, 2.0 * PI);
    return std::sin(PI * s) / PI * (axis + tail) + arc;
}

struct ZetaDecomposition {
    Complex s;
    Complex singular_part;  // -(e^{-2 s kappa} sin(pi s)/pi) log s
    Complex regular_part;
    Complex total;
};

// Analytic continuation of zeta to 0 < |s| <= 1/4 via the subtraction of
// the large-x asymptotics of log F(ix): the leftover axis integrand decays
// like x^{-2}, every subtracted piece integrates in closed form, and the
// log s branch point is isolated in the Ei term.
inline ZetaDecomposition zeta_decompose(Complex s, const SpectralProblem& p,
                                        const ContourSpec& c) {
    p.require_dirichlet_at_R("zeta_decompose");
    if (p.is_friedrichs())
        throw FriedrichsUndefined(
            "zeta_decompose: no branch point for the Friedrichs realization");
    if (s == Complex(0.0, 0.0) || std::abs(s) > 0.25)
        throw std::domain_error("zeta_decompose: need 0 < |s| <= 1/4");
    if (s.imag() == 0.0 && s.real() < 0.0)
        throw std::domain_error("zeta_decompose: s on the branch cut");
    detail::ContourContext ctx = detail::contour_context(p);
    detail::check_contour(p, c, ctx, /*enclose_negative=*/true);
    double kap = kappa(p.bc0);
    double t = c.t_abs;
    if (!(std::log(t) > kap))
        throw ContourTooClose("zeta_decompose: anchor needs log|t| > kappa");
    double tol = quad_tol();
    const double XD = 1e4;
    auto reg = [&](double u) {
        double x = std::exp(u);
        double sub = 1.0 / (x * (u - kap)) + p.R - 0.5 / x;
        return std::exp((1.0 - 2.0 * s) * u) *
               (log_deriv_imag(x, p) - sub);
    };
    Complex a2 = integrate(reg, std::log(t), std::log(XD), tol);
    a2 -= detail::pow_c(XD, -2.0 * s - 1.0) / (8.0 * p.R * (2.0 * s + 1.0));
    Complex E = -std::exp(-2.0 * s * kap) *
                detail::ei_complex(-2.0 * s * (std::log(t) - kap));
    Complex closed = p.R * detail::pow_c(t, 1.0 - 2.0 * s) / (2.0 * s - 1.0) -
                     detail::pow_c(t, -2.0 * s) / (4.0 * s);
    auto g = [&](Complex mu) {
        SecularValue F = secular_f(mu, p);
        return std::exp(-2.0 * s * std::log(mu)) * F.df / F.f;
    };
    Complex arc = detail::contour_integrate(g, c, tol) / Complex(0.0, 2.0 * PI);
    ZetaDecomposition d;
    d.s = s;
    d.total = std::sin(PI * s) / PI * (a2 + E + closed) + arc;
    d.singular_part =
        -std::exp(-2.0 * s * kap) * std::sin(PI * s) / PI * std::log(s);
    d.regular_part = d.total - d.singular_part;
    return d;
}

// Regularized determinant (Eq. detreg), evaluated at a small anchor
// t = i t_abs:
//   det = 2 e^gamma (F(t)/C0) exp( (1/(pi i)) int_{gamma_t} log mu F'/F dmu ),
// C0 = -1/sqrt(2 pi R), with F in the tan-theta normalization (F_hom/cos t1);
// when a zero mode is present, F is replaced by F/mu^2 and C0 by
// C0~ = +1/sqrt(2 pi R).
inline double det_reg(const SpectralProblem& p, const ContourSpec& c) {
    p.require_dirichlet_at_R("det_reg");
    if (p.is_friedrichs())
        throw FriedrichsUndefined(
            "det_reg: Friedrichs determinant has its own closed form");
    detail::ContourContext ctx = detail::contour_context(p);
    detail::check_contour(p, c, ctx, /*enclose_negative=*/false);
    bool zm = has_zero_mode(p);
    double t = c.t_abs;
    double C0 = -1.0 / std::sqrt(2.0 * PI * p.R);
    double pref;
    if (zm) {
        // F~(it) = F(it)/(it)^2 = hs(i t R)/t^2 in the tan-theta
        // normalization (series form, no cancellation), C0~ = +1/sqrt(2 pi R)
        auto s = detail::bessel_series_sums(detail::CL(0.0L, t * p.R));
        double Ft2 =
            static_cast<double>(s.hs.real()) / (t * t);
        pref = 2.0 * std::exp(EULER_GAMMA) * Ft2 / (-C0);
    } else {
        double Fit = secular_f_imag(t, p).first / p.bc0.c;
        pref = 2.0 * std::exp(EULER_GAMMA) * Fit / C0;
    }
    auto g = [&](Complex mu) {
        Complex ratio;
        if (zm) {
            ratio = zero_mode_log_deriv(mu, p);
        } else {
            SecularValue F = secular_f(mu, p);
            ratio = F.df / F.f;
        }
        return std::log(mu) * ratio;
    };
    Complex I = detail::contour_integrate(g, c, quad_tol());
    Complex expo = I / Complex(0.0, PI);
    return pref * std::exp(expo.real());
}

inline double det_reg(const SpectralProblem& p) {
    return det_reg(p, semicircle_contour(1e-4));
}

inline double det_friedrichs(double R) {
    if (!(R > 0.0)) throw std::domain_error("det_friedrichs: R <= 0");
    return std::sqrt(2.0 * PI * R);
}

// Validation path for the Friedrichs determinant: the standard zeta'(0)
// contour assembly (no log-singular subtraction is needed because the
// Friedrichs zeta is regular at 0):
//   zeta'(0) = A(0) + (1/2) log t - R t - (1/(pi i)) int log mu F'/F dmu,
//   A(0) = int_t^inf ( d/dx log F(ix) - R + 1/(2x) ) dx,
// and det = exp(-zeta'(0)).
inline double det_friedrichs_contour(double R, double t_abs = 1e-3) {
    SpectralProblem p(R, BoundaryCondition::friedrichs());
    double tol = quad_tol();
    auto f = [&](double u) {
        double x = std::exp(u);
        return (log_deriv_imag(x, p) - R + 0.5 / x) * x;
    };
    double A = integrate(f, std::log(t_abs), std::log(X_MAX), tol) -
               1.0 / (8.0 * R * X_MAX);
    auto g = [&](Complex mu) {
        SecularValue F = secular_f(mu, p);
        return std::log(mu) * F.df / F.f;
    };
    ContourSpec c = semicircle_contour(t_abs);
    Complex I = detail::contour_integrate(g, c, tol);
    double zp0 = A + 0.5 * std::log(t_abs) - R * t_abs -
                 (I / Complex(0.0, PI)).real();
    return std::exp(-zp0);
}

}  // namespace singspec

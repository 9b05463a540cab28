#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "singspec/constants.hpp"
#include "singspec/errors.hpp"
#include "singspec/problem.hpp"
#include "singspec/quadrature.hpp"
#include "singspec/secular.hpp"

// Closed-form resolvent kernel (Dirichlet at R) and its trace:
//   G(r,s) = (pi/2) p(min) q(max) / F_hom(mu),
//   Tr (Delta - mu^2)^{-1} = -(1/2mu) F_hom'(mu)/F_hom(mu),
// plus the large-(-lambda) trace expansion with a_k = (2 kappa)^k folded
// into the 1/((-lambda)(log(-lambda) - 2 kappa)) leading term.
//
// The pi/2 factor converts between the two normalizations of F the source
// formulas use; with it, the Friedrichs case reduces to the textbook
// -J0-kernel identity.  Log-derivative quantities are normalization-free.

namespace singspec {

struct ResolventEval {
    Complex mu;
    double kernel_norm = 0.0;  // sup of |G(r,r)| on a coarse diagnostic grid
    Complex trace;
};

// p(r, mu): the r=0-admissible solution, homogenized over theta1.
inline Complex kernel_p(double r, Complex mu, const SpectralProblem& p) {
    if (!(r > 0.0) || r > p.R)
        throw std::domain_error("kernel_p: r outside (0, R]");
    detail::require_off_cut(mu);
    Complex u = mu * r;
    Complex j0v = j0(u);
    Complex y0v = y0(u);
    Complex lm = std::log(mu) - LOG2_MINUS_GAMMA;
    double sr = std::sqrt(r);
    return p.bc0.c * sr * (0.5 * PI * y0v - lm * j0v) - p.bc0.s * sr * j0v;
}

// q(r, mu): the Dirichlet-at-R solution.
inline Complex kernel_q(double r, Complex mu, const SpectralProblem& p) {
    if (!(r > 0.0) || r > p.R)
        throw std::domain_error("kernel_q: r outside (0, R]");
    detail::require_off_cut(mu);
    Complex uR = mu * p.R;
    Complex u = mu * r;
    double sr = std::sqrt(r);
    return sr * (y0(uR) * j0(u) - j0(uR) * y0(u));
}

inline Complex resolvent_kernel(double r, double s, Complex mu,
                                const SpectralProblem& p) {
    p.require_dirichlet_at_R("resolvent_kernel");
    SecularValue F = secular_f(mu, p);
    if (std::abs(F.f) < 1e-13)
        throw EigenvalueHit("resolvent_kernel: mu^2 is (numerically) an eigenvalue");
    double lo = std::min(r, s), hi = std::max(r, s);
    return 0.5 * PI * kernel_p(lo, mu, p) * kernel_q(hi, mu, p) / F.f;
}

inline Complex trace_resolvent(Complex mu, const SpectralProblem& p) {
    SecularValue F = secular_f(mu, p);
    if (std::abs(F.f) < 1e-13)
        throw EigenvalueHit("trace_resolvent: mu^2 is (numerically) an eigenvalue");
    return -F.df / (2.0 * mu * F.f);
}

// Independent check of the trace identity: quadrature of the kernel
// diagonal.  The integrand behaves like r log^2 r near 0 (bounded, singular
// derivative), so that end is integrated in the variable r = rc u^2.
inline Complex trace_resolvent_quadrature(Complex mu, const SpectralProblem& p,
                                          double tol = 1e-9) {
    double rc = 0.1 * p.R;
    auto diag = [&](double r) { return resolvent_kernel(r, r, mu, p); };
    auto near0 = [&](double u) { return diag(rc * u * u) * (2.0 * rc * u); };
    return integrate(near0, 0.0, 1.0, 0.5 * tol) +
           integrate(diag, rc, p.R, 0.5 * tol);
}

inline ResolventEval evaluate_resolvent(Complex mu, const SpectralProblem& p) {
    ResolventEval e;
    e.mu = mu;
    e.trace = trace_resolvent(mu, p);
    for (int i = 1; i <= 16; ++i) {
        double r = p.R * i / 17.0;
        e.kernel_norm =
            std::max(e.kernel_norm, std::abs(resolvent_kernel(r, r, mu, p)));
    }
    return e;
}

// Prop.-7.1 shape in the variable v = -lambda:
//   Tr(Delta - lambda)^{-1} ~ 1/(v (log v - 2 kappa))
//                             + (R/2) v^{-1/2} - (1/4) v^{-1} - (1/(16R)) v^{-3/2}
inline AsymptoticSeries resolvent_trace_expansion(const SpectralProblem& p) {
    if (p.is_friedrichs())
        throw FriedrichsUndefined(
            "resolvent_trace_expansion: log term undefined for Friedrichs");
    double k = kappa(p.bc0);
    AsymptoticSeries s;
    s.leading_log = {1.0, 2.0 * k};
    s.power_coeffs = {{-0.5, 0.5 * p.R},
                      {-1.0, -0.25},
                      {-1.5, -1.0 / (16.0 * p.R)}};
    double x0 = std::max(30.0 / p.R, 2.0 * std::exp(k));
    s.valid_from = x0 * x0;
    return s;
}

}  // namespace singspec

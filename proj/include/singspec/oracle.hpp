#pragma once

#include <cmath>
#include <stdexcept>

#include "singspec/errors.hpp"
#include "singspec/problem.hpp"

// Independent eigenvalue oracle: integrate phi'' = (-1/(4 r^2) - lambda) phi
// outward from r0 with Frobenius-exact initial data and return the boundary
// residual at R.  Deliberately shares no code with the secular path: plain
// RK4 on a graded-then-uniform mesh.  Optimized for independence, not speed.

namespace singspec {

struct ShootState {
    double r = 0.0;
    double phi = 0.0;
    double dphi = 0.0;
};

// Frobenius data phi = a1 sqrt(r) + a2 sqrt(r) log r + O(r^{5/2} log r),
// (a1, a2) = (-sin theta1, cos theta1), including the lambda-correction
// terms at order r^{5/2}:
//   sqrt(r)        ->  sqrt(r)        - (lambda/4) r^{5/2}
//   sqrt(r) log r  ->  sqrt(r) log r  - (lambda/4) r^{5/2} log r + (lambda/4) r^{5/2}
inline ShootState initial_data(double r0, const BoundaryCondition& bc0,
                               double lambda) {
    if (!(r0 > 0.0)) throw std::domain_error("initial_data: r0 <= 0");
    double a1 = -bc0.s, a2 = bc0.c;
    double sr = std::sqrt(r0);
    double r52 = r0 * r0 * sr;
    double lg = std::log(r0);
    double q = 0.25 * lambda;
    ShootState st;
    st.r = r0;
    st.phi = a1 * (sr - q * r52) +
             a2 * (sr * lg - q * r52 * lg + q * r52);
    // derivatives: d sqrt(r) = 1/(2 sqrt r); d r^{5/2} = (5/2) r^{3/2};
    // d (sqrt r log r) = (log r + 2)/(2 sqrt r);
    // d (r^{5/2} log r) = (5/2) r^{3/2} log r + r^{3/2}
    double r32 = r0 * sr;
    st.dphi = a1 * (0.5 / sr - q * 2.5 * r32) +
              a2 * ((lg + 2.0) * 0.5 / sr - q * (2.5 * r32 * lg + r32) +
                    q * 2.5 * r32);
    return st;
}

// Boundary residual cos(theta2) phi'(R) + sin(theta2) phi(R), normalized by
// the solution magnitude at R.  lambda may have either sign.
inline double shoot(double lambda, const SpectralProblem& p, double r0 = 0.0,
                    int steps = 12000) {
    if (r0 <= 0.0) r0 = 1e-6 * p.R;
    if (r0 > 1e-4 * p.R)
        throw std::domain_error("shoot: r0 too large for the Frobenius data");
    ShootState st = initial_data(r0, p.bc0, lambda);
    auto rhs = [&](double r, double phi) {
        return (-0.25 / (r * r) - lambda) * phi;
    };
    // graded mesh through the sqrt(r) log r layer, then uniform
    double r_join = 0.05 * p.R;
    int n1 = steps / 3, n2 = steps - n1;
    double ratio = std::pow(r_join / r0, 1.0 / n1);
    double r = r0;
    int count = 0;
    auto rk4_step = [&](double h) {
        double k1p = st.dphi, k1v = rhs(r, st.phi);
        double k2p = st.dphi + 0.5 * h * k1v,
               k2v = rhs(r + 0.5 * h, st.phi + 0.5 * h * k1p);
        double k3p = st.dphi + 0.5 * h * k2v,
               k3v = rhs(r + 0.5 * h, st.phi + 0.5 * h * k2p);
        double k4p = st.dphi + h * k3v, k4v = rhs(r + h, st.phi + h * k3p);
        st.phi += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        st.dphi += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        r += h;
        if (++count % 64 == 0) {
            double m = std::max(std::fabs(st.phi), std::fabs(st.dphi));
            if (!std::isfinite(m) || m == 0.0)
                throw StepFailure("shoot: solution overflowed or vanished");
            st.phi /= m;
            st.dphi /= m;
        }
    };
    for (int i = 0; i < n1; ++i) {
        double rn = r0 * std::pow(ratio, i + 1);
        rk4_step(rn - r);
        r = rn;  // avoid drift
    }
    double h2 = (p.R - r_join) / n2;
    for (int i = 0; i < n2; ++i) rk4_step(h2);
    if (!std::isfinite(st.phi) || !std::isfinite(st.dphi))
        throw StepFailure("shoot: non-finite state at R");
    double m = std::hypot(st.phi, st.dphi);
    return (p.bcR.c * st.dphi + p.bcR.s * st.phi) / m;
}

// Bisection on the shoot residual inside a caller-supplied bracket.
inline double oracle_eigenvalue(double lam_lo, double lam_hi,
                                const SpectralProblem& p, double r0 = 0.0,
                                int steps = 12000) {
    double flo = shoot(lam_lo, p, r0, steps);
    double fhi = shoot(lam_hi, p, r0, steps);
    if ((flo > 0.0) == (fhi > 0.0))
        throw BracketFailure("oracle_eigenvalue: no sign change in bracket");
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lam_lo + lam_hi);
        double fm = shoot(mid, p, r0, steps);
        if ((fm > 0.0) == (flo > 0.0)) {
            lam_lo = mid;
            flo = fm;
        } else {
            lam_hi = mid;
        }
        if (std::fabs(lam_hi - lam_lo) <
            1e-12 * std::max(1.0, std::fabs(lam_hi)))
            break;
    }
    return 0.5 * (lam_lo + lam_hi);
}

}  // namespace singspec

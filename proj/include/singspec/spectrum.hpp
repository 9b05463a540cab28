#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "singspec/constants.hpp"
#include "singspec/detail/dd.hpp"
#include "singspec/errors.hpp"
#include "singspec/problem.hpp"
#include "singspec/secular.hpp"

// Eigenvalue computation: positive eigenvalues by sign-change sweeps of the
// secular function (J0-zero interlacing keeps roots ~pi/R apart; a pi/(8R)
// grid cannot skip them), the zero-mode test, and the unique negative
// eigenvalue via the monotone g(y) = y^{-2N} f(y) construction.

namespace singspec {

struct Spectrum {
    std::optional<double> negative;
    bool zero_mode = false;
    std::vector<double> positive;  // lambda_j = mu_j^2, strictly increasing
    int count_requested = 0;
};

namespace detail {

// k-th positive zero of J0: McMahon expansion seeded, Newton polished.
inline double j0_zero(int k) {
    double b = (k - 0.25) * PI;
    double z = b + 1.0 / (8.0 * b) - 31.0 / (384.0 * b * b * b) +
               3779.0 / (15360.0 * std::pow(b, 5));
    for (int it = 0; it < 4; ++it) {
        Bessel0Real f = bessel0_real(z);
        z += f.j0 / f.j1;  // J0' = -J1
        if (std::fabs(f.j0) < 1e-15) break;
    }
    return z;
}

template <class F>
double bisect(F&& f, double lo, double hi, double flo) {
    for (int it = 0; it < 200 && (hi - lo) > 1e-15 * hi; ++it) {
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

// Thm. 5.2(1): zero eigenvalue iff log R = tan(theta1) (homogenized:
// c1 log R - s1 = 0; never for Friedrichs).
inline bool has_zero_mode(const SpectralProblem& p) {
    p.require_dirichlet_at_R("has_zero_mode");
    return std::fabs(p.bc0.c * std::log(p.R) - p.bc0.s) <= 1e-12;
}

// Thm. 5.2(2): a (unique) negative eigenvalue exists iff
// alpha = log R - tan(theta1) > 0.  Located through the strictly increasing
// g(y) = y^{-2N} f(y), where
//   f(y) = sum H_k (y^2/4)^k/(k!)^2 - alpha sum (y^2/4)^k/(k!)^2
// and N is the first index with H_N > alpha.  The eigenvalue is
// lambda = -(y*/R)^2 at the root y* of f.
inline std::optional<double> negative_eigenvalue(const SpectralProblem& p) {
    p.require_dirichlet_at_R("negative_eigenvalue");
    if (p.is_friedrichs()) return std::nullopt;  // tan theta = +inf > log R
    using namespace detail;
    dd alpha = sub(dd_log(p.R), dd(p.bc0.tan_theta()));
    // alpha within the zero-mode tolerance counts as the boundary case
    if (!(alpha.hi > 1e-12)) return std::nullopt;

    // f in double-double: the two sums cancel to ~alpha*I0*eps near the root
    auto f = [&](double y) -> double {
        dd q = mul(two_prod(y, y), 0.25);
        dd t(1.0), i0(1.0), hs(0.0), h(0.0);
        for (int k = 1; k < 400; ++k) {
            t = div(mul(t, q), static_cast<double>(k) * k);
            h = add(h, div(dd(1.0), static_cast<double>(k)));
            i0 = add(i0, t);
            hs = add(hs, mul(t, h));
            if (std::fabs(t.hi) < 1e-33 * i0.hi && k > y) break;
        }
        return sub(hs, mul(i0, alpha)).value();
    };
    // bisect on f: it shares its sign (hence its root) with the strictly
    // increasing g(y) = y^{-2N} f(y), without g's underflow risk
    double ymax = X_MAX;  // in y = xR units with R absorbed: y <= 1e3
    double lo = 1e-8, hi = 1.0;
    double fhi = f(hi);
    while (fhi < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > ymax)
            throw BracketFailure(
                "negative_eigenvalue: no sign change below y = 1e3");
        fhi = f(hi);
    }
    double flo = f(lo);
    if (flo >= 0.0)
        throw BracketFailure("negative_eigenvalue: lower bracket not negative");
    double ystar = bisect(f, lo, hi, flo);
    double x = ystar / p.R;
    return -x * x;
}

// First n positive roots of the secular function, returned as eigenvalues
// lambda = mu^2.  Works for Dirichlet or Robin conditions at R.
inline std::vector<double> positive_eigenvalues(const SpectralProblem& p,
                                                int n) {
    if (n < 1) throw std::domain_error("positive_eigenvalues: n < 1");
    auto f = [&](double mu) { return detail::secular_real_any(mu, p); };
    std::vector<double> out;
    out.reserve(n);
    double step = PI / (8.0 * p.R);
    double mu = 1e-3 / p.R;  // skips the zero mode when present
    double fprev = f(mu);
    double mu_cap = (n + 12) * PI / p.R + 30.0 / p.R;
    while (static_cast<int>(out.size()) < n) {
        double next = mu + step;
        if (next > mu_cap)
            throw BracketFailure(
                "positive_eigenvalues: sweep exhausted before finding " +
                std::to_string(n) + " roots");
        double fnext = f(next);
        if (fprev == 0.0) {
            out.push_back(mu * mu);
        } else if ((fprev > 0.0) != (fnext > 0.0)) {
            double root = detail::bisect(f, mu, next, fprev);
            out.push_back(root * root);
        }
        mu = next;
        fprev = fnext;
    }
    return out;
}

// Eigenfunction phi = a1 sqrt(r) J0(mu r)
//                   + a2 sqrt(r) [ (pi/2) Y0(mu r) - (log mu - log2 + gamma) J0(mu r) ]
// with (a1, a2) = (-sin theta1, cos theta1).
inline double eigenfunction(double r, double mu, const SpectralProblem& p) {
    if (!(r > 0.0)) throw std::domain_error("eigenfunction: r <= 0");
    if (!(mu > 0.0)) throw std::domain_error("eigenfunction: mu <= 0");
    detail::Bessel0Real b = detail::bessel0_real(mu * r);
    double lm = std::log(mu) - LOG2_MINUS_GAMMA;
    double a1 = -p.bc0.s, a2 = p.bc0.c;
    return std::sqrt(r) * (a1 * b.j0 + a2 * (0.5 * PI * b.y0 - lm * b.j0));
}

namespace detail {

// Negative-eigenvalue scan for Robin problems, where Thm. 5.2's criterion
// does not directly apply: look for a sign change of F_gen(ix).
inline std::optional<double> negative_eigenvalue_robin(
    const SpectralProblem& p) {
    auto f = [&](double x) { return secular_general_imag_scaled(x, p); };
    double xmax = X_MAX / p.R;
    double prev = f(1e-4 / p.R);
    double x = 1e-4 / p.R;
    double step0 = 0.05 / p.R;
    for (double nx = step0; nx < xmax; nx = nx < 1.0 / p.R ? nx + step0
                                                            : nx * 1.05) {
        double fn = f(nx);
        if ((prev > 0.0) != (fn > 0.0)) {
            double root = bisect(f, x, nx, prev);
            return -root * root;
        }
        x = nx;
        prev = fn;
    }
    return std::nullopt;
}

}  // namespace detail

inline Spectrum compute_spectrum(const SpectralProblem& p, int n) {
    Spectrum s;
    s.count_requested = n;
    if (p.dirichlet_at_R()) {
        s.zero_mode = has_zero_mode(p);
        s.negative = negative_eigenvalue(p);
    } else {
        s.zero_mode = std::fabs(detail::secular_general_at_zero(p)) <= 1e-12;
        s.negative = detail::negative_eigenvalue_robin(p);
    }
    s.positive = positive_eigenvalues(p, n);
    return s;
}

}  // namespace singspec

// Acceptance gate: one pass/fail line per criterion, nonzero exit if any
// fail.  Each criterion is self-contained and uses only the public headers.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "singspec/singspec.hpp"

using namespace singspec;

static int failures = 0;

static void report(int num, const char* name, bool pass, double metric,
                   double elapsed) {
    std::printf("%s  criterion %2d  %-28s  metric %.3e  (%.1fs)\n",
                pass ? "PASS" : "FAIL", num, name, metric, elapsed);
    if (!pass) ++failures;
}

static double now() {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

// shared 12x12 (R, tan theta1) grid; two tan values sit exactly on log R
static void make_grid(std::vector<double>& Rs, std::vector<double>& tans) {
    for (int i = 0; i < 12; ++i) Rs.push_back(0.4 * std::pow(10.0, i / 11.0));
    tans = {std::log(Rs[3]), std::log(Rs[7]), -2.0, -1.0, -0.5, 0.0,
            0.3,             0.7,             1.2,  1.8,  2.5,  3.0};
}

static void criterion_1() {
    double t0 = now();
    std::vector<double> Rs, tans;
    make_grid(Rs, tans);
    bool ok = true;
    for (double R : Rs) {
        for (double tt : tans) {
            SpectralProblem p(R, BoundaryCondition::from_tan(tt));
            bool want = std::fabs(std::log(R) - tt) <= 1e-12;
            if (has_zero_mode(p) != want) ok = false;
            double F = std::abs(secular_f(Complex(1e-6, 0.0), p).f);
            if ((F <= 1e-4) != want) ok = false;
        }
    }
    report(1, "zero-mode-criterion", ok, ok ? 0.0 : 1.0, now() - t0);
}

static void criterion_2() {
    double t0 = now();
    std::vector<double> Rs, tans;
    make_grid(Rs, tans);
    bool ok = true;
    double worst = 0.0;
    for (double R : Rs) {
        for (double tt : tans) {
            SpectralProblem p(R, BoundaryCondition::from_tan(tt));
            auto neg = negative_eigenvalue(p);
            bool want = tt < std::log(R);
            if (neg.has_value() != want) {
                ok = false;
                continue;
            }
            if (!neg) continue;
            // independent route: root of F_hom(ix)
            double x0 = std::sqrt(-*neg);
            double lo = 0.98 * x0, hi = 1.02 * x0;
            double fl = secular_f_imag(lo, p).first;
            double fh = secular_f_imag(hi, p).first;
            if ((fl > 0) == (fh > 0)) {
                ok = false;
                continue;
            }
            for (int it = 0; it < 100 && hi - lo > 1e-15 * hi; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = secular_f_imag(mid, p).first;
                if ((fm > 0) == (fl > 0)) {
                    lo = mid;
                    fl = fm;
                } else {
                    hi = mid;
                }
            }
            double x1 = 0.5 * (lo + hi);
            worst = std::max(worst,
                             std::fabs(x1 * x1 - (-*neg)) / std::fabs(*neg));
        }
    }
    report(2, "negative-eigenvalue-dual", ok && worst < 1e-9, worst,
           now() - t0);
}

// eigenvalue sum with 2000 exact terms, root-model sum to j = 5e4, and a
// closed-form integral tail
static Complex eigen_sum(Complex mu, const SpectralProblem& p,
                         const Spectrum& s) {
    Complex mu2 = mu * mu;
    Complex sum = 0.0;
    for (auto it = s.positive.rbegin(); it != s.positive.rend(); ++it)
        sum += 1.0 / (*it - mu2);
    if (s.zero_mode) sum += -1.0 / mu2;
    if (s.negative) sum += 1.0 / (*s.negative - mu2);
    double kap = p.is_friedrichs() ? 0.0 : kappa(p.bc0);
    bool fr = p.is_friedrichs();
    auto muR = [&](double y) {
        double b = (y - 0.25) * PI;
        double z = b + 1.0 / (8.0 * b) - 31.0 / (384.0 * b * b * b) +
                   3779.0 / (15360.0 * std::pow(b, 5));
        if (!fr) z += -0.5 * PI / (std::log(z / p.R) - kap);
        return z;
    };
    int N = static_cast<int>(s.positive.size());
    const int M = 50000;
    Complex tail = 0.0;
    for (int j = M; j > N; --j) {
        double z = muR(j) / p.R;
        tail += 1.0 / (z * z - mu2);
    }
    double a = PI / p.R;
    double J = M + 0.5;
    tail += std::log((a * (J - 0.25) + mu) / (a * (J - 0.25) - mu)) /
            (2.0 * a * mu);
    return sum + tail;
}

static void criterion_3() {
    double t0 = now();
    SpectralProblem probs[4] = {
        SpectralProblem(1.0, BoundaryCondition::from_tan(0.5)),
        SpectralProblem(1.0, BoundaryCondition::from_tan(-2.0)),
        SpectralProblem(1.0, BoundaryCondition::friedrichs()),
        SpectralProblem(1.0, BoundaryCondition::from_tan(0.0)),
    };
    Complex pts[5] = {{0.0, 1.3}, {0.0, 2.7}, {0.6, 1.1}, {2.0, 2.0},
                      {0.0, 5.5}};
    double worst = 0.0;
    for (auto& p : probs) {
        Spectrum s = compute_spectrum(p, 2000);
        for (auto mu : pts)
            worst = std::max(worst,
                             std::abs(trace_resolvent(mu, p) -
                                      eigen_sum(mu, p, s)));
    }
    report(3, "trace-identity", worst < 1e-6, worst, now() - t0);
}

static void criterion_4() {
    double t0 = now();
    bool ok = true;
    double worst_dev = 0.0;
    for (double tt : {0.4, -0.8}) {
        SpectralProblem p(1.0, BoundaryCondition::from_tan(tt));
        AsymptoticSeries a = secular_asymptotic(p);
        double r100 = log_deriv_imag(100.0, p) - a.eval(100.0);
        double r200 = log_deriv_imag(200.0, p) - a.eval(200.0);
        double ratio = r100 / r200;
        if (!(ratio > 6.0 && ratio < 10.0)) ok = false;
        worst_dev = std::max(worst_dev, std::fabs(ratio - 8.0));
    }
    report(4, "resolvent-expansion-x3", ok, worst_dev, now() - t0);
}

static void criterion_5() {
    double t0 = now();
    double t = 1e-6, lt = std::log(t);
    SpectralProblem p(1.0, BoundaryCondition::from_tan(0.5));
    SpectralProblem pf(1.0, BoundaryCondition::friedrichs());
    double D = heat_trace(t, p).value - heat_trace(t, pf).value;
    double a1 = D * lt;  // power ladder cancels in the difference
    bool ok = std::fabs(a1 + 1.0) < 0.15;
    // Friedrichs control: no inverse-log term survives the calibrated ladder
    PowerLadder L = calibrate_power_ladder(1.0);
    double resid = heat_trace(t, pf).value -
                   (L.beta0 / std::sqrt(t) + L.beta1 + L.beta2 * std::sqrt(t));
    if (!(std::fabs(resid * lt) <= 0.01)) ok = false;
    // alpha_2 = gamma + 2 kappa, dual computation
    double kap = kappa(p.bc0);
    double a2m = alpha_k(2, kap);
    if (std::fabs(a2m - (EULER_GAMMA + 2.0 * kap)) > 1e-13) ok = false;
    if (std::fabs(a2m - alpha_k_quadrature(2, kap)) > 1e-10) ok = false;
    report(5, "heat-inverse-log", ok, std::fabs(a1 + 1.0), now() - t0);
}

static void criterion_6() {
    double t0 = now();
    double worst = 0.0;
    double kap = kappa(BoundaryCondition::from_tan(1.0));
    for (double s : {0.02, 0.05, 0.1, 0.2, 0.3}) {
        for (double t : {2.0, 6.0}) {
            auto [lhs, rhs] = log_int_identity(Complex(s, 0.0), t, kap);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    bool ok = worst < 1e-9;
    // s -> 0: rhs = -e^{-2 s kappa}(log s + gamma + log(2(log t - kappa))) + O(s)
    double tt = 2.7;
    double prev = 0.0;
    for (double s : {1e-4, 1e-5}) {
        auto [lhs, rhs] = log_int_identity(Complex(s, 0.0), tt, kap);
        Complex structure =
            -std::exp(-2.0 * s * kap) *
            (std::log(Complex(s, 0.0)) + EULER_GAMMA +
             std::log(2.0 * (std::log(tt) - kap)));
        double rem = std::abs(rhs - structure);
        if (rem > 10.0 * s) ok = false;  // remainder is O(s)
        if (prev > 0.0 && !(prev / rem > 5.0 && prev / rem < 20.0)) ok = false;
        prev = rem;
    }
    report(6, "log-integral-identity", ok, worst, now() - t0);
}

static void criterion_7() {
    double t0 = now();
    SpectralProblem p(1.0, BoundaryCondition::from_tan(1.0));
    ContourSpec c = auto_contour(p);
    double r = 1e-3, del = 1e-4;
    // single-valuedness of the regular part across the cut, and the
    // predicted log-jump of the total (Prop. 6.3: the jump is carried
    // entirely by -(e^{-2 s kappa} sin(pi s)/pi) log s)
    Complex sp = std::polar(r, PI - del), sm = std::polar(r, -(PI - del));
    ZetaDecomposition dp = zeta_decompose(sp, p, c);
    ZetaDecomposition dm = zeta_decompose(sm, p, c);
    double reg_jump = std::abs(dp.regular_part - dm.regular_part);
    Complex jump = dp.total - dm.total;
    Complex pred = dp.singular_part - dm.singular_part;
    bool ok = reg_jump < 1e-5 && std::abs(jump - pred) < 1e-5 &&
              std::abs(jump) > 1e-3;  // the jump itself is not small
    // representation equality at real s > 1/2
    double worst = 0.0;
    for (double s : {0.75, 1.0, 1.5, 2.0}) {
        Complex zs = zeta_spectral(Complex(s, 0.0), p, 400);
        Complex zc = zeta_contour(Complex(s, 0.0), p, c);
        worst = std::max(worst, std::abs(zs - zc));
    }
    if (worst > 1e-6) ok = false;
    report(7, "zeta-branch-point", ok, std::max(reg_jump, worst), now() - t0);
}

static void criterion_8() {
    double t0 = now();
    double worst = 0.0;
    const double eg = std::exp(EULER_GAMMA);
    double grid[8][2] = {{1.0, 1.0}, {1.0, -2.0}, {1.0, 2.5}, {0.5, 1.0},
                         {0.5, -1.0}, {2.0, 1.5},  {2.0, -0.3}, {3.0, 2.0}};
    for (auto& g : grid) {
        double R = g[0], tt = g[1];
        SpectralProblem p(R, BoundaryCondition::from_tan(tt));
        double closed =
            2.0 * std::sqrt(2.0 * PI * R) * eg * (tt - std::log(R));
        worst = std::max(worst,
                         std::fabs(det_reg(p) - closed) / std::fabs(closed));
    }
    for (double R : {1.0, 2.0}) {
        SpectralProblem p(R, BoundaryCondition::from_tan(std::log(R)));
        double closed = std::sqrt(0.5 * PI * R) * eg * R * R;
        worst = std::max(worst, std::fabs(det_reg(p) - closed) / closed);
    }
    bool ok = worst < 1e-6;
    double fr = std::fabs(det_friedrichs_contour(1.0) - det_friedrichs(1.0)) /
                det_friedrichs(1.0);
    if (fr > 1e-6) ok = false;
    // anchor independence (1e-8) and path independence (1e-6)
    SpectralProblem p1(1.0, BoundaryCondition::from_tan(1.0));
    double d1 = det_reg(p1, semicircle_contour(1e-4));
    double d2 = det_reg(p1, semicircle_contour(2e-4));
    double d3 = det_reg(p1, rectangle_contour(1e-4, 1.0));
    if (std::fabs(d1 - d2) / d1 > 1e-8) ok = false;
    if (std::fabs(d1 - d3) / d1 > 1e-6) ok = false;
    report(8, "determinants", ok, worst, now() - t0);
}

static void criterion_9() {
    double t0 = now();
    SpectralProblem probs[6] = {
        SpectralProblem(1.0, BoundaryCondition::from_tan(0.0)),
        SpectralProblem(1.0, BoundaryCondition::from_tan(0.5)),
        SpectralProblem(1.0, BoundaryCondition::from_tan(-2.0)),
        SpectralProblem(2.0, BoundaryCondition::from_tan(1.0)),
        SpectralProblem(0.5, BoundaryCondition::friedrichs()),
        SpectralProblem(1.0, BoundaryCondition::from_tan(0.3),
                        BoundaryCondition::neumann()),
    };
    double worst = 0.0;
    for (auto& p : probs) {
        std::vector<double> lam = positive_eigenvalues(p, 8);
        for (double l : lam) {
            double o = oracle_eigenvalue(0.995 * l, 1.005 * l, p);
            worst = std::max(worst, std::fabs(o - l) / l);
        }
    }
    bool ok = worst < 1e-7;
    // theta2-independence of the inverse-log heat term (Thm. 1.2): alpha_1
    // recovered for Neumann at R matches the Dirichlet value within 15%
    double t = 1e-6, lt = std::log(t);
    SpectralProblem pr(1.0, BoundaryCondition::from_tan(0.5),
                       BoundaryCondition::neumann());
    SpectralProblem pfr(1.0, BoundaryCondition::friedrichs(),
                        BoundaryCondition::neumann());
    double a1 = (heat_trace(t, pr).value - heat_trace(t, pfr).value) * lt;
    if (std::fabs(a1 + 1.0) > 0.15) ok = false;
    report(9, "oracle-equivalence", ok, worst, now() - t0);
}

static void criterion_10() {
    double t0 = now();
    double worst = 0.0;
    // cylinder Wronskian J1 Y0 - J0 Y1 = 2/(pi z)
    for (Complex z : {Complex(0.7, 0.0), Complex(2.0, 1.0), Complex(0.1, 0.5),
                      Complex(12.0, 0.0)}) {
        auto [j1v, y1v] = j1_y1(z);
        worst = std::max(worst,
                         std::abs(j1v * y0(z) - j0(z) * y1v - 2.0 / (PI * z)));
    }
    // modified Wronskian I0 K1 + I1 K0 = 1/x across the series/asymptotic seam
    for (double x : {1.0, 10.0, 14.9, 15.1, 80.0}) {
        detail::ModBessel m = detail::mod_bessel(x);
        worst = std::max(worst,
                         std::fabs(m.i0 * m.k1 + m.i1 * m.k0 - 1.0 / x) * x);
    }
    // connection across the real-axis series/Hankel seam
    for (double x : {19.9, 20.1}) {
        detail::Bessel0Real a = detail::bessel0_real(x);
        Complex zb(x, 0.0);
        worst = std::max(worst, std::abs(j0(zb) - a.j0));
        worst = std::max(worst, std::abs(y0(zb) - a.y0));
    }
    bool ok = worst < 1e-10;
    double lim = std::abs(Complex(1e-6, 0.0) *
                              j1_y1(Complex(1e-6, 0.0)).second +
                          2.0 / PI);
    if (lim > 1e-4) ok = false;
    report(10, "specfun-kernel", ok, worst, now() - t0);
}

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures) {
        std::printf("%d criteria FAILED\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}

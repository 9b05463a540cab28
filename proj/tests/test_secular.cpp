#include <doctest.h>

#include "singspec/secular.hpp"

using namespace singspec;

TEST_CASE("kappa") {
    CHECK(kappa(BoundaryCondition::from_tan(0.0)) ==
          doctest::Approx(0.11593151565841244881).epsilon(1e-15));
    CHECK(kappa(BoundaryCondition::from_tan(2.0)) ==
          doctest::Approx(0.11593151565841244881 - 2.0).epsilon(1e-14));
    CHECK_THROWS_AS(kappa(BoundaryCondition::friedrichs()),
                    FriedrichsUndefined);
}

TEST_CASE("Friedrichs secular function is -J0(mu R)") {
    SpectralProblem p(1.3, BoundaryCondition::friedrichs());
    for (Complex mu : {Complex(0.7, 0.0), Complex(2.0, 1.5), Complex(0.0, 3.0)}) {
        SecularValue F = secular_f(mu, p);
        CHECK(std::abs(F.f + j0(mu * p.R)) < 1e-13);
        CHECK(std::abs(F.df - p.R * j1_y1(mu * p.R).first) < 1e-13);
    }
}

TEST_CASE("imaginary-axis form matches the complex evaluation") {
    SpectralProblem p(1.0, BoundaryCondition::from_tan(0.7));
    for (double x : {0.3, 1.0, 4.0, 12.0}) {
        auto [f, df] = secular_f_imag(x, p);
        SecularValue F = secular_f(Complex(0.0, x), p);
        CHECK(F.f.imag() == doctest::Approx(0.0).scale(std::fabs(f)));
        CHECK(F.f.real() == doctest::Approx(f).epsilon(1e-12));
        // d/dx F(ix) = i F'(ix)
        CHECK((Complex(0.0, 1.0) * F.df).real() ==
              doctest::Approx(df).epsilon(1e-12));
    }
}

TEST_CASE("log derivative on the imaginary axis approaches the expansion") {
    SpectralProblem p(1.0, BoundaryCondition::from_tan(0.4));
    AsymptoticSeries a = secular_asymptotic(p);
    CHECK(a.leading_log.has_value());
    double r50 = log_deriv_imag(50.0, p) - a.eval(50.0);
    double r100 = log_deriv_imag(100.0, p) - a.eval(100.0);
    CHECK(std::fabs(r50) < 1e-5);
    CHECK(std::fabs(r100) < std::fabs(r50));
    // beyond the overflow range of the unscaled form
    CHECK(std::isfinite(log_deriv_imag(5000.0, p)));
    CHECK(log_deriv_imag(5000.0, p) ==
          doctest::Approx(a.eval(5000.0)).epsilon(1e-9));
}

TEST_CASE("Friedrichs log derivative is R I1/I0") {
    SpectralProblem p(1.0, BoundaryCondition::friedrichs());
    for (double x : {0.5, 3.0, 40.0}) {
        detail::ModBesselScaled m = detail::mod_bessel_scaled(x);
        CHECK(log_deriv_imag(x, p) ==
              doctest::Approx(m.i1e / m.i0e).epsilon(1e-12));
    }
}

TEST_CASE("general Robin secular function reduces to sqrt(R) F_hom") {
    SpectralProblem p(1.7, BoundaryCondition::from_tan(0.5));
    double sR = std::sqrt(p.R);
    for (Complex mu : {Complex(1.1, 0.0), Complex(0.8, 0.6)}) {
        SecularValue hom = secular_f(mu, p);
        SecularValue gen = secular_general(mu, p);
        CHECK(std::abs(gen.f - sR * hom.f) < 1e-12);
        CHECK(std::abs(gen.df - sR * hom.df) < 1e-11);
    }
    // real sweep form agrees too
    CHECK(detail::secular_real_any(1.1, p) ==
          doctest::Approx(sR * secular_f(Complex(1.1, 0.0), p).f.real())
              .epsilon(1e-12));
}

TEST_CASE("general secular function at mu = 0") {
    SpectralProblem p(2.0, BoundaryCondition::from_tan(0.4),
                      BoundaryCondition::neumann());
    double at0 = detail::secular_general_at_zero(p);
    double near0 = secular_general(Complex(1e-5, 0.0), p).f.real();
    CHECK(near0 == doctest::Approx(at0).epsilon(1e-6));
}

TEST_CASE("zero-mode log derivative matches the generic ratio away from 0") {
    SpectralProblem p(1.0, BoundaryCondition::from_tan(0.0));  // log R = 0
    for (Complex mu : {Complex(0.5, 0.0), Complex(0.3, 0.4), Complex(0.0, 1.0)}) {
        SecularValue F = secular_f(mu, p);
        Complex generic = F.df / F.f - 2.0 / mu;
        CHECK(std::abs(zero_mode_log_deriv(mu, p) - generic) < 1e-9);
    }
    // and stays bounded where the generic route loses all digits
    Complex tiny = zero_mode_log_deriv(Complex(0.0, 1e-6), p);
    CHECK(std::abs(tiny) < 1e-5);
    SpectralProblem q(1.0, BoundaryCondition::from_tan(0.5));
    CHECK_THROWS_AS(zero_mode_log_deriv(Complex(0.5, 0.0), q),
                    std::domain_error);
}

TEST_CASE("secular domain guards") {
    SpectralProblem p(1.0, BoundaryCondition::from_tan(0.0));
    CHECK_THROWS_AS(secular_f(Complex(40.0, 0.0), p), std::domain_error);
    CHECK_THROWS_AS(secular_f(Complex(-1.0, 0.0), p), std::domain_error);
    CHECK_THROWS_AS(secular_f_imag(-1.0, p), std::domain_error);
    SpectralProblem robin(1.0, BoundaryCondition::from_tan(0.0),
                          BoundaryCondition::neumann());
    CHECK_THROWS_AS(secular_f(Complex(1.0, 0.0), robin), std::domain_error);
}

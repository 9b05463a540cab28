#include <doctest.h>

#include "singspec/specfun.hpp"

using namespace singspec;

// Reference values below were generated with mpmath at 50 digits.

TEST_CASE("modified Bessel functions at reference points") {
    auto [i0_1, k0_1] = i0_k0(1.0);
    CHECK(i0_1 == doctest::Approx(1.2660658777520084).epsilon(1e-14));
    CHECK(k0_1 == doctest::Approx(0.42102443824070834).epsilon(1e-14));
    auto [i0_15, k0_15] = i0_k0(15.0);
    CHECK(i0_15 == doctest::Approx(339649.37329791387).epsilon(1e-13));
    CHECK(k0_15 == doctest::Approx(9.8195364823964346e-08).epsilon(1e-13));

    detail::ModBessel m = detail::mod_bessel(1.0);
    CHECK(m.i1 == doctest::Approx(0.56515910399248503).epsilon(1e-14));
    CHECK(m.k1 == doctest::Approx(0.60190723019723458).epsilon(1e-14));
}

TEST_CASE("scaled and unscaled modified Bessel agree") {
    for (double x : {0.5, 5.0, 14.0, 16.0, 100.0}) {
        detail::ModBesselScaled s = detail::mod_bessel_scaled(x);
        if (x > 700.0) continue;
        detail::ModBessel m = detail::mod_bessel(x);
        CHECK(s.i0e == doctest::Approx(m.i0 * std::exp(-x)).epsilon(1e-12));
        CHECK(s.k0e == doctest::Approx(m.k0 * std::exp(x)).epsilon(1e-12));
    }
}

TEST_CASE("cylinder functions on the real axis, both evaluation paths") {
    // x = 25 goes through the amplitude-phase path
    detail::Bessel0Real b = detail::bessel0_real(25.0);
    CHECK(b.j0 == doctest::Approx(0.0962667832759581162).epsilon(1e-13));
    CHECK(b.j1 == doctest::Approx(-0.125350249580289905).epsilon(1e-13));
    CHECK(b.y0 == doctest::Approx(-0.127249432268006138).epsilon(1e-13));
    CHECK(b.y1 == doctest::Approx(-0.0988299647832374101).epsilon(1e-13));

    detail::Bessel0Real s = detail::bessel0_real(1.0);
    CHECK(s.y0 == doctest::Approx(0.088256964215676958).epsilon(1e-14));

    // first zeros of J0 and Y0
    CHECK(std::fabs(detail::bessel0_real(2.4048255576957727686).j0) < 1e-15);
    CHECK(std::fabs(detail::bessel0_real(0.89357696627916752158).y0) < 1e-15);
}

TEST_CASE("complex series matches the real path inside the disc") {
    // series cancellation costs ~e^{x} ulps in long double, so the bound
    // loosens with x; the secular formulas only ever see |mu R| <= 30
    for (double x : {0.3, 4.0, 19.5, 25.0}) {
        double tol = x < 20.0 ? 1e-13 : 1e-9;
        detail::Bessel0Real b = detail::bessel0_real(x);
        Complex z(x, 0.0);
        CHECK(std::abs(j0(z) - b.j0) < tol);
        CHECK(std::abs(y0(z) - b.y0) < tol);
        auto [j1v, y1v] = j1_y1(z);
        CHECK(std::abs(j1v - b.j1) < tol);
        CHECK(std::abs(y1v - b.y1) < tol);
    }
}

TEST_CASE("Wronskian identity for complex argument") {
    for (Complex z : {Complex(0.8, 0.3), Complex(3.0, -2.0),
                      Complex(0.01, 0.0), Complex(0.0, 6.0)}) {
        auto [j1v, y1v] = j1_y1(z);
        Complex w = j1v * y0(z) - j0(z) * y1v;
        CHECK(std::abs(w - 2.0 / (PI * z)) < 1e-12);
    }
}

TEST_CASE("exponential integral") {
    CHECK(ei(-1.0) == doctest::Approx(-0.21938393439552029).epsilon(1e-14));
    CHECK(ei(-2.0) == doctest::Approx(-0.048900510708061118).epsilon(1e-14));
    CHECK(ei(-20.0) ==
          doctest::Approx(-9.8355252906498841e-11).epsilon(1e-13));
    // complex continuation agrees on the negative real axis; relative for
    // moderate x, absolute far out where the double-double real path keeps
    // digits the long-double complex series cannot
    for (double x : {-0.5, -3.0, -8.0}) {
        Complex v = detail::ei_complex(Complex(x, 0.0));
        CHECK(v.imag() == 0.0);
        CHECK(v.real() == doctest::Approx(ei(x)).epsilon(1e-12));
    }
    CHECK(std::fabs(detail::ei_complex(Complex(-25.0, 0.0)).real() -
                    ei(-25.0)) < 1e-8);
    // conjugate symmetry off the axis
    Complex a = detail::ei_complex(Complex(-1.0, 2.0));
    Complex b = detail::ei_complex(Complex(-1.0, -2.0));
    CHECK(std::abs(a - std::conj(b)) < 1e-14);
}

TEST_CASE("domain guards") {
    CHECK_THROWS_AS(j0(Complex(31.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(y0(Complex(-1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(i0_k0(-1.0), std::domain_error);
    CHECK_THROWS_AS(ei(1.0), std::domain_error);
    CHECK_THROWS_AS(detail::ei_complex(Complex(1.0, 0.0)), std::domain_error);
    CHECK_THROWS_AS(detail::mod_bessel(800.0), std::domain_error);
}

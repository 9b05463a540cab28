#include <doctest.h>

#include "singspec/oracle.hpp"
#include "singspec/spectrum.hpp"

using namespace singspec;

TEST_CASE("shooting oracle reproduces secular eigenvalues") {
    SpectralProblem probs[3] = {
        SpectralProblem(1.0, BoundaryCondition::from_tan(0.0)),
        SpectralProblem(1.0, BoundaryCondition::friedrichs()),
        SpectralProblem(2.0, BoundaryCondition::from_tan(0.8)),
    };
    for (auto& p : probs) {
        auto lam = positive_eigenvalues(p, 3);
        for (double l : lam) {
            double o = oracle_eigenvalue(0.99 * l, 1.01 * l, p);
            CHECK(o == doctest::Approx(l).epsilon(1e-8));
        }
    }
}

TEST_CASE("oracle finds the negative eigenvalue") {
    SpectralProblem p(1.0, BoundaryCondition::from_tan(-2.0));
    double l = *negative_eigenvalue(p);
    double o = oracle_eigenvalue(1.02 * l, 0.98 * l, p);
    CHECK(o == doctest::Approx(l).epsilon(1e-8));
}

TEST_CASE("oracle handles the Robin condition at R") {
    SpectralProblem p(1.0, BoundaryCondition::friedrichs(),
                      BoundaryCondition::neumann());
    double l = positive_eigenvalues(p, 1)[0];
    double o = oracle_eigenvalue(0.95 * l, 1.05 * l, p);
    CHECK(o == doctest::Approx(l).epsilon(1e-8));
}

TEST_CASE("residual changes sign exactly at an eigenvalue") {
    SpectralProblem p(1.0, BoundaryCondition::from_tan(0.5));
    double l = positive_eigenvalues(p, 1)[0];
    double below = shoot(0.99 * l, p);
    double above = shoot(1.01 * l, p);
    CHECK(((below > 0) != (above > 0)));
    CHECK(std::fabs(shoot(l, p)) < 1e-6);
}

TEST_CASE("guards") {
    SpectralProblem p(1.0, BoundaryCondition::from_tan(0.5));
    CHECK_THROWS_AS(shoot(1.0, p, 0.1), std::domain_error);
    CHECK_THROWS_AS(initial_data(0.0, p.bc0, 1.0), std::domain_error);
    // no eigenvalue in (lam1 + eps, lam2 - eps) interior gap
    auto lam = positive_eigenvalues(p, 2);
    CHECK_THROWS_AS(
        oracle_eigenvalue(lam[0] * 1.05, lam[1] * 0.95, p),
        BracketFailure);
}

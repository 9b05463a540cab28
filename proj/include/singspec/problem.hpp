#pragma once

#include <cmath>
#include <stdexcept>

#include "singspec/errors.hpp"

namespace singspec {

// Homogeneous boundary angle stored as the exact (cos t, sin t) pair so the
// Friedrichs realization (t = pi/2, tan t infinite) is a regular point of
// the data model.  Canonical representative: s >= 0, and c = 1 when s = 0.
struct BoundaryCondition {
    double c = 1.0;  // cos theta
    double s = 0.0;  // sin theta

    static BoundaryCondition from_cs(double c, double s) {
        double n = std::hypot(c, s);
        if (!(n > 0.0))
            throw std::domain_error("BoundaryCondition: zero vector");
        c /= n;
        s /= n;
        if (s < 0.0 || (s == 0.0 && c < 0.0)) {
            c = -c;
            s = -s;
        }
        if (s == 0.0) c = 1.0;
        return {c, s};
    }

    static BoundaryCondition from_angle(double theta) {
        return from_cs(std::cos(theta), std::sin(theta));
    }

    static BoundaryCondition from_tan(double t) {
        return from_cs(1.0, t);
    }

    static BoundaryCondition friedrichs() { return {0.0, 1.0}; }
    static BoundaryCondition dirichlet() { return {0.0, 1.0}; }
    static BoundaryCondition neumann() { return {1.0, 0.0}; }

    bool is_vertical() const { return c == 0.0; }

    double tan_theta() const {
        if (is_vertical())
            throw FriedrichsUndefined("tan theta undefined at theta = pi/2");
        return s / c;
    }
};

// The operator -d^2/dr^2 - 1/(4 r^2) on (0, R] together with the boundary
// angle at r = 0 (theta1, Friedrichs when vertical) and the Robin angle at
// r = R (theta2; vertical = Dirichlet, horizontal = Neumann).
struct SpectralProblem {
    double R = 1.0;
    BoundaryCondition bc0;  // theta1, acts on (c1, c2) Frobenius data
    BoundaryCondition bcR;  // theta2, acts on (phi'(R), phi(R))

    SpectralProblem(double R_, BoundaryCondition bc0_,
                    BoundaryCondition bcR_ = BoundaryCondition::dirichlet())
        : R(R_), bc0(bc0_), bcR(bcR_) {
        if (!(R > 0.0)) throw std::domain_error("SpectralProblem: R <= 0");
    }

    bool is_friedrichs() const { return bc0.is_vertical(); }
    bool dirichlet_at_R() const { return bcR.is_vertical(); }

    void require_dirichlet_at_R(const char* who) const {
        if (!dirichlet_at_R())
            throw std::domain_error(std::string(who) +
                                    ": requires Dirichlet condition at r=R");
    }
};

}  // namespace singspec

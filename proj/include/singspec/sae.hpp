#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "singspec/problem.hpp"

// Finite-dimensional Hermitian symplectic algebra on the boundary-data space
// C^4: the form omega, the Lagrangian-plane test, and the angle
// parameterization L_theta1 + L_theta2 classifying self-adjoint realizations.

namespace singspec {

using Vec4 = std::array<std::complex<double>, 4>;

// omega(v,w) = v1 conj(w2) - v2 conj(w1) + v3 conj(w4) - v4 conj(w3)
inline std::complex<double> omega(const Vec4& v, const Vec4& w) {
    using std::conj;
    return v[0] * conj(w[1]) - v[1] * conj(w[0]) + v[2] * conj(w[3]) -
           v[3] * conj(w[2]);
}

struct Subspace2of4 {
    Vec4 u;
    Vec4 v;
};

namespace detail {

inline double norm4(const Vec4& v) {
    double n = 0.0;
    for (auto& c : v) n += std::norm(c);
    return std::sqrt(n);
}

inline Vec4 scale4(const Vec4& v, double a) {
    Vec4 r = v;
    for (auto& c : r) c *= a;
    return r;
}

}  // namespace detail

// True iff span{u, v} is 2-dimensional and omega vanishes on it; in C^4
// those two facts make the subspace equal to its omega-orthogonal
// complement (Lagrangian).
inline bool is_lagrangian(const Subspace2of4& L) {
    double nu = detail::norm4(L.u), nv = detail::norm4(L.v);
    if (nu < 1e-12 || nv < 1e-12) return false;
    Vec4 a = detail::scale4(L.u, 1.0 / nu);
    Vec4 b = detail::scale4(L.v, 1.0 / nv);
    // Gram determinant of the normalized basis measures independence
    std::complex<double> ab{};
    for (int i = 0; i < 4; ++i) ab += a[i] * std::conj(b[i]);
    double gram = 1.0 - std::norm(ab);
    if (gram <= 1e-12) return false;
    return std::abs(omega(a, a)) <= 1e-12 && std::abs(omega(b, b)) <= 1e-12 &&
           std::abs(omega(a, b)) <= 1e-12;
}

// L_theta1 + L_theta2 with L_theta = {(x,y) : cos t x + sin t y = 0},
// realized by the spanning vectors (-sin t, cos t).
inline Subspace2of4 lagrangian_from_angles(const BoundaryCondition& bc0,
                                           const BoundaryCondition& bcR) {
    Subspace2of4 L;
    L.u = {-bc0.s, bc0.c, 0.0, 0.0};
    L.v = {0.0, 0.0, -bcR.s, bcR.c};
    return L;
}

}  // namespace singspec

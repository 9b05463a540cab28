#pragma once

namespace singspec {

inline constexpr double PI = 3.14159265358979323846;
inline constexpr double EULER_GAMMA = 0.57721566490153286061;
inline constexpr double LN2 = 0.69314718055994530942;
// log 2 - gamma, the constant appearing in kappa = log2 - gamma - tan(theta1)
inline constexpr double LOG2_MINUS_GAMMA = 0.11593151565841244881;

// Bessel series are trusted only on |z| <= Z_MAX; beyond that the real-axis
// and imaginary-axis large-argument forms take over.
inline constexpr double Z_MAX = 30.0;
// Axis integrals switch from quadrature to the asymptotic tail at X_MAX.
inline constexpr double X_MAX = 1.0e3;

}  // namespace singspec

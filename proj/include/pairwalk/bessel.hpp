#pragma once

namespace pairwalk {

inline constexpr int kBesselMaxOrder = 500;
inline constexpr double kBesselMaxArgument = 100.0;

// Integer-order Bessel function of the first kind, J_order(x).
//
// Supported envelope: |order| <= 500, 0 <= x <= 100; arguments outside it
// are rejected. Absolute accuracy ~1e-12 inside the envelope. Negative
// orders via J_{-n}(x) = (-1)^n J_n(x).
double bessel_j(int order, double x);

}  // namespace pairwalk

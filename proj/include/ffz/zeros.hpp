#pragma once

#include <complex>
#include <vector>

#include "ffz/lfunc.hpp"

namespace ffz {

/// Zeros of a completed Lhat as unit-circle angles: the root u_j equals
/// q^{-1/2} e^{-i theta_j}.  Angles lie in (-pi, pi], appear with
/// multiplicity, and are closed under negation (0 and pi are their own
/// conjugates).
struct ZeroSet {
  std::vector<double> angles;
  double tolerance = 0.0;  // max | |u_j| sqrt(q) - 1 | achieved
};

inline constexpr double kDefaultZeroTolerance = 1e-9;

/// Requires a completed polynomial whose functional equation was verified.
ZeroSet zero_angles(const LPolynomial& L, double tol = kDefaultZeroTolerance);

/// Roots u_j reconstructed from the angles.
std::vector<std::complex<double>> roots_from_angles(const ZeroSet& z, unsigned q);

}  // namespace ffz

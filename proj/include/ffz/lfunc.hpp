#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "ffz/poly.hpp"

namespace ffz {

/// Integer Weil polynomial Lhat(u) = sum_N ahat_N u^N of the quadratic
/// character attached to a square-free monic d, with u = q^{-s}.
struct LPolynomial {
  std::uint32_t q = 0;
  unsigned n = 0;                      // deg d
  std::vector<std::uint32_t> dcoeffs;  // (a_1, ..., a_n) of d
  std::vector<std::int64_t> lhat;      // ahat_0, ... (length n, or n-1 once completed at even n)
  bool completed = false;
  int c = -1;  // degree of the completed polynomial, set by complete()
  int w = 0;   // root number, set by check_functional_equation()

  /// Lhat evaluated at complex u (Horner, long double).
  std::complex<long double> eval(std::complex<long double> u) const;
  int degree() const noexcept;
};

/// Coefficients by direct summation of Jacobi symbols over monic r of each
/// degree N < n; also checks that the degree-n sum vanishes.
LPolynomial lpoly_charsum(const Poly& d);

/// Coefficients from character sums over F_{q^j}, j <= g, and Newton's
/// identities.  Odd n = 2g+1 only.
LPolynomial lpoly_pointcount(const Poly& d);

/// Divides by (1 - u) when n is even; identity for odd n.  Sets c.
LPolynomial complete(const LPolynomial& L);

/// Verifies ahat_{c-N} = w q^{c/2-N} ahat_N exactly and returns w.
int check_functional_equation(LPolynomial& L);

/// Coefficients b(0..R_max) of 1/Lhat(u).
std::vector<std::int64_t> invert_series(const LPolynomial& L, unsigned R_max);

struct CurveCount {
  std::int64_t affine = 0;
  std::int64_t projective = 0;
};
/// Points on y^2 = d(t) over F_{q^j}; d of odd degree.
CurveCount point_count_curve(const Poly& d, unsigned j);

/// Newton's identities: from P_1..P_m with P_j = -sum beta^j, recover a_1..a_m
/// of prod (1 - beta u).  Throws if a division is inexact.
std::vector<std::int64_t> newton_from_power_sums(const std::vector<std::int64_t>& P);

/// Fills Lhat of degree 2g from a_0..a_g by the functional equation.
std::vector<std::int64_t> symmetric_fill(const std::vector<std::int64_t>& half, std::uint32_t q, unsigned g);

/// (-1)^{n(q-1)/2}: the twist between the character sum and the point count
/// of y^2 = d(t).
int curve_twist(std::uint32_t q, unsigned n);

}  // namespace ffz

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ffz/poly.hpp"

namespace testing {

using ffz::Elem;
using ffz::Field;
using ffz::Poly;

inline Poly P(const Field& F, std::vector<int> low_first) {
  std::vector<Elem> c;
  for (int v : low_first) c.push_back(F.from_int(v));
  return Poly(F, c);
}

inline Poly t_(const Field& F) { return Poly::x(F); }

/// Every monic polynomial of degree e, in any order.
inline std::vector<Poly> all_monic(const Field& F, unsigned e) {
  std::vector<Poly> out;
  const std::uint32_t q = F.order();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < e; ++i) total *= q;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Elem> c(e + 1);
    std::uint64_t r = idx;
    for (unsigned i = 0; i < e; ++i) {
      c[i] = static_cast<Elem>(r % q);
      r /= q;
    }
    c[e] = 1;
    out.emplace_back(F, c);
  }
  return out;
}

/// Irreducibility by trial division over all monic divisors of degree <= deg/2.
inline bool irreducible_by_trial(const Poly& f) {
  const int d = f.degree();
  if (d < 1) return false;
  for (int e = 1; 2 * e <= d; ++e)
    for (const Poly& g : all_monic(f.field(), static_cast<unsigned>(e)))
      if ((f % g).is_zero()) return false;
  return true;
}

/// Square-freeness by trial division by squares of all monic polynomials.
inline bool squarefree_by_trial(const Poly& f) {
  for (int e = 1; 2 * e <= f.degree(); ++e)
    for (const Poly& g : all_monic(f.field(), static_cast<unsigned>(e)))
      if ((f % (g * g)).is_zero()) return false;
  return true;
}

/// Moebius function by trial division.
inline int moebius_by_trial(Poly f) {
  int sign = 1;
  for (int e = 1; e <= f.degree(); ++e) {
    for (const Poly& g : all_monic(f.field(), static_cast<unsigned>(e))) {
      if (f.degree() < e) break;
      if (!(f % g).is_zero()) continue;
      f = divrem(f, g).first;
      if ((f % g).is_zero()) return 0;
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace testing

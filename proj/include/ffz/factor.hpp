#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ffz/poly.hpp"

namespace ffz {

struct Factorization {
  Elem unit = 1;
  /// Monic irreducible factors with multiplicity, sorted by (degree, coefficients).
  std::vector<std::pair<Poly, unsigned>> factors;

  Poly product(const Field& f) const;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eedf00dULL;

/// Complete factorization: square-free decomposition, distinct-degree
/// splitting, then equal-degree splitting driven by a seeded generator.
/// The result is re-multiplied and compared against the input before return.
Factorization factor_poly(const Poly& f, std::uint64_t seed = kDefaultFactorSeed);

bool is_squarefree(const Poly& f);
bool is_irreducible(const Poly& f);

/// Moebius function of a monic polynomial.
int moebius_mu(const Poly& f);

/// Fast square-free test on a monic polynomial given as raw coefficients
/// (low first, length n+1).  Works on fixed stack buffers; n <= 63.
bool is_squarefree_raw(const Field& f, const Elem* coeffs, int n) noexcept;

/// All monic irreducibles of degree e over F (brute force, small sizes).
std::vector<Poly> monic_irreducibles(const Field& f, unsigned e);

/// Number of monic irreducibles of degree e over F_q (necklace formula).
std::uint64_t count_irreducibles(std::uint64_t q, unsigned e);

}  // namespace ffz

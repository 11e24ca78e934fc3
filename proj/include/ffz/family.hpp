#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ffz/lfunc.hpp"
#include "ffz/poly.hpp"

namespace ffz {

enum class LMethod { Auto, CharSum, PointCount, Both };

LMethod parse_method(const std::string& s);
std::string method_name(LMethod m);

/// Uncompleted Weil polynomials of every member of P_n, in enumeration order.
struct FamilyTable {
  std::uint32_t q = 0;
  unsigned n = 0;
  std::vector<std::uint32_t> digits;  // (a_1, ..., a_n) per member
  std::vector<std::int64_t> lhat;     // ahat_0, ..., ahat_{n-1} per member

  std::size_t size() const noexcept { return n == 0 ? 0 : digits.size() / n; }
  const std::int64_t* lhat_of(std::size_t i) const noexcept { return lhat.data() + i * n; }
  const std::uint32_t* digits_of(std::size_t i) const noexcept { return digits.data() + i * n; }
  LPolynomial member(std::size_t i) const;
  Poly member_poly(std::size_t i) const;
};

/// Builds the table.  Auto selects the point-count engine for odd n and
/// character sums for even n; Both runs the two and requires equality.
FamilyTable build_family(std::uint32_t q, unsigned n, LMethod method = LMethod::Auto, unsigned workers = 1);

/// Batch point-count engine over a range of monic indices; appends to out.
/// Exposed for testing against the per-member path.
void pointcount_range(std::uint32_t q, unsigned n, std::uint64_t begin, std::uint64_t end,
                      std::vector<std::uint32_t>& digits, std::vector<std::int64_t>& lhat);

/// Draws `count` distinct seeded members of P_n (uniform over monic, rejecting
/// non-square-free), sorted in enumeration order.
std::vector<Poly> sample_family(const Field& f, unsigned n, std::size_t count, std::uint64_t seed);

}  // namespace ffz

#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ffz/factor.hpp"
#include "ffz/poly.hpp"

namespace ffz {

std::uint64_t ipow_u64(std::uint64_t b, unsigned e);

/// |P_n|: q for n = 1, q^n - q^{n-1} for n >= 2.
std::uint64_t squarefree_count(std::uint64_t q, unsigned n);

/// Walks the monic polynomials of degree n in lexicographic order of the
/// coefficient tuple (a_1, ..., a_n).  The monic index of a tuple is
/// sum a_i q^{n-i}, so a_n (the constant term) is the fastest digit.
class MonicOdometer {
 public:
  MonicOdometer(const Field& f, unsigned n, std::uint64_t start_index = 0);

  const Elem* coeffs() const noexcept { return c_.data(); }  // low first, length n+1
  unsigned degree() const noexcept { return n_; }
  std::uint64_t index() const noexcept { return index_; }
  bool done() const noexcept { return index_ >= total_; }
  /// Advances; returns the lowest coefficient position that changed.
  unsigned advance() noexcept;
  Poly poly() const;

 private:
  Field field_;
  unsigned n_;
  std::uint64_t index_;
  std::uint64_t total_;
  std::vector<Elem> c_;
};

/// Visits square-free monics whose monic index lies in [begin, end).
/// fn(monic_index, coeffs_low_first).
template <class Fn>
void for_each_squarefree_monic(const Field& f, unsigned n, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  if (n < 1) throw std::invalid_argument("enumerate_squarefree_monic: degree must be >= 1");
  MonicOdometer od(f, n, begin);
  for (; !od.done() && od.index() < end; od.advance()) {
    if (is_squarefree_raw(f, od.coeffs(), static_cast<int>(n))) fn(od.index(), od.coeffs());
  }
}

template <class Fn>
void for_each_squarefree_monic(const Field& f, unsigned n, Fn&& fn) {
  for_each_squarefree_monic(f, n, 0, ipow_u64(f.order(), n), std::forward<Fn>(fn));
}

/// The family P_n materialized in enumeration order.
std::vector<Poly> enumerate_squarefree_monic(const Field& f, unsigned n);

/// Same family as packed digit tuples (a_1, ..., a_n), n entries per member.
std::vector<std::uint32_t> squarefree_digit_table(const Field& f, unsigned n);

}  // namespace ffz

#include "ffz/enumerate.hpp"

namespace ffz {

std::uint64_t ipow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t squarefree_count(std::uint64_t q, unsigned n) {
  if (n == 0) return 1;
  if (n == 1) return q;
  return ipow_u64(q, n) - ipow_u64(q, n - 1);
}

MonicOdometer::MonicOdometer(const Field& f, unsigned n, std::uint64_t start_index)
    : field_(f), n_(n), index_(start_index), total_(ipow_u64(f.order(), n)), c_(n + 1, 0) {
  c_[n] = 1;
  std::uint64_t v = start_index;
  for (unsigned k = 0; k < n; ++k) {
    c_[k] = static_cast<Elem>(v % f.order());
    v /= f.order();
  }
}

unsigned MonicOdometer::advance() noexcept {
  ++index_;
  const Elem q = field_.order();
  for (unsigned k = 0; k < n_; ++k) {
    if (++c_[k] < q) return k;
    c_[k] = 0;
  }
  return n_;
}

Poly MonicOdometer::poly() const { return Poly(field_, c_); }

std::vector<Poly> enumerate_squarefree_monic(const Field& f, unsigned n) {
  std::vector<Poly> out;
  for_each_squarefree_monic(f, n, [&](std::uint64_t, const Elem* c) {
    out.emplace_back(f, std::vector<Elem>(c, c + n + 1));
  });
  return out;
}

std::vector<std::uint32_t> squarefree_digit_table(const Field& f, unsigned n) {
  std::vector<std::uint32_t> out;
  out.reserve(squarefree_count(f.order(), n) * n);
  for_each_squarefree_monic(f, n, [&](std::uint64_t, const Elem* c) {
    for (unsigned i = 1; i <= n; ++i) out.push_back(c[n - i]);
  });
  return out;
}

}  // namespace ffz

#include "ffz/jacobi.hpp"

#include <stdexcept>
#include <utility>

namespace ffz {

int jacobi_raw(const Field& F, const Elem* r, int deg_r, const Elem* f, int deg_f) noexcept {
  Elem a[64], b[64];
  int da = deg_r, db = deg_f;
  for (int i = 0; i <= da; ++i) a[i] = r[i];
  for (int i = 0; i <= db; ++i) b[i] = f[i];
  while (da >= 0 && a[da] == 0) --da;
  const bool half_odd = ((F.order() - 1) / 2) & 1u;
  int sign = 1;
  // Invariant: b monic; the answer is sign * (a / b).
  for (;;) {
    if (db == 0) return sign;
    // a <- a mod b
    while (da >= db) {
      Elem c = a[da];
      if (c != 0) {
        for (int k = 0; k < db; ++k) a[da - db + k] = F.sub(a[da - db + k], F.mul(c, b[k]));
      }
      --da;
      while (da >= 0 && a[da] == 0) --da;
    }
    if (da < 0) return 0;
    // Pull out the leading constant: (c / b) = chi(c)^{deg b}.
    Elem lc = a[da];
    if (lc != 1) {
      if ((db & 1) && F.quadratic_character(lc) < 0) sign = -sign;
      Elem li = F.inv(lc);
      for (int k = 0; k <= da; ++k) a[k] = F.mul(a[k], li);
    }
    if (da == 0) return sign;
    if (half_odd && (da & 1) && (db & 1)) sign = -sign;
    for (int i = 0; i <= db; ++i) std::swap(a[i], b[i]);
    std::swap(da, db);
  }
}

int jacobi_symbol(const Poly& r, const Poly& f) {
  if (f.field().characteristic() == 2) throw std::invalid_argument("jacobi_symbol: q must be odd");
  if (!f.is_monic()) throw std::invalid_argument("jacobi_symbol: modulus must be monic");
  if (!(r.field() == f.field())) throw std::invalid_argument("jacobi_symbol: mixed fields");
  Poly rr = r % f;
  if (f.degree() >= 64) throw std::invalid_argument("jacobi_symbol: modulus degree too large");
  return jacobi_raw(f.field(), rr.coeffs().data(), rr.degree() == Poly::kDegZero ? -1 : rr.degree(),
                    f.coeffs().data(), f.degree());
}

int euler_criterion(const Poly& r, const Poly& f) {
  if (!f.is_monic()) throw std::invalid_argument("euler_criterion: modulus must be monic");
  if (f.degree() == 0) return 1;
  const std::uint64_t e = (norm(f) - 1) / 2;
  Poly v = powmod(r, e, f);
  if (v.is_zero()) return 0;
  if (v.is_one()) return 1;
  if (v == Poly::constant(f.field(), f.field().neg(1))) return -1;
  return 2;  // not a character value: f is not irreducible
}

}  // namespace ffz

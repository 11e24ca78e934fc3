#include "ffz/lfunc.hpp"

#include <stdexcept>
#include <string>

#include "ffz/enumerate.hpp"
#include "ffz/factor.hpp"
#include "ffz/jacobi.hpp"

namespace ffz {

namespace {

void require_family_member(const Poly& d, const char* op) {
  const Field& F = d.field();
  if (!F.is_prime_field() || F.characteristic() == 2)
    throw std::invalid_argument(std::string(op) + ": q must be an odd prime");
  if (!d.is_monic() || d.degree() < 1) throw std::invalid_argument(std::string(op) + ": d must be monic of degree >= 1");
  if (!is_squarefree(d)) throw std::invalid_argument(std::string(op) + ": d is not square-free");
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in L-coefficient arithmetic");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in L-coefficient arithmetic");
  return r;
}

}  // namespace

std::complex<long double> LPolynomial::eval(std::complex<long double> u) const {
  std::complex<long double> acc = 0;
  for (std::size_t i = lhat.size(); i-- > 0;) acc = acc * u + static_cast<long double>(lhat[i]);
  return acc;
}

int LPolynomial::degree() const noexcept {
  for (std::size_t i = lhat.size(); i-- > 0;)
    if (lhat[i] != 0) return static_cast<int>(i);
  return -1;
}

int curve_twist(std::uint32_t q, unsigned n) {
  return ((static_cast<std::uint64_t>(n) * ((q - 1) / 2)) & 1u) ? -1 : 1;
}

LPolynomial lpoly_charsum(const Poly& d) {
  require_family_member(d, "lpoly_charsum");
  const Field& F = d.field();
  const unsigned n = static_cast<unsigned>(d.degree());
  LPolynomial L;
  L.q = F.order();
  L.n = n;
  L.dcoeffs = d.monic_digits();
  L.lhat.assign(n, 0);
  for (unsigned N = 0; N <= n; ++N) {
    std::int64_t s = 0;
    for (MonicOdometer od(F, N); !od.done(); od.advance())
      s += jacobi_raw(F, od.coeffs(), static_cast<int>(N), d.coeffs().data(), static_cast<int>(n));
    if (N < n)
      L.lhat[N] = s;
    else if (s != 0)
      throw std::logic_error("lpoly_charsum: degree-n character sum is nonzero");
  }
  return L;
}

std::vector<std::int64_t> newton_from_power_sums(const std::vector<std::int64_t>& P) {
  const std::size_t m = P.size();
  std::vector<std::int64_t> a(m + 1, 0);
  a[0] = 1;
  for (std::size_t k = 1; k <= m; ++k) {
    std::int64_t s = 0;
    for (std::size_t i = 1; i <= k; ++i) s = checked_add(s, checked_mul(P[i - 1], a[k - i]));
    if (s % static_cast<std::int64_t>(k) != 0) throw std::logic_error("newton_from_power_sums: inexact division");
    a[k] = s / static_cast<std::int64_t>(k);
  }
  return a;
}

std::vector<std::int64_t> symmetric_fill(const std::vector<std::int64_t>& half, std::uint32_t q, unsigned g) {
  std::vector<std::int64_t> out(2 * g + 1, 0);
  for (unsigned k = 0; k <= g; ++k) out[k] = half[k];
  std::int64_t qp = 1;
  for (unsigned k = g; k-- > 0;) {
    qp = checked_mul(qp, q);  // q^{g-k}
    out[2 * g - k] = checked_mul(qp, half[k]);
  }
  return out;
}

LPolynomial lpoly_pointcount(const Poly& d) {
  require_family_member(d, "lpoly_pointcount");
  const Field& F = d.field();
  const unsigned n = static_cast<unsigned>(d.degree());
  if (n % 2 == 0) throw std::invalid_argument("lpoly_pointcount: even-degree d is not supported");
  const unsigned g = (n - 1) / 2;
  const int tw = curve_twist(F.order(), n);
  std::vector<std::int64_t> P(g, 0);
  for (unsigned j = 1; j <= g; ++j) {
    Field E = Field::make(F.characteristic(), j);
    std::int64_t s = 0;
    for (Elem t = 0; t < E.order(); ++t) s += E.quadratic_character(d.eval_in(E, t));
    P[j - 1] = (tw < 0 && (j & 1)) ? -s : s;
  }
  LPolynomial L;
  L.q = F.order();
  L.n = n;
  L.dcoeffs = d.monic_digits();
  L.lhat = symmetric_fill(newton_from_power_sums(P), F.order(), g);
  return L;
}

LPolynomial complete(const LPolynomial& L) {
  if (L.completed) throw std::invalid_argument("complete: input is already completed");
  LPolynomial out = L;
  out.completed = true;
  if (L.n % 2 == 1) {
    out.c = static_cast<int>(L.n) - 1;
    return out;
  }
  // Divide by (1 - u): quotient coefficients are prefix sums.
  std::vector<std::int64_t> quo(L.lhat.size() > 0 ? L.lhat.size() - 1 : 0, 0);
  std::int64_t acc = 0;
  for (std::size_t k = 0; k < L.lhat.size(); ++k) {
    acc = checked_add(acc, L.lhat[k]);
    if (k < quo.size()) quo[k] = acc;
  }
  if (acc != 0) throw std::logic_error("complete: (1 - u) does not divide Lhat; L(1) = " + std::to_string(acc));
  out.lhat = std::move(quo);
  out.c = static_cast<int>(L.n) - 2;
  return out;
}

int check_functional_equation(LPolynomial& L) {
  if (!L.completed) throw std::invalid_argument("check_functional_equation: input must be completed");
  const int c = L.c;
  if (c < 0 || static_cast<int>(L.lhat.size()) < c + 1) throw std::logic_error("check_functional_equation: bad conductor degree");
  for (std::size_t k = c + 1; k < L.lhat.size(); ++k)
    if (L.lhat[k] != 0) throw std::logic_error("check_functional_equation: coefficient beyond degree c");
  using i128 = __int128;
  const i128 ac = L.lhat[c];
  i128 qc = 1;
  for (int i = 0; i < c; ++i) qc *= L.q;
  if (ac * ac != qc) throw std::logic_error("check_functional_equation: |w| != 1");
  i128 qn = 1;
  for (int N = 0; N <= c; ++N) {
    // ahat_{c-N} q^N = ahat_c ahat_N  <=>  ahat_{c-N} = w q^{c/2-N} ahat_N
    if (static_cast<i128>(L.lhat[c - N]) * qn != ac * L.lhat[N])
      throw std::logic_error("check_functional_equation: symmetry violated at N = " + std::to_string(N));
    qn *= L.q;
  }
  i128 half = 1;
  for (int i = 0; i < c / 2; ++i) half *= L.q;
  const int w = ac == half ? 1 : -1;
  if (L.n % 2 == 1 && w != 1) throw std::logic_error("check_functional_equation: w = -1 at odd n");
  L.w = w;
  return w;
}

std::vector<std::int64_t> invert_series(const LPolynomial& L, unsigned R_max) {
  if (L.lhat.empty() || L.lhat[0] != 1) throw std::invalid_argument("invert_series: constant term must be 1");
  std::vector<std::int64_t> b(R_max + 1, 0);
  b[0] = 1;
  for (unsigned R = 1; R <= R_max; ++R) {
    std::int64_t s = 0;
    for (unsigned k = 1; k <= R && k < L.lhat.size(); ++k) s = checked_add(s, checked_mul(L.lhat[k], b[R - k]));
    b[R] = -s;
  }
  return b;
}

CurveCount point_count_curve(const Poly& d, unsigned j) {
  require_family_member(d, "point_count_curve");
  if (d.degree() % 2 == 0) throw std::invalid_argument("point_count_curve: even-degree d");
  if (j < 1) throw std::invalid_argument("point_count_curve: j must be >= 1");
  Field E = Field::make(d.field().characteristic(), j);
  CurveCount cc;
  for (Elem t = 0; t < E.order(); ++t) cc.affine += 1 + E.quadratic_character(d.eval_in(E, t));
  cc.projective = cc.affine + 1;
  return cc;
}

}  // namespace ffz

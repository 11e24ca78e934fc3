#include "ffz/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ffz {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const Poly& f) {
  const Field& F = f.field();
  const std::uint32_t p = F.characteristic();
  const std::uint64_t root_exp = F.order() / p;  // Frobenius inverse on F_q
  std::vector<Elem> v;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) v.push_back(F.pow(f.coeffs()[i], root_exp));
  return Poly(F, std::move(v));
}

// Yun-style square-free decomposition in characteristic p: returns (g, k)
// with f = prod g^k, g square-free and pairwise coprime.
void squarefree_parts(const Poly& f, unsigned mult, std::vector<std::pair<Poly, unsigned>>& out) {
  const Field& F = f.field();
  if (f.degree() <= 0) return;
  Poly d = f.derivative();
  if (d.is_zero()) {
    squarefree_parts(pth_root(f), mult * F.characteristic(), out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = divrem(f, c).first;
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly z = divrem(w, y).first;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
    ++i;
    w = y;
    c = divrem(c, y).first;
  }
  if (c.degree() > 0) squarefree_parts(pth_root(c), mult * F.characteristic(), out);
}

// Distinct-degree factorization of a monic square-free polynomial.
std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f) {
  const Field& F = f.field();
  std::vector<std::pair<Poly, unsigned>> out;
  Poly rest = f;
  Poly t = Poly::x(F);
  Poly h = t;
  for (unsigned k = 1; 2 * k <= static_cast<unsigned>(rest.degree()); ++k) {
    h = powmod(h, F.order(), rest);
    Poly g = gcd(rest, h - t);
    if (!g.is_one()) {
      out.emplace_back(g, k);
      rest = divrem(rest, g).first;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
  return out;
}

void equal_degree(const Poly& f, unsigned k, std::mt19937_64& rng, std::vector<Poly>& out) {
  const Field& F = f.field();
  if (f.degree() == static_cast<int>(k)) {
    out.push_back(f);
    return;
  }
  const unsigned n = static_cast<unsigned>(f.degree());
  for (;;) {
    Poly a = Poly::random(F, n - 1, rng);
    Poly b;
    if (F.characteristic() == 2) {
      // Trace map to the prime subfield of F_{q^k}.
      const unsigned m = F.degree() * k;
      Poly acc = a % f, term = a % f;
      for (unsigned i = 1; i < m; ++i) {
        term = mulmod(term, term, f);
        acc = acc + term;
      }
      b = acc;
    } else {
      const std::uint64_t e = (ipow(F.order(), k) - 1) / 2;
      b = powmod(a, e, f) - Poly::constant(F, 1);
    }
    if (b.is_zero()) continue;
    Poly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, k, rng, out);
      equal_degree(divrem(f, g).first, k, rng, out);
      return;
    }
  }
}

}  // namespace

Poly Factorization::product(const Field& f) const {
  Poly acc = Poly::constant(f, unit);
  for (const auto& [g, m] : factors) acc = acc * pow(g, m);
  return acc;
}

Factorization factor_poly(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("factor_poly: zero polynomial");
  const Field& F = f.field();
  Factorization out;
  out.unit = f.lead();
  Poly m = f.monic();
  std::vector<std::pair<Poly, unsigned>> parts;
  squarefree_parts(m, 1, parts);
  std::mt19937_64 rng(seed);
  for (const auto& [g, mult] : parts) {
    for (const auto& [h, k] : distinct_degree(g)) {
      std::vector<Poly> irr;
      equal_degree(h, k, rng, irr);
      for (auto& p : irr) out.factors.emplace_back(p.monic(), mult);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // Square-free parts are pairwise coprime, but merge defensively.
  std::vector<std::pair<Poly, unsigned>> merged;
  for (auto& fm : out.factors) {
    if (!merged.empty() && merged.back().first == fm.first)
      merged.back().second += fm.second;
    else
      merged.push_back(fm);
  }
  out.factors = std::move(merged);
  if (!(out.product(F) == f)) throw std::logic_error("factor_poly: reconstruction mismatch");
  return out;
}

bool is_squarefree(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("is_squarefree: zero polynomial");
  if (f.degree() <= 0) return true;
  Poly d = f.derivative();
  if (d.is_zero()) return false;  // p-th power of a nonconstant polynomial
  return gcd(f, d).is_one();
}

bool is_irreducible(const Poly& f) {
  if (f.degree() <= 0) return false;
  Factorization fa = factor_poly(f);
  return fa.factors.size() == 1 && fa.factors[0].second == 1;
}

int moebius_mu(const Poly& f) {
  if (!f.is_monic()) throw std::invalid_argument("moebius_mu: input must be monic");
  if (f.degree() == 0) return 1;
  if (!is_squarefree(f)) return 0;
  return factor_poly(f).factors.size() % 2 ? -1 : 1;
}

bool is_squarefree_raw(const Field& F, const Elem* coeffs, int n) noexcept {
  if (n <= 1) return true;
  Elem a[64], b[64];
  int da = n, db = n - 1;
  for (int i = 0; i <= n; ++i) a[i] = coeffs[i];
  for (int i = 1; i <= n; ++i) b[i - 1] = F.mul(coeffs[i], F.from_int(i));
  while (db >= 0 && b[db] == 0) --db;
  if (db < 0) return false;
  // Euclid on (a, b); square-free iff the gcd is a constant.
  while (db > 0) {
    const Elem li = F.inv(b[db]);
    while (da >= db) {
      Elem c = F.mul(a[da], li);
      if (c != 0) {
        for (int k = 0; k <= db; ++k) a[da - db + k] = F.sub(a[da - db + k], F.mul(c, b[k]));
      }
      --da;
      while (da >= 0 && a[da] == 0) --da;
      if (da < 0) break;
    }
    if (da < 0) return false;  // b divides a and deg b > 0
    for (int i = 0; i <= db; ++i) std::swap(a[i], b[i]);
    std::swap(da, db);
  }
  return true;
}

std::vector<Poly> monic_irreducibles(const Field& f, unsigned e) {
  std::vector<Poly> out;
  const std::uint64_t count = ipow(f.order(), e);
  std::vector<std::uint32_t> dig(e);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (unsigned i = e; i-- > 0;) {
      dig[i] = static_cast<std::uint32_t>(v % f.order());
      v /= f.order();
    }
    Poly p = Poly::from_monic_digits(f, dig);
    if (is_irreducible(p)) out.push_back(p);
  }
  return out;
}

std::uint64_t count_irreducibles(std::uint64_t q, unsigned e) {
  // (1/e) sum_{d | e} mu(d) q^{e/d}
  auto mu = [](unsigned d) {
    int r = 1;
    for (unsigned p = 2; p * p <= d; ++p) {
      if (d % p == 0) {
        d /= p;
        if (d % p == 0) return 0;
        r = -r;
      }
    }
    if (d > 1) r = -r;
    return r;
  };
  std::int64_t s = 0;
  for (unsigned d = 1; d <= e; ++d)
    if (e % d == 0) s += mu(d) * static_cast<std::int64_t>(ipow(q, e / d));
  return static_cast<std::uint64_t>(s) / e;
}

}  // namespace ffz

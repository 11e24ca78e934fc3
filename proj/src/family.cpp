#include "ffz/family.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ffz/enumerate.hpp"
#include "ffz/factor.hpp"
#include "ffz/jacobi.hpp"
#include "ffz/parallel.hpp"

namespace ffz {

LMethod parse_method(const std::string& s) {
  if (s == "auto") return LMethod::Auto;
  if (s == "charsum") return LMethod::CharSum;
  if (s == "pointcount") return LMethod::PointCount;
  if (s == "both") return LMethod::Both;
  throw std::invalid_argument("unknown L method: " + s);
}

std::string method_name(LMethod m) {
  switch (m) {
    case LMethod::Auto: return "auto";
    case LMethod::CharSum: return "charsum";
    case LMethod::PointCount: return "pointcount";
    case LMethod::Both: return "both";
  }
  return "?";
}

LPolynomial FamilyTable::member(std::size_t i) const {
  LPolynomial L;
  L.q = q;
  L.n = n;
  L.dcoeffs.assign(digits_of(i), digits_of(i) + n);
  L.lhat.assign(lhat_of(i), lhat_of(i) + n);
  return L;
}

Poly FamilyTable::member_poly(std::size_t i) const {
  return Poly::from_monic_digits(Field::make(q), std::vector<std::uint32_t>(digits_of(i), digits_of(i) + n));
}

namespace {

// Orbit representatives of Frobenius acting on elements of exact degree e.
struct OrbitSet {
  Field field;
  unsigned e = 0;
  std::vector<Elem> reps;
};

std::vector<OrbitSet> orbit_sets(std::uint32_t q, unsigned g) {
  std::vector<OrbitSet> out;
  for (unsigned e = 1; e <= g; ++e) {
    OrbitSet os;
    os.field = Field::make(q, e);
    os.e = e;
    const Field& E = os.field;
    for (Elem a = 0; a < E.order(); ++a) {
      Elem x = a;
      bool minimal = true;
      unsigned len = 0;
      do {
        x = E.pow(x, q);
        ++len;
        if (x < a) minimal = false;
      } while (x != a);
      if (len == e && minimal) os.reps.push_back(a);
    }
    out.push_back(std::move(os));
  }
  return out;
}

void charsum_range(const Field& F, unsigned n, std::uint64_t begin, std::uint64_t end,
                   std::vector<std::uint32_t>& digits, std::vector<std::int64_t>& lhat) {
  for_each_squarefree_monic(F, n, begin, end, [&](std::uint64_t, const Elem* c) {
    for (unsigned i = 1; i <= n; ++i) digits.push_back(c[n - i]);
    for (unsigned N = 0; N < n; ++N) {
      std::int64_t s = 0;
      for (MonicOdometer od(F, N); !od.done(); od.advance())
        s += jacobi_raw(F, od.coeffs(), static_cast<int>(N), c, static_cast<int>(n));
      lhat.push_back(s);
    }
  });
}

}  // namespace

void pointcount_range(std::uint32_t q, unsigned n, std::uint64_t begin, std::uint64_t end,
                      std::vector<std::uint32_t>& digits, std::vector<std::int64_t>& lhat) {
  if (n % 2 == 0) throw std::invalid_argument("pointcount_range: even n");
  if (begin % q != 0 || (end % q != 0 && end != ipow_u64(q, n)))
    throw std::invalid_argument("pointcount_range: range must be aligned to q");
  const Field F = Field::make(q);
  const unsigned g = (n - 1) / 2;
  if (g == 0) {
    for_each_squarefree_monic(F, n, begin, end, [&](std::uint64_t, const Elem* c) {
      digits.push_back(c[0]);
      lhat.push_back(1);
    });
    return;
  }
  const int tw = curve_twist(q, n);
  const auto sets = orbit_sets(q, g);

  // Flattened per-representative state.  pw[(r * (n + 1) + k) * q + a] = a alpha_r^k.
  struct Rep {
    const Field* field;
    unsigned set;
  };
  std::vector<Rep> reps;
  std::vector<Elem> alpha;
  for (unsigned s = 0; s < sets.size(); ++s)
    for (Elem a : sets[s].reps) {
      reps.push_back({&sets[s].field, s});
      alpha.push_back(a);
    }
  const std::size_t R = reps.size();
  std::vector<Elem> pw(R * (n + 1) * q);
  for (std::size_t r = 0; r < R; ++r) {
    const Field& E = *reps[r].field;
    Elem pk = 1;
    for (unsigned k = 0; k <= n; ++k) {
      for (std::uint32_t a = 0; a < q; ++a) pw[(r * (n + 1) + k) * q + a] = E.mul(a, pk);
      pk = E.mul(pk, alpha[r]);
    }
  }
  // S[r * (n + 1) + k] = sum_{i >= k} c_i alpha_r^i for k >= 1.
  std::vector<Elem> S(R * (n + 1));
  MonicOdometer od(F, n, begin);
  auto refresh = [&](unsigned top) {
    const Elem* c = od.coeffs();
    for (std::size_t r = 0; r < R; ++r) {
      const Field& E = *reps[r].field;
      Elem* Sr = S.data() + r * (n + 1);
      const Elem* pr = pw.data() + r * (n + 1) * q;
      if (top >= n) Sr[n] = pr[n * q + 1];
      for (unsigned k = std::min(top, n - 1); k >= 1; --k) Sr[k] = E.add(Sr[k + 1], pr[k * q + c[k]]);
    }
  };
  refresh(n);

  std::vector<std::int64_t> sum1(g + 1), nonzero(g + 1), P(g);
  std::vector<Elem> buf(n + 1);
  while (!od.done() && od.index() < end) {
    // od is at c_0 = 0; sweep the constant term.
    for (std::uint32_t c0 = 0; c0 < q; ++c0) {
      const Elem* c = od.coeffs();
      std::copy(c, c + n + 1, buf.begin());
      buf[0] = c0;
      if (!is_squarefree_raw(F, buf.data(), static_cast<int>(n))) continue;
      std::fill(sum1.begin(), sum1.end(), 0);
      std::fill(nonzero.begin(), nonzero.end(), 0);
      for (std::size_t r = 0; r < R; ++r) {
        const Field& E = *reps[r].field;
        const Elem s1 = S[r * (n + 1) + 1];
        const Elem d0 = s1 % q;
        const Elem v = s1 - d0 + (d0 + c0 >= q ? d0 + c0 - q : d0 + c0);
        const unsigned e = reps[r].set + 1;
        const int chi = E.quadratic_character(v);
        sum1[e] += chi;
        nonzero[e] += chi != 0;
      }
      for (unsigned j = 1; j <= g; ++j) {
        std::int64_t s = 0;
        for (unsigned e = 1; e <= j; ++e)
          if (j % e == 0) s += static_cast<std::int64_t>(e) * (((j / e) & 1) ? sum1[e] : nonzero[e]);
        P[j - 1] = (tw < 0 && (j & 1)) ? -s : s;
      }
      const auto half = newton_from_power_sums(P);
      const auto full = symmetric_fill(half, q, g);
      for (unsigned i = 1; i <= n; ++i) digits.push_back(buf[n - i]);
      lhat.insert(lhat.end(), full.begin(), full.end());
    }
    // Jump to the next block of q constant terms.
    for (std::uint32_t k = 0; k + 1 < q; ++k) od.advance();
    unsigned changed = od.advance();
    if (od.done() || od.index() >= end) break;
    refresh(changed);
  }
}

FamilyTable build_family(std::uint32_t q, unsigned n, LMethod method, unsigned workers) {
  const Field F = Field::make(q);
  if (q == 2 || !F.is_prime_field()) throw std::invalid_argument("q must be an odd prime");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (method == LMethod::Auto) method = n % 2 ? LMethod::PointCount : LMethod::CharSum;
  if (n % 2 == 0 && (method == LMethod::PointCount || method == LMethod::Both))
    throw std::invalid_argument("point-count method requires odd n");

  const std::uint64_t total = ipow_u64(q, n);
  // Chunks of q^k monic indices, k chosen so a chunk holds a few thousand polynomials.
  unsigned k = std::min(n, 1u);
  while (k < n && ipow_u64(q, k) < 4096) ++k;
  const std::uint64_t chunk = ipow_u64(q, k);
  const std::size_t nchunks = static_cast<std::size_t>((total + chunk - 1) / chunk);

  std::vector<std::vector<std::uint32_t>> dig(nchunks);
  std::vector<std::vector<std::int64_t>> coef(nchunks);
  parallel_chunks(nchunks, workers, [&](std::size_t ci) {
    const std::uint64_t b = ci * chunk, e = std::min(total, b + chunk);
    if (method == LMethod::CharSum) {
      charsum_range(F, n, b, e, dig[ci], coef[ci]);
    } else {
      pointcount_range(q, n, b, e, dig[ci], coef[ci]);
      if (method == LMethod::Both) {
        std::vector<std::uint32_t> d2;
        std::vector<std::int64_t> c2;
        charsum_range(F, n, b, e, d2, c2);
        if (d2 != dig[ci] || c2 != coef[ci])
          throw std::logic_error("character-sum and point-count L-polynomials disagree");
      }
    }
  });

  FamilyTable t;
  t.q = q;
  t.n = n;
  const std::uint64_t members = squarefree_count(q, n);
  t.digits.reserve(members * n);
  t.lhat.reserve(members * n);
  for (std::size_t ci = 0; ci < nchunks; ++ci) {
    t.digits.insert(t.digits.end(), dig[ci].begin(), dig[ci].end());
    t.lhat.insert(t.lhat.end(), coef[ci].begin(), coef[ci].end());
    std::vector<std::uint32_t>().swap(dig[ci]);
    std::vector<std::int64_t>().swap(coef[ci]);
  }
  if (t.size() != members) throw std::logic_error("family size differs from the square-free count");
  return t;
}

std::vector<Poly> sample_family(const Field& f, unsigned n, std::size_t count, std::uint64_t seed) {
  const std::uint64_t members = squarefree_count(f.order(), n);
  if (count > members) throw std::invalid_argument("sample_family: sample larger than the family");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, ipow_u64(f.order(), n) - 1);
  std::set<std::uint64_t> chosen;
  std::vector<Elem> c(n + 1);
  while (chosen.size() < count) {
    std::uint64_t idx = pick(rng);
    if (chosen.count(idx)) continue;
    std::uint64_t v = idx;
    for (unsigned k = 0; k < n; ++k) {
      c[k] = static_cast<Elem>(v % f.order());
      v /= f.order();
    }
    c[n] = 1;
    if (is_squarefree_raw(f, c.data(), static_cast<int>(n))) chosen.insert(idx);
  }
  std::vector<Poly> out;
  for (std::uint64_t idx : chosen) {
    MonicOdometer od(f, n, idx);
    out.push_back(od.poly());
  }
  return out;
}

}  // namespace ffz

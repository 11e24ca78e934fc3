#include "ffz/stats.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ffz/factor.hpp"
#include "ffz/jacobi.hpp"
#include "ffz/parallel.hpp"
#include "ffz/zeros.hpp"

namespace ffz {

namespace {

template <class Fn>
cld reduce_members(const FamilyTable& t, unsigned workers, Fn&& fn) {
  const std::size_t m = t.size();
  const std::size_t nchunks = (m + kReduceChunk - 1) / kReduceChunk;
  std::vector<cld> part(nchunks);
  parallel_chunks(nchunks, workers, [&](std::size_t c) {
    KahanComplex acc;
    const std::size_t end = std::min(m, (c + 1) * kReduceChunk);
    for (std::size_t i = c * kReduceChunk; i < end; ++i) acc.add(fn(i));
    part[c] = acc.value();
  });
  KahanComplex total;
  for (const cld& p : part) total.add(p);
  return total.value();
}

// Exact integer reduction in the same chunk layout.
template <class Fn>
__int128 reduce_members_exact(const FamilyTable& t, unsigned workers, Fn&& fn) {
  const std::size_t m = t.size();
  const std::size_t nchunks = (m + kReduceChunk - 1) / kReduceChunk;
  std::vector<__int128> part(nchunks, 0);
  parallel_chunks(nchunks, workers, [&](std::size_t c) {
    __int128 acc = 0;
    const std::size_t end = std::min(m, (c + 1) * kReduceChunk);
    for (std::size_t i = c * kReduceChunk; i < end; ++i) acc += fn(i);
    part[c] = acc;
  });
  __int128 total = 0;
  for (__int128 p : part) total += p;
  return total;
}

std::string int128_to_string(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string s;
  while (u) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

cld horner(const std::int64_t* a, unsigned len, cld u) {
  cld v = 0;
  for (unsigned k = len; k-- > 0;) v = v * u + static_cast<long double>(a[k]);
  return v;
}

std::string digits_string(const FamilyTable& t, std::size_t i) {
  std::ostringstream os;
  for (unsigned k = 0; k < t.n; ++k) os << (k ? "," : "") << t.digits_of(i)[k];
  return os.str();
}

void require_odd_family(const FamilyTable& t, const char* who) {
  if (t.q % 2 == 0 || !is_prime(t.q)) throw std::invalid_argument(std::string(who) + ": q must be an odd prime");
  if (t.n % 2 == 0) throw std::invalid_argument(std::string(who) + ": n must be odd");
}

}  // namespace

RatioSpec RatioSpec::uniform(int K, int Q, std::complex<double> s0) {
  RatioSpec r;
  r.K = K;
  r.Q = Q;
  r.s.assign(static_cast<std::size_t>(K + Q), s0);
  return r;
}

cld RatioSpec::x(int u, std::uint32_t q) const {
  const cld s0(s.at(static_cast<std::size_t>(u)).real(), s.at(static_cast<std::size_t>(u)).imag());
  return -std::exp((0.5L - s0) * std::log(static_cast<long double>(q)));
}

cld RatioSpec::y(int v, std::uint32_t q) const {
  const auto& sv = s.at(static_cast<std::size_t>(K + v));
  const cld s0(sv.real(), sv.imag());
  return std::exp((0.5L - s0) * std::log(static_cast<long double>(q)));
}

void RatioSpec::validate() const {
  if (K < 0 || Q < 0) throw std::invalid_argument("RatioSpec: K and Q must be >= 0");
  if (s.size() != static_cast<std::size_t>(K + Q))
    throw std::invalid_argument("RatioSpec: expected " + std::to_string(K + Q) + " shifts, got " + std::to_string(s.size()));
  for (int v = 0; v < Q; ++v) {
    const double re = s[static_cast<std::size_t>(K + v)].real();
    if (!(re >= 0.5 + margin))
      throw std::invalid_argument("RatioSpec: denominator shift Re s = " + std::to_string(re) + " below 1/2 + " +
                                  std::to_string(margin));
  }
}

cld u_of(std::complex<double> s, std::uint32_t q) {
  return std::exp(-cld(s.real(), s.imag()) * std::log(static_cast<long double>(q)));
}

cld ratio_average_empirical(const FamilyTable& t, const RatioSpec& spec, Normalization norm, unsigned workers) {
  spec.validate();
  if (t.q % 2 == 0 || !is_prime(t.q)) throw std::invalid_argument("ratio_average_empirical: q must be an odd prime");
  std::vector<cld> u(spec.s.size());
  for (std::size_t k = 0; k < u.size(); ++k) u[k] = u_of(spec.s[k], t.q);
  const auto K = static_cast<std::size_t>(spec.K);
  cld total = reduce_members(t, workers, [&](std::size_t i) {
    const std::int64_t* a = t.lhat_of(i);
    cld v = 1;
    for (std::size_t k = 0; k < K; ++k) v *= horner(a, t.n, u[k]);
    for (std::size_t k = K; k < u.size(); ++k) {
      cld den = horner(a, t.n, u[k]);
      if (std::abs(den) < kDenominatorFloor)
        throw std::invalid_argument("ratio_average_empirical: denominator vanishes at d = (" + digits_string(t, i) + ")");
      v /= den;
    }
    return v;
  });
  if (norm == Normalization::Average) total /= std::pow(static_cast<long double>(t.q), static_cast<long double>(t.n));
  return total;
}

long double c5_single(const FamilyTable& t, const std::vector<int>& eps, const std::vector<unsigned>& N, int K,
                      unsigned workers) {
  require_odd_family(t, "estimate_C5");
  if (K < 0 || static_cast<std::size_t>(K) > N.size() || eps.size() != static_cast<std::size_t>(K))
    throw std::invalid_argument("estimate_C5: need K signs and K + Q indices");
  for (int e : eps)
    if (e != 1 && e != -1) throw std::invalid_argument("estimate_C5: signs must be +1 or -1");
  unsigned Nmax = 0;
  for (unsigned v : N) Nmax = std::max(Nmax, v);
  std::vector<long double> scale(Nmax + 1);
  for (unsigned k = 0; k <= Nmax; ++k) scale[k] = std::pow(static_cast<long double>(t.q), -0.5L * k);
  // For odd n the completed polynomial is Lhat itself, c = n - 1 is even and
  // w = +1, so an eps = -1 slot contributes the same factor as eps = +1.
  const unsigned len = t.n;
  cld total = reduce_members(t, workers, [&](std::size_t i) {
    const std::int64_t* a = t.lhat_of(i);
    std::vector<long double> B;
    long double v = 1;
    for (std::size_t k = 0; k < N.size(); ++k) {
      const unsigned Nk = N[k];
      if (static_cast<int>(k) < K) {
        v *= Nk < len ? a[Nk] * scale[Nk] : 0.0L;
      } else {
        if (B.empty()) {
          B.assign(Nmax + 1, 0.0L);
          B[0] = 1;
          for (unsigned r = 1; r <= Nmax; ++r) {
            long double acc = 0;
            for (unsigned j = 1; j <= std::min(r, len - 1); ++j) acc += a[j] * scale[j] * B[r - j];
            B[r] = -acc;
          }
        }
        v *= B[Nk];
      }
    }
    return cld(v, 0);
  });
  return total.real() / std::pow(static_cast<long double>(t.q), static_cast<long double>(t.n));
}

C5Estimate estimate_C5(const std::vector<const FamilyTable*>& tables, const std::vector<int>& eps,
                       const std::vector<unsigned>& N, int K, unsigned workers) {
  C5Estimate out;
  for (const FamilyTable* t : tables) {
    out.ns.push_back(t->n);
    out.values.push_back(c5_single(*t, eps, N, K, workers));
  }
  for (std::size_t k = 1; k < out.values.size(); ++k) out.differences.push_back(std::fabs(out.values[k] - out.values[k - 1]));
  return out;
}

MoebiusResult moebius_cancellation(const FamilyTable& t, unsigned R, unsigned workers) {
  require_odd_family(t, "moebius_cancellation");
  if (t.n < 3) throw std::invalid_argument("moebius_cancellation: n must be >= 3");
  const unsigned len = t.n;
  __int128 S = reduce_members_exact(t, workers, [&](std::size_t i) -> __int128 {
    const std::int64_t* a = t.lhat_of(i);
    std::vector<__int128> b(R + 1, 0);
    b[0] = 1;
    for (unsigned r = 1; r <= R; ++r) {
      __int128 acc = 0;
      for (unsigned j = 1; j <= std::min(r, len - 1); ++j) {
        __int128 term;
        if (__builtin_mul_overflow(static_cast<__int128>(a[j]), b[r - j], &term) || __builtin_add_overflow(acc, term, &acc))
          throw std::logic_error("moebius_cancellation: coefficient overflow");
      }
      b[r] = -acc;
    }
    return b[R];
  });
  MoebiusResult res;
  res.family_size = t.size();
  res.exact_sum = int128_to_string(S);
  res.value = static_cast<long double>(S) / static_cast<long double>(res.family_size) *
              std::pow(static_cast<long double>(t.q), -0.5L * static_cast<long double>(R));
  return res;
}

DensityResult one_level_density(const FamilyTable& t, const TestKernel& k, DensityRoute route, unsigned workers) {
  require_odd_family(t, "one_level_density");
  if (t.n < 3) throw std::invalid_argument("one_level_density: n must be >= 3");
  DensityResult res;
  res.reference = k.density_reference();
  const unsigned n = t.n;
  const double N = n - 1.0;
  const long double P = static_cast<long double>(t.size());
  const double logq = std::log(static_cast<double>(t.q));
  if (route == DensityRoute::Zeros) {
    cld total = reduce_members(t, workers, [&](std::size_t i) {
      LPolynomial L = complete(t.member(i));
      check_functional_equation(L);
      const ZeroSet z = zero_angles(L);
      long double s = 0;
      for (double th : z.angles) s += periodize(k, t.q, n, th / logq);
      return cld(s, 0);
    });
    res.empirical = total.real() / P;
    return res;
  }
  // trace route: sum_j F(theta_j) = (1/N)[c g(0) + 2 sum_m g(m/N) q^{-m/2} p_m]
  const auto M = static_cast<unsigned>(std::floor(k.lambda() * N));
  std::vector<__int128> S(M + 1, 0);
  for (unsigned m = 1; m <= M; ++m) {
    S[m] = reduce_members_exact(t, workers, [&](std::size_t i) -> __int128 {
      const std::int64_t* a = t.lhat_of(i);
      std::vector<__int128> p(m + 1, 0);
      for (unsigned j = 1; j <= m; ++j) {
        __int128 acc = j < n ? -static_cast<__int128>(j) * a[j] : 0;
        for (unsigned kk = 1; kk < j && kk < n; ++kk) acc -= a[kk] * p[j - kk];
        p[j] = acc;
      }
      return p[m];
    });
  }
  long double acc = static_cast<long double>(n - 1) * k.g(0);
  for (unsigned m = 1; m <= M; ++m)
    acc += 2.0L * k.g(m / N) * std::pow(static_cast<long double>(t.q), -0.5L * m) * static_cast<long double>(S[m]) / P;
  res.empirical = acc / N;
  return res;
}

long double average_char_model(const Poly& r, bool* is_square) {
  if (r.is_zero() || !r.is_monic()) throw std::invalid_argument("average_char: r must be monic");
  const Factorization fz = factor_poly(r);
  bool sq = true;
  long double prod = 1;
  const long double q = r.field().order();
  for (const auto& [P, e] : fz.factors) {
    if (e % 2) sq = false;
    prod /= 1 + std::pow(q, -static_cast<long double>(P.degree()));
  }
  if (is_square) *is_square = sq;
  return sq ? (1 - 1 / q) * prod : 0.0L;
}

AvgCharResult average_char(const Poly& r, const std::vector<const FamilyTable*>& tables, unsigned workers) {
  AvgCharResult out;
  out.model = average_char_model(r, &out.square);
  const Field& F = r.field();
  if (F.degree() != 1) throw std::invalid_argument("average_char: prime field required");
  for (const FamilyTable* t : tables) {
    if (t->q != F.order()) throw std::invalid_argument("average_char: table over a different field");
    if (t->q % 2 == 0) throw std::invalid_argument("average_char: q must be odd");
    const unsigned n = t->n;
    __int128 S = reduce_members_exact(*t, workers, [&](std::size_t i) -> __int128 {
      Elem d[64];
      const std::uint32_t* dg = t->digits_of(i);
      for (unsigned k = 0; k < n; ++k) d[k] = dg[n - 1 - k];
      d[n] = 1;
      return jacobi_raw(F, r.coeffs().data(), r.degree(), d, static_cast<int>(n));
    });
    out.ns.push_back(n);
    out.empirical.push_back(static_cast<long double>(S) /
                            std::pow(static_cast<long double>(t->q), static_cast<long double>(n)));
  }
  return out;
}

}  // namespace ffz

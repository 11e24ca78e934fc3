#include "ffz/recipe.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "ffz/enumerate.hpp"

namespace ffz {

namespace {

cld clog1p(cld z) {
  if (std::abs(z) < 1e-3L) {
    cld s = 0, p = z;
    for (int k = 1; k <= 9; ++k, p *= z) s += (k % 2 ? 1.0L : -1.0L) * p / static_cast<long double>(k);
    return s;
  }
  return std::log(1.0L + z);
}

cld cexpm1(cld z) {
  if (std::abs(z) < 1e-3L) {
    cld s = 0, p = z;
    long double f = 1;
    for (int k = 1; k <= 9; ++k, p *= z) {
      f *= k;
      s += p / f;
    }
    return s;
  }
  return std::exp(z) - 1.0L;
}

// number of monic irreducibles of degree e, as a long double
long double irreducible_count(long double q, unsigned e) {
  long double s = 0;
  for (unsigned d = 1; d <= e; ++d) {
    if (e % d) continue;
    int mu = 1;
    unsigned m = d;
    for (unsigned p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      m /= p;
      if (m % p == 0) {
        mu = 0;
        break;
      }
      mu = -mu;
    }
    if (mu != 0 && m > 1) mu = -mu;
    if (mu) s += mu * std::pow(q, static_cast<long double>(e / d));
  }
  return s / e;
}

struct Monomial {
  std::vector<unsigned> vars;  // indices into the combined variable list
  int c;                       // zeta exponent
};

}  // namespace

CoefficientSource parse_source(const std::string& s) {
  if (s == "model") return CoefficientSource::Model;
  if (s == "empirical") return CoefficientSource::Empirical;
  throw std::invalid_argument("unknown coefficient source: " + s);
}

std::string source_name(CoefficientSource s) { return s == CoefficientSource::Model ? "model" : "empirical"; }

cld recipe_model_series(std::uint32_t q, const std::vector<cld>& x, const std::vector<cld>& y, long double* tail) {
  const std::size_t K = x.size(), Q = y.size();
  if (K + Q > 2) throw std::invalid_argument("recipe: K + Q <= 2 supported");
  const long double qq = q;
  const long double C4 = 1 - 1 / qq;
  std::vector<cld> v(x);
  v.insert(v.end(), y.begin(), y.end());

  // degree-two local terms: X_i X_j (+), X_i Y_j (-), Y_i Y_j (+, i < j)
  std::vector<Monomial> mons;
  for (unsigned i = 0; i < K; ++i)
    for (unsigned j = i; j < K; ++j) mons.push_back({{i, j}, 1});
  for (unsigned i = 0; i < K; ++i)
    for (unsigned j = 0; j < Q; ++j) mons.push_back({{i, static_cast<unsigned>(K + j)}, -1});
  for (unsigned i = 0; i < Q; ++i)
    for (unsigned j = i + 1; j < Q; ++j) mons.push_back({{static_cast<unsigned>(K + i), static_cast<unsigned>(K + j)}, 1});

  std::vector<cld> mval;
  cld zeta_part = 1;
  for (const auto& m : mons) {
    cld M = v[m.vars[0]] * v[m.vars[1]];
    mval.push_back(M);
    cld den = 1.0L - qq * M;
    if (std::abs(den) < 1e-12L) throw std::invalid_argument("recipe: evaluation at a pole");
    zeta_part *= m.c > 0 ? 1.0L / den : den;
  }
  // A Pi - 1 is -(v_0 v_1)^2 when both variables sit on the same side, else 0
  const bool quartic = K + Q == 2 && K != 1;

  cld logE = 0;
  long double last = 0, est = 0;
  int shrinking = 0;
  std::vector<cld> ve(v.size(), 1.0L), me(mval.size(), 1.0L);
  for (unsigned e = 1; e <= 4000; ++e) {
    for (std::size_t i = 0; i < v.size(); ++i) ve[i] *= v[i];
    for (std::size_t i = 0; i < mval.size(); ++i) me[i] *= mval[i];
    const long double qe = std::pow(qq, static_cast<long double>(e));
    const long double kappa = qe / (qe + 1), one_minus_kappa = 1 / (qe + 1);
    cld lp = 0;
    for (std::size_t i = 0; i < mons.size(); ++i) lp += static_cast<long double>(mons[i].c) * clog1p(-me[i]);
    cld g1 = one_minus_kappa * cexpm1(lp);
    if (quartic) g1 -= kappa * (ve[0] * ve[1]) * (ve[0] * ve[1]);
    const cld term = irreducible_count(qq, e) * clog1p(g1);
    logE += term;
    const long double mag = std::abs(term);
    if (e > 1 && mag < last) {
      ++shrinking;
    } else {
      shrinking = 0;
    }
    if (mag == 0 && e >= 2 && last == 0) {
      est = 0;
      break;
    }
    if (shrinking >= 3 && mag < 1e-22L * std::max(1.0L, std::abs(logE))) {
      const long double r = mag / last;
      est = r < 1 ? mag * r / (1 - r) : INFINITY;
      break;
    }
    last = mag;
    est = INFINITY;
  }
  if (tail) *tail = est;
  return C4 * zeta_part * std::exp(logE);
}

RecipeResult recipe_main_term(std::uint32_t q, unsigned n, const RatioSpec& spec, CoefficientSource src,
                              unsigned N_max, const FamilyTable* table, long double tol, unsigned workers) {
  spec.validate();
  if (spec.K + spec.Q > 2) throw std::invalid_argument("recipe_main_term: unsupported (K, Q); need K + Q <= 2");
  if (q % 2 == 0 || !is_prime(q)) throw std::invalid_argument("recipe_main_term: q must be an odd prime");
  if (n % 2 == 0 || n < 3) throw std::invalid_argument("recipe_main_term: n must be odd and >= 3");
  if (N_max == 0) N_max = 4 * n;
  const int c = static_cast<int>(n) - 1;
  const long double lq = std::log(static_cast<long double>(q));
  const long double C4 = 1 - 1.0L / q;
  const auto K = static_cast<unsigned>(spec.K), Q = static_cast<unsigned>(spec.Q);
  auto sval = [&](unsigned i) { return cld(spec.s[i].real(), spec.s[i].imag()); };

  RecipeResult res;
  res.truncation = N_max;

  // empirical coefficients do not depend on eps for odd n
  std::vector<long double> coef;
  unsigned cap = 0;
  if (src == CoefficientSource::Empirical) {
    if (!table) throw std::invalid_argument("recipe_main_term: empirical source needs a family table");
    if (table->q != q) throw std::invalid_argument("recipe_main_term: table over a different q");
    cap = std::min(N_max, (table->n - 1) / 2);
    res.truncation = cap;
    const unsigned dims = K + Q;
    std::size_t total = 1;
    for (unsigned i = 0; i < dims; ++i) total *= cap + 1;
    coef.resize(total);
    std::vector<unsigned> N(dims);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t r = idx;
      for (unsigned i = 0; i < dims; ++i) {
        N[i] = static_cast<unsigned>(r % (cap + 1));
        r /= cap + 1;
      }
      coef[idx] = c5_single(*table, std::vector<int>(K, 1), N, static_cast<int>(K), workers);
    }
  }

  cld MT = 0;
  long double tail = 0;
  for (unsigned mask = 0; mask < (1u << K); ++mask) {
    cld weight = 1;
    cld F;
    if (src == CoefficientSource::Model) {
      std::vector<cld> x(K), y(Q);
      for (unsigned i = 0; i < K; ++i) {
        const bool flip = mask >> i & 1u;
        x[i] = flip ? std::exp((sval(i) - 1.0L) * lq) : std::exp(-sval(i) * lq);
      }
      for (unsigned j = 0; j < Q; ++j) y[j] = std::exp(-sval(K + j) * lq);
      long double t = 0;
      F = recipe_model_series(q, x, y, &t);
      tail = std::max(tail, t);
    } else {
      // normalized variables q^{eps (1/2 - s)} and q^{1/2 - s}
      std::vector<cld> z(K + Q);
      for (unsigned i = 0; i < K; ++i) {
        const long double sign = (mask >> i & 1u) ? -1.0L : 1.0L;
        z[i] = std::exp(sign * (0.5L - sval(i)) * lq);
      }
      for (unsigned j = 0; j < Q; ++j) z[K + j] = std::exp((0.5L - sval(K + j)) * lq);
      F = 0;
      cld shell = 0;
      for (std::size_t idx = 0; idx < coef.size(); ++idx) {
        std::size_t r = idx;
        cld mono = 1;
        bool outer = false;
        for (unsigned i = 0; i < K + Q; ++i) {
          const auto Ni = static_cast<unsigned>(r % (cap + 1));
          r /= cap + 1;
          mono *= std::pow(z[i], static_cast<long double>(Ni));
          outer = outer || Ni + 1 >= cap;  // last two shells; odd ones often vanish
        }
        F += coef[idx] * mono;
        if (outer && cap > 0) shell += coef[idx] * mono;
      }
      tail = std::max(tail, static_cast<long double>(std::abs(shell)));
    }
    for (unsigned i = 0; i < K; ++i)
      if (mask >> i & 1u) weight *= (c % 2 ? -1.0L : 1.0L) * std::exp(static_cast<long double>(c) * (0.5L - sval(i)) * lq);
    MT += F * weight;
  }
  if (src == CoefficientSource::Model && !(tail <= tol))
    throw std::invalid_argument("recipe_main_term: truncation tail estimate above tolerance");
  res.tail = tail;
  res.MT = MT;
  res.RR_L = static_cast<long double>(squarefree_count(q, n)) * MT / C4;
  return res;
}

}  // namespace ffz

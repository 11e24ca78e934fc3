#include "ffz/symchar.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ffz {

namespace {

using Matrix = std::vector<std::vector<LaurentPoly>>;

int perm_sign(const std::vector<int>& p) {
  int s = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

LaurentPoly det(const Matrix& M, int arity) {
  const int n = static_cast<int>(M.size());
  LaurentPoly out(arity);
  if (n == 0) return LaurentPoly::constant(arity, 1);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    LaurentPoly t = M[0][p[0]];
    for (int i = 1; i < n && !t.is_zero(); ++i) t = t * M[i][p[i]];
    if (t.is_zero()) continue;
    if (perm_sign(p) < 0) t *= -1;
    out += t;
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

mpq_class det(std::vector<std::vector<mpq_class>> A) {
  const std::size_t n = A.size();
  mpq_class d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(A[piv], A[col]);
      d = -d;
    }
    d *= A[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (A[r][col] == 0) continue;
      mpq_class f = A[r][col] / A[col][col];
      for (std::size_t k = col; k < n; ++k) A[r][k] -= f * A[col][k];
    }
  }
  return d;
}

mpq_class qpow(const mpq_class& x, int e) {
  mpq_class base = e < 0 ? mpq_class(1) / x : x;
  mpq_class r = 1;
  for (int k = 0; k < std::abs(e); ++k) r *= base;
  return r;
}

// h_k over a set of letters, each letter a Laurent monomial given by its
// exponent vector; built one letter at a time.
LaurentPoly h_over_letters(int k, int arity, const std::vector<Exponent>& letters) {
  if (k < 0) return LaurentPoly(arity);
  // table[j] = h_j over the letters processed so far
  std::vector<LaurentPoly> table(k + 1, LaurentPoly(arity));
  table[0] = LaurentPoly::constant(arity, 1);
  for (const auto& a : letters) {
    // h_j(A + a) = h_j(A) + a h_{j-1}(A + a)
    for (int j = 1; j <= k; ++j) table[j] += table[j - 1].shifted(a);
  }
  return table[k];
}

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

Group parse_group(const std::string& s) {
  if (s == "Sp" || s == "sp") return Group::Sp;
  if (s == "O" || s == "o") return Group::O;
  throw std::invalid_argument("unknown group: " + s);
}

LaurentPoly complete_homogeneous(int k, int m) {
  std::vector<Exponent> letters;
  for (int i = 0; i < m; ++i) {
    Exponent e(m, 0);
    e[i] = 1;
    letters.push_back(e);
  }
  return h_over_letters(k, m, letters);
}

LaurentPoly complete_homogeneous_pm(int k, int m) {
  static std::map<std::pair<int, int>, LaurentPoly> memo;
  {
    std::lock_guard lock(memo_mutex());
    auto it = memo.find({k, m});
    if (it != memo.end()) return it->second;
  }
  std::vector<Exponent> letters;
  for (int i = 0; i < m; ++i)
    for (int s : {1, -1}) {
      Exponent e(m, 0);
      e[i] = s;
      letters.push_back(e);
    }
  LaurentPoly h = h_over_letters(k, m, letters);
  std::lock_guard lock(memo_mutex());
  return memo.emplace(std::make_pair(k, m), h).first->second;
}

LaurentPoly schur_poly(const Partition& lambda, int m) {
  if (m < 1) throw std::invalid_argument("schur_poly: m must be >= 1");
  if (lambda.length() > m) return LaurentPoly(m);
  const int l = lambda.length();
  Matrix M(l, std::vector<LaurentPoly>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) M[i - 1][j - 1] = complete_homogeneous(lambda[i] - i + j, m);
  return l == 0 ? LaurentPoly::constant(m, 1) : det(M, m);
}

const LaurentPoly& sp_character(const Partition& lambda, int m) {
  static std::map<std::pair<Partition, int>, LaurentPoly> memo;
  {
    std::lock_guard lock(memo_mutex());
    auto it = memo.find({lambda, m});
    if (it != memo.end()) return it->second;
  }
  LaurentPoly chi(m);
  if (m < 0) throw std::invalid_argument("sp_character: negative rank");
  if (lambda.length() <= m) {
    const int l = lambda.length();
    if (l == 0) {
      chi = LaurentPoly::constant(m, 1);
    } else {
      // Row i: h_{lambda_i - i + 1}, then h_{lambda_i - i + j} + h_{lambda_i - i - j + 2}.
      Matrix M(l, std::vector<LaurentPoly>(l));
      for (int i = 1; i <= l; ++i) {
        M[i - 1][0] = complete_homogeneous_pm(lambda[i] - i + 1, m);
        for (int j = 2; j <= l; ++j)
          M[i - 1][j - 1] = complete_homogeneous_pm(lambda[i] - i + j, m) + complete_homogeneous_pm(lambda[i] - i - j + 2, m);
      }
      chi = det(M, m);
    }
    if (!chi.has_nonnegative_integer_coeffs())
      throw std::logic_error("sp_character: coefficient is not a nonnegative integer");
  }
  std::lock_guard lock(memo_mutex());
  return memo.emplace(std::make_pair(lambda, m), std::move(chi)).first->second;
}

mpq_class sp_character_weyl(const Partition& lambda, const std::vector<mpq_class>& x) {
  const int m = static_cast<int>(x.size());
  if (lambda.length() > m) return 0;
  std::vector<int> lam = lambda.padded(m);
  std::vector<std::vector<mpq_class>> num(m, std::vector<mpq_class>(m)), den(m, std::vector<mpq_class>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int a = lam[i] + m - i;  // lambda_i + m - i + 1 with 0-based i
      const int b = m - i;
      num[i][j] = qpow(x[j], a) - qpow(x[j], -a);
      den[i][j] = qpow(x[j], b) - qpow(x[j], -b);
    }
  mpq_class d = det(den);
  if (d == 0) throw std::invalid_argument("sp_character_weyl: singular evaluation point");
  return det(num) / d;
}

LaurentPoly weyl_denominator(int K) {
  if (K < 0) throw std::invalid_argument("weyl_denominator: K must be >= 0");
  LaurentPoly D = LaurentPoly::constant(K, 1);
  for (int i = 0; i < K; ++i) {
    for (int j = i + 1; j < K; ++j) {
      LaurentPoly a = LaurentPoly::variable(K, i) - LaurentPoly::variable(K, j);
      Exponent e(K, 0);
      e[i] = e[j] = 1;
      LaurentPoly b = LaurentPoly::monomial(K, e) - LaurentPoly::constant(K, 1);
      D = D * a * b;
    }
    D = D * (LaurentPoly::constant(K, 1) - LaurentPoly::variable(K, i, 2));
  }
  return D;
}

LaurentPoly skew_multiplicity(Group g, const Partition& rho, int K, int c, int i) {
  if (K < 0) throw std::invalid_argument("skew_multiplicity: K must be >= 0");
  if (c < 0 || c % 2) throw std::invalid_argument("skew_multiplicity: c must be a nonnegative even integer");
  if (g == Group::Sp && i != 0) throw std::invalid_argument("skew_multiplicity: Sp requires i = 0");
  if (g == Group::O && K > 1) throw std::invalid_argument("skew_multiplicity: O requires K <= 1");
  if (i != 0 && i != 1) throw std::invalid_argument("skew_multiplicity: i must be 0 or 1");
  if (K == 0) return rho.empty() ? LaurentPoly::constant(0, 1) : LaurentPoly(0);
  if (rho[1] > K) return LaurentPoly(K);
  if (g == Group::O) {
    const int l = rho.length();
    if (l > c) return LaurentPoly(1);
    return LaurentPoly::variable(1, 0, i == 0 ? l : c - l);
  }
  const int half = c / 2;
  if (rho.length() > half) return LaurentPoly(K);
  std::vector<int> rc = rho.conjugate().padded(K);
  std::vector<int> lam(K);
  for (int j = 0; j < K; ++j) lam[j] = half - rc[K - 1 - j];
  const LaurentPoly& chi = sp_character(Partition(lam), K);
  return chi.shifted(Exponent(K, half));
}

Decomposition peel_sp_characters(std::map<Exponent, LaurentPoly> expansion, int m, int coeff_arity) {
  Decomposition out;
  for (auto it = expansion.begin(); it != expansion.end();)
    it = it->second.is_zero() ? expansion.erase(it) : std::next(it);
  while (!expansion.empty()) {
    auto top = std::prev(expansion.end());
    const Exponent w = top->first;
    for (int j = 0; j < m; ++j)
      if (w[j] < 0 || (j + 1 < m && w[j] < w[j + 1]))
        throw std::logic_error("peel_sp_characters: leading weight is not dominant");
    const LaurentPoly coef = top->second;
    out.try_emplace(Partition(std::vector<int>(w.begin(), w.end())), LaurentPoly(coeff_arity)).first->second += coef;
    for (const auto& [z, a] : sp_character(Partition(std::vector<int>(w.begin(), w.end())), m).terms()) {
      auto [pos, inserted] = expansion.try_emplace(z, LaurentPoly(coeff_arity));
      pos->second -= coef * a;
      if (pos->second.is_zero()) expansion.erase(pos);
    }
  }
  return out;
}

Decomposition decompose_wedge_oracle(int K, int m, int D) {
  if (K < 0 || m < 1) throw std::invalid_argument("decompose_wedge_oracle: need K >= 0, m >= 1");
  if (2 * m > D) throw std::invalid_argument("decompose_wedge_oracle: x-degree cap exceeded");
  std::map<Exponent, LaurentPoly> ex;
  ex.emplace(Exponent(m, 0), LaurentPoly::constant(K, 1));
  for (int i = 0; i < K; ++i) {
    const LaurentPoly xi = LaurentPoly::variable(K, i);
    for (int j = 0; j < m; ++j)
      for (int s : {1, -1}) {
        std::map<Exponent, LaurentPoly> next = ex;
        for (const auto& [w, c] : ex) {
          Exponent w2 = w;
          w2[j] += s;
          auto [pos, ins] = next.try_emplace(w2, LaurentPoly(K));
          pos->second += c * xi;
        }
        ex = std::move(next);
      }
  }
  return peel_sp_characters(std::move(ex), m, K);
}

namespace {

Decomposition sym_at_rank(int Q, int m, int D) {
  std::map<Exponent, LaurentPoly> ex;
  ex.emplace(Exponent(m, 0), LaurentPoly::constant(Q, 1));
  for (int i = 0; i < Q; ++i)
    for (int j = 0; j < m; ++j)
      for (int s : {1, -1}) {
        // multiply by sum_{k <= D} (y_i z_j^s)^k, dropping total y-degree > D
        std::map<Exponent, LaurentPoly> next;
        for (const auto& [w, c] : ex) {
          for (int k = 0; k <= D; ++k) {
            LaurentPoly t = (c * LaurentPoly::variable(Q, i, k)).truncated_total_degree(D);
            if (t.is_zero()) break;
            Exponent w2 = w;
            w2[j] += s * k;
            auto [pos, ins] = next.try_emplace(w2, LaurentPoly(Q));
            pos->second += t;
          }
        }
        ex = std::move(next);
      }
  return peel_sp_characters(std::move(ex), m, Q);
}

}  // namespace

Decomposition decompose_sym_truncated(int Q, int m, int D) {
  if (Q < 0 || m < 1 || D < 0) throw std::invalid_argument("decompose_sym_truncated: need Q >= 0, m >= 1, D >= 0");
  if (Q > 3 || m > 6 || D > 16) throw std::invalid_argument("decompose_sym_truncated: size cap exceeded");
  Decomposition d = sym_at_rank(Q, m, D);
  for (const auto& [mu, coef] : d) {
    if (mu.length() > Q) throw std::logic_error("decompose_sym_truncated: partition longer than Q");
    if (coef.min_total_degree() < mu.size()) throw std::logic_error("decompose_sym_truncated: degree bound violated");
  }
  if (m >= Q) {
    Decomposition d2 = sym_at_rank(Q, m + 1, D);
    if (d2 != d) throw std::logic_error("decompose_sym_truncated: decomposition depends on the rank");
  }
  return d;
}

ParamLaurentPoly stable_numerator_param(Group g, const Partition& rho, int K, int i) {
  if (g == Group::Sp && i != 0) throw std::invalid_argument("stable_numerators: Sp requires i = 0");
  if (g == Group::O && K > 1) throw std::invalid_argument("stable_numerators: O requires K <= 1");
  ParamLaurentPoly N(K);
  using PE = ParamLaurentPoly::ParamExponent;
  if (K == 0) {
    if (rho.empty()) N.add_term(PE{}, 1);
    return N;
  }
  if (rho[1] > K) return N;
  if (g == Group::O) {
    const int l = rho.length();
    if (i == 0) {
      N.add_term(PE{{l, 0}}, 1);
      N.add_term(PE{{l + 2, 0}}, -1);
    } else {
      N.add_term(PE{{-l, 1}}, 1);
      N.add_term(PE{{2 - l, 1}}, -1);
    }
    return N;
  }
  // (-1)^K det[x_j^{c + 2K - i + 1 - r_i} - x_j^{r_i + i - 1}], r_i = rho'_{K+1-i}.
  std::vector<int> rc = rho.conjugate().padded(K);
  std::vector<int> p(K);
  std::iota(p.begin(), p.end(), 0);
  do {
    const int sg = perm_sign(p) * (K % 2 ? -1 : 1);
    // choose, per column j, the sloped or flat part of entry (p[j], j)
    for (int mask = 0; mask < (1 << K); ++mask) {
      PE e(K);
      int s = sg;
      for (int j = 0; j < K; ++j) {
        const int row = p[j] + 1;
        const int r = rc[K - row];
        if (mask >> j & 1) {
          e[j] = {2 * K - row + 1 - r, 1};
        } else {
          e[j] = {r + row - 1, 0};
          s = -s;
        }
      }
      N.add_term(e, s);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return N;
}

std::map<std::vector<int>, LaurentPoly> stable_numerators(Group g, const Partition& rho, int K, int i) {
  if (K < 0 || K > 2) throw std::invalid_argument("stable_numerators: unsupported K");
  ParamLaurentPoly N = stable_numerator_param(g, rho, K, i);
  std::map<std::vector<int>, LaurentPoly> out;
  for (int mask = 0; mask < (1 << K); ++mask) {
    std::vector<int> eps(K);
    for (int u = 0; u < K; ++u) eps[u] = (mask >> u & 1) ? -1 : 1;
    out.emplace(eps, LaurentPoly(K));
  }
  for (const auto& [e, c] : N.terms()) {
    std::vector<int> eps(K);
    Exponent flat(K);
    for (int u = 0; u < K; ++u) {
      if (e[u].b != 0 && e[u].b != 1) throw std::logic_error("stable_numerators: slope outside {0, 1}");
      eps[u] = 1 - 2 * e[u].b;
      flat[u] = e[u].a;
    }
    out.at(eps).add_term(flat, c);
  }
  return out;
}

bool check_stable_reconstruction(Group g, const Partition& rho, int K, int i, int c) {
  auto pieces = stable_numerators(g, rho, K, i);
  LaurentPoly lhs(K);
  for (const auto& [eps, p] : pieces) {
    Exponent s(K);
    for (int u = 0; u < K; ++u) s[u] = (1 - eps[u]) * c / 2;
    lhs += p.shifted(s);
  }
  LaurentPoly rhs = skew_multiplicity(g, rho, K, c, i) * weyl_denominator(K);
  return lhs == rhs;
}

bool BoundReport::all_pass() const {
  return std::all_of(pass.begin(), pass.end(), [](bool b) { return b; });
}

BoundReport check_multiplicity_bound(Group g, const Partition& rho, int K, int c, int i,
                                     const std::vector<std::vector<std::complex<double>>>& points) {
  NumericLaurent M(skew_multiplicity(g, rho, K, c, i));
  BoundReport rep;
  for (const auto& x : points) {
    if (static_cast<int>(x.size()) != K) throw std::invalid_argument("check_multiplicity_bound: point arity");
    const double v = std::abs(M(x));
    double b = 1;
    for (const auto& xi : x) {
      const double a = std::abs(xi);
      b *= std::pow(a, c / 2.0) * std::pow(a + 1 / a + 2, c / 2.0 + rho.length());
    }
    rep.value.push_back(v);
    rep.bound.push_back(b);
    rep.pass.push_back(v <= b * (1 + 1e-12));
  }
  return rep;
}

std::string to_string(const Decomposition& d, const std::string& var) {
  std::ostringstream os;
  for (const auto& [p, c] : d) os << p.to_string() << " -> " << c.to_string(var) << "\n";
  return os.str();
}

}  // namespace ffz

#include "ffz/zeros.hpp"

#include <gmpxx.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ffz {

namespace {

using QPoly = std::vector<mpq_class>;  // low first, no trailing zeros

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly derivative(const QPoly& a) {
  QPoly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<long>(i));
  trim(d);
  return d;
}

std::pair<QPoly, QPoly> divrem(QPoly a, const QPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {{}, a};
  QPoly quo(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    mpq_class c = a[i] / b.back();
    quo[i - db] = c;
    if (c == 0) continue;
    for (std::size_t k = 0; k <= db; ++k) a[i - db + k] -= c * b[k];
  }
  a.resize(db);
  trim(a);
  trim(quo);
  return {quo, a};
}

QPoly monic(QPoly a) {
  mpq_class l = a.back();
  for (auto& c : a) c /= l;
  return a;
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// Yun's algorithm over Q: f = prod a_i^i.
std::vector<std::pair<QPoly, unsigned>> squarefree_decomposition(const QPoly& f) {
  std::vector<std::pair<QPoly, unsigned>> out;
  QPoly fp = derivative(f);
  QPoly a0 = gcd(f, fp);
  QPoly b = divrem(f, a0).first;
  QPoly c = divrem(fp, a0).first;
  QPoly d = c;
  {
    QPoly bp = derivative(b);
    d.resize(std::max(d.size(), bp.size()), 0);
    for (std::size_t i = 0; i < bp.size(); ++i) d[i] -= bp[i];
    trim(d);
  }
  unsigned i = 1;
  while (b.size() > 1) {
    QPoly a = gcd(b, d);
    if (a.size() > 1) out.emplace_back(a, i);
    b = divrem(b, a).first;
    c = divrem(d, a).first;
    QPoly bp = derivative(b);
    d = c;
    d.resize(std::max(d.size(), bp.size()), 0);
    for (std::size_t k = 0; k < bp.size(); ++k) d[k] -= bp[k];
    trim(d);
    ++i;
  }
  return out;
}

// gcd(f, f') == 1 modulo a large prime implies f square-free over Q.
bool squarefree_mod_prime(const std::vector<std::int64_t>& f) {
  constexpr std::uint64_t P = 1'000'000'007ULL;
  auto red = [](std::int64_t v) { std::int64_t r = v % static_cast<std::int64_t>(P); return static_cast<std::uint64_t>(r < 0 ? r + P : r); };
  auto inv = [](std::uint64_t a) {
    std::uint64_t r = 1, e = P - 2;
    while (e) {
      if (e & 1) r = r * a % P;
      a = a * a % P;
      e >>= 1;
    }
    return r;
  };
  std::vector<std::uint64_t> a, b;
  for (auto v : f) a.push_back(red(v));
  for (std::size_t i = 1; i < f.size(); ++i) b.push_back(red(f[i]) * (i % P) % P);
  auto tr = [](std::vector<std::uint64_t>& v) { while (!v.empty() && v.back() == 0) v.pop_back(); };
  tr(a);
  tr(b);
  if (a.size() <= 1 || b.empty()) return false;
  if (a.size() != f.size()) return false;  // leading coefficient vanished mod P
  while (b.size() > 1) {
    std::uint64_t li = inv(b.back());
    while (a.size() >= b.size()) {
      std::uint64_t c = a.back() * li % P;
      std::size_t sh = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[sh + k] = (a[sh + k] + P - c * b[k] % P) % P;
      tr(a);
      if (a.empty()) return false;
    }
    std::swap(a, b);
  }
  return !b.empty();
}

// Roots of a real polynomial (low first, nonzero leading coefficient) via
// companion eigenvalues, each polished by Newton steps in long double.
std::vector<std::complex<long double>> real_poly_roots(const std::vector<long double>& p) {
  const std::size_t deg = p.size() - 1;
  std::vector<std::complex<long double>> roots;
  if (deg == 0) return roots;
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(deg), static_cast<Eigen::Index>(deg));
  for (std::size_t i = 1; i < deg; ++i) C(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1.0;
  for (std::size_t i = 0; i < deg; ++i)
    C(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(deg - 1)) = static_cast<double>(-p[i] / p[deg]);
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("zero_angles: eigenvalue solver failed");
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    std::complex<long double> z(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
    for (int it = 0; it < 3; ++it) {
      std::complex<long double> v = 0, dv = 0;
      for (std::size_t k = deg + 1; k-- > 0;) {
        dv = dv * z + v;
        v = v * z + p[k];
      }
      if (std::abs(dv) == 0) break;
      std::complex<long double> step = v / dv;
      z -= step;
      if (std::abs(step) < 1e-18L * std::max<long double>(1, std::abs(z))) break;
    }
    roots.push_back(z);
  }
  return roots;
}

}  // namespace

ZeroSet zero_angles(const LPolynomial& L, double tol) {
  if (!L.completed) throw std::invalid_argument("zero_angles: input must be completed");
  if (L.w == 0) throw std::invalid_argument("zero_angles: functional equation not verified");
  const int c = L.c;
  ZeroSet zs;
  if (c <= 0) return zs;

  // Normalized polynomial P(z) = Lhat(z / sqrt q) has all roots on |z| = 1.
  std::vector<std::int64_t> coeffs(L.lhat.begin(), L.lhat.begin() + c + 1);
  std::vector<std::pair<QPoly, unsigned>> parts;
  if (squarefree_mod_prime(coeffs)) {
    QPoly f;
    for (auto v : coeffs) f.emplace_back(static_cast<long>(v));
    parts.emplace_back(f, 1);
  } else {
    QPoly f;
    for (auto v : coeffs) f.emplace_back(static_cast<long>(v));
    parts = squarefree_decomposition(f);
  }

  const long double sq = std::sqrt(static_cast<long double>(L.q));
  std::vector<long double> pos, neg;
  unsigned zero_count = 0, pi_count = 0;
  double worst = 0;
  const long double ang_eps = 1e-7L;
  for (const auto& [f, mult] : parts) {
    std::vector<long double> p(f.size());
    long double scale = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      p[i] = static_cast<long double>(mpz_class(f[i].get_num()).get_d()) /
             static_cast<long double>(mpz_class(f[i].get_den()).get_d()) / scale;
      scale *= sq;
    }
    for (const auto& z : real_poly_roots(p)) {
      // z = u sqrt(q) with u = q^{-1/2} e^{-i theta}
      const long double r = std::abs(z);
      const double dev = static_cast<double>(std::fabs(r - 1));
      worst = std::max(worst, dev);
      if (dev > tol)
        throw std::runtime_error("zero_angles: root off the critical circle, deviation " + std::to_string(dev));
      const long double th = -std::arg(z);
      for (unsigned k = 0; k < mult; ++k) {
        if (std::fabs(th) < ang_eps)
          ++zero_count;
        else if (std::numbers::pi_v<long double> - std::fabs(th) < ang_eps)
          ++pi_count;
        else if (th > 0)
          pos.push_back(th);
        else
          neg.push_back(-th);
      }
    }
  }
  if (pos.size() != neg.size())
    throw std::runtime_error("zero_angles: roots are not closed under conjugation");
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  for (unsigned k = 0; k < zero_count; ++k) zs.angles.push_back(0.0);
  for (std::size_t k = 0; k < pos.size(); ++k) {
    const double th = static_cast<double>((pos[k] + neg[k]) / 2);
    zs.angles.push_back(th);
    zs.angles.push_back(-th);
  }
  for (unsigned k = 0; k < pi_count; ++k) zs.angles.push_back(std::numbers::pi);
  if (zs.angles.size() != static_cast<std::size_t>(c))
    throw std::logic_error("zero_angles: root count differs from conductor degree");
  std::sort(zs.angles.begin(), zs.angles.end());
  zs.tolerance = worst;
  return zs;
}

std::vector<std::complex<double>> roots_from_angles(const ZeroSet& z, unsigned q) {
  std::vector<std::complex<double>> out;
  const double r = 1.0 / std::sqrt(static_cast<double>(q));
  for (double th : z.angles) out.push_back(std::polar(r, -th));
  return out;
}

}  // namespace ffz

#include "ffz/laurent.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ffz {

namespace {

void require_arity(int a, int b) {
  if (a != b) throw std::invalid_argument("LaurentPoly: arity mismatch");
}

mpq_class qpow(const mpq_class& x, int e) {
  mpq_class base = e < 0 ? mpq_class(1) / x : x;
  unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
  mpq_class r = 1;
  while (n) {
    if (n & 1) r *= base;
    base *= base;
    n >>= 1;
  }
  return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(int arity, const mpq_class& c) {
  LaurentPoly p(arity);
  p.add_term(Exponent(arity, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int arity, const Exponent& e, const mpq_class& c) {
  require_arity(arity, static_cast<int>(e.size()));
  LaurentPoly p(arity);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int arity, int i, int power) {
  Exponent e(arity, 0);
  e.at(i) = power;
  return monomial(arity, e);
}

mpq_class LaurentPoly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  require_arity(arity_, o.arity_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  require_arity(arity_, o.arity_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const mpq_class& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_arity(a.arity_, b.arity_);
  LaurentPoly r(a.arity_);
  Exponent e(a.arity_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LaurentPoly LaurentPoly::shifted(const Exponent& s) const {
  require_arity(arity_, static_cast<int>(s.size()));
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    for (int i = 0; i < arity_; ++i) f[i] += s[i];
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

LaurentPoly LaurentPoly::truncated_total_degree(int d) const {
  LaurentPoly r(arity_);
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) <= d) r.terms_.emplace(e, c);
  return r;
}

mpq_class LaurentPoly::eval(const std::vector<mpq_class>& x) const {
  require_arity(arity_, static_cast<int>(x.size()));
  mpq_class s = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class t = c;
    for (int i = 0; i < arity_; ++i)
      if (e[i] != 0) t *= qpow(x[i], e[i]);
    s += t;
  }
  return s;
}

std::complex<double> LaurentPoly::eval(const std::vector<std::complex<double>>& x) const {
  return NumericLaurent(*this)(x);
}

mpq_class LaurentPoly::at_ones() const {
  mpq_class s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

bool LaurentPoly::has_nonnegative_integer_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c < 0 || c.get_den() != 1) return false;
  return true;
}

int LaurentPoly::min_total_degree() const {
  int m = INT_MAX;
  for (const auto& [e, c] : terms_) m = std::min(m, std::accumulate(e.begin(), e.end(), 0));
  return m;
}

int LaurentPoly::max_total_degree() const {
  int m = INT_MIN;
  for (const auto& [e, c] : terms_) m = std::max(m, std::accumulate(e.begin(), e.end(), 0));
  return m;
}

std::string LaurentPoly::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest exponents first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    mpq_class a = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    first = false;
    bool unit = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    if (a != 1 || unit) os << a.get_str();
    bool need_star = a != 1;
    for (int i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      os << prefix;
      if (arity_ > 1) os << (i + 1);
      if (e[i] != 1) os << "^" << e[i];
    }
  }
  return os.str();
}

NumericLaurent::NumericLaurent(const LaurentPoly& p) : arity_(p.arity()) {
  for (const auto& [e, c] : p.terms()) {
    exps_.insert(exps_.end(), e.begin(), e.end());
    coeffs_.push_back(c.get_d());
  }
}

std::complex<double> NumericLaurent::operator()(const std::vector<std::complex<double>>& x) const {
  require_arity(arity_, static_cast<int>(x.size()));
  std::complex<double> s = 0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    std::complex<double> v = coeffs_[t];
    for (int i = 0; i < arity_; ++i) {
      int k = exps_[t * arity_ + i];
      if (k != 0) v *= std::pow(x[i], k);
    }
    s += v;
  }
  return s;
}

void ParamLaurentPoly::add_term(const ParamExponent& e, const mpq_class& c) {
  if (static_cast<int>(e.size()) != arity_) throw std::invalid_argument("ParamLaurentPoly: arity mismatch");
  for (const auto& af : e)
    if (af.b != 0 && af.b != 1) throw std::logic_error("ParamLaurentPoly: exponent slope outside {0, 1}");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly ParamLaurentPoly::specialize(int c) const {
  if (c % 2 != 0) throw std::invalid_argument("ParamLaurentPoly::specialize: c must be even");
  LaurentPoly r(arity_);
  Exponent e(arity_);
  for (const auto& [pe, coef] : terms_) {
    for (int i = 0; i < arity_; ++i) e[i] = pe[i].a + pe[i].b * c;
    r.add_term(e, coef);
  }
  return r;
}

ParamLaurentPoly operator*(const ParamLaurentPoly& x, const ParamLaurentPoly& y) {
  require_arity(x.arity_, y.arity_);
  ParamLaurentPoly r(x.arity_);
  ParamLaurentPoly::ParamExponent e(x.arity_);
  for (const auto& [ea, ca] : x.terms_)
    for (const auto& [eb, cb] : y.terms_) {
      for (int i = 0; i < x.arity_; ++i) e[i] = {ea[i].a + eb[i].a, ea[i].b + eb[i].b};
      r.add_term(e, ca * cb);
    }
  return r;
}

ParamLaurentPoly& ParamLaurentPoly::operator+=(const ParamLaurentPoly& o) {
  require_arity(arity_, o.arity_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

}  // namespace ffz

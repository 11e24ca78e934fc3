#include "ffz/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ffz {

namespace {

void require_same(const Poly& a, const Poly& b, const char* op) {
  if (!(a.field() == b.field())) throw std::invalid_argument(std::string(op) + ": polynomials over different fields");
}

}  // namespace

Poly::Poly(Field f, std::vector<Elem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
  for (Elem e : c_)
    if (e >= field_.order()) throw std::invalid_argument("Poly: coefficient out of range");
  trim();
}

Poly Poly::constant(const Field& f, Elem c) { return Poly(f, {c}); }

Poly Poly::x(const Field& f) { return monomial(f, 1); }

Poly Poly::monomial(const Field& f, unsigned k, Elem c) {
  std::vector<Elem> v(k + 1, 0);
  v[k] = c;
  return Poly(f, std::move(v));
}

Poly Poly::from_monic_digits(const Field& f, const std::vector<std::uint32_t>& a) {
  const std::size_t n = a.size();
  std::vector<Elem> v(n + 1, 0);
  v[n] = 1;
  for (std::size_t i = 0; i < n; ++i) v[n - 1 - i] = a[i];
  return Poly(f, std::move(v));
}

Poly Poly::random(const Field& f, unsigned deg, std::mt19937_64& rng, bool monic) {
  std::uniform_int_distribution<std::uint32_t> dig(0, f.order() - 1);
  std::uniform_int_distribution<std::uint32_t> nz(1, f.order() - 1);
  std::vector<Elem> v(deg + 1);
  for (unsigned i = 0; i < deg; ++i) v[i] = dig(rng);
  v[deg] = monic ? 1 : nz(rng);
  return Poly(f, std::move(v));
}

std::vector<std::uint32_t> Poly::monic_digits() const {
  if (!is_monic()) throw std::invalid_argument("monic_digits: polynomial is not monic");
  const std::size_t n = c_.size() - 1;
  std::vector<std::uint32_t> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = c_[n - 1 - i];
  return a;
}

void Poly::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
  if (is_zero()) throw std::invalid_argument("monic: zero polynomial");
  return scaled(field_.inv(lead()));
}

Poly Poly::scaled(Elem s) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(c_[i], s);
  return Poly(field_, std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Elem> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<std::int64_t>(i)));
  return Poly(field_, std::move(v));
}

Elem Poly::eval(Elem t) const noexcept {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, t), c_[i]);
  return acc;
}

Elem Poly::eval_in(const Field& ext, Elem t) const noexcept {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = ext.add(ext.mul(acc, t), c_[i]);
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (i == 0 || c_[i] != 1) os << c_[i];
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same(a, b, "add");
  const Field& f = a.field();
  std::vector<Elem> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a[i], b[i]);
  return Poly(f, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same(a, b, "sub");
  const Field& f = a.field();
  std::vector<Elem> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a[i], b[i]);
  return Poly(f, std::move(v));
}

Poly operator-(const Poly& a) { return Poly(a.field()) - a; }

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a, b, "mul");
  if (a.is_zero() || b.is_zero()) return Poly(a.field());
  const Field& f = a.field();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Elem> v(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t k = 0; k < y.size(); ++k) v[i + k] = f.add(v[i + k], f.mul(x[i], y[k]));
  }
  return Poly(f, std::move(v));
}

bool operator==(const Poly& a, const Poly& b) noexcept {
  return a.field() == b.field() && a.coeffs() == b.coeffs();
}

bool operator<(const Poly& a, const Poly& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (std::size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i];
  return false;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  require_same(a, b, "divrem");
  if (b.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Elem> r = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  const Elem li = f.inv(b.lead());
  std::vector<Elem> quo(r.size() - db, 0);
  for (std::size_t i = r.size(); i-- > db;) {
    Elem c = f.mul(r[i], li);
    quo[i - db] = c;
    if (c == 0) continue;
    for (std::size_t k = 0; k <= db; ++k) r[i - db + k] = f.sub(r[i - db + k], f.mul(c, d[k]));
  }
  r.resize(db);
  return {Poly(f, std::move(quo)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
  require_same(a, b, "gcd");
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd: both inputs are zero");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& a, std::uint64_t e, const Poly& m) {
  Poly base = a % m;
  Poly acc = Poly::constant(a.field(), 1) % m;
  while (e) {
    if (e & 1) acc = mulmod(acc, base, m);
    e >>= 1;
    if (e) base = mulmod(base, base, m);
  }
  return acc;
}

Poly pow(const Poly& a, unsigned e) {
  Poly acc = Poly::constant(a.field(), 1);
  for (unsigned i = 0; i < e; ++i) acc = acc * a;
  return acc;
}

std::uint64_t norm(const Poly& r) {
  if (r.is_zero()) throw std::invalid_argument("norm: zero polynomial");
  std::uint64_t v = 1;
  for (int i = 0; i < r.degree(); ++i) v *= r.field().order();
  return v;
}

}  // namespace ffz

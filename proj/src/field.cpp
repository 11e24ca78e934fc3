#include "ffz/field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace ffz {

namespace detail {

struct FieldTables {
  std::uint32_t p = 0;
  unsigned j = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // low first, monic, empty when j == 1
  std::vector<std::uint32_t> log;      // size q, log[0] unused
  std::vector<std::uint32_t> exp;      // size 2(q-1), exp[k] = g^k
  std::vector<std::uint32_t> zech;     // size q-1, log(1 + g^k) or sentinel
};

}  // namespace detail

namespace {

using Digits = std::vector<std::uint32_t>;

// Dense polynomials over F_p used only while constructing a field.
void trim(Digits& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits mulmod_p(const Digits& a, const Digits& b, const Digits& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Digits r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t k = 0; k < b.size(); ++k) {
      r[i + k] = static_cast<std::uint32_t>((r[i + k] + static_cast<std::uint64_t>(a[i]) * b[k]) % p);
    }
  }
  // m is monic
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = r.size(); i-- > dm;) {
    std::uint32_t c = r[i];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= dm; ++k) {
      std::uint64_t sub = static_cast<std::uint64_t>(c) * m[k] % p;
      r[i - dm + k] = static_cast<std::uint32_t>((r[i - dm + k] + p - sub) % p);
    }
  }
  r.resize(std::min(r.size(), dm));
  trim(r);
  return r;
}

Digits mod_p(Digits a, const Digits& m, std::uint32_t p) {
  // m need not be monic here; used by gcd
  trim(a);
  if (m.empty()) return a;
  const std::size_t dm = m.size() - 1;
  std::uint32_t lead_inv = 1;
  {
    // Fermat inverse
    std::uint64_t base = m.back(), e = p - 2, r = 1;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    lead_inv = static_cast<std::uint32_t>(r);
  }
  while (a.size() > dm) {
    std::uint32_t c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.back()) * lead_inv % p);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t k = 0; k <= dm; ++k) {
      std::uint64_t sub = static_cast<std::uint64_t>(c) * m[k] % p;
      a[shift + k] = static_cast<std::uint32_t>((a[shift + k] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Digits gcd_p(Digits a, Digits b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Digits r = mod_p(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree j is irreducible iff gcd(t^{p^i} - t, f) = 1 for i <= j/2.
bool irreducible_p(const Digits& f, std::uint32_t p) {
  const std::size_t j = f.size() - 1;
  if (j == 1) return true;
  Digits x{0, 1};
  Digits h = x;
  for (std::size_t i = 1; i <= j / 2; ++i) {
    // h <- h^p mod f
    Digits base = h, acc{1};
    std::uint64_t e = p;
    while (e) {
      if (e & 1) acc = mulmod_p(acc, base, f, p);
      base = mulmod_p(base, base, f, p);
      e >>= 1;
    }
    h = acc;
    Digits diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    Digits g = gcd_p(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::uint32_t encode(const Digits& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

Digits decode(std::uint32_t v, std::uint32_t p, unsigned j) {
  Digits d(j, 0);
  for (unsigned i = 0; i < j; ++i) {
    d[i] = v % p;
    v /= p;
  }
  trim(d);
  return d;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::shared_ptr<detail::FieldTables> build(std::uint32_t p, unsigned j) {
  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->j = j;
  std::uint64_t q = 1;
  for (unsigned i = 0; i < j; ++i) q *= p;
  t->q = static_cast<std::uint32_t>(q);

  Digits modulus;
  if (j > 1) {
    // Lexicographic scan over (a_1, ..., a_j), a_1 most significant.
    std::uint64_t count = q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Digits f(j + 1, 0);
      f[j] = 1;
      std::uint64_t v = idx;
      for (unsigned i = j; i >= 1; --i) {
        f[j - i] = static_cast<std::uint32_t>(v % p);  // a_i multiplies t^{j-i}; a_j is least significant
        v /= p;
      }
      if (f[0] == 0) continue;
      if (irreducible_p(f, p)) {
        modulus = f;
        break;
      }
    }
    t->modulus = modulus;
  } else {
    modulus = {0, 1};  // t: reduces prime field arithmetic to constants
  }

  auto mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (j == 1) return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    return encode(mulmod_p(decode(a, p, j), decode(b, p, j), modulus, p), p);
  };

  const std::uint64_t order = q - 1;
  std::uint32_t g = 0;
  if (q == 2) {
    g = 1;
  } else {
    const auto factors = prime_factors(order);
    for (std::uint32_t cand = 2; cand < q && g == 0; ++cand) {
      bool ok = true;
      for (auto r : factors) {
        std::uint64_t e = order / r;
        std::uint32_t base = cand, acc = 1;
        while (e) {
          if (e & 1) acc = mul(acc, base);
          base = mul(base, base);
          e >>= 1;
        }
        if (acc == 1) {
          ok = false;
          break;
        }
      }
      if (ok) g = cand;
    }
  }

  t->log.assign(q, 0);
  t->exp.assign(2 * order, 0);
  std::uint32_t x = 1;
  for (std::uint64_t k = 0; k < order; ++k) {
    t->exp[k] = x;
    t->exp[k + order] = x;
    t->log[x] = static_cast<std::uint32_t>(k);
    x = mul(x, g);
  }
  if (j > 1) {
    // 1 + g^k: add 1 to the constant digit.
    t->zech.assign(order, 0xffffffffu);
    for (std::uint64_t k = 0; k < order; ++k) {
      std::uint32_t e = t->exp[k];
      std::uint32_t d0 = e % p;
      std::uint32_t s = e - d0 + (d0 + 1) % p;
      t->zech[k] = s == 0 ? 0xffffffffu : t->log[s];
    }
  }
  return t;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

Field::Field(std::shared_ptr<const detail::FieldTables> tables) : tables_(std::move(tables)) {
  p_ = tables_->p;
  j_ = tables_->j;
  q_ = tables_->q;
  log_ = tables_->log.data();
  exp_ = tables_->exp.data();
  zech_ = tables_->zech.empty() ? nullptr : tables_->zech.data();
  minus_one_ = p_ - 1;  // constant digit p-1
}

Field Field::make(std::uint32_t p, unsigned j, std::uint64_t order_bound) {
  if (!is_prime(p)) throw std::invalid_argument("field_make: characteristic " + std::to_string(p) + " is not prime");
  if (j < 1) throw std::invalid_argument("field_make: extension degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < j; ++i) {
    q *= p;
    if (q > order_bound) throw std::invalid_argument("field_make: order exceeds bound " + std::to_string(order_bound));
  }
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, unsigned>, std::shared_ptr<const detail::FieldTables>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, j}];
  if (!slot) slot = build(p, j);
  return Field(slot);
}

const std::vector<std::uint32_t>& Field::modulus() const { return tables_->modulus; }

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  std::uint64_t l = static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1)) % (q_ - 1);
  return exp_[l];
}

std::uint32_t Field::digit(Elem a, unsigned i) const noexcept {
  for (unsigned k = 0; k < i; ++k) a /= p_;
  return a % p_;
}

std::string Field::to_string() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (j_ > 1) os << "^" << j_;
  os << ")";
  return os.str();
}

bool operator==(const Field& a, const Field& b) noexcept {
  if (a.tables_ == b.tables_) return true;
  if (!a.tables_ || !b.tables_) return false;
  return a.p_ == b.p_ && a.j_ == b.j_ && a.tables_->modulus == b.tables_->modulus;
}

}  // namespace ffz

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffz {

/// Element of a finite field, encoded as an integer in [0, q).
///
/// For a prime field this is the residue itself.  For an extension F_p[t]/(m)
/// the encoding is sum_i c_i p^i where c_i is the coefficient of t^i in the
/// reduced representative.
using Elem = std::uint32_t;

namespace detail {
struct FieldTables;
}

/// A finite field F_{p^j}.
///
/// Instances are cheap handles to shared immutable tables (discrete log,
/// antilog and Zech logarithms), so copying is O(1) and a Field can be used
/// concurrently from many threads.  Two handles compare equal when they
/// describe the same (p, j, modulus).
class Field {
 public:
  static constexpr std::uint64_t kDefaultOrderBound = 1'000'000;

  /// Builds (or fetches from the process-wide cache) the field of order p^j.
  /// For j > 1 the modulus is the lexicographically least monic irreducible
  /// of degree j, ordered on the coefficient tuple (a_1, ..., a_j) of
  /// t^j + a_1 t^{j-1} + ... + a_j.
  static Field make(std::uint32_t p, unsigned j = 1,
                    std::uint64_t order_bound = kDefaultOrderBound);

  Field() = default;

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return j_; }
  std::uint32_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return j_ == 1; }
  bool valid() const noexcept { return q_ != 0; }

  /// Monic modulus, low degree first (length j + 1).  Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const;

  Elem add(Elem a, Elem b) const noexcept {
    if (j_ == 1) {
      Elem s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_ext(a, b);
  }
  Elem neg(Elem a) const noexcept {
    if (a == 0) return 0;
    if (j_ == 1) return p_ - a;
    return mul(a, minus_one_);
  }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (j_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
    return log_[a] == 0 ? 1 : exp_[(q_ - 1) - log_[a]];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const noexcept;

  /// Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
  /// In characteristic 2 every element is a square.
  int quadratic_character(Elem a) const noexcept {
    if (a == 0) return 0;
    if (p_ == 2) return 1;
    return (log_[a] & 1u) ? -1 : 1;
  }

  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }

  /// Coefficient of t^i in the encoded element.
  std::uint32_t digit(Elem a, unsigned i) const noexcept;

  /// Fixed primitive element (generator of the multiplicative group).
  Elem generator() const noexcept { return exp_[1]; }

  /// Discrete logarithm to the base generator(); a must be nonzero.
  std::uint32_t log(Elem a) const noexcept { return log_[a]; }

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) noexcept;

 private:
  explicit Field(std::shared_ptr<const detail::FieldTables> tables);
  Elem add_ext(Elem a, Elem b) const noexcept {
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint32_t la = log_[a];
    std::uint32_t lb = log_[b];
    std::uint32_t d = lb >= la ? lb - la : lb + (q_ - 1) - la;
    std::uint32_t z = zech_[d];
    if (z == kNoZech) return 0;
    return exp_[la + z];
  }

  static constexpr std::uint32_t kNoZech = 0xffffffffu;

  std::shared_ptr<const detail::FieldTables> tables_;
  std::uint32_t p_ = 0;
  unsigned j_ = 0;
  std::uint32_t q_ = 0;
  Elem minus_one_ = 0;
  const std::uint32_t* log_ = nullptr;
  const std::uint32_t* exp_ = nullptr;
  const std::uint32_t* zech_ = nullptr;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace ffz

#pragma once

#include <climits>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ffz/field.hpp"

namespace ffz {

/// Dense univariate polynomial over a finite field, low degree first.
/// The coefficient vector never carries trailing zeros; the zero polynomial
/// has an empty vector and degree kDegZero.
class Poly {
 public:
  static constexpr int kDegZero = INT_MIN;

  Poly() = default;
  explicit Poly(Field f) : field_(std::move(f)) {}
  Poly(Field f, std::vector<Elem> coeffs);

  static Poly constant(const Field& f, Elem c);
  static Poly x(const Field& f);                 // the indeterminate t
  static Poly monomial(const Field& f, unsigned k, Elem c = 1);
  /// t^n + a_1 t^{n-1} + ... + a_n from the tuple (a_1, ..., a_n).
  static Poly from_monic_digits(const Field& f, const std::vector<std::uint32_t>& a);
  static Poly random(const Field& f, unsigned deg, std::mt19937_64& rng, bool monic = false);

  const Field& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  int degree() const noexcept { return c_.empty() ? kDegZero : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
  Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  Elem operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

  /// The tuple (a_1, ..., a_n) of a monic polynomial.
  std::vector<std::uint32_t> monic_digits() const;

  Poly monic() const;
  Poly derivative() const;
  Poly scaled(Elem s) const;
  Elem eval(Elem t) const noexcept;
  /// Evaluates at an element of another field containing this one's prime
  /// field (coefficients must lie in the prime field).
  Elem eval_in(const Field& ext, Elem t) const noexcept;

  std::string to_string() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) noexcept;
  /// Orders by (degree, coefficient tuple from the top).
  friend bool operator<(const Poly& a, const Poly& b) noexcept;

 private:
  void trim() noexcept;

  Field field_;
  std::vector<Elem> c_;
};

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd; inputs must not both be zero.
Poly gcd(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& a, std::uint64_t e, const Poly& m);
Poly pow(const Poly& a, unsigned e);

/// q^{deg r} as an exact integer.
std::uint64_t norm(const Poly& r);

}  // namespace ffz

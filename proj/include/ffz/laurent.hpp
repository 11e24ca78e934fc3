#pragma once

#include <gmpxx.h>

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace ffz {

using Exponent = std::vector<int>;

/// Multivariate Laurent polynomial with exact rational coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<Exponent, mpq_class>;

  LaurentPoly() = default;
  explicit LaurentPoly(int arity) : arity_(arity) {}

  static LaurentPoly constant(int arity, const mpq_class& c);
  static LaurentPoly monomial(int arity, const Exponent& e, const mpq_class& c = 1);
  static LaurentPoly variable(int arity, int i, int power = 1);

  int arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  mpq_class coeff(const Exponent& e) const;

  void add_term(const Exponent& e, const mpq_class& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const mpq_class& s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const mpq_class& s) { return a *= s; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.arity_ == b.arity_ && a.terms_ == b.terms_; }

  /// Multiplies by the monomial x^e.
  LaurentPoly shifted(const Exponent& e) const;
  /// Keeps only terms whose total degree is at most d.
  LaurentPoly truncated_total_degree(int d) const;

  mpq_class eval(const std::vector<mpq_class>& x) const;
  std::complex<double> eval(const std::vector<std::complex<double>>& x) const;
  /// Sum of coefficients (value at all ones).
  mpq_class at_ones() const;

  bool has_nonnegative_integer_coeffs() const;
  int min_total_degree() const;
  int max_total_degree() const;

  /// Readable form with variable names prefix1, prefix2, ... (or just prefix
  /// when arity is 1).
  std::string to_string(const std::string& prefix = "x") const;

 private:
  int arity_ = 0;
  Terms terms_;
};

/// Compiled double-precision evaluator of a LaurentPoly.
class NumericLaurent {
 public:
  NumericLaurent() = default;
  explicit NumericLaurent(const LaurentPoly& p);
  std::complex<double> operator()(const std::vector<std::complex<double>>& x) const;

 private:
  int arity_ = 0;
  std::vector<int> exps_;  // arity entries per term
  std::vector<double> coeffs_;
};

/// Laurent polynomial whose exponents are affine forms a + b c in a formal
/// even parameter c, with slopes b in {0, 1}.
class ParamLaurentPoly {
 public:
  struct Affine {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const Affine&, const Affine&) = default;
  };
  using ParamExponent = std::vector<Affine>;
  using Terms = std::map<ParamExponent, mpq_class>;

  ParamLaurentPoly() = default;
  explicit ParamLaurentPoly(int arity) : arity_(arity) {}

  int arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  void add_term(const ParamExponent& e, const mpq_class& c);
  LaurentPoly specialize(int c) const;

  friend ParamLaurentPoly operator*(const ParamLaurentPoly& a, const ParamLaurentPoly& b);
  ParamLaurentPoly& operator+=(const ParamLaurentPoly& o);

 private:
  int arity_ = 0;
  Terms terms_;
};

}  // namespace ffz

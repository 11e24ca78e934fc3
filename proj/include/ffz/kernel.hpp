#pragma once

#include <string>

namespace ffz {

enum class KernelShape { Triangle, RaisedCosine };

/// Even test function g supported on [-lambda, lambda] together with its
/// Fourier transform f(x) = int g(xi) e(x xi) d xi.
class TestKernel {
 public:
  TestKernel(KernelShape shape, double lambda);
  static TestKernel parse(const std::string& shape, double lambda);

  KernelShape shape() const noexcept { return shape_; }
  double lambda() const noexcept { return lambda_; }
  std::string name() const;

  double g(double xi) const noexcept;
  double f(double x) const noexcept;
  /// int |g|
  double M0() const noexcept;
  /// int |g''| / (2 pi)^2, so that |f(x)| <= M2 / x^2.
  double M2() const noexcept;
  /// int_{-1}^{1} g
  double g_mass_unit_interval() const noexcept;
  /// int (1 - sin(2 pi x)/(2 pi x)) f(x) dx = g(0) - (1/2) int_{-1}^{1} g.
  double density_reference() const noexcept;

 private:
  KernelShape shape_;
  double lambda_;
};

struct PeriodizedValue {
  double value = 0;
  double tail_bound = 0;  // zero for the dual route
};

/// F(x; n) = sum_k f((n-1) log q / (2 pi) (x + 2 pi k / log q)) evaluated as
/// the finite dual sum (1/N)[g(0) + 2 sum_{1 <= m <= lambda N} g(m/N) cos(m x log q)]
/// with N = n - 1.
double periodize(const TestKernel& k, unsigned q, unsigned n, double x);

/// The same quantity by direct summation of the k-series, truncated once the
/// certified tail sum_{|k| > K} M2 / (N (|k| - 1/2))^2 drops below tol.
PeriodizedValue periodize_series(const TestKernel& k, unsigned q, unsigned n, double x, double tol = 1e-12);

}  // namespace ffz

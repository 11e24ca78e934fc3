#include "ffz/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ffz {

namespace {
constexpr double pi = std::numbers::pi;
}

TestKernel::TestKernel(KernelShape shape, double lambda) : shape_(shape), lambda_(lambda) {
  if (!(lambda > 0) || !std::isfinite(lambda)) throw std::invalid_argument("TestKernel: lambda must be positive");
}

TestKernel TestKernel::parse(const std::string& shape, double lambda) {
  if (shape == "triangle") return TestKernel(KernelShape::Triangle, lambda);
  if (shape == "raised-cosine" || shape == "cosine") return TestKernel(KernelShape::RaisedCosine, lambda);
  throw std::invalid_argument("unknown kernel shape: " + shape);
}

std::string TestKernel::name() const { return shape_ == KernelShape::Triangle ? "triangle" : "raised-cosine"; }

double TestKernel::g(double xi) const noexcept {
  const double a = std::fabs(xi);
  if (a >= lambda_) return 0;
  if (shape_ == KernelShape::Triangle) return 1 - a / lambda_;
  return 0.5 * (1 + std::cos(pi * a / lambda_));
}

double TestKernel::f(double x) const noexcept {
  const double l = lambda_;
  if (shape_ == KernelShape::Triangle) {
    const double y = pi * l * x;
    if (std::fabs(y) < 1e-8) return l * (1 - y * y / 3);
    const double s = std::sin(y) / y;
    return l * s * s;
  }
  // sin(2 pi l x) / (2 pi x (1 - 4 l^2 x^2)), with removable singularities
  const double den = 1 - 4 * l * l * x * x;
  if (std::fabs(x) < 1e-9) return l;
  if (std::fabs(den) < 1e-9) return l / 2;
  return std::sin(2 * pi * l * x) / (2 * pi * x * den);
}

double TestKernel::M0() const noexcept { return lambda_; }

double TestKernel::M2() const noexcept {
  // int |g''|: triangle 4 / lambda (point masses), raised cosine 2 pi / lambda
  const double total = shape_ == KernelShape::Triangle ? 4 / lambda_ : 2 * pi / lambda_;
  return total / (4 * pi * pi);
}

double TestKernel::g_mass_unit_interval() const noexcept {
  const double l = lambda_;
  if (l <= 1) return l;  // both shapes have total mass lambda
  if (shape_ == KernelShape::Triangle) return 2 - 1 / l;
  return 1 + (l / pi) * std::sin(pi / l);
}

double TestKernel::density_reference() const noexcept { return g(0) - 0.5 * g_mass_unit_interval(); }

double periodize(const TestKernel& k, unsigned q, unsigned n, double x) {
  if (n < 2) throw std::invalid_argument("periodize: n must be >= 2");
  const double N = n - 1.0;
  const double theta = x * std::log(static_cast<double>(q));
  const long mmax = static_cast<long>(std::floor(k.lambda() * N));
  double s = k.g(0);
  for (long m = 1; m <= mmax; ++m) s += 2 * k.g(m / N) * std::cos(m * theta);
  return s / N;
}

PeriodizedValue periodize_series(const TestKernel& k, unsigned q, unsigned n, double x, double tol) {
  if (n < 2) throw std::invalid_argument("periodize_series: n must be >= 2");
  const double N = n - 1.0;
  const double L = std::log(static_cast<double>(q));
  // reduce to t in [-1/2, 1/2): argument of f is N (t + k)
  double t = x * L / (2 * pi);
  t -= std::floor(t + 0.5);
  // tail for |k| > K: sum M2 / (N (|k| - 1/2))^2 <= 2 M2 / (N^2 (K - 1/2))
  long K = 1;
  while (2 * k.M2() / (N * N * (K - 0.5)) > tol) K *= 2;
  double s = 0;
  for (long j = -K; j <= K; ++j) s += k.f(N * (t + j));
  return {s, 2 * k.M2() / (N * N * (K - 0.5))};
}

}  // namespace ffz

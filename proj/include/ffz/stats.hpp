#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ffz/family.hpp"
#include "ffz/kernel.hpp"
#include "ffz/poly.hpp"

namespace ffz {

using cld = std::complex<long double>;

inline constexpr double kDefaultDenominatorMargin = 0.05;
inline constexpr long double kDenominatorFloor = 1e-12L;

/// K numerator shifts followed by Q denominator shifts.
struct RatioSpec {
  int K = 0;
  int Q = 0;
  std::vector<std::complex<double>> s;
  double margin = kDefaultDenominatorMargin;

  /// All K + Q shifts equal to s0.
  static RatioSpec uniform(int K, int Q, std::complex<double> s0);

  /// x_u = -q^{1/2 - s_u}, u < K.
  cld x(int u, std::uint32_t q) const;
  /// y_v = q^{1/2 - s_{K+v}}, v < Q.
  cld y(int v, std::uint32_t q) const;
  /// Shape checks and Re s_{K+v} >= 1/2 + margin.
  void validate() const;
};

/// q^{-s}.
cld u_of(std::complex<double> s, std::uint32_t q);

enum class Normalization { Sum, Average };

/// sum_d prod L(s_i) / prod L(s_{K+j}) over the table, divided by q^n for
/// Average.  Throws if some denominator has magnitude below 1e-12.
cld ratio_average_empirical(const FamilyTable& t, const RatioSpec& spec, Normalization norm = Normalization::Average,
                            unsigned workers = 1);

struct C5Estimate {
  std::vector<unsigned> ns;
  std::vector<long double> values;
  std::vector<long double> differences;  // |values[k+1] - values[k]|
};

/// q^{-n} sum_d prod_{i<K} A_d(N_i) prod_{j<Q} B_d(N_{K+j}) with A_d(N) =
/// ahat_N q^{-N/2} and B_d the normalized coefficients of 1/Lambda; an
/// eps_i = -1 slot carries the factor (-1)^c w(d).  Odd n only.
long double c5_single(const FamilyTable& t, const std::vector<int>& eps, const std::vector<unsigned>& N, int K,
                      unsigned workers = 1);
C5Estimate estimate_C5(const std::vector<const FamilyTable*>& tables, const std::vector<int>& eps,
                       const std::vector<unsigned>& N, int K, unsigned workers = 1);

struct MoebiusResult {
  long double value = 0;
  std::string exact_sum;  // sum_d b_d(R) as a decimal integer
  std::uint64_t family_size = 0;
};

/// (1/|P_n|) sum_d q^{-R/2} b_d(R).
MoebiusResult moebius_cancellation(const FamilyTable& t, unsigned R, unsigned workers = 1);

enum class DensityRoute { Zeros, Trace };

struct DensityResult {
  long double empirical = 0;
  double reference = 0;
};

/// (1/|P_n|) sum_d sum_j F(theta_j / log q; n), either from the zero angles
/// or from the power sums q^{-m/2} p_m(d) = sum_j e^{i m theta_j}.
DensityResult one_level_density(const FamilyTable& t, const TestKernel& k, DensityRoute route = DensityRoute::Zeros,
                                unsigned workers = 1);

struct AvgCharResult {
  std::vector<unsigned> ns;
  std::vector<long double> empirical;
  long double model = 0;
  bool square = false;
};

/// q^{-n} sum_d chi_d(r) for each table, and the square-weight model.
AvgCharResult average_char(const Poly& r, const std::vector<const FamilyTable*>& tables, unsigned workers = 1);
long double average_char_model(const Poly& r, bool* is_square = nullptr);

/// Deterministic chunked reduction over members: chunk boundaries depend only
/// on the table size, partial sums are combined in chunk order.
inline constexpr std::size_t kReduceChunk = 4096;

}  // namespace ffz

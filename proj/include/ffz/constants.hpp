#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace ffz {

struct ConstantsInput {
  int K = 0;
  int Q = 0;
  mpq_class C0 = 1, C1 = 2, C1p = 1, C2 = 12, C3 = 13;

  /// (C0, C1, C1', C2, C3) = (1, 2, 1, 12, 13).
  static ConstantsInput quadratic(int K, int Q);
};

struct ConstantsLedger {
  ConstantsInput in;
  mpq_class C6, C7, C8, C9, delta, omega;
  /// q_min = 2^12 (2 C1)^{1/(2 delta)}.  When 2 C1 is a power of two the
  /// threshold is 2^{q_min_log2_exact}; q_min_log2 is always filled.
  std::optional<mpq_class> q_min_log2_exact;
  double q_min_log2 = 0;

  std::string to_string() const;
};

ConstantsLedger theorem_constants(const ConstantsInput& in);

/// max(576, 2016 (K + Q))^{-1}.
mpq_class quadratic_delta_closed_form(int K, int Q);

}  // namespace ffz

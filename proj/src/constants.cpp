#include "ffz/constants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ffz {

ConstantsInput ConstantsInput::quadratic(int K, int Q) {
  ConstantsInput in;
  in.K = K;
  in.Q = Q;
  return in;
}

ConstantsLedger theorem_constants(const ConstantsInput& in) {
  if (in.K < 0 || in.Q < 0) throw std::invalid_argument("theorem_constants: K, Q must be >= 0");
  for (const mpq_class* c : {&in.C0, &in.C1, &in.C1p, &in.C2, &in.C3})
    if (*c < 1) throw std::invalid_argument("theorem_constants: C0..C3 must be >= 1");
  ConstantsLedger L;
  L.in = in;
  const mpq_class K = in.K, Q = in.Q;
  const mpq_class& C0 = in.C0;
  const mpq_class& C2 = in.C2;
  const mpq_class& C3 = in.C3;
  L.C6 = 2 * C0 * std::max(mpq_class(1), mpq_class((K + Q) * C0));
  L.C7 = K * C0 * C2 + L.C6 * C0 * C2;
  L.C8 = K * (C0 * C3 + 2 * Q) + L.C6 * (C0 * C3 + 4 * Q + 2);
  L.C9 = L.C8 / (6 * L.C7) + (C0 * C3 + 4 * Q + 2) / (2 * C0 * C2);
  L.delta = 1 / (24 * std::max(L.C7, mpq_class(7 * (K + Q) * C0 * C0 * C0 * C2)));
  L.omega = 1 / (7 * C0 * C0 * C2);
  const mpq_class base = 2 * in.C1;
  const mpq_class expo = 1 / (2 * L.delta);
  L.q_min_log2 = 12 + expo.get_d() * std::log2(base.get_d());
  if (base.get_den() == 1) {
    mpz_class b = base.get_num();
    unsigned long bits = mpz_sizeinbase(b.get_mpz_t(), 2) - 1;
    if (b == mpz_class(1) << bits) L.q_min_log2_exact = 12 + expo * static_cast<long>(bits);
  }
  return L;
}

mpq_class quadratic_delta_closed_form(int K, int Q) {
  return mpq_class(1, std::max(576, 2016 * (K + Q)));
}

std::string ConstantsLedger::to_string() const {
  std::ostringstream os;
  os << "K = " << in.K << ", Q = " << in.Q << "\n";
  os << "C0 = " << in.C0 << ", C1 = " << in.C1 << ", C1' = " << in.C1p << ", C2 = " << in.C2 << ", C3 = " << in.C3 << "\n";
  os << "C6 = " << C6 << "\nC7 = " << C7 << "\nC8 = " << C8 << "\nC9 = " << C9 << "\n";
  os << "delta = " << delta << "\nomega = " << omega << "\n";
  if (q_min_log2_exact)
    os << "q_min = 2^" << *q_min_log2_exact << "\n";
  else
    os << "q_min = 2^" << q_min_log2 << " (approx)\n";
  return os.str();
}

}  // namespace ffz

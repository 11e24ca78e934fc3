#pragma once

#include "ffz/poly.hpp"

namespace ffz {

/// Jacobi symbol (r / f) over F_q[t] for monic f and odd q.
/// Euclid-style reduction with quadratic reciprocity; 0 iff gcd(r, f) != 1.
int jacobi_symbol(const Poly& r, const Poly& f);

/// Same symbol on raw low-first coefficient arrays; no validation.
/// deg_r may be negative for r = 0.  Degrees must be < 64.
int jacobi_raw(const Field& F, const Elem* r, int deg_r, const Elem* f, int deg_f) noexcept;

/// Euler criterion r^{(|f|-1)/2} mod f mapped to {-1, 0, 1}.  Meaningful as
/// the Jacobi symbol only when f is irreducible.
int euler_criterion(const Poly& r, const Poly& f);

}  // namespace ffz

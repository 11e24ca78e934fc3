#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "ffz/family.hpp"
#include "ffz/stats.hpp"

namespace ffz {

enum class CoefficientSource { Model, Empirical };

CoefficientSource parse_source(const std::string& s);
std::string source_name(CoefficientSource s);

struct RecipeResult {
  cld MT;
  cld RR_L;             // |P_n| MT / C4
  long double tail = 0;  // truncation estimate
  unsigned truncation = 0;
};

/// Euler-product model of the coefficient series at the point (x, y):
///   C4 prod_P [ E_d chi-average of prod_i (1 - chi(P) X_i)^{-1} prod_j (1 - chi(P) Y_j) ]
/// with X_i = x_i^{deg P}, Y_j = y_j^{deg P}, evaluated as zeta factors times a
/// rapidly convergent residual product.  K + Q <= 2.
cld recipe_model_series(std::uint32_t q, const std::vector<cld>& x, const std::vector<cld>& y, long double* tail = nullptr);

/// MT(s; n) = sum_eps F(eps, s) prod_{eps_i = -1} (-1)^c q^{c (1/2 - s_i)} with
/// c = n - 1 (odd n).  Model: the series above with x_i = q^{-s_i} (eps = +1)
/// or q^{s_i - 1} (eps = -1) and y_j = q^{-s_j}.  Empirical: coefficients
/// estimated on `table` (the largest available n), each N_i capped at
/// min(N_max, (n_table - 1) / 2).  N_max = 0 means 4n.
RecipeResult recipe_main_term(std::uint32_t q, unsigned n, const RatioSpec& spec, CoefficientSource src,
                              unsigned N_max = 0, const FamilyTable* table = nullptr, long double tol = 1e-9L,
                              unsigned workers = 1);

}  // namespace ffz

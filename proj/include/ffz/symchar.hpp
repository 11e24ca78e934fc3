#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "ffz/laurent.hpp"
#include "ffz/partition.hpp"

namespace ffz {

enum class Group { Sp, O };

Group parse_group(const std::string& s);

/// Complete homogeneous symmetric polynomial h_k(x_1, ..., x_m).
LaurentPoly complete_homogeneous(int k, int m);
/// h_k over the 2m letters x_1^{+-1}, ..., x_m^{+-1}.
LaurentPoly complete_homogeneous_pm(int k, int m);

/// Schur polynomial s_lambda(x_1, ..., x_m) by the Jacobi-Trudi determinant.
LaurentPoly schur_poly(const Partition& lambda, int m);

/// Character of the irreducible Sp(2m) representation with highest weight
/// lambda, in x_1^{+-1}, ..., x_m^{+-1}.  Computed by the symplectic
/// Jacobi-Trudi determinant; zero when l(lambda) > m.  Results are memoized.
const LaurentPoly& sp_character(const Partition& lambda, int m);

/// Same character from the Weyl determinant ratio, evaluated exactly at a
/// point with no coordinate equal to +-1 and distinct x_i + 1/x_i.
mpq_class sp_character_weyl(const Partition& lambda, const std::vector<mpq_class>& x);

/// prod_{i<j} (x_i - x_j)(x_i x_j - 1) prod_i (1 - x_i^2).
LaurentPoly weyl_denominator(int K);

/// Stable skew multiplicity in x_1..x_K for conductor degree c.
LaurentPoly skew_multiplicity(Group g, const Partition& rho, int K, int c, int i = 0);

using Decomposition = std::map<Partition, LaurentPoly>;

/// Writes a W-invariant Laurent expansion, keyed by z-weights (length m),
/// with coefficients in other variables, as a sum of Sp(2m) characters.
Decomposition peel_sp_characters(std::map<Exponent, LaurentPoly> expansion, int m, int coeff_arity);

/// prod_{i<=K} det(1 + x_i A) over Sp(2m) decomposed into characters of A.
Decomposition decompose_wedge_oracle(int K, int m, int D);

/// prod_{i<=Q} det(1 - y_i A)^{-1} over Sp(2m), truncated at total y-degree D,
/// decomposed into characters of A.  When m >= Q the decomposition is also
/// computed at rank m + 1 and must agree.
Decomposition decompose_sym_truncated(int Q, int m, int D);

/// N_rho(x; c; i) = M0_rho(x; c; i) D_K(x) with exponents affine in c.
/// Valid for every even c >= 2 l(rho).
ParamLaurentPoly stable_numerator_param(Group g, const Partition& rho, int K, int i = 0);

/// Pieces N^eps_rho keyed by eps in {+1, -1}^K.  Every sign pattern appears
/// (possibly as the zero polynomial).
std::map<std::vector<int>, LaurentPoly> stable_numerators(Group g, const Partition& rho, int K, int i = 0);

/// Sum_eps N^eps prod x_u^{(1 - eps_u) c / 2} compared with M0_rho D_K at c.
bool check_stable_reconstruction(Group g, const Partition& rho, int K, int i, int c);

struct BoundReport {
  std::vector<double> value;  // |M0(x)|
  std::vector<double> bound;
  std::vector<bool> pass;
  bool all_pass() const;
};

BoundReport check_multiplicity_bound(Group g, const Partition& rho, int K, int c, int i,
                                     const std::vector<std::vector<std::complex<double>>>& points);

std::string to_string(const Decomposition& d, const std::string& var = "x");

}  // namespace ffz

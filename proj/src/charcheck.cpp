#include "ffz/charcheck.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "ffz/symchar.hpp"

namespace ffz {

bool CharCheckReport::all_pass() const {
  for (const auto& l : lines)
    if (!l.pass) return false;
  return true;
}

std::string CharCheckReport::to_string() const {
  std::ostringstream os;
  os << "charcheck K=" << K << " m=" << m << "\n";
  for (const auto& l : lines) os << (l.pass ? "PASS " : "FAIL ") << l.suite << ": " << l.detail << "\n";
  os << (all_pass() ? "all pass" : "FAILURES") << "\n";
  return os.str();
}

CharCheckReport run_charcheck(int K, int m, unsigned long seed) {
  if (K < 0 || K > kCharCheckMaxK) throw std::invalid_argument("charcheck: unsupported K = " + std::to_string(K));
  if (m < 1 || m > kCharCheckMaxRank) throw std::invalid_argument("charcheck: rank m must lie in 1..4");
  CharCheckReport rep;
  rep.K = K;
  rep.m = m;
  const int c = 2 * m;

  // skew Howe duality
  {
    const Decomposition oracle = decompose_wedge_oracle(K, m, c);
    int bad = 0, checked = 0;
    for (const Partition& rho : partitions_in_box(m, K)) {
      auto it = oracle.find(rho);
      const LaurentPoly want = it == oracle.end() ? LaurentPoly(K) : it->second;
      if (!(skew_multiplicity(Group::Sp, rho, K, c) == want)) ++bad;
      ++checked;
    }
    for (const auto& [rho, mult] : oracle)
      if (rho.length() > m || (rho.length() > 0 && rho[1] > K) || !mult.has_nonnegative_integer_coeffs()) ++bad;
    rep.lines.push_back({"skew-howe", bad == 0, std::to_string(checked) + " partitions, " + std::to_string(bad) + " mismatches"});

    mpz_class total = 0;
    for (const auto& [rho, mult] : oracle) total += mpz_class(mult.at_ones() * sp_character(rho, m).at_ones());
    const mpz_class want = mpz_class(1) << (2 * m * K);
    rep.lines.push_back({"dimension", total == want, total.get_str() + " = 2^" + std::to_string(2 * m * K)});
  }

  if (K == 1 && m == 2) {
    auto x = [](int p) { return LaurentPoly::variable(1, 0, p); };
    const LaurentPoly one = LaurentPoly::constant(1, 1);
    bool ok = skew_multiplicity(Group::Sp, Partition{}, 1, 4) == one + x(2) + x(4) &&
              skew_multiplicity(Group::Sp, Partition{1}, 1, 4) == x(1) + x(3) &&
              skew_multiplicity(Group::Sp, Partition{1, 1}, 1, 4) == x(2);
    rep.lines.push_back({"known-values", ok, "m0: {} -> 1+x^2+x^4, (1) -> x+x^3, (1,1) -> x^2"});
  }

  // the two character formulas
  {
    std::vector<mpq_class> pt;
    for (int j = 0; j < m; ++j) pt.emplace_back(j + 2, j + 3);
    int bad = 0, checked = 0;
    for (const Partition& lam : partitions_up_to(4)) {
      if (lam.length() > m) continue;
      const LaurentPoly& ch = sp_character(lam, m);
      if (!ch.has_nonnegative_integer_coeffs() || ch.eval(pt) != sp_character_weyl(lam, pt)) ++bad;
      ++checked;
    }
    rep.lines.push_back({"sp-character", bad == 0, std::to_string(checked) + " characters, " + std::to_string(bad) + " failures"});
  }

  // multiplicity bound at seeded points with 1/3 <= |x| <= 3
  if (K > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> lg(-1, 1), ang(-3.14159265358979, 3.14159265358979);
    std::vector<std::vector<std::complex<double>>> pts;
    for (int k = 0; k < 20; ++k) {
      std::vector<std::complex<double>> p;
      for (int i = 0; i < K; ++i) p.push_back(std::polar(std::pow(3.0, lg(rng)), ang(rng)));
      pts.push_back(p);
    }
    int bad = 0, checked = 0;
    for (const Partition& rho : partitions_in_box(m, K)) {
      const BoundReport b = check_multiplicity_bound(Group::Sp, rho, K, c, 0, pts);
      for (bool ok : b.pass) bad += !ok;
      checked += static_cast<int>(b.pass.size());
    }
    rep.lines.push_back({"multiplicity-bound", bad == 0, std::to_string(checked) + " evaluations, " + std::to_string(bad) + " violations"});
  }

  // stable numerators
  {
    int bad = 0, checked = 0;
    for (const Partition& rho : partitions_up_to(4)) {
      if (rho.length() > 0 && rho[1] > K) continue;
      if (K == 0 && rho.size() > 0) continue;
      for (int cc = 2 * rho.length() + 2; cc <= 2 * rho.length() + 6; cc += 2) {
        if (!check_stable_reconstruction(Group::Sp, rho, K, 0, cc)) ++bad;
        ++checked;
      }
    }
    rep.lines.push_back({"stable-numerators", bad == 0, std::to_string(checked) + " reconstructions, " + std::to_string(bad) + " failures"});
  }
  return rep;
}

}  // namespace ffz

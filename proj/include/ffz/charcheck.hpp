#pragma once

#include <string>
#include <vector>

namespace ffz {

struct CheckLine {
  std::string suite;
  bool pass = true;
  std::string detail;
};

struct CharCheckReport {
  int K = 0;
  int m = 0;
  std::vector<CheckLine> lines;
  bool all_pass() const;
  std::string to_string() const;
};

inline constexpr int kCharCheckMaxK = 2;
inline constexpr int kCharCheckMaxRank = 4;

/// Identity suite for the symplectic combinatorics at K numerator variables
/// and rank m: skew Howe duality against the brute-force decomposition, the
/// dimension count, the two character formulas, the multiplicity bound and
/// the stable-numerator reconstruction.
CharCheckReport run_charcheck(int K, int m, unsigned long seed = 1);

}  // namespace ffz

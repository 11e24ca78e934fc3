#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ffz {

inline constexpr const char* kCsvHeader = "q,n,stat,value_re,value_im,reference_re,reference_im,deviation,meta";

struct StatReport {
  std::uint32_t q = 0;
  unsigned n = 0;
  std::string stat;
  std::complex<double> value;
  std::complex<double> reference;
  double deviation = 0;
  double wall_time = 0;  // seconds; JSON only, so CSV stays reproducible
  std::vector<std::pair<std::string, std::string>> meta;

  void set_deviation() { deviation = std::abs(value - reference); }
  void add_meta(const std::string& key, const std::string& value);
  std::string meta_string() const;  // k=v;k=v
};

std::string to_csv(const std::vector<StatReport>& rows);
std::string to_json(const std::vector<StatReport>& rows, const std::string& config = "");
/// Parses CSV produced by to_csv; deviation is recomputed from the values.
std::vector<StatReport> from_csv(const std::string& text);

/// Static SVG: real parts of value and reference against n, one series per stat.
std::string to_svg(const std::vector<StatReport>& rows, const std::string& title);

std::string format_double(double v);

/// Everything a CLI invocation depends on.  to_flags / from_flags round-trip.
struct RunConfig {
  std::string command;  // "lfun", "stat ratios", ...
  std::uint32_t q = 3;
  std::vector<unsigned> ns;
  int K = 0;
  int Q = 0;
  std::vector<std::complex<double>> s;
  std::string kernel = "triangle";
  double lambda = 1.0;
  unsigned R = 0;
  std::vector<unsigned> N;
  std::vector<int> eps;
  std::string r;  // low-first coefficient list of a polynomial
  std::string method = "auto";
  std::string source = "model";
  std::string route = "zeros";
  std::string cache;
  std::string out;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  unsigned nmax = 0;
  double margin = 0.05;
  bool build = false;

  std::string to_flags() const;
  static RunConfig from_flags(const std::string& flags);
  bool operator==(const RunConfig&) const = default;
};

std::vector<unsigned> parse_unsigned_list(const std::string& s);
std::vector<int> parse_int_list(const std::string& s);
/// "a" or "a:b" (real and imaginary parts), comma separated.
std::vector<std::complex<double>> parse_complex_list(const std::string& s);
std::string complex_list_string(const std::vector<std::complex<double>>& v);

}  // namespace ffz

#include "ffz/cache.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace ffz {

namespace {

template <class T>
T parse_int(std::string_view s, std::size_t line) {
  T v{};
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw std::runtime_error("cache: bad integer '" + std::string(s) + "' on line " + std::to_string(line));
  return v;
}

template <class T, class Out>
void parse_list(std::string_view s, std::size_t expected, std::size_t line, Out& out) {
  std::size_t count = 0;
  while (true) {
    std::size_t comma = s.find(',');
    out.push_back(parse_int<T>(s.substr(0, comma), line));
    ++count;
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  if (count != expected) throw std::runtime_error("cache: wrong field count on line " + std::to_string(line));
}

}  // namespace

std::string cache_to_string(const FamilyTable& t) {
  std::string out = "FFZLFC1;q=" + std::to_string(t.q) + ";n=" + std::to_string(t.n) + "\n";
  out.reserve(out.size() + t.size() * (t.n * 6 + 2));
  char buf[32];
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto* d = t.digits_of(i);
    const auto* a = t.lhat_of(i);
    for (unsigned k = 0; k < t.n; ++k) {
      if (k) out += ',';
      auto r = std::to_chars(buf, buf + sizeof buf, d[k]);
      out.append(buf, r.ptr);
    }
    out += ';';
    for (unsigned k = 0; k < t.n; ++k) {
      if (k) out += ',';
      auto r = std::to_chars(buf, buf + sizeof buf, a[k]);
      out.append(buf, r.ptr);
    }
    out += '\n';
  }
  return out;
}

void write_cache(const std::string& path, const FamilyTable& t) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cache: cannot write " + path);
  os << cache_to_string(t);
  if (!os) throw std::runtime_error("cache: write failed for " + path);
}

FamilyTable parse_cache(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw std::runtime_error("cache: empty file");
  FamilyTable t;
  {
    const std::string prefix = "FFZLFC1;q=";
    if (line.rfind(prefix, 0) != 0) throw std::runtime_error("cache: bad header");
    auto semi = line.find(";n=", prefix.size());
    if (semi == std::string::npos) throw std::runtime_error("cache: bad header");
    t.q = parse_int<std::uint32_t>(std::string_view(line).substr(prefix.size(), semi - prefix.size()), 1);
    t.n = parse_int<unsigned>(std::string_view(line).substr(semi + 3), 1);
    if (t.n == 0) throw std::runtime_error("cache: n must be positive");
  }
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto semi = line.find(';');
    if (semi == std::string::npos) throw std::runtime_error("cache: missing ';' on line " + std::to_string(lineno));
    std::string_view sv(line);
    parse_list<std::uint32_t>(sv.substr(0, semi), t.n, lineno, t.digits);
    parse_list<std::int64_t>(sv.substr(semi + 1), t.n, lineno, t.lhat);
  }
  return t;
}

FamilyTable read_cache(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("missing cache: " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return parse_cache(ss.str());
}

std::string default_cache_path(std::uint32_t q, unsigned n) {
  const char* dir = std::getenv("FFZ_CACHE_DIR");
  std::filesystem::path base = dir && *dir ? std::filesystem::path(dir) : std::filesystem::path(".");
  return (base / ("ffz_q" + std::to_string(q) + "_n" + std::to_string(n) + ".lfc")).string();
}

}  // namespace ffz

#include "ffz/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ffz {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void StatReport::add_meta(const std::string& key, const std::string& value) {
  auto clean = [](std::string s) {
    for (char& ch : s)
      if (ch == ',' || ch == ';' || ch == '\n' || ch == '\r') ch = '|';
    return s;
  };
  meta.emplace_back(clean(key), clean(value));
}

std::string StatReport::meta_string() const {
  std::string out;
  for (const auto& [k, v] : meta) {
    if (!out.empty()) out += ';';
    out += k + "=" + v;
  }
  return out;
}

std::string to_csv(const std::vector<StatReport>& rows) {
  std::string out = std::string(kCsvHeader) + "\n";
  for (const auto& r : rows) {
    out += std::to_string(r.q) + "," + std::to_string(r.n) + "," + r.stat + "," + format_double(r.value.real()) + "," +
           format_double(r.value.imag()) + "," + format_double(r.reference.real()) + "," +
           format_double(r.reference.imag()) + "," + format_double(r.deviation) + "," + r.meta_string() + "\n";
  }
  return out;
}

std::string to_json(const std::vector<StatReport>& rows, const std::string& config) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["stat"] = r.stat;
    j["value_re"] = r.value.real();
    j["value_im"] = r.value.imag();
    j["reference_re"] = r.reference.real();
    j["reference_im"] = r.reference.imag();
    j["deviation"] = r.deviation;
    j["wall_time"] = r.wall_time;
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.meta) m[k] = v;
    j["meta"] = m;
    arr.push_back(j);
  }
  nlohmann::ordered_json doc;
  if (!config.empty()) doc["config"] = config;
  doc["rows"] = arr;
  return doc.dump(2) + "\n";
}

std::vector<StatReport> from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("from_csv: bad header");
  std::vector<StatReport> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::size_t start = 0;
    for (int k = 0; k < 8; ++k) {
      std::size_t pos = line.find(',', start);
      if (pos == std::string::npos) throw std::invalid_argument("from_csv: short row: " + line);
      f.push_back(line.substr(start, pos - start));
      start = pos + 1;
    }
    f.push_back(line.substr(start));
    StatReport r;
    r.q = static_cast<std::uint32_t>(std::stoul(f[0]));
    r.n = static_cast<unsigned>(std::stoul(f[1]));
    r.stat = f[2];
    r.value = {std::stod(f[3]), std::stod(f[4])};
    r.reference = {std::stod(f[5]), std::stod(f[6])};
    std::istringstream ms(f[8]);
    std::string kv;
    while (std::getline(ms, kv, ';')) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("from_csv: bad meta entry: " + kv);
      r.meta.emplace_back(kv.substr(0, eq), kv.substr(eq + 1));
    }
    r.set_deviation();
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string to_svg(const std::vector<StatReport>& rows, const std::string& title) {
  const double W = 640, H = 400, pad = 50;
  double nmin = 1e300, nmax = -1e300, vmin = 1e300, vmax = -1e300;
  for (const auto& r : rows) {
    nmin = std::min(nmin, double(r.n));
    nmax = std::max(nmax, double(r.n));
    for (double v : {r.value.real(), r.reference.real()}) {
      if (!std::isfinite(v)) continue;
      vmin = std::min(vmin, v);
      vmax = std::max(vmax, v);
    }
  }
  if (rows.empty()) nmin = nmax = vmin = vmax = 0;
  if (nmax == nmin) nmax = nmin + 1;
  if (vmax == vmin) {
    vmax += 0.5;
    vmin -= 0.5;
  }
  auto X = [&](double n) { return pad + (n - nmin) / (nmax - nmin) * (W - 2 * pad); };
  auto Y = [&](double v) { return H - pad - (v - vmin) / (vmax - vmin) * (H - 2 * pad); };

  std::map<std::string, std::vector<const StatReport*>> series;
  for (const auto& r : rows) series[r.stat].push_back(&r);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << pad << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";
  os << "<line x1=\"" << pad << "\" y1=\"" << H - pad << "\" x2=\"" << W - pad << "\" y2=\"" << H - pad
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << pad << "\" y1=\"" << pad << "\" x2=\"" << pad << "\" y2=\"" << H - pad << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << 4 << "\" y=\"" << Y(vmax) << "\" font-size=\"10\">" << format_double(vmax) << "</text>\n";
  os << "<text x=\"" << 4 << "\" y=\"" << Y(vmin) << "\" font-size=\"10\">" << format_double(vmin) << "</text>\n";
  const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
  int ci = 0;
  for (const auto& [name, pts] : series) {
    const char* col = colors[ci++ % 4];
    std::ostringstream val, ref;
    for (const StatReport* p : pts) {
      val << X(p->n) << "," << Y(p->value.real()) << " ";
      ref << X(p->n) << "," << Y(p->reference.real()) << " ";
      os << "<circle cx=\"" << X(p->n) << "\" cy=\"" << Y(p->value.real()) << "\" r=\"3\" fill=\"" << col << "\"/>\n";
      os << "<text x=\"" << X(p->n) << "\" y=\"" << H - pad + 16 << "\" font-size=\"10\">" << p->n << "</text>\n";
    }
    os << "<polyline fill=\"none\" stroke=\"" << col << "\" points=\"" << val.str() << "\"/>\n";
    os << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-dasharray=\"4 3\" points=\"" << ref.str() << "\"/>\n";
    os << "<text x=\"" << W - pad - 120 << "\" y=\"" << pad + 14 * ci << "\" font-size=\"11\" fill=\"" << col << "\">"
       << name << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<unsigned> parse_unsigned_list(const std::string& s) {
  std::vector<unsigned> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("expected a list of nonnegative integers: " + s);
    out.push_back(static_cast<unsigned>(std::stoul(tok)));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("expected a list of integers: " + s);
    out.push_back(v);
  }
  return out;
}

std::vector<std::complex<double>> parse_complex_list(const std::string& s) {
  std::vector<std::complex<double>> out;
  std::istringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    auto colon = tok.find(':');
    std::size_t used = 0;
    double re = std::stod(tok.substr(0, colon), &used);
    if (used != (colon == std::string::npos ? tok.size() : colon)) throw std::invalid_argument("bad shift: " + tok);
    double im = 0;
    if (colon != std::string::npos) {
      std::string b = tok.substr(colon + 1);
      im = std::stod(b, &used);
      if (used != b.size()) throw std::invalid_argument("bad shift: " + tok);
    }
    out.emplace_back(re, im);
  }
  return out;
}

std::string complex_list_string(const std::vector<std::complex<double>>& v) {
  std::string out;
  for (const auto& z : v) {
    if (!out.empty()) out += ',';
    out += format_double(z.real());
    if (z.imag() != 0) out += ":" + format_double(z.imag());
  }
  return out;
}

namespace {

template <class T>
std::string join(const std::vector<T>& v) {
  std::string out;
  for (const auto& x : v) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

}  // namespace

std::string RunConfig::to_flags() const {
  std::ostringstream os;
  os << command;
  auto opt = [&](const char* name, const std::string& v) {
    if (!v.empty()) os << " --" << name << " " << v;
  };
  opt("q", std::to_string(q));
  opt("n", join(ns));
  opt("K", std::to_string(K));
  opt("Q", std::to_string(Q));
  opt("s", complex_list_string(s));
  opt("kernel", kernel);
  opt("lambda", format_double(lambda));
  opt("R", std::to_string(R));
  opt("N", join(N));
  opt("eps", join(eps));
  opt("r", r);
  opt("method", method);
  opt("source", source);
  opt("route", route);
  opt("cache", cache);
  opt("out", out);
  opt("seed", std::to_string(seed));
  opt("workers", std::to_string(workers));
  opt("nmax", std::to_string(nmax));
  opt("margin", format_double(margin));
  if (build) os << " --build";
  return os.str();
}

RunConfig RunConfig::from_flags(const std::string& flags) {
  std::istringstream in(flags);
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  RunConfig c;
  std::size_t i = 0;
  for (; i < tok.size() && tok[i].rfind("--", 0) != 0; ++i) c.command += (c.command.empty() ? "" : " ") + tok[i];
  for (; i < tok.size(); ++i) {
    const std::string key = tok[i];
    if (key.rfind("--", 0) != 0) throw std::invalid_argument("unexpected token: " + key);
    const std::string name = key.substr(2);
    if (name == "build") {
      c.build = true;
      continue;
    }
    if (i + 1 >= tok.size()) throw std::invalid_argument("missing value for " + key);
    const std::string v = tok[++i];
    if (name == "q") c.q = static_cast<std::uint32_t>(std::stoul(v));
    else if (name == "n") c.ns = parse_unsigned_list(v);
    else if (name == "K") c.K = std::stoi(v);
    else if (name == "Q") c.Q = std::stoi(v);
    else if (name == "s") c.s = parse_complex_list(v);
    else if (name == "kernel") c.kernel = v;
    else if (name == "lambda") c.lambda = std::stod(v);
    else if (name == "R") c.R = static_cast<unsigned>(std::stoul(v));
    else if (name == "N") c.N = parse_unsigned_list(v);
    else if (name == "eps") c.eps = parse_int_list(v);
    else if (name == "r") c.r = v;
    else if (name == "method") c.method = v;
    else if (name == "source") c.source = v;
    else if (name == "route") c.route = v;
    else if (name == "cache") c.cache = v;
    else if (name == "out") c.out = v;
    else if (name == "seed") c.seed = std::stoull(v);
    else if (name == "workers") c.workers = static_cast<unsigned>(std::stoul(v));
    else if (name == "nmax") c.nmax = static_cast<unsigned>(std::stoul(v));
    else if (name == "margin") c.margin = std::stod(v);
    else throw std::invalid_argument("unknown flag: " + key);
  }
  return c;
}

}  // namespace ffz

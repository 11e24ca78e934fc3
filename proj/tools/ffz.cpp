#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <stdexcept>

#include "CLI11.hpp"
#include "ffz/cache.hpp"
#include "ffz/charcheck.hpp"
#include "ffz/constants.hpp"
#include "ffz/enumerate.hpp"
#include "ffz/family.hpp"
#include "ffz/kernel.hpp"
#include "ffz/recipe.hpp"
#include "ffz/report.hpp"
#include "ffz/stats.hpp"
#include "json.hpp"

using namespace ffz;
namespace fs = std::filesystem;

namespace {

double now() { return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count(); }

void require_odd_prime(std::uint32_t q) {
  if (q < 3 || q % 2 == 0 || !is_prime(q)) throw std::invalid_argument("q must be an odd prime (got " + std::to_string(q) + ")");
}

std::string cache_file(const std::string& dir, std::uint32_t q, unsigned n) {
  if (dir.empty()) return default_cache_path(q, n);
  return (fs::path(dir) / ("ffz_q" + std::to_string(q) + "_n" + std::to_string(n) + ".lfc")).string();
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct Options {
  RunConfig cfg;
  std::string n_list, s_list, N_list, eps_list;
  std::string csv, json, svg;
  std::string preset = "quadratic";
  std::string C0 = "1", C1 = "2", C1p = "1", C2 = "12", C3 = "13";
  int m = 2;
  bool count_only = false;
};

class TableStore {
 public:
  explicit TableStore(const Options& o) : o_(o) {}
  const FamilyTable& get(unsigned n) {
    auto it = tables_.find(n);
    if (it != tables_.end()) return *it->second;
    const std::string path = cache_file(o_.cfg.cache, o_.cfg.q, n);
    std::unique_ptr<FamilyTable> t;
    if (fs::exists(path)) {
      t = std::make_unique<FamilyTable>(read_cache(path));
      if (t->q != o_.cfg.q || t->n != n) throw std::invalid_argument("cache " + path + " holds a different family");
    } else if (o_.cfg.build) {
      t = std::make_unique<FamilyTable>(build_family(o_.cfg.q, n, parse_method(o_.cfg.method), o_.cfg.workers));
      if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());
      write_cache(path, *t);
    } else {
      throw std::invalid_argument("missing cache: " + path + " (run lfun or pass --build)");
    }
    return *(tables_[n] = std::move(t));
  }

 private:
  const Options& o_;
  std::map<unsigned, std::unique_ptr<FamilyTable>> tables_;
};

std::string ld(long double v) { return format_double(static_cast<double>(v)); }

int cmd_lfun(Options& o) {
  RunConfig& c = o.cfg;
  require_odd_prime(c.q);
  if (c.ns.size() != 1) throw std::invalid_argument("lfun takes a single --n");
  const unsigned n = c.ns[0];
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const double t0 = now();
  FamilyTable t = build_family(c.q, n, parse_method(c.method), c.workers);
  int cdeg = -1;
  int wplus = 0, wminus = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    LPolynomial L = complete(t.member(i));
    (check_functional_equation(L) > 0 ? wplus : wminus)++;
    if (cdeg >= 0 && L.c != cdeg) throw std::logic_error("lfun: conductor degree varies across the family");
    cdeg = L.c;
  }
  const std::string path = c.out.empty() ? cache_file(c.cache, c.q, n) : c.out;
  if (fs::path(path).has_parent_path()) fs::create_directories(fs::path(path).parent_path());
  write_cache(path, t);
  nlohmann::ordered_json j;
  j["q"] = c.q;
  j["n"] = n;
  j["records"] = t.size();
  j["c"] = cdeg;
  j["completed"] = n % 2 == 0;
  j["w_plus"] = wplus;
  j["w_minus"] = wminus;
  j["method"] = c.method;
  j["path"] = path;
  if (n == 1) j["note"] = "n = 1: family size is q";
  j["wall_time"] = now() - t0;
  std::cout << j.dump() << "\n";
  return 0;
}

void emit(const Options& o, const std::vector<StatReport>& rows, const std::string& title) {
  if (!o.csv.empty()) write_text(o.csv, to_csv(rows));
  if (!o.json.empty()) write_text(o.json, to_json(rows, o.cfg.to_flags()));
  if (!o.svg.empty()) write_text(o.svg, to_svg(rows, title));
  if (o.csv.empty() && o.json.empty()) std::cout << to_csv(rows);
}

StatReport base_row(const Options& o, unsigned n, const std::string& stat) {
  StatReport r;
  r.q = o.cfg.q;
  r.n = n;
  r.stat = stat;
  return r;
}

int cmd_stat(Options& o, const std::string& which) {
  RunConfig& c = o.cfg;
  require_odd_prime(c.q);
  if (c.ns.empty()) throw std::invalid_argument("stat needs --n");
  TableStore store(o);
  std::vector<StatReport> rows;

  if (which == "ratios") {
    RatioSpec spec;
    spec.K = c.K;
    spec.Q = c.Q;
    spec.margin = c.margin;
    spec.s = c.s;
    if (spec.s.size() == 1 && c.K + c.Q > 1) spec.s.assign(static_cast<std::size_t>(c.K + c.Q), c.s[0]);
    if (c.K + c.Q == 0) spec.s.clear();
    spec.validate();
    const CoefficientSource src = parse_source(c.source);
    unsigned nbig = 0;
    for (unsigned n : c.ns) nbig = std::max(nbig, n);
    for (unsigned n : c.ns) {
      const double t0 = now();
      const FamilyTable& t = store.get(n);
      const cld v = ratio_average_empirical(t, spec, Normalization::Average, c.workers);
      const RecipeResult mt = recipe_main_term(c.q, n, spec, src, c.nmax,
                                               src == CoefficientSource::Empirical ? &store.get(nbig) : nullptr,
                                               1e-9L, c.workers);
      StatReport r = base_row(o, n, "ratios");
      r.value = {static_cast<double>(v.real()), static_cast<double>(v.imag())};
      r.reference = {static_cast<double>(mt.MT.real()), static_cast<double>(mt.MT.imag())};
      r.set_deviation();
      r.add_meta("K", std::to_string(c.K));
      r.add_meta("Q", std::to_string(c.Q));
      r.add_meta("s", complex_list_string(spec.s));
      r.add_meta("source", c.source);
      r.add_meta("RR_L_re", ld(mt.RR_L.real()));
      r.add_meta("RR_L_im", ld(mt.RR_L.imag()));
      r.add_meta("tail", ld(mt.tail));
      r.add_meta("truncation", std::to_string(mt.truncation));
      r.add_meta("family_size", std::to_string(t.size()));
      r.add_meta("seed", std::to_string(c.seed));
      r.wall_time = now() - t0;
      rows.push_back(r);
    }
  } else if (which == "moebius") {
    for (unsigned n : c.ns) {
      const double t0 = now();
      const FamilyTable& t = store.get(n);
      const MoebiusResult m = moebius_cancellation(t, c.R, c.workers);
      StatReport r = base_row(o, n, "moebius");
      r.value = {static_cast<double>(m.value), 0};
      r.reference = {c.R == 0 ? 1.0 : 0.0, 0};
      r.set_deviation();
      r.add_meta("R", std::to_string(c.R));
      r.add_meta("exact_sum", m.exact_sum);
      r.add_meta("family_size", std::to_string(m.family_size));
      r.add_meta("seed", std::to_string(c.seed));
      r.wall_time = now() - t0;
      rows.push_back(r);
    }
  } else if (which == "onelevel") {
    const TestKernel k = TestKernel::parse(c.kernel, c.lambda);
    const DensityRoute route = c.route == "trace" ? DensityRoute::Trace : DensityRoute::Zeros;
    if (c.route != "trace" && c.route != "zeros") throw std::invalid_argument("route must be zeros or trace");
    for (unsigned n : c.ns) {
      const double t0 = now();
      const FamilyTable& t = store.get(n);
      const DensityResult d = one_level_density(t, k, route, c.workers);
      StatReport r = base_row(o, n, "onelevel");
      r.value = {static_cast<double>(d.empirical), 0};
      r.reference = {d.reference, 0};
      r.set_deviation();
      r.add_meta("kernel", k.name());
      r.add_meta("lambda", format_double(k.lambda()));
      r.add_meta("route", c.route);
      r.add_meta("family_size", std::to_string(t.size()));
      r.add_meta("seed", std::to_string(c.seed));
      r.wall_time = now() - t0;
      rows.push_back(r);
    }
  } else if (which == "c5") {
    const int K = static_cast<int>(c.eps.size());
    std::vector<const FamilyTable*> ts;
    for (unsigned n : c.ns) ts.push_back(&store.get(n));
    const double t0 = now();
    const C5Estimate e = estimate_C5(ts, c.eps, c.N, K, c.workers);
    for (std::size_t i = 0; i < e.ns.size(); ++i) {
      StatReport r = base_row(o, e.ns[i], "c5");
      r.value = {static_cast<double>(e.values[i]), 0};
      r.reference = {static_cast<double>(e.values.back()), 0};
      r.set_deviation();
      r.add_meta("eps", o.eps_list);
      r.add_meta("N", o.N_list);
      r.add_meta("cauchy_diff", i == 0 ? std::string("nan") : ld(e.differences[i - 1]));
      r.add_meta("reference", "largest n");
      r.wall_time = (now() - t0) / static_cast<double>(e.ns.size());
      rows.push_back(r);
    }
  } else if (which == "avgchar") {
    const Field F = Field::make(c.q);
    std::vector<Elem> coeffs;
    for (unsigned v : parse_unsigned_list(c.r)) coeffs.push_back(F.from_int(v));
    const Poly r(F, coeffs);
    std::vector<const FamilyTable*> ts;
    for (unsigned n : c.ns) ts.push_back(&store.get(n));
    const double t0 = now();
    const AvgCharResult a = average_char(r, ts, c.workers);
    for (std::size_t i = 0; i < a.ns.size(); ++i) {
      StatReport row = base_row(o, a.ns[i], "avgchar");
      row.value = {static_cast<double>(a.empirical[i]), 0};
      row.reference = {static_cast<double>(a.model), 0};
      row.set_deviation();
      row.add_meta("r", r.to_string());
      row.add_meta("square", a.square ? "1" : "0");
      row.add_meta("reference", "model");
      row.wall_time = (now() - t0) / static_cast<double>(a.ns.size());
      rows.push_back(row);
    }
  } else {
    throw std::invalid_argument("unknown statistic: " + which);
  }
  emit(o, rows, "stat " + which + " q=" + std::to_string(c.q));
  return 0;
}

int cmd_charcheck(Options& o) {
  const CharCheckReport rep = run_charcheck(o.cfg.K, o.m, o.cfg.seed);
  std::cout << rep.to_string();
  return rep.all_pass() ? 0 : 1;
}

int cmd_constants(Options& o) {
  ConstantsInput in;
  if (o.preset == "quadratic") {
    in = ConstantsInput::quadratic(o.cfg.K, o.cfg.Q);
  } else if (o.preset == "custom") {
    in.K = o.cfg.K;
    in.Q = o.cfg.Q;
    in.C0 = mpq_class(o.C0);
    in.C1 = mpq_class(o.C1);
    in.C1p = mpq_class(o.C1p);
    in.C2 = mpq_class(o.C2);
    in.C3 = mpq_class(o.C3);
    for (mpq_class* v : {&in.C0, &in.C1, &in.C1p, &in.C2, &in.C3}) v->canonicalize();
  } else {
    throw std::invalid_argument("unknown preset: " + o.preset);
  }
  const ConstantsLedger L = theorem_constants(in);
  std::cout << L.to_string();
  if (o.preset == "quadratic")
    std::cout << "closed form delta = " << quadratic_delta_closed_form(in.K, in.Q) << "\n";
  if (!o.json.empty()) {
    nlohmann::ordered_json j;
    j["K"] = in.K;
    j["Q"] = in.Q;
    j["C6"] = L.C6.get_str();
    j["C7"] = L.C7.get_str();
    j["C8"] = L.C8.get_str();
    j["C9"] = L.C9.get_str();
    j["delta"] = L.delta.get_str();
    j["omega"] = L.omega.get_str();
    j["q_min_log2"] = L.q_min_log2_exact ? L.q_min_log2_exact->get_str() : format_double(L.q_min_log2);
    write_text(o.json, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_enumerate(Options& o) {
  const RunConfig& c = o.cfg;
  if (c.ns.size() != 1) throw std::invalid_argument("enumerate takes a single --n");
  const Field F = Field::make(c.q);
  const unsigned n = c.ns[0];
  if (o.count_only) {
    std::uint64_t count = 0;
    for_each_squarefree_monic(F, n, [&](std::uint64_t, const Elem*) { ++count; });
    std::cout << count << "\n";
    return 0;
  }
  std::string out;
  for_each_squarefree_monic(F, n, [&](std::uint64_t, const Elem* co) {
    for (unsigned k = 0; k < n; ++k) {
      if (k) out += ',';
      out += std::to_string(co[n - 1 - k]);
    }
    out += '\n';
  });
  std::cout << out;
  return 0;
}

void fail(const std::string& type, const std::string& msg, const std::string& cmd) {
  nlohmann::ordered_json j;
  j["error"] = msg;
  j["type"] = type;
  j["command"] = cmd;
  std::cerr << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic L-function family laboratory over F_q[t]"};
  app.require_subcommand(1);
  Options o;
  RunConfig& c = o.cfg;

  auto family_opts = [&](CLI::App* s, bool list) {
    s->add_option("--q", c.q, "odd prime field order")->required();
    s->add_option("--n", o.n_list, list ? "degrees, comma separated" : "degree")->required();
    s->add_option("--workers", c.workers, "worker threads (0 = hardware)");
    s->add_option("--method", c.method, "auto|charsum|pointcount|both");
    s->add_option("--cache", c.cache, "cache directory (default $FFZ_CACHE_DIR)");
  };

  CLI::App* lfun = app.add_subcommand("lfun", "build and cache the Weil polynomials of P_n");
  family_opts(lfun, false);
  lfun->add_option("--out", c.out, "cache file");

  CLI::App* stat = app.add_subcommand("stat", "family statistics");
  stat->require_subcommand(1);
  std::string which;
  for (const char* name : {"ratios", "moebius", "onelevel", "c5", "avgchar"}) {
    CLI::App* s = stat->add_subcommand(name);
    family_opts(s, true);
    s->add_flag("--build", c.build, "build missing caches");
    s->add_option("--csv", o.csv, "CSV output path (- for stdout)");
    s->add_option("--json", o.json, "JSON output path (- for stdout)");
    s->add_option("--svg", o.svg, "SVG plot path");
    s->add_option("--seed", c.seed);
    s->callback([&which, name] { which = name; });
    const std::string nm = name;
    if (nm == "ratios") {
      s->add_option("--K", c.K)->check(CLI::NonNegativeNumber);
      s->add_option("--Q", c.Q)->check(CLI::NonNegativeNumber);
      s->add_option("--s", o.s_list, "shift, or K+Q shifts; re or re:im");
      s->add_option("--margin", c.margin);
      s->add_option("--source", c.source, "model|empirical");
      s->add_option("--nmax", c.nmax);
    } else if (nm == "moebius") {
      s->add_option("--R", c.R);
    } else if (nm == "onelevel") {
      s->add_option("--kernel", c.kernel, "triangle|raised-cosine");
      s->add_option("--lambda", c.lambda);
      s->add_option("--route", c.route, "zeros|trace");
    } else if (nm == "c5") {
      s->add_option("--eps", o.eps_list, "numerator signs, comma separated");
      s->add_option("--N", o.N_list, "indices, K + Q of them")->required();
    } else {
      s->add_option("--r", c.r, "coefficients of r, low degree first")->required();
    }
  }

  CLI::App* cc = app.add_subcommand("charcheck", "symplectic character identity suite");
  cc->add_option("--K", c.K);
  cc->add_option("--m", o.m, "rank");
  cc->add_option("--seed", c.seed);

  CLI::App* cons = app.add_subcommand("constants", "theorem constants");
  cons->add_option("--K", c.K)->check(CLI::NonNegativeNumber);
  cons->add_option("--Q", c.Q)->check(CLI::NonNegativeNumber);
  cons->add_option("--preset", o.preset, "quadratic|custom");
  for (auto [flag, dst] : {std::pair{"--C0", &o.C0}, {"--C1", &o.C1}, {"--C1p", &o.C1p}, {"--C2", &o.C2}, {"--C3", &o.C3}})
    cons->add_option(flag, *dst);
  cons->add_option("--json", o.json);

  CLI::App* en = app.add_subcommand("enumerate", "list P_n as digit tuples a_1..a_n");
  en->add_option("--q", c.q)->required();
  en->add_option("--n", o.n_list)->required();
  en->add_flag("--count", o.count_only);

  CLI11_PARSE(app, argc, argv);

  std::string cmd;
  try {
    if (!o.n_list.empty()) c.ns = parse_unsigned_list(o.n_list);
    if (!o.s_list.empty()) c.s = parse_complex_list(o.s_list);
    if (!o.N_list.empty()) c.N = parse_unsigned_list(o.N_list);
    if (!o.eps_list.empty()) c.eps = parse_int_list(o.eps_list);
    if (lfun->parsed()) {
      c.command = cmd = "lfun";
      return cmd_lfun(o);
    }
    if (stat->parsed()) {
      c.command = cmd = "stat " + which;
      return cmd_stat(o, which);
    }
    if (cc->parsed()) {
      cmd = "charcheck";
      return cmd_charcheck(o);
    }
    if (cons->parsed()) {
      cmd = "constants";
      return cmd_constants(o);
    }
    if (en->parsed()) {
      cmd = "enumerate";
      return cmd_enumerate(o);
    }
  } catch (const std::invalid_argument& e) {
    fail("invalid_argument", e.what(), cmd);
    return 2;
  } catch (const std::logic_error& e) {
    fail("logic_error", e.what(), cmd);
    return 3;
  } catch (const std::exception& e) {
    fail("error", e.what(), cmd);
    return 1;
  }
  return 1;
}

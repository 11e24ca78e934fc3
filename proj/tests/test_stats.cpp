#include <cmath>
#include <random>

#include "doctest.h"
#include "ffz/constants.hpp"
#include "ffz/enumerate.hpp"
#include "ffz/factor.hpp"
#include "ffz/family.hpp"
#include "ffz/jacobi.hpp"
#include "ffz/kernel.hpp"
#include "ffz/lfunc.hpp"
#include "ffz/recipe.hpp"
#include "ffz/report.hpp"
#include "ffz/stats.hpp"
#include "helpers.hpp"
#include "json.hpp"

using namespace ffz;
using testing::P;

namespace {

double simpson(const std::function<double(double)>& h, double a, double b, int n = 20000) {
  const double dx = (b - a) / n;
  double s = h(a) + h(b);
  for (int i = 1; i < n; ++i) s += h(a + i * dx) * (i % 2 ? 4 : 2);
  return s * dx / 3;
}

// number of monic irreducibles of degree e over F_q
long double irreducible_count(unsigned q, unsigned e) {
  long double s = 0;
  for (unsigned d = 1; d <= e; ++d) {
    if (e % d) continue;
    int mu = 1;
    unsigned m = d;
    for (unsigned p = 2; p <= m; ++p)
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) mu = 0;
        mu = -mu;
      }
    s += mu * std::pow(static_cast<long double>(q), static_cast<long double>(e / d));
  }
  return s / e;
}

// prod_P [ kappa * average_{chi = +-1} prod (1 - chi X)^{-1} prod (1 - chi Y) + 1 - kappa ]
cld euler_product(unsigned q, const std::vector<cld>& x, const std::vector<cld>& y, unsigned E) {
  cld logF = std::log(1.0L - 1.0L / q);
  for (unsigned e = 1; e <= E; ++e) {
    // A - 1 without cancellation: (1 + r)(1 + a) - 1 = r + a + r a
    cld Am1 = 0;
    for (int chi : {1, -1}) {
      cld r = 0;
      for (auto xi : x) {
        const cld X = static_cast<long double>(chi) * std::pow(xi, e);
        const cld a = X / (1.0L - X);
        r = r + a + r * a;
      }
      for (auto yj : y) {
        const cld a = -static_cast<long double>(chi) * std::pow(yj, e);
        r = r + a + r * a;
      }
      Am1 += 0.5L * r;
    }
    const long double qe = std::pow(static_cast<long double>(q), static_cast<long double>(e));
    const cld z = qe / (qe + 1) * Am1;
    logF += irreducible_count(q, e) * (std::abs(z) < 1e-4L ? z - z * z / 2.0L + z * z * z / 3.0L - z * z * z * z / 4.0L : std::log(1.0L + z));
  }
  return std::exp(logF);
}

}  // namespace

TEST_CASE("test kernels") {
  CHECK(TestKernel(KernelShape::Triangle, 0.5).density_reference() == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(TestKernel(KernelShape::Triangle, 1).density_reference() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS(TestKernel::parse("box", 1));
  CHECK_THROWS(TestKernel(KernelShape::Triangle, 0));

  for (KernelShape sh : {KernelShape::Triangle, KernelShape::RaisedCosine})
    for (double lam : {0.4, 1.0, 1.7}) {
      const TestKernel k(sh, lam);
      CAPTURE(k.name());
      CAPTURE(lam);
      const double mass = simpson([&](double xi) { return k.g(xi); }, -1, 1);
      CHECK(k.g_mass_unit_interval() == doctest::Approx(mass).epsilon(1e-9));
      CHECK(k.density_reference() == doctest::Approx(k.g(0) - mass / 2).epsilon(1e-9));
      CHECK(k.g(lam * 1.0001) == 0);
      for (double x : {0.0, 0.13, 0.5, 1.9, 7.25}) {
        const double ft = simpson([&](double xi) { return k.g(xi) * std::cos(2 * M_PI * x * xi); }, -lam, lam);
        CHECK(k.f(x) == doctest::Approx(ft).epsilon(1e-8).scale(1));
        CHECK(k.f(-x) == k.f(x));
      }
      for (int i = 1; i <= 400; ++i) {
        const double x = i * 0.05;
        CHECK(std::abs(k.f(x)) <= std::min(k.M0(), k.M2() / (x * x)) + 1e-12);
      }
    }
}

TEST_CASE("periodization: dual sum against the direct series") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ux(-3, 3);
  for (KernelShape sh : {KernelShape::Triangle, KernelShape::RaisedCosine})
    for (double lam : {0.5, 1.0, 1.6})
      for (unsigned n : {5u, 9u}) {
        const TestKernel k(sh, lam);
        const unsigned q = 3;
        for (int t = 0; t < 4; ++t) {
          const double x = t == 0 ? 0.0 : ux(rng);
          const double dual = periodize(k, q, n, x);
          const PeriodizedValue ser = periodize_series(k, q, n, x, 1e-8);
          CHECK(ser.tail_bound <= 1e-8);
          CHECK(std::abs(dual - ser.value) <= ser.tail_bound + 1e-12);
          CHECK(periodize(k, q, n, -x) == doctest::Approx(dual).epsilon(1e-12));
          CHECK(periodize(k, q, n, x + 2 * M_PI / std::log(3.0)) == doctest::Approx(dual).epsilon(1e-10).scale(1));
        }
      }
}

TEST_CASE("ratio averages") {
  for (unsigned q : {3u, 5u, 7u})
    for (unsigned n = 2; n <= (q == 7 ? 5u : 6u); ++n) {
      const FamilyTable t = build_family(q, n);
      const cld v = ratio_average_empirical(t, RatioSpec::uniform(0, 0, 0));
      CHECK(v.real() == doctest::Approx(1.0 - 1.0 / q).epsilon(1e-15));
      CHECK(ratio_average_empirical(t, RatioSpec::uniform(0, 0, 0), Normalization::Sum).real() == t.size());
    }
  const FamilyTable t = build_family(3, 5);
  CHECK_THROWS_AS(ratio_average_empirical(t, RatioSpec::uniform(0, 1, 0.5)), std::invalid_argument);
  CHECK_THROWS_AS(ratio_average_empirical(t, RatioSpec::uniform(0, 1, 0.52)), std::invalid_argument);

  // against per-member evaluation of the completed L-function
  RatioSpec spec;
  spec.K = 2;
  spec.Q = 1;
  spec.s = {{0.3, 1.2}, {0.7, -0.4}, {0.9, 2.0}};
  cld want = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    LPolynomial L = complete(t.member(i));
    check_functional_equation(L);
    want += L.eval(u_of(spec.s[0], 3)) * L.eval(u_of(spec.s[1], 3)) / L.eval(u_of(spec.s[2], 3));
  }
  want /= 243.0L;
  CHECK(std::abs(ratio_average_empirical(t, spec) - want) < 1e-12);
  CHECK(std::abs(spec.x(0, 3) + std::exp((0.5L - cld(0.3L, 1.2L)) * std::log(3.0L))) < 1e-15);
}

TEST_CASE("moebius cancellation") {
  const Field F = Field::make(3);
  std::vector<std::vector<Poly>> monics;
  for (unsigned R = 0; R <= 3; ++R) monics.push_back(testing::all_monic(F, R));
  for (unsigned n : {3u, 5u}) {
    const FamilyTable t = build_family(3, n);
    CHECK(moebius_cancellation(t, 0).value == 1);
    for (unsigned R = 1; R <= 3; ++R) {
      long long s = 0;
      for (std::size_t i = 0; i < t.size(); ++i) {
        const Poly d = t.member_poly(i);
        for (const Poly& r : monics[R])
          if (int mu = testing::moebius_by_trial(r)) s += mu * jacobi_symbol(r, d);
      }
      const MoebiusResult m = moebius_cancellation(t, R);
      CHECK(m.exact_sum == std::to_string(s));
      CHECK(m.family_size == t.size());
      CHECK(m.value == doctest::Approx(s / std::pow(3.0, R / 2.0) / t.size()).epsilon(1e-14));
    }
  }
}

TEST_CASE("coefficient averages") {
  const FamilyTable t5 = build_family(3, 5), t7 = build_family(3, 7), t9 = build_family(3, 9);
  CHECK(c5_single(t5, {}, {}, 0) == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(c5_single(t7, {}, {0}, 0) == doctest::Approx(2.0 / 3).epsilon(1e-15));
  const C5Estimate est = estimate_C5({&t5, &t7, &t9}, {1}, {2}, 1);
  REQUIRE(est.differences.size() == 2);
  CHECK(est.differences[1] < est.differences[0]);
  CHECK_THROWS(c5_single(build_family(3, 4), {}, {}, 0));
}

TEST_CASE("recipe main term") {
  for (unsigned q : {3u, 5u})
    for (unsigned n : {5u, 7u}) {
      const long double size = std::pow(static_cast<long double>(q), n) * (1 - 1.0L / q);
      const RecipeResult r01 = recipe_main_term(q, n, RatioSpec::uniform(0, 1, 0.8), CoefficientSource::Model);
      CHECK(std::abs(r01.MT - cld(1 - 1.0L / q)) < 1e-15);
      CHECK(std::abs(r01.RR_L - cld(size)) < 1e-6);
      const RecipeResult r00 = recipe_main_term(q, n, RatioSpec::uniform(0, 0, 0), CoefficientSource::Model);
      CHECK(std::abs(r00.MT - cld(1 - 1.0L / q)) < 1e-15);
    }
  CHECK_THROWS_AS(recipe_main_term(3, 5, RatioSpec::uniform(2, 1, 0.8), CoefficientSource::Model), std::invalid_argument);
  CHECK_THROWS_AS(recipe_main_term(3, 6, RatioSpec::uniform(1, 0, 0.8), CoefficientSource::Model), std::invalid_argument);
  CHECK_THROWS_AS(recipe_main_term(3, 5, RatioSpec::uniform(0, 1, 0.5), CoefficientSource::Model), std::invalid_argument);
  CHECK_THROWS(recipe_main_term(3, 5, RatioSpec::uniform(1, 0, 0.8), CoefficientSource::Empirical));

  // the zeta-factored series against a plain Euler product
  const std::vector<std::pair<std::vector<cld>, std::vector<cld>>> pts = {
      {{cld(0.1L, 0.05L)}, {}},
      {{}, {cld(0.2L, -0.1L), cld(-0.15L, 0.1L)}},
      {{cld(0.12L, 0)}, {cld(0.2L, 0.1L)}},
      {{cld(0.1L, 0.1L), cld(-0.08L, 0.02L)}, {}},
      {{}, {cld(0.3L, 0)}},
  };
  for (unsigned q : {3u, 5u})
    for (const auto& [x, y] : pts) {
      const cld a = recipe_model_series(q, x, y);
      const cld b = euler_product(q, x, y, 60);
      CHECK(std::abs(a - b) < 1e-12);
    }

  // model against the family average at n = 7
  const FamilyTable t7 = build_family(3, 7);
  const RatioSpec s10 = RatioSpec::uniform(1, 0, 0.55);
  const RecipeResult mt = recipe_main_term(3, 7, s10, CoefficientSource::Model);
  CHECK(std::abs(ratio_average_empirical(t7, s10) - mt.MT) < 0.01);
  // the empirical source on the same table reproduces the average
  const RecipeResult emp = recipe_main_term(3, 7, s10, CoefficientSource::Empirical, 0, &t7);
  CHECK(std::abs(ratio_average_empirical(t7, s10) - emp.MT) < 1e-9);
}

TEST_CASE("average character values") {
  const Field F = Field::make(3);
  const FamilyTable t4 = build_family(3, 4), t6 = build_family(3, 6);
  const AvgCharResult one = average_char(P(F, {1}), {&t4, &t6});
  for (long double v : one.empirical) CHECK(v == doctest::Approx(2.0 / 3).epsilon(1e-15));
  bool sq = false;
  CHECK(average_char_model(P(F, {0, 0, 1}), &sq) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(sq);
  CHECK(average_char_model(P(F, {0, 1})) == 0);
  const AvgCharResult t = average_char(P(F, {0, 1}), {&t4, &t6});
  CHECK(std::abs(t.empirical[1]) <= std::abs(t.empirical[0]) + 1e-15);
  // brute force against the Jacobi symbol
  long long s = 0;
  for (std::size_t i = 0; i < t4.size(); ++i) s += jacobi_symbol(P(F, {2, 1, 1}), t4.member_poly(i));
  CHECK(average_char(P(F, {2, 1, 1}), {&t4}).empirical[0] == doctest::Approx(s / 81.0).epsilon(1e-15));
}

TEST_CASE("theorem constants") {
  for (int K = 0; K <= 5; ++K)
    for (int Q = 0; K + Q <= 5; ++Q) {
      const ConstantsLedger L = theorem_constants(ConstantsInput::quadratic(K, Q));
      CHECK(L.delta == mpq_class(1, std::max(576, 2016 * (K + Q))));
      CHECK(L.delta == quadratic_delta_closed_form(K, Q));
      CHECK(L.omega == mpq_class(1, 84));
    }
  const ConstantsLedger L = theorem_constants(ConstantsInput::quadratic(1, 1));
  CHECK(L.C6 == 4);
  CHECK(L.C7 == 60);
  REQUIRE(L.q_min_log2_exact.has_value());
  CHECK(*L.q_min_log2_exact == 4044);
}

TEST_CASE("results do not depend on the worker count") {
  const FamilyTable a = build_family(5, 7, LMethod::Auto, 1);
  const FamilyTable b = build_family(5, 7, LMethod::Auto, 3);
  CHECK(a.lhat == b.lhat);
  CHECK(a.digits == b.digits);
  const RatioSpec spec = RatioSpec::uniform(1, 1, {0.6, 0.3});
  const cld r1 = ratio_average_empirical(a, spec, Normalization::Average, 1);
  const cld r4 = ratio_average_empirical(a, spec, Normalization::Average, 4);
  CHECK(r1 == r4);
  const TestKernel k(KernelShape::Triangle, 1);
  CHECK(one_level_density(a, k, DensityRoute::Trace, 1).empirical == one_level_density(a, k, DensityRoute::Trace, 4).empirical);
  CHECK(moebius_cancellation(a, 2, 1).exact_sum == moebius_cancellation(a, 2, 4).exact_sum);
  CHECK(c5_single(a, {1}, {2}, 1, 1) == c5_single(a, {1}, {2}, 1, 4));
}

TEST_CASE("one-level density routes agree") {
  const FamilyTable t = build_family(3, 7);
  for (double lam : {0.5, 1.0, 1.5}) {
    const TestKernel k(KernelShape::RaisedCosine, lam);
    const auto z = one_level_density(t, k, DensityRoute::Zeros);
    const auto tr = one_level_density(t, k, DensityRoute::Trace);
    CHECK(std::abs(z.empirical - tr.empirical) < 1e-9);
    CHECK(z.reference == k.density_reference());
  }
}

TEST_CASE("reports") {
  StatReport r;
  r.q = 3;
  r.n = 5;
  r.stat = "ratios";
  r.value = {0.6643, -1e-20};
  r.reference = {2.0 / 3, 0};
  r.set_deviation();
  r.add_meta("K", "0");
  r.add_meta("s", "0.8,0.9;x");
  r.wall_time = 1.5;
  const std::string csv = to_csv({r, r});
  CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  const auto back = from_csv(csv);
  REQUIRE(back.size() == 2);
  CHECK(back[0].value == r.value);
  CHECK(back[0].reference == r.reference);
  CHECK(back[0].deviation == r.deviation);
  CHECK(back[0].meta_string() == r.meta_string());
  CHECK(to_csv(back) == csv);
  CHECK(csv.find("1.5") == std::string::npos);

  const auto j = nlohmann::json::parse(to_json({r}, "stat ratios --q 3"));
  CHECK(j["rows"][0]["stat"] == "ratios");
  CHECK(j["rows"][0]["wall_time"] == 1.5);
  CHECK(to_svg({r}, "t").rfind("<svg", 0) == 0);
  CHECK_THROWS(from_csv("bad,header\n"));
}

TEST_CASE("run configuration round trip") {
  RunConfig c;
  c.command = "stat ratios";
  c.q = 5;
  c.ns = {5, 7, 9};
  c.K = 1;
  c.Q = 1;
  c.s = {{0.6, 0}, {0.7, -1.25}};
  c.kernel = "raised-cosine";
  c.lambda = 0.75;
  c.N = {2, 0};
  c.eps = {1, -1};
  c.r = "0,0,1";
  c.seed = 42;
  c.workers = 2;
  c.build = true;
  CHECK(RunConfig::from_flags(c.to_flags()) == c);
  CHECK(RunConfig::from_flags(RunConfig{}.to_flags()) == RunConfig{});
  CHECK(parse_complex_list("0.5,0.6:-1") == std::vector<std::complex<double>>{{0.5, 0}, {0.6, -1}});
  CHECK(parse_unsigned_list("5,7") == std::vector<unsigned>{5, 7});
  CHECK(parse_int_list("1,-1") == std::vector<int>{1, -1});
  CHECK_THROWS(parse_unsigned_list("5,x"));
  CHECK_THROWS(parse_unsigned_list("-3"));
}

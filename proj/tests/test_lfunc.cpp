#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "ffz/cache.hpp"
#include "ffz/enumerate.hpp"
#include "ffz/factor.hpp"
#include "ffz/family.hpp"
#include "ffz/jacobi.hpp"
#include "ffz/lfunc.hpp"
#include "ffz/zeros.hpp"
#include "helpers.hpp"

using namespace ffz;
using testing::P;

namespace {

// #{(t, y) in F_{q^j}^2 : y^2 = d(t)} by squaring every element.
std::int64_t affine_points_brute(const Poly& d, unsigned j) {
  const Field E = Field::make(d.field().characteristic(), j);
  std::vector<int> roots(E.order(), 0);
  for (Elem y = 0; y < E.order(); ++y) roots[E.mul(y, y)]++;
  std::int64_t count = 0;
  for (Elem t = 0; t < E.order(); ++t) count += roots[d.eval_in(E, t)];
  return count;
}

}  // namespace

TEST_CASE("character-sum L-polynomials") {
  const Field F = Field::make(3);
  const Poly t = Poly::x(F);
  CHECK(lpoly_charsum(t).lhat == std::vector<std::int64_t>{1});
  CHECK(lpoly_charsum(P(F, {0, 2, 0, 1})).lhat == std::vector<std::int64_t>{1, 0, 3});
  CHECK_THROWS_AS(lpoly_charsum(t * t), std::invalid_argument);
  CHECK_THROWS_AS(lpoly_charsum(Poly::x(Field::make(2))), std::invalid_argument);
  for (const Poly& d : enumerate_squarefree_monic(Field::make(5), 3)) CHECK(lpoly_charsum(d).lhat[0] == 1);
}

TEST_CASE("point-count L-polynomials") {
  const Field F = Field::make(3);
  CHECK(lpoly_pointcount(P(F, {0, 2, 0, 1})).lhat == std::vector<std::int64_t>{1, 0, 3});
  CHECK(lpoly_pointcount(Poly::x(F)).lhat == std::vector<std::int64_t>{1});
  const Field F5 = Field::make(5);
  CHECK(lpoly_pointcount(P(F5, {0, 1, 0, 1})).lhat == lpoly_charsum(P(F5, {0, 1, 0, 1})).lhat);
  CHECK_THROWS_AS(lpoly_pointcount(P(F, {1, 0, 1})), std::invalid_argument);
}

TEST_CASE("cross-algorithm agreement on q = 3 families") {
  for (unsigned n : {3u, 5u}) {
    int bad = 0;
    for (const Poly& d : enumerate_squarefree_monic(Field::make(3), n))
      if (lpoly_charsum(d).lhat != lpoly_pointcount(d).lhat) ++bad;
    CHECK(bad == 0);
  }
  // batch engine against the per-member path
  const FamilyTable tb = build_family(5, 5, LMethod::PointCount);
  const Field F5 = Field::make(5);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    const std::size_t i = rng() % tb.size();
    CHECK(std::vector<std::int64_t>(tb.lhat_of(i), tb.lhat_of(i) + 5) == lpoly_charsum(tb.member_poly(i)).lhat);
  }
}

TEST_CASE("completion and functional equation") {
  const Field F = Field::make(3);
  LPolynomial L = complete(lpoly_charsum(P(F, {0, 2, 0, 1})));
  CHECK(L.c == 2);
  CHECK(check_functional_equation(L) == 1);

  LPolynomial one = complete(lpoly_charsum(Poly::x(F)));
  CHECK(one.c == 0);
  CHECK(check_functional_equation(one) == 1);

  LPolynomial bad = complete(lpoly_charsum(P(F, {0, 2, 0, 1})));
  bad.lhat[2] = 2;
  CHECK_THROWS(check_functional_equation(bad));

  // even n: exact division by 1 - u, c = n - 2
  for (const Poly& d : enumerate_squarefree_monic(F, 4)) {
    LPolynomial E = lpoly_charsum(d);
    std::int64_t at_one = 0;
    for (auto a : E.lhat) at_one += a;
    REQUIRE(at_one == 0);
    LPolynomial C = complete(E);
    CHECK(C.c == 2);
    CHECK(std::abs(check_functional_equation(C)) == 1);
  }
  LPolynomial fake;
  fake.q = 3;
  fake.n = 4;
  fake.lhat = {1, 1, 0, 0};
  CHECK_THROWS(complete(fake));

  // odd n: w = +1 throughout
  for (unsigned n : {3u, 5u, 7u}) {
    int bad_w = 0;
    const FamilyTable tb = build_family(3, n);
    for (std::size_t i = 0; i < tb.size(); ++i) {
      LPolynomial M = complete(tb.member(i));
      if (check_functional_equation(M) != 1 || M.c != static_cast<int>(n) - 1) ++bad_w;
    }
    CHECK(bad_w == 0);
  }
}

TEST_CASE("zero angles") {
  const Field F = Field::make(3);
  LPolynomial L = complete(lpoly_charsum(P(F, {0, 2, 0, 1})));
  check_functional_equation(L);
  ZeroSet z = zero_angles(L);
  REQUIRE(z.angles.size() == 2);
  std::sort(z.angles.begin(), z.angles.end());
  CHECK(z.angles[0] == doctest::Approx(-M_PI / 2).epsilon(1e-12));
  CHECK(z.angles[1] == doctest::Approx(M_PI / 2).epsilon(1e-12));

  LPolynomial one = complete(lpoly_charsum(Poly::x(F)));
  check_functional_equation(one);
  CHECK(zero_angles(one).angles.empty());

  LPolynomial raw = lpoly_charsum(P(F, {0, 2, 0, 1}));
  CHECK_THROWS(zero_angles(raw));

  const FamilyTable tb = build_family(3, 5);
  int bad = 0;
  for (std::size_t i = 0; i < tb.size(); ++i) {
    LPolynomial M = complete(tb.member(i));
    check_functional_equation(M);
    ZeroSet zs = zero_angles(M);
    if (zs.angles.size() != 4 || zs.tolerance > 1e-9) ++bad;
    std::vector<double> neg;
    for (double a : zs.angles) neg.push_back(a == M_PI ? M_PI : -a);
    std::sort(neg.begin(), neg.end());
    std::vector<double> pos = zs.angles;
    std::sort(pos.begin(), pos.end());
    for (std::size_t k = 0; k < pos.size(); ++k)
      if (std::abs(pos[k] - neg[k]) > 1e-9) ++bad;
    for (const auto& u : roots_from_angles(zs, 3))
      if (std::abs(std::abs(u) * std::sqrt(3.0) - 1) > 1e-9) ++bad;
  }
  CHECK(bad == 0);
}

TEST_CASE("evaluation identity: coefficients against the eigenvalue product") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(0.2, 0.8), im(-10, 10);
  const FamilyTable tb = build_family(3, 5);
  double worst = 0;
  for (std::size_t i = 0; i < tb.size(); i += 7) {
    LPolynomial M = complete(tb.member(i));
    check_functional_equation(M);
    const ZeroSet z = zero_angles(M);
    for (int k = 0; k < 20; ++k) {
      const std::complex<long double> s(re(rng), im(rng));
      const std::complex<long double> x = -std::exp((0.5L - s) * std::log(3.0L));
      const std::complex<long double> u = std::exp(-s * std::log(3.0L));
      std::complex<long double> prod = 1;
      for (double th : z.angles) prod *= 1.0L + x * std::exp(std::complex<long double>(0, th));
      const auto direct = M.eval(u);
      worst = std::max(worst, static_cast<double>(std::abs(direct - prod) / std::max(std::abs(direct), 1e-300L)));
    }
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("series inversion against Moebius character sums") {
  const Field F = Field::make(3);
  LPolynomial L;
  L.q = 3;
  L.lhat = {1, 0, 3};
  CHECK(invert_series(L, 4) == std::vector<std::int64_t>{1, 0, -3, 0, 9});
  const Poly d = P(F, {0, 2, 0, 1});
  CHECK(invert_series(lpoly_charsum(d), 2)[2] == -3);

  for (unsigned n : {3u, 5u}) {
    // brute force: sum over monic r of degree R of mu(r) chi_d(r), mu by trial division
    std::vector<std::vector<Poly>> monics;
    std::vector<std::vector<int>> mus;
    for (unsigned R = 0; R <= 4; ++R) {
      monics.push_back(testing::all_monic(F, R));
      std::vector<int> m;
      for (const Poly& r : monics.back()) m.push_back(testing::moebius_by_trial(r));
      mus.push_back(m);
    }
    int bad = 0;
    for (const Poly& dd : enumerate_squarefree_monic(F, n)) {
      const auto b = invert_series(lpoly_charsum(dd), 4);
      for (unsigned R = 0; R <= 4; ++R) {
        std::int64_t s = 0;
        for (std::size_t k = 0; k < monics[R].size(); ++k)
          if (mus[R][k]) s += mus[R][k] * jacobi_symbol(monics[R][k], dd);
        if (s != b[R]) ++bad;
      }
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("curve point counts") {
  const Field F = Field::make(3);
  const Poly d = P(F, {0, 2, 0, 1});
  CurveCount c1 = point_count_curve(d, 1);
  CHECK(c1.affine == 3);
  CHECK(c1.projective == 4);
  // q^j + 1 - p_j with p_j = sum beta^j; Lhat = 1 + 3u^2 gives beta = +-i sqrt 3, p_2 = -6
  CHECK(point_count_curve(d, 2).projective == 9 + 1 + 6);
  CHECK(point_count_curve(Poly::x(F), 1).affine == 3);
  CHECK_THROWS_AS(point_count_curve(P(F, {1, 0, 1}), 1), std::invalid_argument);

  for (const Poly& dd : enumerate_squarefree_monic(Field::make(5), 3))
    for (unsigned j = 1; j <= 2; ++j) REQUIRE(point_count_curve(dd, j).affine == affine_points_brute(dd, j));
}

TEST_CASE("Newton identities and symmetric fill") {
  // prod (1 - beta u) with beta = 1, 2: 1 - 3u + 2u^2, P_j = -(1 + 2^j)
  CHECK(newton_from_power_sums({-3, -5}) == std::vector<std::int64_t>{1, -3, 2});
  CHECK(symmetric_fill({1, 0}, 3, 1) == std::vector<std::int64_t>{1, 0, 3});
}

TEST_CASE("cache round trip is byte-identical") {
  const FamilyTable tb = build_family(3, 5);
  const std::string text = cache_to_string(tb);
  CHECK(text.rfind("FFZLFC1;q=3;n=5\n", 0) == 0);
  const FamilyTable back = parse_cache(text);
  CHECK(cache_to_string(back) == text);
  CHECK(back.lhat == tb.lhat);
  CHECK(back.digits == tb.digits);
  CHECK_THROWS(read_cache("/nonexistent/ffz.lfc"));
  CHECK_THROWS(parse_cache("FFZLFC0;q=3;n=5\n"));
}

TEST_CASE("family sampling") {
  const Field F = Field::make(5);
  const auto a = sample_family(F, 7, 100, 42);
  const auto b = sample_family(F, 7, 100, 42);
  CHECK(a.size() == 100);
  CHECK(a == b);
  for (const auto& d : a) CHECK(is_squarefree(d));
}

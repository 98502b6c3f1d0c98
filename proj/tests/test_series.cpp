#include <random>
#include <vector>

#include "doctest.h"
#include "goodfact/polyring.hpp"
#include "goodfact/rootcert.hpp"
#include "goodfact/series.hpp"

using namespace goodfact;

namespace {

IntPoly P(const char* s) { return IntPoly::parse(s); }

RationalSeries RS(const char* num, const char* den) {
  return RationalSeries(P(num), P(den));
}

IntPoly random_poly(std::mt19937& rng, int max_deg, int max_abs) {
  std::uniform_int_distribution<int> degd(0, max_deg), coefd(-max_abs, max_abs);
  int deg = degd(rng);
  std::vector<Int> c(deg + 1);
  for (auto& v : c) v = coefd(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPoly(std::move(c));
}

// Schoolbook long division prefix of num/den, den(0) == 1.  Independent of
// the recurrence implementation on purpose.
std::vector<Int> division_prefix(const IntPoly& num, const IntPoly& den, int n) {
  std::vector<Int> rem(num.coeffs());
  if (static_cast<int>(rem.size()) < n + den.degree() + 1)
    rem.resize(n + den.degree() + 1, 0);
  std::vector<Int> out;
  for (int k = 0; k < n; ++k) {
    Int b = rem[k];
    out.push_back(b);
    for (int j = 0; j <= den.degree(); ++j) rem[k + j] -= b * den.coeff(j);
  }
  return out;
}

template <class F>
errc thrown_kind(F&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.kind();
  }
  FAIL("expected a goodfact::error");
  return errc::invalid_input;
}

}  // namespace

TEST_CASE("series construction reduces to canonical form") {
  RationalSeries a(P("t"), P("t - t^2"));
  CHECK(a.num().str() == "1");
  CHECK(a.den().str() == "1 - t");

  RationalSeries b(P("1 - 9*t^2"), P("1 - 3*t"));
  CHECK(b.is_polynomial());
  CHECK(b.num().str() == "1 + 3*t");

  RationalSeries c(P("2"), P("2 - 2*t"));
  CHECK(c.num().str() == "1");
  CHECK(c.den().str() == "1 - t");

  // Negative unit constant terms flip into the numerator.
  RationalSeries d(P("1"), P("-1 + t"));
  CHECK(d.num().str() == "-1");
  CHECK(d.den().str() == "1 - t");

  RationalSeries e(P("1 - t - 4*t^2 - t^3 + t^4"), P("1 - t - 4*t^2 - t^3 + t^4"));
  CHECK(e.is_polynomial());
  CHECK(e.num().str() == "1");

  RationalSeries z(P("0"), P("1 - 3*t + t^2"));
  CHECK(z.is_zero());
  CHECK(z.den().str() == "1");

  CHECK(thrown_kind([] { RationalSeries(P("1"), P("0")); }) == errc::invalid_input);
  CHECK(thrown_kind([] { RationalSeries(P("1"), P("2 - t")); }) == errc::invalid_input);
  CHECK(thrown_kind([] { RationalSeries(P("1"), P("t")); }) == errc::invalid_input);
}

TEST_CASE("coefficient streams follow the denominator recurrence") {
  std::vector<Int> fib = RS("1", "1 - 3*t + t^2").coefficients(6);
  CHECK(fib == std::vector<Int>{1, 3, 8, 21, 55, 144});

  std::vector<Int> poly = RationalSeries(P("1 + t")).coefficients(4);
  CHECK(poly == std::vector<Int>{1, 1, 0, 0});

  std::vector<Int> alt = RS("1", "1 + t - t^2").coefficients(5);
  CHECK(alt == std::vector<Int>{1, -1, 2, -3, 5});

  CHECK(RS("1", "1 - t").coefficients(0).empty());
  CHECK(RS("1", "1 - t").coefficients(-3).empty());

  CoeffStream s(RS("1", "1 - 3*t + t^2"));
  CHECK(s.index() == 0);
  CHECK(s.next() == 1);
  CHECK(s.next() == 3);
  CHECK(s.next() == 8);
  CHECK(s.index() == 3);

  CoeffStream zero{RationalSeries()};
  CHECK(zero.next() == 0);
  CHECK(zero.next() == 0);
}

TEST_CASE("series arithmetic is exact and reduced") {
  RationalSeries prod = RS("1 + t", "1 - 3*t + t^2") * RS("1", "1 - 3*t + t^2");
  CHECK(prod.num().str() == "1 + t");
  CHECK(prod.den() == P("1 - 3*t + t^2") * P("1 - 3*t + t^2"));

  CHECK(RS("1", "1 - t").at_neg_t() == RS("1", "1 + t"));

  RationalSeries one{IntPoly::constant(1)};
  RationalSeries any = RS("1 + t", "1 - 3*t + t^2");
  CHECK(any * one == any);

  RationalSeries sum = RS("1", "1 - t") + RS("1", "1 + t");
  CHECK(sum.num().str() == "2");
  CHECK(sum.den().str() == "1 - t^2");

  CHECK(sum - RS("1", "1 + t") == RS("1", "1 - t"));

  RationalSeries shifted = RS("1", "1 - t").times_power(2);
  CHECK(shifted.num().str() == "t^2");
  CHECK(shifted.den().str() == "1 - t");
  CHECK(thrown_kind([&] { any.times_power(-1); }) == errc::parameter_out_of_range);
}

TEST_CASE("polynomial detection") {
  CHECK(RS("1 - t - 4*t^2 - t^3 + t^4", "1 - t - 4*t^2 - t^3 + t^4").is_polynomial());
  CHECK_FALSE(RS("1", "1 - 3*t + t^2").is_polynomial());
  CHECK(RS("1 - 9*t^2", "1 - 3*t").is_polynomial());
}

TEST_CASE("levin truncation") {
  RationalSeries P_M = RS("1", "1 - 2*t");
  RationalSeries P_k = RS("1", "1 - t");

  CHECK(levin_truncation(P_M, RationalSeries(), P_k) == P_M);

  RationalSeries H = RS("1", "1 - t");
  RationalSeries got = levin_truncation(P_M, H, P_k);
  // 1/(1-2t) - t/((1+t)(1-t)) = (1 - t + t^2) / ((1-2t)(1-t^2))
  CHECK(got.num().str() == "1 - t + t^2");
  CHECK(got.den() == P("1 - 2*t") * P("1 - t^2"));
  RationalSeries direct = P_M - (H.at_neg_t() * P_k).times_power(1);
  CHECK(got == direct);

  // The correction is killed in degree zero by the t factor.
  RationalSeries self = RS("1", "1 - 3*t + t^2");
  RationalSeries headless =
      levin_truncation(self, RationalSeries(IntPoly::constant(1)), self);
  CHECK(headless.coefficients(1) == self.coefficients(1));

  CHECK_NOTHROW(levin_truncation(P_M, RS("1", "1 - 2*t + t^2"), P_k));
  CHECK(thrown_kind([&] { levin_truncation(P_M, RS("1", "1 + t"), P_k); }) ==
        errc::hilbert_shape_violation);
  CHECK(thrown_kind([&] { levin_truncation(P_M, RS("1", "1 - 3*t + t^2"), P_k); }) ==
        errc::hilbert_shape_violation);
}

TEST_CASE("foxby bass assembly") {
  RationalSeries tail = RS("1", "1 - 3*t + t^2");
  CHECK(foxby_bass(P("0"), 0, tail) == tail);

  // (1 + t) + t^2/(1 - t) telescopes back to the geometric series.
  CHECK(foxby_bass(P("1 + t"), 2, RS("1", "1 - t")) == RS("1", "1 - t"));

  CHECK(thrown_kind([&] { foxby_bass(P("t^2"), 2, tail); }) == errc::degree_violation);
  CHECK(thrown_kind([&] { foxby_bass(P("1"), -1, tail); }) ==
        errc::parameter_out_of_range);
}

TEST_CASE("betti profile flags and curvature brackets") {
  BettiProfile fib = betti_profile(RS("1", "1 - 3*t + t^2"), 500);
  CHECK_FALSE(fib.polynomial);
  CHECK(fib.eventually_nondecreasing);
  CHECK_FALSE(fib.period2);
  CHECK(fib.prefix.size() == 501);
  CHECK(fib.prefix[3] == 21);
  // curvature = (3 + sqrt 5)/2 = 2.618...
  CHECK(fib.curvature_lo > Rat(26, 10));
  CHECK(fib.curvature_hi < Rat(27, 10));
  CHECK(fib.curvature_lo <= fib.curvature_hi);

  BettiProfile flat = betti_profile(RS("1 + t", "1 - t^2"), 40);
  CHECK(flat.source.den().str() == "1 - t");
  CHECK(flat.period2);
  CHECK(flat.eventually_nondecreasing);
  CHECK(flat.prefix[0] == 1);
  CHECK(flat.prefix[40] == 1);
  CHECK(flat.curvature_lo <= 1);
  CHECK(flat.curvature_hi >= 1);

  BettiProfile mersenne = betti_profile(RS("1", "1 - 3*t + 2*t^2"), 60);
  CHECK(mersenne.eventually_nondecreasing);
  CHECK(mersenne.prefix[5] == 63);  // 2^(n+1) - 1
  CHECK(mersenne.curvature_lo <= 2);
  CHECK(mersenne.curvature_hi >= 2);
  Rat width = mersenne.curvature_hi - mersenne.curvature_lo;
  CHECK(width < Rat(1, 1000));

  BettiProfile poly = betti_profile(RationalSeries(P("1 + t")), 10);
  CHECK(poly.polynomial);
  CHECK(poly.curvature_lo == 0);
  CHECK(poly.curvature_hi == 0);

  // Repeated denominator factors localize through the radical.
  BettiProfile rep = betti_profile(RS("1", "1 - t - t^2 + t^3"), 30);
  CHECK(rep.eventually_nondecreasing);
  CHECK(rep.curvature_lo <= 1);
  CHECK(rep.curvature_hi >= 1);

  CHECK(thrown_kind([] { betti_profile(RS("1", "1 + t - t^2"), 100); }) ==
        errc::negative_coefficient);
  BettiProfile signedp = betti_profile(RS("1", "1 + t - t^2"), 100, false);
  CHECK_FALSE(signedp.eventually_nondecreasing);

  CHECK(thrown_kind([] { betti_profile(RS("1", "1 - 3*t + t^2"), 5); }) ==
        errc::parameter_out_of_range);
}

TEST_CASE("stream agrees with long division on random series") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 30; ++trial) {
    IntPoly num = random_poly(rng, 6, 9);
    IntPoly den = IntPoly::constant(1) + random_poly(rng, 5, 6).times_power(1);
    RationalSeries rs(num, den);
    CHECK(rs.coefficients(200) == division_prefix(num, den, 200));
  }
}

TEST_CASE("product streams are Cauchy convolutions") {
  std::mt19937 rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    IntPoly na = random_poly(rng, 4, 5);
    IntPoly nb = random_poly(rng, 4, 5);
    IntPoly da = IntPoly::constant(1) + random_poly(rng, 3, 4).times_power(1);
    IntPoly db = IntPoly::constant(1) + random_poly(rng, 3, 4).times_power(1);
    RationalSeries a(na, da), b(nb, db);
    const int n = 60;
    std::vector<Int> ca = a.coefficients(n), cb = b.coefficients(n);
    std::vector<Int> cab = (a * b).coefficients(n);
    for (int k = 0; k < n; ++k) {
      Int conv = 0;
      for (int j = 0; j <= k; ++j) conv += ca[j] * cb[k - j];
      CHECK(cab[k] == conv);
    }
  }
}

TEST_CASE("catalog-shaped denominators clear integrally") {
  // Denominator shapes the ring-class catalog reuses.
  std::vector<IntPoly> dens = {
      P("1 - t - 4*t^2 - t^3 + t^4"),
      P("1 - 2*t - 4*t^2 + t^3 + t^4 - t^5"),
      P("1 - 2*t - 6*t^2 - 2*t^3 + t^4"),
      P("1 - 2*t - 5*t^2 + 3*t^3 + 2*t^4 - t^5"),
      P("1 - 5*t + t^2"),
  };
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coefd(0, 7);
  for (const IntPoly& c : dens) {
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Int> wc(5);
      for (auto& v : wc) v = coefd(rng);
      wc.push_back(1);
      IntPoly w(std::move(wc));
      RationalSeries rs(w, c);
      CHECK(RationalSeries(c) * rs == RationalSeries(w));
      const int n = w.degree() + c.degree() + 5;
      std::vector<Int> b = rs.coefficients(n);
      for (int k = 0; k < n; ++k) {
        Int conv = 0;
        for (int j = 0; j <= c.degree() && j <= k; ++j) conv += c.coeff(j) * b[k - j];
        CHECK(conv == w.coeff(k));
      }
    }
  }
}

TEST_CASE("nonnegative streams force a positive real minimal root") {
  // Pringsheim: when every scanned coefficient of 1/r is nonnegative and r is
  // irreducible, the minimal modulus must be attained on the positive axis.
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      std::vector<Int> rc = {1, -a, -b};
      IntPoly r(std::move(rc));
      if (!is_irreducible(r)) continue;
      CoeffStream s{RationalSeries(IntPoly::constant(1), r)};
      bool nonneg = true;
      for (int k = 0; k < 2000 && nonneg; ++k) nonneg = s.next() >= 0;
      REQUIRE(nonneg);
      CHECK_FALSE(r_condition(r));
    }
  }
  CHECK_FALSE(r_condition(P("1 - 2*t")));
}

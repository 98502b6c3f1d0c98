#include <random>

#include "doctest.h"
#include "goodfact/polyring.hpp"
#include "goodfact/rootcert.hpp"

using namespace goodfact;

namespace {

IntPoly P(const char* s) { return IntPoly::parse(s); }

IntPoly random_poly(std::mt19937& rng, int max_deg, int max_abs) {
  std::uniform_int_distribution<int> degd(0, max_deg), coefd(-max_abs, max_abs);
  int deg = degd(rng);
  std::vector<Int> c(deg + 1);
  for (auto& v : c) v = coefd(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPoly(std::move(c));
}

IntPoly squarefree_radical(const IntPoly& f) {
  IntPoly out = IntPoly::constant(1);
  for (const auto& [part, mult] : squarefree_decomposition(f)) out *= part;
  return out;
}

bool point_in_disk(const Rat& x, const Disk& d) {
  Rat dre = x - d.center_re;
  return dre * dre + d.center_im * d.center_im <= d.radius * d.radius;
}

}  // namespace

TEST_CASE("square root brackets") {
  auto [a, b] = sqrt_brackets(Rat(9, 4));
  CHECK(a == Rat(3, 2));
  CHECK(b == Rat(3, 2));
  auto [c, d] = sqrt_brackets(Rat(2));
  CHECK(c < d);
  CHECK(c * c <= 2);
  CHECK(d * d >= 2);
  CHECK(sqrt_brackets(Rat(0)) == std::pair<Rat, Rat>(Rat(0), Rat(0)));
  CHECK_THROWS_AS(sqrt_brackets(Rat(-1)), error);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> num(1, 500), den(1, 60);
  for (int i = 0; i < 200; ++i) {
    Rat x(num(rng), den(rng));
    auto [lo, hi] = sqrt_brackets(x);
    CHECK(lo * lo <= x);
    CHECK(hi * hi >= x);
    CHECK(hi - lo <= Rat(1, boost::multiprecision::denominator(x)));
  }
}

TEST_CASE("cauchy bound dominates every root") {
  CHECK(cauchy_root_bound(P("1 - 3*t + t^2")) == 4);
  CHECK(cauchy_root_bound(P("2 - 8*t + 2*t^2")) == 5);
  std::mt19937 rng(12);
  for (int i = 0; i < 100; ++i) {
    IntPoly f = random_poly(rng, 6, 12);
    if (f.degree() < 1) continue;
    Rat bound = cauchy_root_bound(f);
    for (const Rat& r : rational_roots(f)) {
      CHECK(r < bound);
      CHECK(-bound < r);
    }
  }
}

TEST_CASE("sturm counting on open intervals") {
  CHECK(sturm_count(P("1 - 3*t + t^2"), Rat(0), Rat(1)) == 1);
  CHECK(sturm_count(P("1 + t + t^2"), Rat(-10), Rat(10)) == 0);
  CHECK(sturm_count(P("-1 - t + t^2"), Rat(0), Rat(2)) == 1);
  CHECK(sturm_count(P("1 - 3*t + t^2"), Rat(0), Rat(3)) == 2);
  // repeated roots are reduced away and counted once
  CHECK(sturm_count(P("1 - t") * P("1 - t"), Rat(0), Rat(2)) == 1);
  CHECK(sturm_count(P("-2 + t"), Rat(0), Rat(1)) == 0);
  CHECK(sturm_count(P("5"), Rat(-1), Rat(1)) == 0);
  CHECK(sturm_count(P("1 + t"), Rat(2), Rat(2)) == 0);
  CHECK_THROWS_AS(sturm_count(P("-1 + t"), Rat(1), Rat(2)), error);
  CHECK_THROWS_AS(sturm_count(P("-1 + t"), Rat(2), Rat(1)), error);
  try {
    sturm_count(P("-2 + 2*t"), Rat(0), Rat(1));
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.kind() == errc::endpoint_is_root);
  }
}

TEST_CASE("sturm counts add over a partition") {
  std::mt19937 rng(13);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 120; ++i) {
    IntPoly f = random_poly(rng, 6, 10);
    if (f.degree() < 1) continue;
    Rat bound = cauchy_root_bound(f);
    Rat mid(1, 3);
    if (f.eval(mid) == 0 || f.eval(bound) == 0 || f.eval(-bound) == 0) continue;
    int whole = sturm_count(f, -bound, bound);
    CHECK(whole == sturm_count(f, -bound, mid) + sturm_count(f, mid, bound));
    CHECK(whole <= f.degree());
    ++checked;
  }
  CHECK(checked >= 100);
}

TEST_CASE("graeffe min modulus brackets") {
  // roots (3 +- sqrt(5))/2, minimal modulus 0.381966...
  auto [lo, hi] = graeffe_min_modulus_brackets(P("1 - 3*t + t^2"), 8);
  CHECK(lo <= hi);
  CHECK(Rat(38, 100) < lo);
  CHECK(hi < Rat(39, 100));
  auto [l2, h2] = graeffe_min_modulus_brackets(P("1 - 2*t"), 8);
  CHECK(l2 <= Rat(1, 2));
  CHECK(Rat(1, 2) <= h2);
  CHECK(h2 - l2 < Rat(1, 100));
  CHECK_THROWS_AS(graeffe_min_modulus_brackets(P("t - t^2"), 4), error);
  CHECK_THROWS_AS(graeffe_min_modulus_brackets(P("3"), 4), error);
  CHECK_THROWS_AS(graeffe_min_modulus_brackets(P("1 + t"), -1), error);
}

TEST_CASE("graeffe brackets agree with certified disks") {
  const char* polys[] = {
      "1 - t - 5*t^2 - t^3 + t^4",
      "1 - 2*t - 4*t^2 + t^3 + t^4 - t^5",
      "1 - 2*t - 6*t^2 - 2*t^3 + t^4",
      "1 - 2*t - 5*t^2 + 3*t^3 + 2*t^4 - t^5",
      "1 - 3*t + t^2",
  };
  for (const char* s : polys) {
    IntPoly f = P(s);
    // denominators with a repeated 1+t factor localize through their radical
    RootReport rep = certified_roots(squarefree_radical(f), 128);
    auto [glo, ghi] = graeffe_min_modulus_brackets(f, 8);
    CHECK(std::max(rep.min_modulus_lo, glo) <= std::min(rep.min_modulus_hi, ghi));
  }
}

TEST_CASE("certified roots on quadratics with known locations") {
  // roots (1 +- sqrt(5))/2: one positive, one negative of smaller modulus
  RootReport rep = certified_roots(P("1 + t - t^2"), 64);
  REQUIRE(rep.disks.size() == 2);
  REQUIRE(rep.positive_real_isolators.size() == 1);
  auto [a, b] = rep.positive_real_isolators[0];
  CHECK(Rat(3, 2) <= a);
  CHECK(b <= Rat(7, 4));
  CHECK(sturm_count(P("1 + t - t^2"), a, b) == 1);
  CHECK(rep.min_modulus_lo <= rep.min_modulus_hi);
  CHECK(Rat(1, 2) < rep.min_modulus_lo);
  CHECK(rep.min_modulus_hi < Rat(3, 4));

  RootReport two = certified_roots(P("1 - 3*t + t^2"), 64);
  REQUIRE(two.positive_real_isolators.size() == 2);
  CHECK(two.positive_real_isolators[0].second < Rat(1, 2));
  CHECK(Rat(5, 2) < two.positive_real_isolators[1].first);
  CHECK(Rat(1, 4) < two.min_modulus_lo);
  CHECK(two.min_modulus_hi < Rat(1, 2));
}

TEST_CASE("certified roots report exact rational roots exactly") {
  RootReport rep = certified_roots(P("-1 + t"), 64);
  REQUIRE(rep.disks.size() == 1);
  CHECK(rep.disks[0].center_re == 1);
  CHECK(rep.disks[0].center_im == 0);
  CHECK(rep.disks[0].radius == 0);
  CHECK(rep.min_modulus_lo == 1);
  CHECK(rep.min_modulus_hi == 1);
  REQUIRE(rep.positive_real_isolators.size() == 1);
  CHECK(rep.positive_real_isolators[0] == std::pair<Rat, Rat>(Rat(1), Rat(1)));

  RootReport tz = certified_roots(P("t - t^2"), 64);
  REQUIRE(tz.disks.size() == 2);
  CHECK(tz.min_modulus_lo == 0);
  CHECK(tz.min_modulus_hi == 0);
  REQUIRE(tz.positive_real_isolators.size() == 1);
  CHECK(tz.positive_real_isolators[0].first == 1);

  RootReport im = certified_roots(P("1 + t^2"), 64);
  REQUIRE(im.disks.size() == 2);
  CHECK(im.positive_real_isolators.empty());
  CHECK(Rat(9, 10) < im.min_modulus_lo);
  CHECK(im.min_modulus_hi < Rat(11, 10));
}

TEST_CASE("certified root errors") {
  CHECK_THROWS_AS(certified_roots(P("7"), 64), error);
  CHECK_THROWS_AS(certified_roots(P("1 + t") * P("1 + t"), 64), error);
  IntPoly big = IntPoly::monomial(1, 65) + IntPoly::constant(-2);
  CHECK_THROWS_AS(certified_roots(big, 64), error);
}

TEST_CASE("certified disks are disjoint, cover the degree and contain known roots") {
  std::mt19937 rng(14);
  int checked = 0;
  for (int i = 0; i < 80 && checked < 40; ++i) {
    IntPoly f = squarefree_radical(random_poly(rng, 5, 8));
    if (f.degree() < 1) continue;
    RootReport rep = certified_roots(f, 96);
    CHECK(static_cast<int>(rep.disks.size()) == f.degree());
    for (size_t x = 0; x < rep.disks.size(); ++x)
      for (size_t y = x + 1; y < rep.disks.size(); ++y) {
        Rat dre = rep.disks[x].center_re - rep.disks[y].center_re;
        Rat dim = rep.disks[x].center_im - rep.disks[y].center_im;
        Rat rr = rep.disks[x].radius + rep.disks[y].radius;
        CHECK(dre * dre + dim * dim > rr * rr);
      }
    for (const Rat& r : rational_roots(f)) {
      int hits = 0;
      for (const Disk& d : rep.disks) hits += point_in_disk(r, d) ? 1 : 0;
      CHECK(hits == 1);
    }
    ++checked;
  }
  CHECK(checked >= 30);
}

TEST_CASE("minimal modulus condition on the certificate factors") {
  CHECK(r_condition(P("1 + t - t^2")));
  CHECK(!r_condition(P("1 - 3*t + t^2")));
  CHECK(r_condition(P("1")));
  CHECK(r_condition(P("1 + 2*t - t^2")));
}

TEST_CASE("minimal modulus condition base cases") {
  CHECK(r_condition(P("5")));
  CHECK(r_condition(P("1 + 2*t")));    // only root is negative
  CHECK(!r_condition(P("-1 + t")));    // only root is positive
  CHECK(!r_condition(P("1 - t")));
  CHECK(r_condition(P("1 + t + t^2")));  // no real roots at all
  CHECK(r_condition(P("t")));            // zero root has the smallest modulus
  CHECK(r_condition(P("t - t^2")));
  CHECK_THROWS_AS(r_condition(P("0")), error);
}

TEST_CASE("minimal modulus condition resolves symmetric ties by root squaring") {
  CHECK(!r_condition(P("-2 + t^2")));        // roots +-sqrt(2)
  CHECK(!r_condition(P("-2 + t^4")));        // all four roots share the modulus
  CHECK(r_condition(P("2 + t^4")));          // no positive real root
  CHECK(!r_condition(P("4 - t^2")));
  CHECK(!r_condition(P("-2 + t^8")));
}

TEST_CASE("minimal modulus condition on reducible inputs") {
  CHECK(!r_condition(P("1 + t") * P("1 - 3*t + t^2")));
  CHECK(r_condition(P("1 - t") * P("1 + 2*t + 2*t^2")));  // complex pair is closer
  CHECK(!r_condition(P("1 - t") * P("1 + t")));           // tie between 1 and -1
}

TEST_CASE("minimal modulus condition is stable under positive scaling") {
  const char* cases[] = {"1 + t - t^2", "1 - 3*t + t^2", "1 + 2*t - t^2", "-2 + t^2"};
  for (const char* s : cases) {
    IntPoly f = P(s);
    bool base = r_condition(f);
    CHECK(r_condition(Int(3) * f) == base);
    CHECK(r_condition(f) == base);
  }
}

TEST_CASE("polynomials positive on the positive axis always satisfy the condition") {
  std::mt19937 rng(15);
  int checked = 0;
  for (int i = 0; i < 300 && checked < 100; ++i) {
    IntPoly f = random_poly(rng, 5, 9);
    if (f.degree() < 1 || f.constant_term() == 0) continue;
    if (sturm_count(f, Rat(0), cauchy_root_bound(f)) != 0) continue;
    CHECK(r_condition(f));
    ++checked;
  }
  CHECK(checked >= 60);
}

TEST_CASE("an equimodular non-symmetric tie is reported indeterminate") {
  // t^3 - 2: the real cube root of 2 shares its modulus with the complex pair
  try {
    r_condition(P("-2 + t^3"), 256);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.kind() == errc::indeterminate);
  }
}

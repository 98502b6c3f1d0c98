#include "goodfact/rootcert.hpp"

#include <algorithm>
#include <vector>

namespace goodfact {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

int sign_of(const Rat& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

// Nearest integer to x * 2^sp (ties toward +infinity).
Int rat_to_fix(const Rat& x, int sp) {
  Int num = (numerator(x) << (sp + 1)) + denominator(x);
  Int den = denominator(x) * 2;
  Int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

// floor(x^(1/n)) for x >= 0.
Int iroot(const Int& x, int n) {
  if (x <= 1) return x;
  if (n == 1) return x;
  if (n == 2) return sqrt(x);
  Int lo = 1, hi = Int(1) << (static_cast<int>(msb(x)) / n + 1);
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    if (pow(mid, static_cast<unsigned>(n)) <= x)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

// sqrt brackets carrying at least `bits` fractional bits: plain floor-sqrt
// brackets degrade badly when rational reduction shrinks the denominator.
Rat sqrt_lo_bits(const Rat& x, int bits) {
  Int p = numerator(x), q = denominator(x);
  Int s = (p << (2 * bits)) * q;
  Int r = sqrt(s);
  return Rat(r, q << bits);
}

Rat sqrt_hi_bits(const Rat& x, int bits) {
  Int p = numerator(x), q = denominator(x);
  Int s = (p << (2 * bits)) * q;
  Int r = sqrt(s);
  if (r * r != s) ++r;
  return Rat(r, q << bits);
}

// lo <= x^(1/n) <= hi, exact when x is an n-th power of a rational.
std::pair<Rat, Rat> nthroot_brackets(const Rat& x, int n) {
  if (x < 0) throw error(errc::invalid_input, "nth root of a negative number");
  if (x == 0) return {Rat(0), Rat(0)};
  Int p = numerator(x), q = denominator(x);
  Int m = p * pow(q, static_cast<unsigned>(n - 1));
  Int r = iroot(m, n);
  Rat lo(r, q);
  Rat hi = pow(r, static_cast<unsigned>(n)) == m ? lo : Rat(r + 1, q);
  return {lo, hi};
}

// Complex number as a pair of exact integer numerators over an implicit
// power-of-two scale. The whole root sweep stays in this representation:
// no rational normalization, and so no bignum gcd, ever runs inside it.
struct CInt {
  Int re, im;
};

CInt cmul(const CInt& a, const CInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

CInt csub(const CInt& a, const CInt& b) { return {a.re - b.re, a.im - b.im}; }

Int cnorm2(const CInt& a) { return a.re * a.re + a.im * a.im; }

// floor(v / 2^k); right shifts only ever touch nonnegative magnitudes, so
// the implementation-defined behavior of shifting negatives never matters.
Int floor_shift(const Int& v, int k) {
  if (v >= 0) return v >> k;
  Int m = (Int(1) << k) - 1;
  Int nv = -v + m;
  return -(nv >> k);
}

// Nearest integer to v / 2^k (ties toward +infinity).
Int round_shift(const Int& v, int k) { return floor_shift(v + (Int(1) << (k - 1)), k); }

// floor((a << 16) / s) for s > 0: divides a correction numerator by the
// real number |denom|^2 while appending the 16 extra fractional bits that
// separate the correction grid from the center grid.
Int grid_div(const Int& a, const Int& s) {
  Int t = a << 16;
  Int q = t / s;
  if (t % s != 0 && t < 0) --q;
  return q;
}

// Horner evaluation with x at scale 2^-sp; exact at scale 2^-(deg * sp).
CInt eval_complex_fix(const IntPoly& f, const CInt& x, int sp) {
  CInt acc{Int(f.coeff(f.degree())), Int(0)};
  long long sc = 0;
  for (int i = f.degree() - 1; i >= 0; --i) {
    acc = cmul(acc, x);
    sc += sp;
    Int c = f.coeff(i);
    if (c != 0) acc.re += c << static_cast<unsigned>(sc);
  }
  return acc;
}

// Product of the squarefree parts: same root set, all roots simple.
IntPoly radical(const IntPoly& f) {
  IntPoly out = IntPoly::constant(1);
  for (const auto& [part, mult] : squarefree_decomposition(f)) out *= part;
  return out;
}

// Remainder of a positive integer multiple of a modulo b; the positive
// multiplier keeps signs usable in Sturm sequences.
IntPoly positive_prem(IntPoly a, const IntPoly& b) {
  Int lb = abs(b.leading());
  Int sb = b.leading() < 0 ? Int(-1) : Int(1);
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int delta = a.degree() - b.degree();
    a = lb * a - IntPoly::monomial(sb * a.leading(), delta) * b;
  }
  return a;
}

struct SturmChain {
  std::vector<IntPoly> seq;

  explicit SturmChain(const IntPoly& g) {
    seq.push_back(g);
    if (g.degree() >= 1) {
      seq.push_back(g.derivative());
      while (true) {
        IntPoly r = positive_prem(seq[seq.size() - 2], seq.back());
        if (r.is_zero()) break;
        seq.push_back((-r).primitive_part());
      }
    }
  }

  int variations(const Rat& x) const {
    int count = 0, prev = 0;
    for (const IntPoly& s : seq) {
      int sg = sign_of(s.eval(x));
      if (sg == 0) continue;
      if (prev != 0 && sg != prev) ++count;
      prev = sg;
    }
    return count;
  }

  int count_open(const Rat& a, const Rat& b) const {
    return a >= b ? 0 : variations(a) - variations(b);
  }
};

// Halve the width of a one-root interval until it is at most `width`.
// Requires g(a) and g(b) of opposite signs and no root of g at any midpoint
// encountered (callers arrange rational-root-free g on the interval).
void refine_sign_interval(const IntPoly& g, Rat& a, Rat& b, const Rat& width) {
  int sa = sign_of(g.eval(a));
  while (b - a > width) {
    Rat m = (a + b) / 2;
    if (sign_of(g.eval(m)) == sa)
      a = m;
    else
      b = m;
  }
}

// Sorted pairwise-disjoint isolators for the positive real roots of f: a
// degenerate pair (v, v) is an exact rational root; a proper pair (a, b) is
// an open interval with one sign change, one root, and no rational root.
std::vector<std::pair<Rat, Rat>> isolate_positive(const IntPoly& f, const Rat& width) {
  std::vector<std::pair<Rat, Rat>> found;
  IntPoly g = radical(f);
  if (g.degree() < 1) return found;
  if (g.constant_term() == 0) g = exact_divide(g, IntPoly::monomial(1, 1));
  std::vector<Rat> exact;
  for (const Rat& r : rational_roots(g)) {
    if (r <= 0) continue;
    exact.push_back(r);
    g = exact_divide(g, IntPoly{std::vector<Int>{-numerator(r), denominator(r)}});
  }
  for (const Rat& r : exact) found.emplace_back(r, r);
  if (g.degree() >= 1) {
    SturmChain chain(g);
    Rat bound = cauchy_root_bound(g);
    std::vector<std::pair<Rat, Rat>> work{{Rat(0), bound}};
    while (!work.empty()) {
      auto [a, b] = work.back();
      work.pop_back();
      int cnt = chain.count_open(a, b);
      if (cnt == 0) continue;
      if (cnt > 1) {
        Rat m = (a + b) / 2;
        work.emplace_back(a, m);
        work.emplace_back(m, b);
        continue;
      }
      // shrink past every exact rational root so intervals totally order
      bool blocked = true;
      while (blocked) {
        blocked = false;
        for (const Rat& e : exact)
          if (a < e && e < b) {
            if (chain.count_open(a, e) == 1)
              b = e;
            else
              a = e;
            blocked = true;
          }
      }
      refine_sign_interval(g, a, b, width);
      found.emplace_back(a, b);
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

// One Graeffe root-squaring step: result has the squares of the roots of f.
IntPoly graeffe_step(const IntPoly& f) {
  std::vector<Int> even, odd;
  for (int i = 0; i <= f.degree(); ++i)
    (i % 2 == 0 ? even : odd).push_back(f.coeff(i));
  IntPoly e{std::move(even)}, o{std::move(odd)};
  IntPoly g = e * e - (o * o).times_power(1);
  if (g.leading() < 0) g = -g;
  return g.primitive_part();
}

// Coefficient bracket for the minimal root modulus of h, h(0) != 0.  The
// upper bound is the better of the geometric mean |c0/cn|^(1/n) and the
// harmonic bound n*|c0/c1| (the reciprocal roots sum to -c1/c0).
std::pair<Rat, Rat> coeff_min_modulus_brackets(const IntPoly& h) {
  int n = h.degree();
  Int maxrest = 0;
  for (int i = 1; i <= n; ++i) {
    Int a = abs(h.coeff(i));
    if (a > maxrest) maxrest = a;
  }
  Int c0 = abs(h.constant_term());
  Int lead = abs(h.leading());
  Rat lo(c0, c0 + maxrest);
  Rat hi = nthroot_brackets(Rat(c0, lead), n).second;
  if (h.coeff(1) != 0) {
    Int c1 = abs(h.coeff(1));
    Rat harmonic = Rat(n) * Rat(c0, c1);
    if (harmonic < hi) hi = harmonic;
  }
  return {lo, hi};
}

}  // namespace

std::pair<Rat, Rat> sqrt_brackets(const Rat& x) {
  if (x < 0) throw error(errc::invalid_input, "square root of a negative number");
  if (x == 0) return {Rat(0), Rat(0)};
  Int p = numerator(x), q = denominator(x);
  Int s = p * q;
  Int r = sqrt(s);
  Rat lo(r, q);
  Rat hi = r * r == s ? lo : Rat(r + 1, q);
  return {lo, hi};
}

Rat cauchy_root_bound(const IntPoly& f) {
  if (f.is_zero()) throw error(errc::invalid_input, "root bound of the zero polynomial");
  Int maxc = 0;
  for (int i = 0; i < f.degree(); ++i) {
    Int a = abs(f.coeff(i));
    if (a > maxc) maxc = a;
  }
  Int lead = abs(f.leading());
  return 1 + Rat(maxc, lead);
}

int sturm_count(const IntPoly& f, const Rat& a, const Rat& b) {
  if (f.is_zero()) throw error(errc::invalid_input, "root count of the zero polynomial");
  if (a > b) throw error(errc::invalid_input, "interval endpoints out of order");
  IntPoly g = radical(f);
  if (g.degree() < 1) return 0;
  if (g.eval(a) == 0 || g.eval(b) == 0)
    throw error(errc::endpoint_is_root, "interval endpoint is a root");
  if (a == b) return 0;
  return SturmChain(g).count_open(a, b);
}

std::pair<Rat, Rat> graeffe_min_modulus_brackets(const IntPoly& f, int rounds) {
  if (f.degree() < 1) throw error(errc::invalid_input, "modulus bracket needs a nonconstant polynomial");
  if (f.constant_term() == 0) throw error(errc::invalid_input, "modulus bracket needs a nonzero constant term");
  if (rounds < 0 || rounds > 16) throw error(errc::parameter_out_of_range, "Graeffe rounds must be in [0, 16]");
  IntPoly h = f;
  Rat lo(0), hi(-1);
  for (int k = 0;; ++k) {
    auto [l, u] = coeff_min_modulus_brackets(h);
    // unwind k squarings
    for (int j = 0; j < k; ++j) {
      l = sqrt_lo_bits(l, 160);
      u = sqrt_hi_bits(u, 160);
    }
    lo = std::max(lo, l);
    hi = hi < 0 ? u : std::min(hi, u);
    if (k == rounds) break;
    h = graeffe_step(h);
  }
  return {lo, hi};
}

RootReport certified_roots(const IntPoly& f, int precision_bits) {
  if (f.degree() < 1) throw error(errc::invalid_input, "root localization needs degree >= 1");
  if (f.degree() > 64) throw error(errc::invalid_input, "root localization caps at degree 64");
  if (precision_bits < 4) throw error(errc::parameter_out_of_range, "precision below 4 bits");
  if (poly_gcd(f, f.derivative()).degree() != 0)
    throw error(errc::invalid_input, "root localization needs squarefree input");

  bool zero_root = f.constant_term() == 0;
  IntPoly g = zero_root ? exact_divide(f, IntPoly::monomial(1, 1)) : f;

  RootReport report;
  if (zero_root) report.disks.push_back({Rat(0), Rat(0), Rat(0)});
  report.positive_real_isolators = isolate_positive(f, Rat(1, Int(1) << 12));

  if (g.degree() == 0) {
    report.min_modulus_lo = report.min_modulus_hi = Rat(0);
    return report;
  }

  int n = g.degree();
  int p = precision_bits;
  Rat bound = cauchy_root_bound(g);
  // Seed ring at the geometric mean of the root moduli: their product is
  // exactly |a0/an|, so radius (|a0/an|)^(1/n) threads the root annulus and
  // saves the sweeps a Cauchy-bound ring would spend drifting inward.
  Int na0 = abs(g.constant_term()), nan = abs(g.leading());
  Rat r0 = nthroot_brackets(Rat(na0, nan), n).second;
  if (r0 > bound) r0 = bound;
  // The working precision escalates from 64 bits to the target, each stage
  // warm-starting from the previous one, so the expensive full-precision
  // sweeps only polish already-converged points instead of redoing the whole
  // global search with huge rationals.
  int stage_p = p <= 64 ? p : 64;
  // Centers are exact integer numerators on the 2^-stage_p grid and the
  // corrections carry 16 extra fractional bits; every sweep operation below
  // is plain integer arithmetic on those numerators.
  std::vector<CInt> xs;
  {
    Rat sre(2, 5), sim(9, 10), are(1), aim(0);
    for (int k = 0; k < n; ++k) {
      Rat t = are * sre - aim * sim;
      aim = are * sim + aim * sre;
      are = t;
      xs.push_back({rat_to_fix(are * r0, stage_p), rat_to_fix(aim * r0, stage_p)});
    }
  }

  const Int lc(g.leading());
  std::vector<CInt> w(n), best_xs;
  std::vector<Int> radius(n), best_radius;
  Int best_total(-1);
  while (true) {
    const bool final_stage = stage_p == p;
    Int min_total(-1);
    best_total = -1;
    int no_improve = 0;
    int max_sweeps = 64 + 8 * n;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (xs[i].re == xs[j].re && xs[i].im == xs[j].im) xs[j].re += j + 1;
      Int total(0);
      for (int k = 0; k < n; ++k) {
        CInt denom{lc, Int(0)};
        for (int j = 0; j < n; ++j)
          if (j != k) denom = cmul(denom, csub(xs[k], xs[j]));
        // The evaluation sits at scale n*stage_p and denom at (n-1)*stage_p,
        // so the correction value/denom lives at scale stage_p; multiplying
        // through the conjugate and dividing by the real |denom|^2 with 16
        // appended bits lands it on the correction grid with error under one
        // grid unit per part. The +2 pad hands that error (and the sqrt
        // ceiling) back to the radius, keeping the disks rigorous.
        CInt num = cmul(eval_complex_fix(g, xs[k], stage_p), CInt{denom.re, -denom.im});
        if (num.re == 0 && num.im == 0) {
          w[k].re = 0;
          w[k].im = 0;
          radius[k] = 0;
        } else {
          Int s2 = cnorm2(denom);
          w[k].re = grid_div(num.re, s2);
          w[k].im = grid_div(num.im, s2);
          Int n2 = cnorm2(w[k]);
          Int mag = sqrt(n2);
          if (mag * mag != n2) ++mag;
          radius[k] = Int(n) * (mag + 2);
        }
        total += radius[k];
      }
      bool certified = true;
      for (int i = 0; i < n && certified; ++i) {
        if (zero_root && (cnorm2(xs[i]) << 32) <= radius[i] * radius[i]) certified = false;
        for (int j = i + 1; j < n && certified; ++j) {
          Int rr = radius[i] + radius[j];
          if ((cnorm2(csub(xs[i], xs[j])) << 32) <= rr * rr) certified = false;
        }
      }
      // keep the tightest certified snapshot and stop only once the total
      // radius has stopped improving, so disjointness reached mid-flight can
      // never freeze fat disks
      if (final_stage && certified && (best_total < 0 || total < best_total)) {
        best_total = total;
        best_xs = xs;
        best_radius = radius;
      }
      if (min_total < 0 || total < min_total) {
        min_total = total;
        no_improve = 0;
      } else {
        ++no_improve;
      }
      if (final_stage && best_total == 0) break;
      if (!final_stage && total == 0) break;
      if (no_improve >= 4 && (!final_stage || best_total >= 0)) break;
      for (int k = 0; k < n; ++k) {
        xs[k].re -= round_shift(w[k].re, 16);
        xs[k].im -= round_shift(w[k].im, 16);
      }
    }
    if (final_stage) break;
    int up = (2 * stage_p < p ? 2 * stage_p : p) - stage_p;
    for (CInt& x : xs) {
      x.re <<= up;
      x.im <<= up;
    }
    stage_p += up;
  }
  if (best_total < 0)
    throw error(errc::precision_cap_exceeded, "root disks failed to separate at this precision");

  const Int center_den = Int(1) << p;
  const Int radius_den = Int(1) << (p + 16);
  Rat lo(-1), hi(-1);
  for (int k = 0; k < n; ++k) {
    Rat cre(best_xs[k].re, center_den), cim(best_xs[k].im, center_den);
    Rat rad(best_radius[k], radius_den);
    report.disks.push_back({cre, cim, rad});
    Rat cn = cre * cre + cim * cim;
    Rat slo = sqrt_lo_bits(cn, p), shi = sqrt_hi_bits(cn, p);
    Rat dlo = slo - rad;
    if (dlo < 0) dlo = 0;
    Rat dhi = shi + rad;
    if (lo < 0 || dlo < lo) lo = dlo;
    if (hi < 0 || dhi < hi) hi = dhi;
  }
  report.min_modulus_lo = zero_root ? Rat(0) : lo;
  report.min_modulus_hi = zero_root ? Rat(0) : hi;
  return report;
}

bool r_condition(const IntPoly& f, int precision_cap) {
  if (f.is_zero()) throw error(errc::invalid_input, "root modulus condition of the zero polynomial");
  IntPoly g = radical(f);
  if (g.degree() < 1) return true;
  if (g.constant_term() == 0) return true;  // 0 is a root, below every positive root

  while (true) {
    if (SturmChain(g).count_open(Rat(0), cauchy_root_bound(g)) == 0) return true;
    if (g.degree() == 1) return false;
    bool even = true;
    for (int i = 1; i <= g.degree() && even; i += 2)
      if (g.coeff(i) != 0) even = false;
    if (!even) break;
    // g(t) = h(t^2): squaring all roots preserves the verdict
    std::vector<Int> half;
    for (int i = 0; i <= g.degree(); i += 2) half.push_back(g.coeff(i));
    g = IntPoly{std::move(half)};
    if (g.leading() < 0) g = -g;
  }

  auto isolators = isolate_positive(g, Rat(1, 1 << 8));
  auto [a, b] = isolators.front();
  bool exact = a == b;
  IntPoly qfree = g;  // g without its positive rational roots; safe to bisect
  for (const Rat& r : rational_roots(g))
    if (r > 0) qfree = exact_divide(qfree, IntPoly{std::vector<Int>{-numerator(r), denominator(r)}});
  int graeffe_rounds = 4;
  Rat graeffe_hi = graeffe_min_modulus_brackets(g, graeffe_rounds).second;

  for (int p = 64; p <= precision_cap; p *= 2) {
    if (!exact) refine_sign_interval(qfree, a, b, (b - a) / 256);
    if (exact ? graeffe_hi < a : graeffe_hi <= a) return true;
    RootReport rep;
    try {
      rep = certified_roots(g, p);
    } catch (const error& e) {
      if (e.kind() == errc::precision_cap_exceeded) continue;
      throw;
    }
    std::vector<int> container;
    bool outside_ok = true;
    for (size_t i = 0; i < rep.disks.size(); ++i) {
      const Disk& d = rep.disks[i];
      Rat cn = d.center_re * d.center_re + d.center_im * d.center_im;
      Rat mlo = sqrt_lo_bits(cn, p), mhi = sqrt_hi_bits(cn, p);
      Rat ub = mhi + d.radius;
      if (exact ? ub < a : ub <= a) return true;  // a root strictly closer than the smallest positive one
      bool may_contain = abs(d.center_im) <= d.radius && d.center_re + d.radius >= a &&
                         d.center_re - d.radius <= b;
      if (may_contain)
        container.push_back(static_cast<int>(i));
      else if (exact ? mlo - d.radius <= a : mlo - d.radius < b)
        outside_ok = false;
    }
    if (container.size() == 1 && outside_ok) return false;
    if (graeffe_rounds < 8) {
      // sharpen the cheap modulus bound before paying for the next precision level
      graeffe_rounds = 8;
      graeffe_hi = graeffe_min_modulus_brackets(g, graeffe_rounds).second;
    }
  }
  throw error(errc::indeterminate, "modulus tie unresolved within precision and Graeffe budgets");
}

}  // namespace goodfact

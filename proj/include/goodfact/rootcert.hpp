#pragma once

// Certified localization of the complex roots of integer polynomials.  All
// reported regions come with exact rational certificates; floating point is
// never trusted, and in fact never used.

#include <utility>
#include <vector>

#include "goodfact/polyring.hpp"

namespace goodfact {

// Closed disk in the complex plane with rational data.  A radius of zero
// means the center itself was verified to be a root by exact evaluation.
struct Disk {
  Rat center_re;
  Rat center_im;
  Rat radius;
};

// Localization of every root of a squarefree polynomial: one disk per root,
// pairwise disjoint, plus exact isolating intervals for the positive real
// roots and a rational bracket on the minimal root modulus.
struct RootReport {
  std::vector<Disk> disks;
  std::vector<std::pair<Rat, Rat>> positive_real_isolators;
  Rat min_modulus_lo;
  Rat min_modulus_hi;
};

// Exact brackets lo <= sqrt(x) <= hi for x >= 0, with lo == hi exactly when
// x is a square of a rational.
std::pair<Rat, Rat> sqrt_brackets(const Rat& x);

// 1 + max_i |a_i| / |a_n|.  Every complex root z of f satisfies |z| < bound.
Rat cauchy_root_bound(const IntPoly& f);

// Number of distinct real roots of f in the open interval (a, b).  f is
// replaced by its squarefree part first, so multiplicities never count.
// Throws endpoint_is_root if a or b is itself a root.
int sturm_count(const IntPoly& f, const Rat& a, const Rat& b);

// Bracket on the minimal root modulus of f (which must have f(0) != 0),
// computed from coefficient bounds after `rounds` Graeffe root-squaring
// steps.  Tightens as rounds grows; exact arithmetic throughout.
std::pair<Rat, Rat> graeffe_min_modulus_brackets(const IntPoly& f, int rounds);

// Simultaneous root refinement at the given working precision (bits after
// the binary point) until the Weierstrass disks around the iterates are
// pairwise disjoint, which certifies one root per disk.  Throws
// precision_cap_exceeded when the iteration budget for this precision runs
// out without separation.  f must be squarefree of degree 1..64.
RootReport certified_roots(const IntPoly& f, int precision_bits = 256);

// True iff no positive real root of f attains the minimal modulus among all
// complex roots of f; vacuously true when f has no positive real root and
// for constant f.  Decided exactly: Sturm isolation of the smallest positive
// real root, certified disks at doubling precision up to precision_cap, and
// Graeffe modulus brackets.  Throws indeterminate if every budget is spent
// with an unresolved modulus tie.
bool r_condition(const IntPoly& f, int precision_cap = 8192);

}  // namespace goodfact

#pragma once

// Exact rational generating functions and the analytics built on their
// coefficient streams: arithmetic, truncation identities, growth profiles.

#include <string>
#include <vector>

#include "goodfact/polyring.hpp"

namespace goodfact {

// Reduced quotient num/den with den(0) == 1.  The unit constant term makes
// the power-series expansion exist with integer coefficients whenever num is
// integral, and the reduced canonical form makes equality coefficientwise.
class RationalSeries {
 public:
  RationalSeries();  // the zero series 0/1
  explicit RationalSeries(IntPoly num);
  // Reduces by the polynomial gcd and the common integer content, then
  // normalizes the denominator constant term to +1.  Throws invalid_input if
  // den == 0 or the reduced denominator has non-unit constant term (the
  // expansion would not be integral).
  RationalSeries(IntPoly num, IntPoly den);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  std::string str() const;

  // First n expansion coefficients via the recurrence induced by den;
  // identical to polynomial long division.  n <= 0 yields an empty vector.
  std::vector<Int> coefficients(int n) const;

  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  RationalSeries at_neg_t() const;          // t -> -t
  RationalSeries times_power(int k) const;  // multiply by t^k, k >= 0

  bool operator==(const RationalSeries& b) const {
    return num_ == b.num_ && den_ == b.den_;
  }
  bool operator!=(const RationalSeries& b) const { return !(*this == b); }

 private:
  IntPoly num_, den_;
};

// Streams expansion coefficients one at a time with O(deg den) state, so deep
// scans need neither quadratic storage nor re-expansion.
class CoeffStream {
 public:
  explicit CoeffStream(const RationalSeries& rs);
  Int next();  // c_0, c_1, c_2, ... on successive calls
  long long index() const { return produced_; }  // index next() will produce

 private:
  std::vector<Int> num_, den_;
  std::vector<Int> window_;  // last deg(den) coefficients, ring buffer
  long long produced_ = 0;
};

// Levin's truncation identity P_M - t * H(-t) * P_k.  H must have Hilbert
// shape, i.e. reduced denominator a power of 1 - t; otherwise
// hilbert_shape_violation.
RationalSeries levin_truncation(const RationalSeries& P_M, const RationalSeries& H,
                                const RationalSeries& P_k);

// Foxby's assembly g(t) + t^d * P_L of a Bass series from its degree-< d head
// and a shifted Poincare tail.  Throws degree_violation when deg g >= d and
// parameter_out_of_range when d < 0.
RationalSeries foxby_bass(const IntPoly& g, int d, const RationalSeries& P_L);

// Growth report over a scanned window: the coefficient prefix, exact rational
// brackets on the curvature (reciprocal of the smallest denominator root
// modulus), and shape flags.  Flags describe only the window [deg den,
// horizon]; they never assert anything about the unscanned tail.
struct BettiProfile {
  RationalSeries source;
  std::vector<Int> prefix;  // coefficients 0 .. horizon inclusive
  Rat curvature_lo;         // both 0 when the series is a polynomial
  Rat curvature_hi;
  bool polynomial = false;
  bool eventually_nondecreasing = false;  // b_{n+1} >= b_n on the window
  bool period2 = false;                   // b_{n+2} == b_n on the window
};

// Requires horizon >= 2*deg(den) + 2 (parameter_out_of_range otherwise).
// When declared_nonnegative, any negative prefix coefficient throws
// negative_coefficient: Betti and Bass numbers cannot be negative, so a
// negative entry means the series was mislabeled as one of those.
BettiProfile betti_profile(const RationalSeries& rs, int horizon = 500,
                           bool declared_nonnegative = true);

}  // namespace goodfact

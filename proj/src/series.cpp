#include "goodfact/series.hpp"

#include <utility>

#include "goodfact/rootcert.hpp"

namespace goodfact {

namespace {

const IntPoly& one_poly() {
  static const IntPoly one = IntPoly::constant(1);
  return one;
}

IntPoly squarefree_radical(const IntPoly& f) {
  IntPoly rad = one_poly();
  for (const auto& [part, mult] : squarefree_decomposition(f)) rad *= part;
  return rad;
}

}  // namespace

RationalSeries::RationalSeries() : num_(), den_(one_poly()) {}

RationalSeries::RationalSeries(IntPoly num)
    : RationalSeries(std::move(num), one_poly()) {}

RationalSeries::RationalSeries(IntPoly num, IntPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw error(errc::invalid_input, "series denominator is zero");
  if (num_.is_zero()) {
    den_ = one_poly();
    return;
  }
  IntPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
  }
  Int na = num_.content();
  Int da = den_.content();
  Int c = gcd(na, da);
  if (c > 1) {
    IntPoly cc = IntPoly::constant(c);
    num_ = exact_divide(num_, cc);
    den_ = exact_divide(den_, cc);
  }
  Int d0 = den_.constant_term();
  if (d0 == -1) {
    num_ = -num_;
    den_ = -den_;
  } else if (d0 != 1) {
    throw error(errc::invalid_input,
                "series denominator must reduce to unit constant term");
  }
}

std::string RationalSeries::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::vector<Int> RationalSeries::coefficients(int n) const {
  std::vector<Int> out;
  if (n <= 0) return out;
  out.reserve(static_cast<size_t>(n));
  CoeffStream stream(*this);
  for (int i = 0; i < n; ++i) out.push_back(stream.next());
  return out;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  return RationalSeries(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
  return RationalSeries(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  return RationalSeries(a.num_ * b.num_, a.den_ * b.den_);
}

RationalSeries RationalSeries::at_neg_t() const {
  return RationalSeries(num_.at_neg_t(), den_.at_neg_t());
}

RationalSeries RationalSeries::times_power(int k) const {
  if (k < 0) throw error(errc::parameter_out_of_range, "times_power needs k >= 0");
  return RationalSeries(num_.times_power(k), den_);
}

CoeffStream::CoeffStream(const RationalSeries& rs)
    : num_(rs.num().coeffs()), den_(rs.den().coeffs()) {
  if (den_.size() > 1) window_.assign(den_.size() - 1, Int(0));
}

Int CoeffStream::next() {
  const long long n = produced_;
  Int b = n < static_cast<long long>(num_.size()) ? num_[static_cast<size_t>(n)]
                                                  : Int(0);
  // den_[0] == 1, so b_n = a_n - sum_{j >= 1} den_[j] * b_{n-j}.
  const long long m = static_cast<long long>(window_.size());
  for (long long j = 1; j <= m && j <= n; ++j)
    b -= den_[static_cast<size_t>(j)] * window_[static_cast<size_t>((n - j) % m)];
  if (m > 0) window_[static_cast<size_t>(n % m)] = b;
  ++produced_;
  return b;
}

RationalSeries levin_truncation(const RationalSeries& P_M, const RationalSeries& H,
                                const RationalSeries& P_k) {
  static const IntPoly one_minus_t{1, -1};
  IntPoly d = H.den();
  while (d.degree() > 0) {
    auto q = try_divide(d, one_minus_t);
    if (!q)
      throw error(errc::hilbert_shape_violation,
                  "Hilbert denominator must be a power of 1 - t");
    d = *q;
  }
  return P_M - (H.at_neg_t() * P_k).times_power(1);
}

RationalSeries foxby_bass(const IntPoly& g, int d, const RationalSeries& P_L) {
  if (d < 0) throw error(errc::parameter_out_of_range, "dimension must be nonnegative");
  if (g.degree() >= d)
    throw error(errc::degree_violation, "head degree must stay below the dimension");
  return RationalSeries(g) + P_L.times_power(d);
}

BettiProfile betti_profile(const RationalSeries& rs, int horizon,
                           bool declared_nonnegative) {
  const int m = rs.den().degree();
  if (horizon < 2 * m + 2)
    throw error(errc::parameter_out_of_range, "horizon must be at least 2*deg(den) + 2");

  BettiProfile out;
  out.source = rs;
  out.prefix = rs.coefficients(horizon + 1);
  if (declared_nonnegative)
    for (const Int& c : out.prefix)
      if (c < 0)
        throw error(errc::negative_coefficient, "coefficient stream goes negative");

  out.polynomial = rs.is_polynomial();
  if (!out.polynomial) {
    // den(0) == 1 rules out zero roots, so with enough precision the disks
    // separate from the origin and the modulus bracket turns positive.
    IntPoly rad = squarefree_radical(rs.den());
    for (int bits = 192;; bits *= 2) {
      RootReport rep = certified_roots(rad, bits);
      if (rep.min_modulus_lo > 0) {
        out.curvature_lo = Rat(1) / rep.min_modulus_hi;
        out.curvature_hi = Rat(1) / rep.min_modulus_lo;
        break;
      }
      if (bits >= 4096)
        throw error(errc::precision_cap_exceeded,
                    "could not separate denominator roots from the origin");
    }
  }

  // The first deg(den) coefficients are transient; the flags scan past them.
  bool nondecr = true;
  bool per2 = true;
  for (int n = m; n + 1 <= horizon && nondecr; ++n)
    if (out.prefix[static_cast<size_t>(n + 1)] < out.prefix[static_cast<size_t>(n)])
      nondecr = false;
  for (int n = m; n + 2 <= horizon && per2; ++n)
    if (out.prefix[static_cast<size_t>(n + 2)] != out.prefix[static_cast<size_t>(n)])
      per2 = false;
  out.eventually_nondecreasing = nondecr;
  out.period2 = per2;
  return out;
}

}  // namespace goodfact

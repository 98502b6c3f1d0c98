#pragma once

// Exact univariate polynomial arithmetic over the integers, with complete
// factorization into rational irreducibles.  Coefficients are arbitrary
// precision throughout; nothing here rounds.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace goodfact {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

enum class errc {
  invalid_input,
  non_exact_division,
  degree_cap_exceeded,
  endpoint_is_root,
  precision_cap_exceeded,
  indeterminate,
  negative_coefficient,
  hilbert_shape_violation,
  degree_violation,
  depth_zero,
  hypothesis_violated,
  hypothesis_unmet,
  parameter_out_of_range,
  inconsistent,
  verification_failure,
};

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

// Dense integer polynomial, coefficients ascending by power, no trailing
// zeros.  The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<Int> ascending) : c_(ascending) { normalize(); }
  explicit IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { normalize(); }

  static IntPoly constant(const Int& c);
  static IntPoly monomial(const Int& coeff, int power);

  // Text form: [sign] term (sign term)*, term := INT | INT '*'? 't' ['^' UINT]
  // | 't' ['^' UINT].  str() is the canonical inverse: ascending powers,
  // unit coefficients elided, e.g. "1 - 2*t - 4*t^2 + t^3".
  static IntPoly parse(std::string_view text);
  std::string str() const;

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Int coeff(int i) const;
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& leading() const;
  Int constant_term() const { return coeff(0); }

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const Int& s, const IntPoly& f);
  IntPoly& operator+=(const IntPoly& b) { return *this = *this + b; }
  IntPoly& operator-=(const IntPoly& b) { return *this = *this - b; }
  IntPoly& operator*=(const IntPoly& b) { return *this = *this * b; }

  bool operator==(const IntPoly& b) const { return c_ == b.c_; }
  // Total order: degree first, then coefficients from the constant term up.
  static int compare(const IntPoly& a, const IntPoly& b);
  bool operator<(const IntPoly& b) const { return compare(*this, b) < 0; }

  IntPoly times_power(int k) const;  // multiply by t^k
  IntPoly derivative() const;
  IntPoly reversed() const;  // t^deg * f(1/t)
  IntPoly at_neg_t() const;  // f(-t)

  Int content() const;  // gcd of coefficients, >= 0
  IntPoly primitive_part() const;

  Rat eval(const Rat& x) const;
  Int eval_int(const Int& x) const;

 private:
  void normalize();
  std::vector<Int> c_;
};

// Exact division in Z[t]: nullopt unless b*q == a for integer q.
std::optional<IntPoly> try_divide(const IntPoly& a, const IntPoly& b);
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);  // throws non_exact_division
bool divides(const IntPoly& b, const IntPoly& a);

// Primitive gcd with positive leading coefficient; gcd(0,0) == 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// unit * prod(factor_i ^ mult_i) == input.  Factors are primitive,
// irreducible over the rationals, have positive leading coefficient and are
// sorted by IntPoly::compare.  The unit carries the sign together with any
// integer content of the input.
struct Factorization {
  Int unit = 1;
  std::vector<std::pair<IntPoly, int>> factors;
  IntPoly reassemble() const;
};

inline constexpr int kFactorDegreeCap = 16;

// Multiplicity-ascending squarefree parts: f = content * prod part_i ^ mult_i
// with each part primitive, squarefree, positive leading coefficient.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f);

// Landau-Mignotte bound on |coefficient| of any degree-d divisor of f in Z[t].
Int mignotte_coeff_bound(const IntPoly& f, int d);

// Complete factorization over Q via bounded-coefficient exhaustive split
// search; candidate coefficients run over the Landau-Mignotte box and are
// pruned by divisor constraints at t = 0, 1, -1.
Factorization factor(const IntPoly& f, int degree_cap = kFactorDegreeCap);

bool is_irreducible(const IntPoly& f, int degree_cap = kFactorDegreeCap);

// All rational roots, ascending, repeated roots listed once.
std::vector<Rat> rational_roots(const IntPoly& f);

}  // namespace goodfact

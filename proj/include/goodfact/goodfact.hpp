#pragma once

// Search and certification of factorizations c = p * q * r in which p is 1 or
// irreducible, q has nonnegative coefficients, and r is 1 or an irreducible
// polynomial none of whose minimal-modulus roots is positive real; plus the
// positivity scan and the finiteness decision such certificates power.

#include <optional>
#include <string>

#include "goodfact/polyring.hpp"
#include "goodfact/rootcert.hpp"

namespace goodfact {

struct GoodFactorizationCertificate {
  IntPoly p, q, r;
  // Evidence is re-derivable from p, q, r; it is carried so serialized
  // certificates show their work.
  bool p_is_one = false;
  bool p_irreducible = false;
  bool q_nonneg = false;
  bool r_is_one = false;
  bool r_irreducible = false;
  bool r_condition_holds = false;
  RootReport r_report;  // localization of r's roots; empty when r == 1
};

// Deterministic exhaustive search over the irreducible factors of c: the p
// slot takes 1 or a single copy of one irreducible, the r slot likewise
// (subject to the root-modulus condition), q absorbs the rest and must be
// coefficientwise nonnegative.  Signs are redistributed so p and r have
// positive constant terms, which loses no assignments when c(0) > 0.
// Returns the first certificate found, nullopt when the search exhausts.
// Requires c != 0 and c(0) > 0 (invalid_input).  A candidate whose
// root-modulus condition is undecidable is skipped; if the whole search then
// exhausts, indeterminate is thrown instead of claiming nullopt.
std::optional<GoodFactorizationCertificate> find_good_factorization(const IntPoly& c);

struct Validation {
  bool ok = false;
  std::string reason;  // stable failure tag, empty when ok
  explicit operator bool() const { return ok; }
};

// Re-derives every certificate invariant from scratch, independent of how the
// certificate was produced.  Failure tags: product_mismatch,
// q_negative_coefficient, p_not_irreducible, r_not_irreducible,
// r_condition_failed, r_condition_indeterminate.
Validation validate_certificate(const IntPoly& c, const GoodFactorizationCertificate& cert);

enum class PringsheimKind { NegativeCoefficientFound, DividesExactly, Inconclusive };

struct PringsheimVerdict {
  PringsheimKind kind = PringsheimKind::Inconclusive;
  long long negative_index = -1;  // set for NegativeCoefficientFound
};

// If r divides numerator, reports DividesExactly.  Otherwise expands
// numerator / r and scans coefficients 0..horizon for a negative one, which
// must exist when no minimal-modulus root of r is positive real (a wholly
// nonnegative expansion would force its closest singularity onto the
// positive axis).  The caller guarantees r is irreducible and satisfies the
// root-modulus condition; r(0) == 1 and deg r >= 1 are checked
// (invalid_input).
PringsheimVerdict pringsheim_check(const IntPoly& numerator, const IntPoly& r,
                                   long long horizon = 10000);

enum class FinitenessSide { ProjDimFinite, InjDimFinite };

struct FinitenessVerdict {
  FinitenessSide side;
  IntPoly witness_polynomial;  // always coefficientwise nonnegative
};

// Case split on a certificate for b = p*q*r against cleared numerators m and
// n (of b times the two series): if p divides m, then r must divide m/p and
// the verdict is ProjDimFinite with witness (m/p)/r; otherwise p must divide
// n and the symmetric case applies.  Errors: invalid_input when b != p*q*r;
// hypothesis_violated when p divides neither m nor n or the forced division
// by r fails; negative_coefficient when the witness goes negative;
// inconsistent when the verdict disagrees with the direct test b | m
// (resp. b | n).
FinitenessVerdict resolve_finiteness(const IntPoly& b, const GoodFactorizationCertificate& cert,
                                     const IntPoly& m, const IntPoly& n);

}  // namespace goodfact

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "goodfact/goodfact.hpp"
#include "goodfact/polyring.hpp"

namespace goodfact {

// Ring families whose module series share a rational denominator of the
// form c(t) = d(t) * (1+t)^m with d drawn from a fixed parameterized table.
enum class RingFamily { G, GTE, GGO, GH, MinimalMultiplicity, HypersurfaceNote };

struct RingClass {
  RingFamily family = RingFamily::HypersurfaceNote;
  long long l = 0;      // G, GTE, GGO, GH
  long long p = 0;      // GH only
  long long codim = 0;  // MinimalMultiplicity only

  // Named constructors validate the admissible parameter ranges:
  // G needs l >= 4; GTE and GGO need l >= 5; GH needs l >= 5 and 1 <= p <= l;
  // MinimalMultiplicity needs codim >= 2.
  static RingClass g(long long l);
  static RingClass gte(long long l);
  static RingClass ggo(long long l);
  static RingClass gh(long long l, long long p);
  static RingClass minimal_multiplicity(long long codim);
  static RingClass hypersurface_note();

  // 3 for G, 4 for GTE/GGO/GH, the stored value for MinimalMultiplicity,
  // 1 for the hypersurface note.
  int codimension() const;

  std::string str() const;

  friend bool operator==(const RingClass&, const RingClass&) = default;
};

struct CatalogEntry {
  IntPoly d;
  int m = 0;
  IntPoly c;  // always d * (1+t)^m
};

// Exact table row for the class. Throws ParameterOutOfRange when the
// parameters are inadmissible or the class carries no polynomial.
CatalogEntry denominator(const RingClass& rc);

// d(1) == 0, which happens exactly for GH with p == l. The closed forms
// d(1) = -l (G), 2-l (GTE), -l (GGO), p-l (GH) make the equivalence an
// internal consistency check; only the four parameterized families apply.
bool has_embedded_deformation(const RingClass& rc);

// Documentation-only remark backing codimension <= 1 queries: over a
// hypersurface, vanishing of all high Ext or Tor between two modules
// already forces one of them to have finite projective dimension, so no
// denominator bookkeeping is needed there.
const char* hypersurface_remark();

struct SweepRanges {
  long long g_min = 4, g_max = 200;
  long long gte_min = 5, gte_max = 200;
  long long ggo_min = 5, ggo_max = 200;
  long long gh_min = 5, gh_max = 100;  // p sweeps [1, l] for each l
};

enum class SweepOutcome { Certified, NoFactorization, Indeterminate };

struct ClassRecord {
  RingClass rc;
  CatalogEntry entry;
  Int d_at_1;
  Int d_at_minus_1;
  bool embedded = false;
  SweepOutcome outcome = SweepOutcome::NoFactorization;
  std::optional<GoodFactorizationCertificate> certificate;
  std::string failure;  // reason text when no validated certificate exists
};

struct TheoremReport {
  std::vector<ClassRecord> records;  // deterministic parameter order
  long long certified = 0;           // non-embedded classes, all validated
  long long embedded_recorded = 0;   // p == l instances, recorded only
};

// Sweeps every class in the ranges, finds and validates a good
// factorization of c for each one without an embedded deformation, and
// throws VerificationFailure naming the first offender if any such class
// comes back empty, invalid, or undecided. Embedded-deformation instances
// (GH with p == l) are swept for the record but never asserted against.
TheoremReport verify_theorem1(const SweepRanges& ranges = {});

struct HandCaseReport {
  RingClass rc;
  IntPoly d;
  // "irreducible", "linear_factor", "quad_quad_split", or "quad_cubic_split".
  std::string branch;
  std::string detail;
  // Solved shape parameters when a split fires: quad pair
  // (1+at+ut^2)(1+bt+vt^2), or quad (1+at+ut^2) times cubic
  // (1+bt+ct^2+wt^3) with eps = u.
  long long eps = 0, a = 0, b = 0, c = 0;
  std::vector<IntPoly> parts;  // exact product over parts equals d
  bool matches_factorizer = false;
};

// Re-derives the factorization of d by hand: strips the only possible
// rational roots (t = +-1), then exhaustively solves the constant-term-one
// quadratic/cubic coefficient systems over the integers for what remains.
// The derivation never consults the generic factorizer; agreement with it
// is asserted afterwards and reported in matches_factorizer.
HandCaseReport hand_case_crosscheck(const RingClass& rc);

}  // namespace goodfact

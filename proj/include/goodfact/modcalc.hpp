#pragma once

// Abstract module-descriptor calculus: vanishing-index ledgers, depth
// bookkeeping, regular-element transforms, and the periodic-tail scenario
// they combine into.  Indices are data supplied by hypothesis or ledger
// steps, never computed from ring presentations; every operation can append
// its justification to a caller-owned provenance chain.

#include <optional>
#include <string>
#include <vector>

#include "goodfact/series.hpp"

namespace goodfact {

using ProvenanceChain = std::vector<std::string>;

// Top nonvanishing degree of an Ext or Tor ledger.  MinusInfinity is the
// sup of the empty set (everything vanishes, degree 0 included) and is
// deliberately distinct from Finite(0), where degree 0 survives.
enum class ExtTorKind { MinusInfinity, Finite, PlusInfinity, Interval };

struct ExtTorIndex {
  ExtTorKind kind = ExtTorKind::MinusInfinity;
  long long lo = 0, hi = 0;  // Finite stores n twice; Interval keeps lo < hi

  static ExtTorIndex minus_infinity();
  static ExtTorIndex plus_infinity();
  static ExtTorIndex finite(long long n);               // needs n >= 0
  static ExtTorIndex interval(long long a, long long b);  // 0 <= a <= b; a == b collapses

  // Shifts Finite and Interval up by one; fixes both infinities.
  ExtTorIndex plus_one() const;
  bool is_exact() const { return kind != ExtTorKind::Interval; }
  std::string str() const;  // "-inf", "3", "+inf", "[2,3]"

  friend bool operator==(const ExtTorIndex&, const ExtTorIndex&) = default;
};

// Growth data of one abstract module: both resolution series, depth and
// dimension, and the finiteness flags the vanishing formulas consume.
struct ModuleDescriptor {
  std::string label;
  RationalSeries poincare;               // Betti generating function
  std::optional<RationalSeries> bass;    // present only when tracked
  long long depth = 0;
  long long dim = 0;
  bool finite_length = false;
  std::optional<long long> pd_over_deformation;
  bool pd_finite = false;     // always == poincare.is_polynomial()
  bool id_finite = false;     // always == (bass && bass->is_polynomial())
  bool cidim_finite = false;  // supplied, not derivable from the series

  // Throws invalid_input unless 0 <= depth <= dim, finite_length implies
  // depth == 0, both series flags match the series, and any recorded
  // pd_over_deformation is nonnegative.
  void validate() const;

  // Computes pd_finite and id_finite from the series, then validates.
  static ModuleDescriptor make(std::string label, RationalSeries poincare,
                               std::optional<RationalSeries> bass, long long depth, long long dim,
                               bool finite_length = false,
                               std::optional<long long> pd_over_deformation = std::nullopt,
                               bool cidim_finite = false);
};

// Ambient ring data the prediction formulas read.  depth == dim for the
// Cohen-Macaulay rings the formulas target, but both are kept so the
// depth-sensitive variants stay expressible.
struct RingContext {
  long long dim = 0;
  long long depth = 0;
  bool gorenstein_codim_le_4 = false;
};

// Bass series of Hom(M,N) under the hypothesis that all positive-degree Ext
// from M to N vanish: the product P_M * I_N.  The hypothesis is recorded on
// the chain; it is an assumption, not something this function checks.
RationalSeries hom_bass(const RationalSeries& p_m, const RationalSeries& i_n,
                        ProvenanceChain* chain = nullptr);

// Poincare series of M tensor N under the hypothesis that all positive-degree
// Tor vanish: the product P_M * P_N.
RationalSeries tensor_poincare(const RationalSeries& p_m, const RationalSeries& p_n,
                               ProvenanceChain* chain = nullptr);

// Quotient by a regular element, via the mapping cone of multiplication:
// Poincare picks up a factor 1+t (new Betti numbers b_n + b_{n-1}), depth and
// dim drop by one, any recorded pd over the deformation rises by one, and the
// Bass series shifts down one degree (its degree-0 entry vanishes because
// depth >= 1).  Throws depth_zero when no regular element can exist and
// inconsistent when a present Bass series has a nonzero degree-0 entry.
ModuleDescriptor kill_regular_element(const ModuleDescriptor& md,
                                      ProvenanceChain* chain = nullptr);

enum class KilledSide { First, Second };

// Effect of a regular-element quotient on the top nonvanishing Ext degree:
// killing inside the first argument raises it by exactly one, killing inside
// the second leaves it unchanged.
ExtTorIndex ext_ledger(const ExtTorIndex& e, KilledSide side, ProvenanceChain* chain = nullptr);

// Effect of a first-argument quotient on the top nonvanishing Tor degree:
// exactly +1 when the element annihilates the second module or the second
// module has finite length, otherwise the honest bracket [t, t+1].
ExtTorIndex tor_ledger(const ExtTorIndex& t, bool annihilated_or_finite_length,
                       ProvenanceChain* chain = nullptr);

enum class VanishingQuery { ExtMN, ExtNM, Tor };

// Predicted top nonvanishing degree, assuming the queried index is finite:
// Ext out of M tops out at dim - depth M, Ext out of N at dim - depth N, and
// Tor is bracketed by [0, max of the two].  Requires one of the modules to
// carry a finiteness flag (cidim_finite or pd_finite); throws
// hypothesis_unmet otherwise.
ExtTorIndex predicted_vanishing(const RingContext& ring, const ModuleDescriptor& m,
                                const ModuleDescriptor& n, VanishingQuery which);

// Self-test for projective dimension over the flagged rings: the top
// self-extension degree of M equals pd M.  Finite(n) returns n and demands a
// polynomial Poincare series of degree exactly n (a finite index forces
// finite pd); PlusInfinity returns nullopt and demands a nonpolynomial
// series; any mismatch throws inconsistent.  Exact input required, so an
// Interval throws invalid_input, and MinusInfinity (possible only for the
// zero module, which has no descriptor here) throws inconsistent.
std::optional<long long> selftest_pd(const RingContext& ring, const ModuleDescriptor& m,
                                     const ExtTorIndex& e_mm);

// End-to-end depth-reduction scenario: start from a pair (U, V) with
// period-2 tail, pd 1 over the deformation, both vanishing indices 0, and
// depth d; quotient both modules by a length-d regular sequence and push
// every index through the ledgers.  The report carries the final
// finite-length pair, all three indices (each exactly d), the deformation
// pd d+1, the period-2 verdict on the d-th syzygy tail, and the full
// provenance chain.  Throws parameter_out_of_range when d < 0 and
// verification_failure if any asserted outcome fails to materialize.
struct ScenarioReport {
  long long d = 0;
  ModuleDescriptor m;  // U after d quotients
  ModuleDescriptor n;  // V after d quotients
  ExtTorIndex e_mn;
  ExtTorIndex e_nm;
  ExtTorIndex t_mn;
  long long pd_q_m = 0;
  bool syzygy_tail_period2 = false;
  ProvenanceChain provenance;
};

ScenarioReport corollary_last_scenario(long long d);

}  // namespace goodfact

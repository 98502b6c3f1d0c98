#include "goodfact/modcalc.hpp"

#include <string>
#include <utility>
#include <vector>

namespace goodfact {

namespace {

void note(ProvenanceChain* chain, std::string line) {
  if (chain != nullptr) chain->push_back(std::move(line));
}

IntPoly t_power(long long k) {
  std::vector<Int> cs(static_cast<size_t>(k), Int(0));
  cs.push_back(Int(1));
  return IntPoly{std::move(cs)};
}

}  // namespace

ExtTorIndex ExtTorIndex::minus_infinity() { return {}; }

ExtTorIndex ExtTorIndex::plus_infinity() {
  ExtTorIndex x;
  x.kind = ExtTorKind::PlusInfinity;
  return x;
}

ExtTorIndex ExtTorIndex::finite(long long n) {
  if (n < 0) throw error(errc::invalid_input, "finite vanishing index needs n >= 0");
  ExtTorIndex x;
  x.kind = ExtTorKind::Finite;
  x.lo = x.hi = n;
  return x;
}

ExtTorIndex ExtTorIndex::interval(long long a, long long b) {
  if (a < 0 || a > b) throw error(errc::invalid_input, "index interval needs 0 <= a <= b");
  if (a == b) return finite(a);
  ExtTorIndex x;
  x.kind = ExtTorKind::Interval;
  x.lo = a;
  x.hi = b;
  return x;
}

ExtTorIndex ExtTorIndex::plus_one() const {
  switch (kind) {
    case ExtTorKind::Finite:
      return finite(lo + 1);
    case ExtTorKind::Interval:
      return interval(lo + 1, hi + 1);
    default:
      return *this;
  }
}

std::string ExtTorIndex::str() const {
  switch (kind) {
    case ExtTorKind::MinusInfinity:
      return "-inf";
    case ExtTorKind::PlusInfinity:
      return "+inf";
    case ExtTorKind::Finite:
      return std::to_string(lo);
    default:
      return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  }
}

void ModuleDescriptor::validate() const {
  if (depth < 0 || depth > dim)
    throw error(errc::invalid_input, "module descriptor needs 0 <= depth <= dim");
  if (finite_length && depth != 0)
    throw error(errc::invalid_input, "a finite-length module has depth 0");
  if (pd_finite != poincare.is_polynomial())
    throw error(errc::invalid_input, "pd_finite must mirror a polynomial Poincare series");
  if (id_finite != (bass.has_value() && bass->is_polynomial()))
    throw error(errc::invalid_input, "id_finite must mirror a present polynomial Bass series");
  if (pd_over_deformation && *pd_over_deformation < 0)
    throw error(errc::invalid_input, "pd over the deformation cannot be negative");
}

ModuleDescriptor ModuleDescriptor::make(std::string label, RationalSeries poincare,
                                        std::optional<RationalSeries> bass, long long depth,
                                        long long dim, bool finite_length,
                                        std::optional<long long> pd_over_deformation,
                                        bool cidim_finite) {
  ModuleDescriptor md;
  md.label = std::move(label);
  md.poincare = std::move(poincare);
  md.bass = std::move(bass);
  md.depth = depth;
  md.dim = dim;
  md.finite_length = finite_length;
  md.pd_over_deformation = pd_over_deformation;
  md.pd_finite = md.poincare.is_polynomial();
  md.id_finite = md.bass.has_value() && md.bass->is_polynomial();
  md.cidim_finite = cidim_finite;
  md.validate();
  return md;
}

RationalSeries hom_bass(const RationalSeries& p_m, const RationalSeries& i_n,
                        ProvenanceChain* chain) {
  note(chain, "hom series: assuming all positive-degree Ext vanish, Bass(Hom) = P * I");
  return p_m * i_n;
}

RationalSeries tensor_poincare(const RationalSeries& p_m, const RationalSeries& p_n,
                               ProvenanceChain* chain) {
  note(chain, "tensor series: assuming all positive-degree Tor vanish, P(tensor) = P * P");
  return p_m * p_n;
}

ModuleDescriptor kill_regular_element(const ModuleDescriptor& md, ProvenanceChain* chain) {
  md.validate();
  if (md.depth < 1)
    throw error(errc::depth_zero, "no regular element exists on a depth-0 module");

  std::optional<RationalSeries> bass;
  if (md.bass) {
    // depth >= 1 forces the degree-0 Bass number to vanish, which is what
    // makes the one-step downshift a power series again.
    if (md.bass->num().constant_term() != 0)
      throw error(errc::inconsistent,
                  "depth >= 1 needs a vanishing degree-0 Bass number before the quotient");
    bass = md.bass->is_zero()
               ? *md.bass
               : RationalSeries(exact_divide(md.bass->num(), t_power(1)), md.bass->den());
  }

  ModuleDescriptor out = ModuleDescriptor::make(
      md.label + "/g", md.poincare * RationalSeries(IntPoly::parse("1 + t")), std::move(bass),
      md.depth - 1, md.dim - 1, md.dim - 1 == 0,
      md.pd_over_deformation ? std::optional<long long>(*md.pd_over_deformation + 1)
                             : std::nullopt,
      md.cidim_finite);
  note(chain, "quotient " + md.label + " by a regular element: Poincare gains a factor 1+t, "
                  "depth " +
                  std::to_string(md.depth) + " -> " + std::to_string(out.depth) +
                  (md.bass ? ", Bass shifts down one degree" : ""));
  return out;
}

ExtTorIndex ext_ledger(const ExtTorIndex& e, KilledSide side, ProvenanceChain* chain) {
  if (side == KilledSide::First) {
    ExtTorIndex out = e.plus_one();
    note(chain, "ext ledger: first-argument quotient, " + e.str() + " -> " + out.str());
    return out;
  }
  note(chain, "ext ledger: second-argument quotient leaves " + e.str());
  return e;
}

ExtTorIndex tor_ledger(const ExtTorIndex& t, bool annihilated_or_finite_length,
                       ProvenanceChain* chain) {
  if (annihilated_or_finite_length) {
    ExtTorIndex out = t.plus_one();
    note(chain, "tor ledger: quotient with annihilated or finite-length partner, exact " +
                    t.str() + " -> " + out.str());
    return out;
  }
  ExtTorIndex out = t;
  switch (t.kind) {
    case ExtTorKind::Finite:
      out = ExtTorIndex::interval(t.lo, t.lo + 1);
      break;
    case ExtTorKind::Interval:
      out = ExtTorIndex::interval(t.lo, t.hi + 1);
      break;
    default:
      break;  // both infinities absorb the step
  }
  note(chain, "tor ledger: quotient without collapse flag, " + t.str() + " -> " + out.str());
  return out;
}

ExtTorIndex predicted_vanishing(const RingContext& ring, const ModuleDescriptor& m,
                                const ModuleDescriptor& n, VanishingQuery which) {
  if (ring.depth < 0 || ring.depth > ring.dim)
    throw error(errc::invalid_input, "ring context needs 0 <= depth <= dim");
  m.validate();
  n.validate();
  if (!(m.cidim_finite || m.pd_finite || n.cidim_finite || n.pd_finite))
    throw error(errc::hypothesis_unmet,
                "the finiteness conclusion needs one module with finite CI or projective "
                "dimension");
  long long em = ring.dim - m.depth;
  long long en = ring.dim - n.depth;
  if (em < 0 || en < 0)
    throw error(errc::invalid_input, "module depth exceeds the ring dimension");
  switch (which) {
    case VanishingQuery::ExtMN:
      return ExtTorIndex::finite(em);
    case VanishingQuery::ExtNM:
      return ExtTorIndex::finite(en);
    default:
      return ExtTorIndex::interval(0, em > en ? em : en);
  }
}

std::optional<long long> selftest_pd(const RingContext& ring, const ModuleDescriptor& m,
                                     const ExtTorIndex& e_mm) {
  if (!ring.gorenstein_codim_le_4)
    throw error(errc::hypothesis_unmet,
                "the self-test needs the small-codimension Gorenstein flag");
  m.validate();
  switch (e_mm.kind) {
    case ExtTorKind::Interval:
      throw error(errc::invalid_input, "the self-test needs an exact index, not an interval");
    case ExtTorKind::MinusInfinity:
      throw error(errc::inconsistent,
                  "only the zero module has no self-extensions in degree 0");
    case ExtTorKind::PlusInfinity:
      if (m.pd_finite)
        throw error(errc::inconsistent,
                    "polynomial Poincare series contradicts an infinite self-extension index");
      return std::nullopt;
    default:
      break;
  }
  // a finite self-extension index forces finite pd, so the series must agree
  if (!m.pd_finite)
    throw error(errc::inconsistent,
                "finite self-extension index contradicts a nonpolynomial Poincare series");
  if (m.poincare.num().degree() != e_mm.lo)
    throw error(errc::inconsistent, "polynomial Poincare degree " +
                                        std::to_string(m.poincare.num().degree()) +
                                        " contradicts self-extension index " + e_mm.str());
  return e_mm.lo;
}

ScenarioReport corollary_last_scenario(long long d) {
  if (d < 0) throw error(errc::parameter_out_of_range, "the scenario needs d >= 0");

  ScenarioReport rep;
  rep.d = d;
  ProvenanceChain& chain = rep.provenance;

  ModuleDescriptor u =
      ModuleDescriptor::make("U", RationalSeries(IntPoly::constant(1), IntPoly::parse("1 - t^2")),
                             std::nullopt, d, d, d == 0, 1, true);
  RationalSeries v_bass = RationalSeries(IntPoly::constant(1), IntPoly::parse("1 - t"))
                              .times_power(static_cast<int>(d));
  ModuleDescriptor v =
      ModuleDescriptor::make("V", RationalSeries(IntPoly::constant(1), IntPoly::parse("1 - t")),
                             v_bass, d, d, d == 0);
  note(&chain, "base: U has a period-2 Betti tail, pd 1 over the deformation, depth " +
                   std::to_string(d));
  note(&chain, "base: V has nonpolynomial Poincare and Bass series, depth " + std::to_string(d));
  note(&chain, "base: e(U,V) = 0, t(U,V) = 0, and e(V,U) = 0 on the Gorenstein side");

  ExtTorIndex e_mn = ExtTorIndex::finite(0);
  ExtTorIndex e_nm = ExtTorIndex::finite(0);
  ExtTorIndex t_mn = ExtTorIndex::finite(0);

  for (long long i = 1; i <= d; ++i) {
    note(&chain, "step " + std::to_string(i) + ": quotient both modules by g_" +
                     std::to_string(i));
    v = kill_regular_element(v, &chain);
    note(&chain, "tor ledger: second-argument quotient leaves " + t_mn.str() +
                     " (the period-2 tail of the first module pins the index)");
    u = kill_regular_element(u, &chain);
    e_mn = ext_ledger(e_mn, KilledSide::First, &chain);
    e_mn = ext_ledger(e_mn, KilledSide::Second, &chain);
    e_nm = ext_ledger(e_nm, KilledSide::Second, &chain);
    e_nm = ext_ledger(e_nm, KilledSide::First, &chain);
    t_mn = tor_ledger(t_mn, true, &chain);
  }

  u.label = "M";
  v.label = "N";
  note(&chain, "rename the length-d quotients: M = U/(g_1..g_d), N = V/(g_1..g_d)");

  if (e_mn != ExtTorIndex::finite(d) || e_nm != ExtTorIndex::finite(d) ||
      t_mn != ExtTorIndex::finite(d))
    throw error(errc::verification_failure, "ledger indices did not all reach d");
  if (!u.pd_over_deformation || *u.pd_over_deformation != d + 1)
    throw error(errc::verification_failure, "pd over the deformation did not reach d + 1");
  if (!u.finite_length || !v.finite_length || u.depth != 0 || v.depth != 0)
    throw error(errc::verification_failure, "the quotients are not finite-length modules");
  if (v.pd_finite || v.id_finite)
    throw error(errc::verification_failure, "N must keep infinite pd and id");

  // Period-2 verdict on the d-th syzygy tail of M: drop the first d Betti
  // numbers, then require both the structural recurrence (denominator
  // divides 1 - t^2) and the scanned window to be 2-periodic.
  RationalSeries tail = u.poincare;
  if (d > 0) {
    std::vector<Int> head_cs = u.poincare.coefficients(static_cast<int>(d));
    IntPoly head{std::move(head_cs)};
    IntPoly shifted_num = u.poincare.num() - head * u.poincare.den();
    tail = RationalSeries(exact_divide(shifted_num, t_power(d)), u.poincare.den());
  }
  bool structural = divides(tail.den(), IntPoly::parse("1 - t^2"));
  BettiProfile profile = betti_profile(tail, 16);
  rep.syzygy_tail_period2 = structural && profile.period2;
  if (!rep.syzygy_tail_period2)
    throw error(errc::verification_failure, "the d-th syzygy tail is not 2-periodic");
  note(&chain, "the d-th syzygy tail of M satisfies b_{n+2} = b_n: denominator divides 1 - t^2 "
               "and the scanned window is 2-periodic");

  rep.m = std::move(u);
  rep.n = std::move(v);
  rep.e_mn = e_mn;
  rep.e_nm = e_nm;
  rep.t_mn = t_mn;
  rep.pd_q_m = *rep.m.pd_over_deformation;
  note(&chain, "final: e(M,N) = e(N,M) = t(M,N) = " + std::to_string(d) +
                   ", pd over the deformation = " + std::to_string(d + 1));
  return rep;
}

}  // namespace goodfact

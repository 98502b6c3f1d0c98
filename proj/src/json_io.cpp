#include "goodfact/json_io.hpp"

namespace goodfact {

namespace {

using nlohmann::json;

const char* outcome_tag(SweepOutcome o) {
  switch (o) {
    case SweepOutcome::Certified:
      return "certified";
    case SweepOutcome::NoFactorization:
      return "no_factorization";
    default:
      return "indeterminate";
  }
}

json int_list(const std::vector<Int>& xs) {
  json a = json::array();
  for (const Int& x : xs) a.push_back(x.str());
  return a;
}

}  // namespace

std::string rat_str(const Rat& x) {
  Int num = numerator(x), den = denominator(x);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

void to_json(nlohmann::json& j, const IntPoly& f) { j = f.str(); }

void to_json(nlohmann::json& j, const RationalSeries& s) {
  j = json{{"num", s.num().str()}, {"den", s.den().str()}};
}

void to_json(nlohmann::json& j, const Factorization& f) {
  json factors = json::array();
  for (const auto& [poly, mult] : f.factors)
    factors.push_back(json{{"factor", poly}, {"multiplicity", mult}});
  j = json{{"unit", f.unit.str()}, {"factors", std::move(factors)}};
}

void to_json(nlohmann::json& j, const Disk& d) {
  j = json{{"center_re", rat_str(d.center_re)},
           {"center_im", rat_str(d.center_im)},
           {"radius", rat_str(d.radius)}};
}

void to_json(nlohmann::json& j, const RootReport& r) {
  json isolators = json::array();
  for (const auto& [lo, hi] : r.positive_real_isolators)
    isolators.push_back(json{rat_str(lo), rat_str(hi)});
  j = json{{"disks", r.disks},
           {"positive_real_isolators", std::move(isolators)},
           {"min_modulus_lo", rat_str(r.min_modulus_lo)},
           {"min_modulus_hi", rat_str(r.min_modulus_hi)}};
}

void to_json(nlohmann::json& j, const GoodFactorizationCertificate& c) {
  j = json{{"p", c.p},
           {"q", c.q},
           {"r", c.r},
           {"p_is_one", c.p_is_one},
           {"p_irreducible", c.p_irreducible},
           {"q_nonneg", c.q_nonneg},
           {"r_is_one", c.r_is_one},
           {"r_irreducible", c.r_irreducible},
           {"r_condition_holds", c.r_condition_holds},
           {"r_report", c.r_is_one ? json(nullptr) : json(c.r_report)}};
}

void to_json(nlohmann::json& j, const Validation& v) {
  j = json{{"ok", v.ok}, {"reason", v.reason}};
}

void to_json(nlohmann::json& j, const RingClass& rc) { j = rc.str(); }

void to_json(nlohmann::json& j, const CatalogEntry& e) {
  j = json{{"d", e.d}, {"m", e.m}, {"c", e.c}};
}

void to_json(nlohmann::json& j, const ClassRecord& r) {
  j = json{{"class", r.rc},
           {"d", r.entry.d},
           {"m", r.entry.m},
           {"c", r.entry.c},
           {"d_at_1", r.d_at_1.str()},
           {"d_at_minus_1", r.d_at_minus_1.str()},
           {"embedded_deformation", r.embedded},
           {"outcome", outcome_tag(r.outcome)}};
  if (r.certificate)
    j["certificate"] = *r.certificate;
  else
    j["failure"] = r.failure;
}

void to_json(nlohmann::json& j, const TheoremReport& r) {
  j = json{{"certified", r.certified},
           {"embedded_recorded", r.embedded_recorded},
           {"records", r.records}};
}

void to_json(nlohmann::json& j, const HandCaseReport& h) {
  json parts = json::array();
  for (const IntPoly& p : h.parts) parts.push_back(p);
  j = json{{"class", h.rc},
           {"d", h.d},
           {"branch", h.branch},
           {"detail", h.detail},
           {"eps", h.eps},
           {"a", h.a},
           {"b", h.b},
           {"c", h.c},
           {"parts", std::move(parts)},
           {"matches_factorizer", h.matches_factorizer}};
}

void to_json(nlohmann::json& j, const BettiProfile& p) {
  j = json{{"source", p.source},
           {"prefix", int_list(p.prefix)},
           {"curvature_lo", rat_str(p.curvature_lo)},
           {"curvature_hi", rat_str(p.curvature_hi)},
           {"polynomial", p.polynomial},
           {"eventually_nondecreasing", p.eventually_nondecreasing},
           {"period2", p.period2}};
}

void to_json(nlohmann::json& j, const ExtTorIndex& x) { j = x.str(); }

void to_json(nlohmann::json& j, const ModuleDescriptor& m) {
  j = json{{"label", m.label},
           {"poincare", m.poincare},
           {"bass", m.bass ? json(*m.bass) : json(nullptr)},
           {"depth", m.depth},
           {"dim", m.dim},
           {"finite_length", m.finite_length},
           {"pd_over_deformation",
            m.pd_over_deformation ? json(*m.pd_over_deformation) : json(nullptr)},
           {"pd_finite", m.pd_finite},
           {"id_finite", m.id_finite},
           {"cidim_finite", m.cidim_finite}};
}

void to_json(nlohmann::json& j, const ScenarioReport& r) {
  j = json{{"d", r.d},
           {"m", r.m},
           {"n", r.n},
           {"e_mn", r.e_mn},
           {"e_nm", r.e_nm},
           {"t_mn", r.t_mn},
           {"pd_q_m", r.pd_q_m},
           {"syzygy_tail_period2", r.syzygy_tail_period2},
           {"provenance", r.provenance}};
}

}  // namespace goodfact

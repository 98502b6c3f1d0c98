#include "goodfact/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "goodfact/json_io.hpp"

namespace goodfact {

namespace {

using nlohmann::json;

int exit_code_for(const error& e) {
  switch (e.kind()) {
    case errc::indeterminate:
    case errc::precision_cap_exceeded:
      return 3;
    case errc::verification_failure:
    case errc::inconsistent:
      return 1;
    default:
      return 2;
  }
}

// Environment overrides are parsed strictly: a malformed value should fail
// loudly rather than silently fall back and change results.
long long env_ll(const char* name, long long fallback) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0') return fallback;
  char* end = nullptr;
  long long parsed = std::strtoll(v, &end, 10);
  if (end == v || *end != '\0')
    throw error(errc::invalid_input, std::string(name) + " is not an integer: " + v);
  return parsed;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

RingClass parse_class(const std::string& type, long long l, long long p, long long codim) {
  if (type == "G") return RingClass::g(l);
  if (type == "GTE") return RingClass::gte(l);
  if (type == "GGO") return RingClass::ggo(l);
  if (type == "GH") return RingClass::gh(l, p);
  if (type == "MM" || type == "MinimalMultiplicity")
    return RingClass::minimal_multiplicity(codim);
  if (type == "Hypersurface") return RingClass::hypersurface_note();
  throw error(errc::invalid_input, "unknown class type: " + type);
}

struct Options {
  std::string type, poly, num, den = "1";
  std::string a_num = "0", a_den = "1", b_num = "0", b_den = "1", c_num = "0", c_den = "1";
  std::string g_poly = "0", op;
  long long l = 0, p = 0, codim = 0, d = 0, foxby_d = 0;
  long long horizon = 500, coeffs = 8, precision = 256;
  long long g_max = 200, gte_max = 200, ggo_max = 200, gh_max = 100;
  bool as_json = false, as_csv = false, with_records = false;
};

int do_catalog(const Options& o, std::ostream& out) {
  RingClass rc = parse_class(o.type, o.l, o.p, o.codim);
  std::string payload;
  if (rc.family == RingFamily::HypersurfaceNote) {
    if (o.as_json) {
      payload = dump(json{{"class", rc}, {"note", hypersurface_remark()}});
    } else {
      payload = "class: " + rc.str() + "\nnote: " + hypersurface_remark() + "\n";
    }
    out << payload;
    return 0;
  }
  CatalogEntry e = denominator(rc);
  Int d1 = e.d.eval_int(1), dm1 = e.d.eval_int(-1);
  bool parameterized = rc.family != RingFamily::MinimalMultiplicity;
  bool embedded = parameterized && has_embedded_deformation(rc);
  if (o.as_json) {
    json j{{"class", rc},        {"d", e.d},
           {"m", e.m},           {"c", e.c},
           {"d_at_1", d1.str()}, {"d_at_minus_1", dm1.str()},
           {"embedded_deformation", parameterized ? json(embedded) : json(nullptr)}};
    payload = dump(j);
  } else {
    std::ostringstream s;
    s << "class: " << rc.str() << "\n"
      << "d: " << e.d.str() << "\n"
      << "m: " << e.m << "\n"
      << "c: " << e.c.str() << "\n"
      << "d(1): " << d1.str() << "\n"
      << "d(-1): " << dm1.str() << "\n"
      << "embedded deformation: " << (parameterized ? yn(embedded) : "n/a") << "\n";
    payload = s.str();
  }
  out << payload;
  return 0;
}

int do_factor(const Options& o, std::ostream& out) {
  IntPoly f = IntPoly::parse(o.poly);
  Factorization fac = factor(f);
  std::string payload;
  if (o.as_json) {
    payload = dump(json{{"input", f}, {"factorization", fac}});
  } else {
    std::ostringstream s;
    s << "input: " << f.str() << "\n"
      << "unit: " << fac.unit.str() << "\n"
      << "factors:\n";
    for (const auto& [part, mult] : fac.factors)
      s << "  (" << part.str() << ")^" << mult << "\n";
    payload = s.str();
  }
  out << payload;
  return 0;
}

int do_goodfact(const Options& o, std::ostream& out) {
  IntPoly c = IntPoly::parse(o.poly);
  std::optional<GoodFactorizationCertificate> cert = find_good_factorization(c);
  std::string payload;
  int code = 0;
  if (!cert) {
    code = 1;
    if (o.as_json) {
      payload = dump(json{{"input", c},
                          {"certificate", nullptr},
                          {"reason", "complete search found no good factorization"}});
    } else {
      payload = "input: " + c.str() + "\nno good factorization exists (complete search)\n";
    }
  } else {
    Validation v = validate_certificate(c, *cert);
    if (!v.ok) code = 1;  // found but failed revalidation: report it, do not hide it
    if (o.as_json) {
      payload = dump(json{{"input", c}, {"certificate", *cert}, {"validation", v}});
    } else {
      std::ostringstream s;
      s << "input: " << c.str() << "\n"
        << "p: " << cert->p.str() << "\n"
        << "q: " << cert->q.str() << "\n"
        << "r: " << cert->r.str() << "\n"
        << "validated: " << yn(v.ok) << "\n";
      if (!v.ok) s << "reason: " << v.reason << "\n";
      payload = s.str();
    }
  }
  out << payload;
  return code;
}

int do_roots(const Options& o, std::ostream& out) {
  IntPoly f = IntPoly::parse(o.poly);
  RootReport rep = certified_roots(f, static_cast<int>(o.precision));
  std::string payload;
  if (o.as_json) {
    payload = dump(json{{"input", f}, {"precision_bits", o.precision}, {"report", rep}});
  } else {
    std::ostringstream s;
    s << "input: " << f.str() << "\n"
      << "disks: " << rep.disks.size() << "\n";
    for (size_t i = 0; i < rep.disks.size(); ++i) {
      const Disk& d = rep.disks[i];
      s << "  " << i + 1 << ": center (" << rat_str(d.center_re) << ", " << rat_str(d.center_im)
        << "), radius " << rat_str(d.radius) << "\n";
    }
    s << "min modulus: [" << rat_str(rep.min_modulus_lo) << ", " << rat_str(rep.min_modulus_hi)
      << "]\n";
    s << "positive real isolators:";
    if (rep.positive_real_isolators.empty()) s << " none";
    for (const auto& [lo, hi] : rep.positive_real_isolators)
      s << " [" << rat_str(lo) << ", " << rat_str(hi) << "]";
    s << "\n";
    payload = s.str();
  }
  out << payload;
  return 0;
}

int do_betti(const Options& o, std::ostream& out) {
  RationalSeries rs(IntPoly::parse(o.num), IntPoly::parse(o.den));
  BettiProfile prof = betti_profile(rs, static_cast<int>(o.horizon));
  std::string payload;
  if (o.as_csv) {
    std::ostringstream s;
    s << "index,coefficient\n";
    for (size_t i = 0; i < prof.prefix.size(); ++i) s << i << "," << prof.prefix[i].str() << "\n";
    payload = s.str();
  } else if (o.as_json) {
    payload = dump(json(prof));
  } else {
    std::ostringstream s;
    s << "series: " << rs.str() << "\n"
      << "coefficients 0.." << prof.prefix.size() - 1 << ":";
    size_t shown = prof.prefix.size() < 16 ? prof.prefix.size() : 16;
    for (size_t i = 0; i < shown; ++i) s << " " << prof.prefix[i].str();
    if (shown < prof.prefix.size()) s << " ...";
    s << "\n"
      << "curvature: [" << rat_str(prof.curvature_lo) << ", " << rat_str(prof.curvature_hi)
      << "]\n"
      << "polynomial: " << yn(prof.polynomial) << "\n"
      << "eventually nondecreasing: " << yn(prof.eventually_nondecreasing) << "\n"
      << "period 2 on window: " << yn(prof.period2) << "\n";
    payload = s.str();
  }
  out << payload;
  return 0;
}

int do_series_op(const Options& o, std::ostream& out) {
  RationalSeries a(IntPoly::parse(o.a_num), IntPoly::parse(o.a_den));
  RationalSeries b(IntPoly::parse(o.b_num), IntPoly::parse(o.b_den));
  RationalSeries result;
  if (o.op == "add") {
    result = a + b;
  } else if (o.op == "sub") {
    result = a - b;
  } else if (o.op == "mul") {
    result = a * b;
  } else if (o.op == "neg-t") {
    result = a.at_neg_t();
  } else if (o.op == "levin") {
    RationalSeries c(IntPoly::parse(o.c_num), IntPoly::parse(o.c_den));
    result = levin_truncation(a, b, c);
  } else if (o.op == "foxby") {
    result = foxby_bass(IntPoly::parse(o.g_poly), static_cast<int>(o.foxby_d), a);
  } else {
    throw error(errc::invalid_input, "unknown series operation: " + o.op);
  }
  std::vector<Int> cs = result.coefficients(static_cast<int>(o.coeffs));
  std::string payload;
  if (o.as_json) {
    json jcs = json::array();
    for (const Int& c : cs) jcs.push_back(c.str());
    payload = dump(json{{"op", o.op}, {"result", result}, {"coefficients", jcs}});
  } else {
    std::ostringstream s;
    s << "result: " << result.str() << "\ncoefficients:";
    for (const Int& c : cs) s << " " << c.str();
    s << "\n";
    payload = s.str();
  }
  out << payload;
  return 0;
}

int do_verify_t1(const Options& o, std::ostream& out) {
  SweepRanges ranges;
  ranges.g_max = o.g_max;
  ranges.gte_max = o.gte_max;
  ranges.ggo_max = o.ggo_max;
  ranges.gh_max = o.gh_max;
  TheoremReport rep = verify_theorem1(ranges);
  std::string payload;
  if (o.as_json) {
    json j{{"summary", "all classes certified"},
           {"certified", rep.certified},
           {"embedded_recorded", rep.embedded_recorded}};
    if (o.with_records) j["records"] = rep.records;
    payload = dump(j);
  } else {
    std::ostringstream s;
    s << "all classes certified\n"
      << "certified: " << rep.certified << "\n"
      << "embedded-deformation classes recorded: " << rep.embedded_recorded << "\n"
      << "records: " << rep.records.size() << "\n";
    payload = s.str();
  }
  out << payload;
  return 0;
}

int do_crosscheck(const Options& o, std::ostream& out) {
  RingClass rc = parse_class(o.type, o.l, o.p, o.codim);
  HandCaseReport h = hand_case_crosscheck(rc);
  std::string payload;
  if (o.as_json) {
    payload = dump(json(h));
  } else {
    std::ostringstream s;
    s << "class: " << rc.str() << "\n"
      << "d: " << h.d.str() << "\n"
      << "branch: " << h.branch << "\n"
      << "detail: " << h.detail << "\n";
    if (h.branch == "quad_quad_split" || h.branch == "quad_cubic_split" || h.eps != 0) {
      s << "solution: eps = " << h.eps << ", a = " << h.a << ", b = " << h.b;
      if (h.branch == "quad_cubic_split") s << ", c = " << h.c;
      s << "\n";
    }
    s << "parts:";
    for (const IntPoly& part : h.parts) s << " [" << part.str() << "]";
    s << "\nmatches factorizer: " << yn(h.matches_factorizer) << "\n";
    payload = s.str();
  }
  out << payload;
  return h.matches_factorizer ? 0 : 1;
}

int do_scenario(const Options& o, std::ostream& out) {
  ScenarioReport rep = corollary_last_scenario(o.d);
  std::string payload;
  if (o.as_json) {
    payload = dump(json(rep));
  } else {
    std::ostringstream s;
    s << "d: " << rep.d << "\n"
      << "e(M,N): " << rep.e_mn.str() << "\n"
      << "e(N,M): " << rep.e_nm.str() << "\n"
      << "t(M,N): " << rep.t_mn.str() << "\n"
      << "pd over deformation: " << rep.pd_q_m << "\n"
      << "syzygy tail period 2: " << yn(rep.syzygy_tail_period2) << "\n"
      << "provenance:\n";
    for (const std::string& line : rep.provenance) s << "  " << line << "\n";
    payload = s.str();
  }
  out << payload;
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"exact engine for denominator catalogs, factorization certificates, and "
               "vanishing-index ledgers"};
  app.require_subcommand(1);

  const std::vector<std::string> class_types = {"G",  "GTE",          "GGO",
                                                "GH", "MM",           "MinimalMultiplicity",
                                                "Hypersurface"};

  auto add_class_options = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "ring class family")
        ->required()
        ->check(CLI::IsMember(class_types));
    sub->add_option("--l", o.l, "family parameter l");
    sub->add_option("--p", o.p, "second parameter p (GH only)");
    sub->add_option("--codim", o.codim, "codimension (MM only)");
  };

  CLI::App* c_catalog = app.add_subcommand("catalog", "denominator table row for one ring class");
  add_class_options(c_catalog);
  c_catalog->add_flag("--json", o.as_json, "machine output");

  CLI::App* c_factor = app.add_subcommand("factor", "factor a polynomial over the integers");
  c_factor->add_option("poly", o.poly, "polynomial, e.g. \"1 - 3*t + t^2\"")->required();
  c_factor->add_flag("--json", o.as_json, "machine output");

  CLI::App* c_goodfact =
      app.add_subcommand("goodfact", "search for a good factorization c = p*q*r and validate it");
  c_goodfact->add_option("poly", o.poly, "polynomial c with c(0) > 0")->required();
  c_goodfact->add_flag("--json", o.as_json, "machine output");

  CLI::App* c_roots = app.add_subcommand("roots", "certified root disks and modulus brackets");
  c_roots->add_option("poly", o.poly, "squarefree polynomial")->required();
  c_roots->add_option("--precision", o.precision, "working precision in bits");
  c_roots->add_flag("--json", o.as_json, "machine output");

  CLI::App* c_betti = app.add_subcommand("betti", "coefficient growth profile of a series");
  c_betti->add_option("num", o.num, "numerator polynomial")->required();
  c_betti->add_option("den", o.den, "denominator polynomial (default 1)");
  c_betti->add_option("--horizon", o.horizon, "scan depth");
  CLI::Option* betti_csv = c_betti->add_flag("--csv", o.as_csv, "index,coefficient rows");
  c_betti->add_flag("--json", o.as_json, "machine output")->excludes(betti_csv);

  CLI::App* c_series = app.add_subcommand("series-op", "exact rational series arithmetic");
  c_series->add_option("op", o.op, "add | sub | mul | neg-t | levin | foxby")
      ->required()
      ->check(CLI::IsMember({"add", "sub", "mul", "neg-t", "levin", "foxby"}));
  c_series->add_option("--a-num", o.a_num, "first operand numerator");
  c_series->add_option("--a-den", o.a_den, "first operand denominator");
  c_series->add_option("--b-num", o.b_num, "second operand numerator");
  c_series->add_option("--b-den", o.b_den, "second operand denominator");
  c_series->add_option("--c-num", o.c_num, "third operand numerator (levin)");
  c_series->add_option("--c-den", o.c_den, "third operand denominator (levin)");
  c_series->add_option("--g", o.g_poly, "head polynomial (foxby)");
  c_series->add_option("--d", o.foxby_d, "shift degree (foxby)");
  c_series->add_option("--coeffs", o.coeffs, "how many expansion coefficients to print");
  c_series->add_flag("--json", o.as_json, "machine output");

  CLI::App* c_verify = app.add_subcommand("verify-t1", "sweep the catalog and certify every "
                                                       "class without an embedded deformation");
  c_verify->add_option("--g-max", o.g_max, "largest G parameter");
  c_verify->add_option("--gte-max", o.gte_max, "largest GTE parameter");
  c_verify->add_option("--ggo-max", o.ggo_max, "largest GGO parameter");
  c_verify->add_option("--gh-max", o.gh_max, "largest GH parameter");
  c_verify->add_flag("--records", o.with_records, "include per-class records in JSON output");
  c_verify->add_flag("--json", o.as_json, "machine output");

  CLI::App* c_cross = app.add_subcommand(
      "crosscheck", "re-derive the factorization of d by hand and compare with the factorizer");
  add_class_options(c_cross);
  c_cross->add_flag("--json", o.as_json, "machine output");

  CLI::App* c_scenario =
      app.add_subcommand("scenario", "depth-reduction ledger scenario for dimension d");
  c_scenario->add_option("--d", o.d, "ring dimension")->required();
  c_scenario->add_flag("--json", o.as_json, "machine output");

  try {
    o.precision = env_ll("GOODFACT_PRECISION_CAP", o.precision);
    o.horizon = env_ll("GOODFACT_HORIZON", o.horizon);
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  } catch (const error& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  }

  try {
    if (*c_catalog) return do_catalog(o, out);
    if (*c_factor) return do_factor(o, out);
    if (*c_goodfact) return do_goodfact(o, out);
    if (*c_roots) return do_roots(o, out);
    if (*c_betti) return do_betti(o, out);
    if (*c_series) return do_series_op(o, out);
    if (*c_verify) return do_verify_t1(o, out);
    if (*c_cross) return do_crosscheck(o, out);
    if (*c_scenario) return do_scenario(o, out);
  } catch (const error& e) {
    err << e.what() << "\n";
    return exit_code_for(e);
  }
  err << "no command selected\n";
  return 2;
}

}  // namespace goodfact

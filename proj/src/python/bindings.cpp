#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "goodfact/json_io.hpp"

namespace py = pybind11;
using namespace goodfact;

namespace {

const char* errc_name(errc k) {
  switch (k) {
    case errc::invalid_input: return "invalid_input";
    case errc::non_exact_division: return "non_exact_division";
    case errc::degree_cap_exceeded: return "degree_cap_exceeded";
    case errc::endpoint_is_root: return "endpoint_is_root";
    case errc::precision_cap_exceeded: return "precision_cap_exceeded";
    case errc::indeterminate: return "indeterminate";
    case errc::negative_coefficient: return "negative_coefficient";
    case errc::hilbert_shape_violation: return "hilbert_shape_violation";
    case errc::degree_violation: return "degree_violation";
    case errc::depth_zero: return "depth_zero";
    case errc::hypothesis_violated: return "hypothesis_violated";
    case errc::hypothesis_unmet: return "hypothesis_unmet";
    case errc::parameter_out_of_range: return "parameter_out_of_range";
    case errc::inconsistent: return "inconsistent";
    case errc::verification_failure: return "verification_failure";
  }
  return "unknown";
}

// Exact integers cross the boundary as arbitrary-precision Python ints.
py::object big(const Int& v) {
  return py::module_::import("builtins").attr("int")(py::str(v.str()));
}

py::list big_list(const std::vector<Int>& v) {
  py::list out;
  for (const Int& x : v) out.append(big(x));
  return out;
}

// Structured reports reuse the one JSON serialization so the Python view and
// the CLI --json view can never drift apart.
py::object as_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

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

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact engine for integer polynomial factorization, certified root location, "
            "good-factorization certificates, denominator catalogs, and rational series";

  static py::handle engine_error = py::exception<error>(m, "EngineError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const error& e) {
      py::set_error(engine_error,
                    (std::string(errc_name(e.kind())) + ": " + e.what()).c_str());
    }
  });

  py::class_<IntPoly>(m, "Poly",
                      "integer polynomial in t, parsed from and printed in the form "
                      "\"1 - 2*t + t^3\"")
      .def(py::init([](const std::string& text) { return IntPoly::parse(text); }),
           py::arg("text"))
      .def("__str__", &IntPoly::str)
      .def("__repr__", [](const IntPoly& f) { return "Poly('" + f.str() + "')"; })
      .def_property_readonly("degree", &IntPoly::degree)
      .def("coefficients", [](const IntPoly& f) { return big_list(f.coeffs()); },
           "coefficient list from degree 0 upward")
      .def("__call__",
           [](const IntPoly& f, const py::int_& x) {
             return big(f.eval_int(Int(py::str(x).cast<std::string>())));
           },
           py::arg("x"))
      .def("__eq__", [](const IntPoly& a, const IntPoly& b) { return a == b; })
      .def("__hash__", [](const IntPoly& f) { return py::hash(py::str(f.str())); })
      .def("__neg__", [](const IntPoly& f) { return -f; })
      .def("__add__", [](const IntPoly& a, const IntPoly& b) { return a + b; })
      .def("__sub__", [](const IntPoly& a, const IntPoly& b) { return a - b; })
      .def("__mul__", [](const IntPoly& a, const IntPoly& b) { return a * b; });
  py::implicitly_convertible<py::str, IntPoly>();

  py::class_<RationalSeries>(m, "Series",
                             "rational power series num/den with den(0) == 1, always reduced")
      .def(py::init<IntPoly, IntPoly>(), py::arg("num"), py::arg("den"))
      .def(py::init([](const std::string& num, const std::string& den) {
             return RationalSeries(IntPoly::parse(num), IntPoly::parse(den));
           }),
           py::arg("num"), py::arg("den") = "1")
      .def_property_readonly("num", &RationalSeries::num)
      .def_property_readonly("den", &RationalSeries::den)
      .def_property_readonly("is_polynomial", &RationalSeries::is_polynomial)
      .def("coefficients",
           [](const RationalSeries& s, int n) { return big_list(s.coefficients(n)); },
           py::arg("count"))
      .def("at_neg_t", &RationalSeries::at_neg_t)
      .def("times_power", &RationalSeries::times_power, py::arg("k"))
      .def("__str__", &RationalSeries::str)
      .def("__repr__",
           [](const RationalSeries& s) {
             return "Series('" + s.num().str() + "', '" + s.den().str() + "')";
           })
      .def("__eq__",
           [](const RationalSeries& a, const RationalSeries& b) { return a == b; })
      .def("__add__",
           [](const RationalSeries& a, const RationalSeries& b) { return a + b; })
      .def("__sub__",
           [](const RationalSeries& a, const RationalSeries& b) { return a - b; })
      .def("__mul__",
           [](const RationalSeries& a, const RationalSeries& b) { return a * b; });

  m.def(
      "factor",
      [](const IntPoly& f) {
        Factorization fac = factor(f);
        py::list parts;
        for (const auto& [part, mult] : fac.factors) parts.append(py::make_tuple(part, mult));
        py::dict d;
        d["unit"] = big(fac.unit);
        d["factors"] = parts;
        return d;
      },
      py::arg("poly"), "complete factorization over the integers as {unit, factors}");

  m.def(
      "good_factorization",
      [](const IntPoly& c) -> py::object {
        std::optional<GoodFactorizationCertificate> cert = find_good_factorization(c);
        if (!cert) return py::none();
        Validation v = validate_certificate(c, *cert);
        py::dict d;
        d["p"] = cert->p;
        d["q"] = cert->q;
        d["r"] = cert->r;
        d["p_is_one"] = cert->p_is_one;
        d["r_is_one"] = cert->r_is_one;
        d["validated"] = v.ok;
        return d;
      },
      py::arg("c"),
      "search for c = p*q*r with p irreducible or 1, q with nonnegative coefficients, and r "
      "irreducible with the root-modulus condition or 1; None when the complete search fails");

  m.def(
      "certified_roots",
      [](const IntPoly& f, int precision_bits) {
        return as_py(nlohmann::json(certified_roots(f, precision_bits)));
      },
      py::arg("poly"), py::arg("precision_bits") = 256,
      "disjoint root disks, positive-real-root isolators, and a minimum-modulus bracket; all "
      "bounds are exact rationals rendered as strings");

  m.def("r_condition", &r_condition, py::arg("poly"), py::arg("precision_cap") = 8192,
        "whether some root has modulus strictly below the smallest positive real root");

  m.def(
      "pringsheim_check",
      [](const IntPoly& numerator, const IntPoly& r, long long horizon) {
        PringsheimVerdict v = pringsheim_check(numerator, r, horizon);
        const char* kind = v.kind == PringsheimKind::NegativeCoefficientFound
                               ? "negative_coefficient"
                               : v.kind == PringsheimKind::DividesExactly ? "divides_exactly"
                                                                         : "inconclusive";
        py::dict d;
        d["kind"] = kind;
        d["negative_index"] = v.negative_index;
        return d;
      },
      py::arg("numerator"), py::arg("r"), py::arg("horizon") = 10000,
      "scan numerator/r for a negative expansion coefficient unless r divides exactly");

  m.def("levin_truncation", &levin_truncation, py::arg("p_m"), py::arg("h"), py::arg("p_k"),
        "numerator-degree truncation bound transfer between Poincare and Hilbert data");

  m.def("foxby_bass", &foxby_bass, py::arg("g"), py::arg("d"), py::arg("p_l"),
        "Bass series g + t^d * P_L assembled exactly");

  m.def(
      "betti_profile",
      [](const RationalSeries& rs, int horizon, bool declared_nonnegative) {
        return as_py(nlohmann::json(betti_profile(rs, horizon, declared_nonnegative)));
      },
      py::arg("series"), py::arg("horizon") = 500, py::arg("declared_nonnegative") = true,
      "coefficient prefix with curvature bracket, monotonicity, and period-2 flags");

  m.def(
      "catalog_entry",
      [](const std::string& type, long long l, long long p, long long codim) {
        RingClass rc = parse_class(type, l, p, codim);
        if (rc.family == RingFamily::HypersurfaceNote)
          return as_py(nlohmann::json{{"class", rc}, {"note", hypersurface_remark()}});
        CatalogEntry e = denominator(rc);
        bool parameterized = rc.family != RingFamily::MinimalMultiplicity;
        nlohmann::json j{{"class", rc},
                         {"d", e.d},
                         {"m", e.m},
                         {"c", e.c},
                         {"d_at_1", e.d.eval_int(1).str()},
                         {"d_at_minus_1", e.d.eval_int(-1).str()},
                         {"embedded_deformation",
                          parameterized ? nlohmann::json(has_embedded_deformation(rc))
                                        : nlohmann::json(nullptr)}};
        return as_py(j);
      },
      py::arg("type"), py::arg("l") = 0, py::arg("p") = 0, py::arg("codim") = 0,
      "denominator table row for one ring class, matching the CLI catalog --json output");

  m.def(
      "hand_case_crosscheck",
      [](const std::string& type, long long l, long long p) {
        return as_py(nlohmann::json(hand_case_crosscheck(parse_class(type, l, p, 0))));
      },
      py::arg("type"), py::arg("l"), py::arg("p") = 0,
      "re-derive the factorization of d through the explicit case analysis and compare");

  m.def(
      "verify_theorem1",
      [](long long g_max, long long gte_max, long long ggo_max, long long gh_max,
         bool records) {
        SweepRanges ranges;
        ranges.g_max = g_max;
        ranges.gte_max = gte_max;
        ranges.ggo_max = ggo_max;
        ranges.gh_max = gh_max;
        TheoremReport rep = verify_theorem1(ranges);
        nlohmann::json j{{"certified", rep.certified},
                         {"embedded_recorded", rep.embedded_recorded}};
        if (records) j["records"] = rep.records;
        py::dict d = as_py(j);
        return d;
      },
      py::arg("g_max") = 200, py::arg("gte_max") = 200, py::arg("ggo_max") = 200,
      py::arg("gh_max") = 100, py::arg("records") = false,
      "sweep the catalog and certify a good factorization for every class without an "
      "embedded deformation");

  m.def(
      "scenario",
      [](long long d) { return as_py(nlohmann::json(corollary_last_scenario(d))); },
      py::arg("d"),
      "depth-reduction ledger over dimension d: kills d regular elements and reports the "
      "final vanishing indices with full provenance");

  m.def("hypersurface_remark", &hypersurface_remark,
        "why no denominator bookkeeping is needed in codimension <= 1");
}

#include "goodfact/goodfact.hpp"

#include <utility>
#include <vector>

#include "goodfact/series.hpp"

namespace goodfact {

namespace {

bool nonneg_coeffs(const IntPoly& f) {
  for (const Int& c : f.coeffs())
    if (c < 0) return false;
  return true;
}

IntPoly positive_constant(const IntPoly& f) {
  return f.constant_term() < 0 ? -f : f;
}

}  // namespace

std::optional<GoodFactorizationCertificate> find_good_factorization(const IntPoly& c) {
  if (c.is_zero() || c.constant_term() <= 0)
    throw error(errc::invalid_input, "good-factorization search needs c(0) > 0");

  Factorization fac = factor(c);
  const auto& fs = fac.factors;
  const int k = static_cast<int>(fs.size());
  const IntPoly one = IntPoly::constant(1);
  int undecided = 0;
  // per-factor root-modulus verdicts: -1 unknown, 0 false, 1 true, 2 indeterminate
  std::vector<int> rcond_memo(fs.size(), -1);

  // p outer, r inner, the 1 option first, factors in canonical order; the
  // first certificate in this order is the result.
  for (int pi = -1; pi < k; ++pi) {
    IntPoly p = pi < 0 ? one : positive_constant(fs[pi].first);
    for (int ri = -1; ri < k; ++ri) {
      if (ri >= 0 && fs[ri].second - (ri == pi ? 1 : 0) < 1) continue;
      IntPoly r = ri < 0 ? one : positive_constant(fs[ri].first);
      IntPoly q = exact_divide(c, p * r);
      if (!nonneg_coeffs(q)) continue;
      if (ri >= 0) {
        if (rcond_memo[ri] < 0) {
          try {
            rcond_memo[ri] = r_condition(r) ? 1 : 0;
          } catch (const error& e) {
            if (e.kind() != errc::indeterminate) throw;
            rcond_memo[ri] = 2;
          }
        }
        if (rcond_memo[ri] == 2) {
          ++undecided;
          continue;
        }
        if (rcond_memo[ri] == 0) continue;
      }
      GoodFactorizationCertificate cert;
      cert.p = p;
      cert.q = std::move(q);
      cert.r = r;
      cert.p_is_one = pi < 0;
      cert.p_irreducible = pi >= 0;
      cert.q_nonneg = true;
      cert.r_is_one = ri < 0;
      cert.r_irreducible = ri >= 0;
      cert.r_condition_holds = true;  // vacuous when r == 1
      if (ri >= 0) cert.r_report = certified_roots(r);
      return cert;
    }
  }
  if (undecided > 0)
    throw error(errc::indeterminate,
                "search exhausted with undecidable root-modulus candidates");
  return std::nullopt;
}

Validation validate_certificate(const IntPoly& c, const GoodFactorizationCertificate& cert) {
  Validation v;
  if (cert.p * cert.q * cert.r != c) {
    v.reason = "product_mismatch";
    return v;
  }
  if (!nonneg_coeffs(cert.q)) {
    v.reason = "q_negative_coefficient";
    return v;
  }
  const IntPoly one = IntPoly::constant(1);
  if (cert.p != one && (cert.p.degree() < 1 || !is_irreducible(cert.p))) {
    v.reason = "p_not_irreducible";
    return v;
  }
  if (cert.r != one) {
    if (cert.r.degree() < 1 || !is_irreducible(cert.r)) {
      v.reason = "r_not_irreducible";
      return v;
    }
    try {
      if (!r_condition(cert.r)) {
        v.reason = "r_condition_failed";
        return v;
      }
    } catch (const error& e) {
      if (e.kind() != errc::indeterminate) throw;
      v.reason = "r_condition_indeterminate";
      return v;
    }
  }
  v.ok = true;
  return v;
}

PringsheimVerdict pringsheim_check(const IntPoly& numerator, const IntPoly& r,
                                   long long horizon) {
  if (r.degree() < 1 || r.constant_term() != 1)
    throw error(errc::invalid_input, "positivity scan needs deg r >= 1 and r(0) == 1");
  if (horizon < 0)
    throw error(errc::parameter_out_of_range, "positivity scan horizon must be >= 0");
  PringsheimVerdict out;
  if (numerator.is_zero() || divides(r, numerator)) {
    out.kind = PringsheimKind::DividesExactly;
    return out;
  }
  CoeffStream stream{RationalSeries(numerator, r)};
  for (long long k = 0; k <= horizon; ++k) {
    if (stream.next() < 0) {
      out.kind = PringsheimKind::NegativeCoefficientFound;
      out.negative_index = k;
      return out;
    }
  }
  out.kind = PringsheimKind::Inconclusive;
  return out;
}

namespace {

FinitenessVerdict finish_case(FinitenessSide side, const IntPoly& target,
                              const GoodFactorizationCertificate& cert, const IntPoly& b) {
  IntPoly head = exact_divide(target, cert.p);
  auto witness = try_divide(head, cert.r);
  if (!witness)
    throw error(errc::hypothesis_violated, "positivity-forced division by r fails");
  if (!nonneg_coeffs(*witness))
    throw error(errc::negative_coefficient, "finiteness witness has a negative coefficient");
  if (!divides(b, target))
    throw error(errc::inconsistent, "case verdict disagrees with direct divisibility by b");
  return {side, std::move(*witness)};
}

}  // namespace

FinitenessVerdict resolve_finiteness(const IntPoly& b, const GoodFactorizationCertificate& cert,
                                     const IntPoly& m, const IntPoly& n) {
  if (cert.p * cert.q * cert.r != b)
    throw error(errc::invalid_input, "certificate does not multiply out to b");
  if (divides(cert.p, m)) return finish_case(FinitenessSide::ProjDimFinite, m, cert, b);
  if (divides(cert.p, n)) return finish_case(FinitenessSide::InjDimFinite, n, cert, b);
  throw error(errc::hypothesis_violated, "p divides neither cleared numerator");
}

}  // namespace goodfact

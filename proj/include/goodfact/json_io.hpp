#pragma once

// JSON views of the report types.  Conversions hook into nlohmann's ADL
// to_json protocol, so `nlohmann::json j = value;` works for every type
// below.  Arbitrary-precision integers and rationals serialize as exact
// decimal strings, never as floating point.

#include <string>

#include "goodfact/catalog.hpp"
#include "goodfact/goodfact.hpp"
#include "goodfact/modcalc.hpp"
#include "goodfact/polyring.hpp"
#include "goodfact/rootcert.hpp"
#include "goodfact/series.hpp"
#include "json.hpp"

namespace goodfact {

// "a" when the denominator is 1, else "a/b"; exact in both cases.
std::string rat_str(const Rat& x);

void to_json(nlohmann::json& j, const IntPoly& f);
void to_json(nlohmann::json& j, const RationalSeries& s);
void to_json(nlohmann::json& j, const Factorization& f);
void to_json(nlohmann::json& j, const Disk& d);
void to_json(nlohmann::json& j, const RootReport& r);
void to_json(nlohmann::json& j, const GoodFactorizationCertificate& c);
void to_json(nlohmann::json& j, const Validation& v);
void to_json(nlohmann::json& j, const RingClass& rc);
void to_json(nlohmann::json& j, const CatalogEntry& e);
void to_json(nlohmann::json& j, const ClassRecord& r);
void to_json(nlohmann::json& j, const TheoremReport& r);
void to_json(nlohmann::json& j, const HandCaseReport& h);
void to_json(nlohmann::json& j, const BettiProfile& p);
void to_json(nlohmann::json& j, const ExtTorIndex& x);
void to_json(nlohmann::json& j, const ModuleDescriptor& m);
void to_json(nlohmann::json& j, const ScenarioReport& r);

}  // namespace goodfact

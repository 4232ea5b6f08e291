#pragma once

#include "mixnorm/beta_ineq.hpp"
#include "mixnorm/classify.hpp"
#include "mixnorm/norms.hpp"
#include "mixnorm/probe.hpp"
#include "mixnorm/witness.hpp"

#include <nlohmann/json.hpp>

// JSON bindings for the public result types.  Conventions:
//   - infinite exponents and infinite/NaN reals serialize as the strings
//     "inf", "-inf", "nan" (JSON has no literal for them);
//   - functions serialize as their CLI literal ("poly:...", "mono:...",
//     "binpow:...", "fnseq:n=...,gamma=..."), which parses back exactly;
//   - enums serialize as their to_string spelling.

namespace mixnorm {

nlohmann::json json_real(double v);
double real_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const ExtExponent& e);
void from_json(const nlohmann::json& j, ExtExponent& e);

void to_json(nlohmann::json& j, const SpaceParams& s);
void from_json(const nlohmann::json& j, SpaceParams& s);

void to_json(nlohmann::json& j, const AnalyticFn& f);
void from_json(const nlohmann::json& j, AnalyticFn& f);

void to_json(nlohmann::json& j, const NormResult& r);
void to_json(nlohmann::json& j, const SeriesNorm& r);

void to_json(nlohmann::json& j, const InclusionResult& r);
void to_json(nlohmann::json& j, const ContractivityResult& r);

void to_json(nlohmann::json& j, const Witness& w);
void from_json(const nlohmann::json& j, Witness& w);
void to_json(nlohmann::json& j, const WitnessCheck& c);

void to_json(nlohmann::json& j, const CorpusSpec& s);
void from_json(const nlohmann::json& j, CorpusSpec& s);
void to_json(nlohmann::json& j, const ProbeCell& c);
void to_json(nlohmann::json& j, const MarginReport& r);
void to_json(nlohmann::json& j, const ViolationRecord& r);
void to_json(nlohmann::json& j, const SweepSummary& s);

void to_json(nlohmann::json& j, const MonotonePoint& p);
void to_json(nlohmann::json& j, const MonotoneReport& r);
void to_json(nlohmann::json& j, const Cor32Point& p);
void to_json(nlohmann::json& j, const Cor32Report& r);

} // namespace mixnorm

#pragma once

// Text and JSON renderings of library results. In JSON every rational is a
// "num/den" string and ∞ is "inf".

#include <string>

#include <json.hpp>

#include "valrv/predicates.hpp"
#include "valrv/tame_ext.hpp"

namespace valrv::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "valrv/1";

std::string rational_json(const Rational& q);
Json value_json(const Value& v);
Json rv_json(const RvElem& r);
Json witness_json(const WitnessValue& w);
std::string witness_text(const WitnessValue& w);

Json polygon_json(const NewtonPolygon& np);
Json roots_json(const RootAnalysis& ra);
std::string roots_text(const RootAnalysis& ra);

Json verdict_json(const PredicateVerdict& v);
std::string verdict_text(const PredicateVerdict& v);

Json profile_json(const TamenessProfile& p);
std::string profile_text(const TamenessProfile& p);

Json validation_json(const ValidationReport& r);
std::string validation_text(const ValidationReport& r);
Json target_json(const EmbeddingTarget& t);
Json embedding_json(const EmbeddingResult& e);
std::string embedding_text(const EmbeddingResult& e);

}  // namespace valrv::cli

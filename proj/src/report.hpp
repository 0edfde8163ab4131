#pragma once

#include <string>

#include <json.hpp>

#include "symbols.hpp"
#include "tables.hpp"

namespace quintessa {

// Every report type renders to JSON and to text from the same data, so
// the two CLI output formats can never drift apart.

nlohmann::json to_json(const CaseReport& report,
                       const std::vector<SuggestedL>* suggestions = nullptr);
nlohmann::json to_json(const SplittingPattern& pattern);
nlohmann::json to_json(const RationalSymbolReport& report, const CycInt& alpha);
nlohmann::json to_json(const FieldKind& kind, const Int& n);
nlohmann::json to_json(const VerificationReport& report);

std::string render_text(const CaseReport& report,
                        const std::vector<SuggestedL>* suggestions = nullptr);
std::string render_text(const SplittingPattern& pattern);
std::string render_text(const RationalSymbolReport& report, const CycInt& alpha);
std::string render_text(const FieldKind& kind, const Int& n);
std::string render_text(const VerificationReport& report);

}

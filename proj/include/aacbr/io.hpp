#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aacbr/core.hpp"
#include "aacbr/cumulative.hpp"
#include "aacbr/properties.hpp"

namespace aacbr::io {

/// On-disk casebase (JSON):
///
///   { "default_outcome": "-", "nondefault_outcome": "+",
///     "default_features": [],
///     "cases": [ { "id": "c0", "features": ["a"], "outcome": "+" } ] }
///
/// Unknown keys are rejected; "id" is optional.
struct CasebaseFile {
  struct Record {
    std::optional<std::string> id;
    std::vector<std::string> features;
    std::string outcome;
  };

  std::string default_outcome;
  std::string nondefault_outcome;
  std::vector<std::string> default_features;
  std::vector<Record> cases;
};

CasebaseFile parse_casebase_file(std::string_view text);
std::string serialize(const CasebaseFile& file);

/// Validates into a Casebase. Any validation failure surfaces as ParseError.
Casebase to_casebase(const CasebaseFile& file);
CasebaseFile to_file(const Casebase& cb);

/// Query file: a JSON array of { "id"?: string, "features": [string] }.
/// Missing ids become "q<index>".
std::vector<NewCase> parse_query_file(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

/// Parses "a,b,c" into a characterisation; the empty string is ∅.
Characterisation parse_feature_list(std::string_view text);

/// Line-delimited JSON: one summary line, then one line per counterexample
/// carrying a replayable casebase in the file format above.
std::string report_to_jsonl(const PropertyReport& report);

/// Line-delimited JSON audit of concise learning, in test order.
std::string audit_to_jsonl(const ConciseModel& model);

}  // namespace aacbr::io

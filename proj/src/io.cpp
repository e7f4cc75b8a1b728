#include "aacbr/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace aacbr::io {

namespace {

using Json = nlohmann::ordered_json;

void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed, std::string_view where) {
  for (const auto& [key, _] : obj.items())
    if (!allowed.contains(key))
      throw ParseError("unknown key '" + key + "' in " + std::string(where));
}

const Json& require(const Json& obj, const std::string& key, std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("missing key '" + key + "' in " + std::string(where));
  return *it;
}

std::string as_string(const Json& j, std::string_view what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> as_string_list(const Json& j, std::string_view what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be a list of strings");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_string(e, what));
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json statement_json(const Statement& s) {
  return Json{{"features", s.characterisation.features()},
              {"outcome", s.outcome.label()},
              {"negated", s.negated}};
}

Json file_json(const CasebaseFile& file) {
  Json cases = Json::array();
  for (const auto& r : file.cases) {
    Json rec = Json::object();
    if (r.id) rec["id"] = *r.id;
    rec["features"] = r.features;
    rec["outcome"] = r.outcome;
    cases.push_back(std::move(rec));
  }
  return Json{{"default_outcome", file.default_outcome},
              {"nondefault_outcome", file.nondefault_outcome},
              {"default_features", file.default_features},
              {"cases", std::move(cases)}};
}

}  // namespace

CasebaseFile parse_casebase_file(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("casebase file must be a JSON object");
  reject_unknown_keys(doc, {"default_outcome", "nondefault_outcome", "default_features", "cases"},
                      "casebase file");

  CasebaseFile file;
  file.default_outcome = as_string(require(doc, "default_outcome", "casebase file"), "default_outcome");
  file.nondefault_outcome =
      as_string(require(doc, "nondefault_outcome", "casebase file"), "nondefault_outcome");
  if (auto it = doc.find("default_features"); it != doc.end())
    file.default_features = as_string_list(*it, "default_features");

  const Json& cases = require(doc, "cases", "casebase file");
  if (!cases.is_array()) throw ParseError("cases must be a list");
  for (const auto& rec : cases) {
    if (!rec.is_object()) throw ParseError("each case must be an object");
    reject_unknown_keys(rec, {"id", "features", "outcome"}, "case");
    CasebaseFile::Record r;
    if (auto it = rec.find("id"); it != rec.end()) r.id = as_string(*it, "id");
    r.features = as_string_list(require(rec, "features", "case"), "features");
    r.outcome = as_string(require(rec, "outcome", "case"), "outcome");
    file.cases.push_back(std::move(r));
  }
  return file;
}

std::string serialize(const CasebaseFile& file) { return file_json(file).dump(2) + "\n"; }

Casebase to_casebase(const CasebaseFile& file) {
  std::vector<Case> cases;
  for (const auto& r : file.cases)
    cases.push_back(Case{r.id.value_or(""), Characterisation(r.features), Outcome(r.outcome)});
  try {
    return Casebase::validate(std::move(cases),
                              Case{"default", Characterisation(file.default_features),
                                   Outcome(file.default_outcome)},
                              Outcome(file.nondefault_outcome));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

CasebaseFile to_file(const Casebase& cb) {
  CasebaseFile file;
  file.default_outcome = cb.default_outcome().label();
  file.nondefault_outcome = cb.nondefault_outcome().label();
  file.default_features = cb.default_case().characterisation.features();
  for (const auto& c : cb.cases())
    file.cases.push_back({c.id, c.characterisation.features(), c.outcome.label()});
  return file;
}

std::vector<NewCase> parse_query_file(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_array()) throw ParseError("query file must be a JSON list");
  std::vector<NewCase> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const Json& rec = doc[i];
    if (!rec.is_object()) throw ParseError("each query must be an object");
    reject_unknown_keys(rec, {"id", "features"}, "query");
    NewCase q;
    q.id = "q" + std::to_string(i);
    if (auto it = rec.find("id"); it != rec.end()) q.id = as_string(*it, "id");
    q.characterisation = Characterisation(as_string_list(require(rec, "features", "query"), "features"));
    out.push_back(std::move(q));
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << content;
}

Characterisation parse_feature_list(std::string_view text) {
  std::vector<std::string> fs;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    if (end > start) fs.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return Characterisation(std::move(fs));
}

std::string report_to_jsonl(const PropertyReport& report) {
  std::string out;
  Json summary{{"property", to_string(report.property)},
               {"engine", to_string(report.engine)},
               {"trials", report.trials},
               {"checks", report.checks},
               {"skipped_stored", report.skipped_stored},
               {"exhaustive", report.exhaustive},
               {"violations", report.violations.size()},
               {"holds", report.holds()}};
  out += summary.dump() + "\n";
  for (const auto& v : report.violations) {
    Json line{{"counterexample", file_json(to_file(v.casebase))},
              {"added", v.added ? statement_json(*v.added) : Json(nullptr)},
              {"query", statement_json(v.query)},
              {"before", v.before.label()},
              {"after", v.after.label()}};
    if (v.cut_also_fails) line["cut_also_fails"] = *v.cut_also_fails;
    out += line.dump() + "\n";
  }
  return out;
}

std::string audit_to_jsonl(const ConciseModel& model) {
  std::string out;
  for (const auto& e : model.audit) {
    Json line{{"id", e.c.id},
              {"features", e.c.characterisation.features()},
              {"outcome", e.c.outcome.label()},
              {"predicted", e.predicted.label()},
              {"kept", e.kept},
              {"stratum", e.stratum}};
    out += line.dump() + "\n";
  }
  return out;
}

}  // namespace aacbr::io

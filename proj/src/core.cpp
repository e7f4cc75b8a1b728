#include "aacbr/core.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace aacbr {

namespace {

void normalise(std::vector<std::string>& features) {
  std::sort(features.begin(), features.end());
  features.erase(std::unique(features.begin(), features.end()), features.end());
}

std::string fresh_id(const std::vector<Case>& cases, std::size_t start) {
  std::unordered_set<std::string> used;
  for (const auto& c : cases) used.insert(c.id);
  for (std::size_t k = start;; ++k) {
    std::string id = "c" + std::to_string(k);
    if (!used.contains(id)) return id;
  }
}

}  // namespace

Characterisation::Characterisation(std::vector<std::string> features)
    : features_(std::move(features)) {
  normalise(features_);
}

Characterisation::Characterisation(std::initializer_list<std::string> features)
    : features_(features) {
  normalise(features_);
}

std::string Characterisation::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < features_.size(); ++i) {
    if (i) out += ',';
    out += features_[i];
  }
  out += '}';
  return out;
}

bool geq(const Characterisation& a, const Characterisation& b) {
  if (a.size() < b.size()) return false;
  return std::includes(a.features().begin(), a.features().end(),
                       b.features().begin(), b.features().end());
}

bool gt(const Characterisation& a, const Characterisation& b) {
  return a.size() > b.size() && geq(a, b);
}

bool irrelevant_to(const Characterisation& query, const Characterisation& past) {
  return !geq(query, past);
}

bool is_coherent(const std::vector<Case>& cases, const Case& default_case) {
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& a = cases[i];
    if (a.characterisation == default_case.characterisation &&
        a.outcome != default_case.outcome)
      return false;
    for (std::size_t j = i + 1; j < cases.size(); ++j) {
      const auto& b = cases[j];
      if (a.characterisation == b.characterisation && a.outcome != b.outcome) return false;
    }
  }
  return true;
}

Casebase Casebase::validate(std::vector<Case> cases, Case default_case, Outcome other) {
  if (!default_case.characterisation.empty())
    throw DefaultNotLeast("default characterisation " +
                          default_case.characterisation.to_string() +
                          " is not the least element");
  if (other == default_case.outcome)
    throw UnknownOutcome("default and non-default outcome are both '" + other.label() + "'");
  if (default_case.id.empty()) default_case.id = "default";

  Casebase cb;
  cb.default_case_ = std::move(default_case);
  cb.other_ = std::move(other);

  std::set<std::pair<Characterisation, Outcome>> seen;
  std::unordered_set<std::string> ids;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    Case& c = cases[i];
    if (c.outcome != cb.default_case_.outcome && c.outcome != cb.other_)
      throw UnknownOutcome("case '" + c.id + "' has unknown outcome '" + c.outcome.label() + "'");
    if (!seen.emplace(c.characterisation, c.outcome).second) continue;
    if (c.id.empty()) c.id = "c" + std::to_string(i);
    if (!ids.insert(c.id).second) throw DuplicateId("duplicate case id '" + c.id + "'");
    cb.cases_.push_back(std::move(c));
  }
  cb.coherent_ = is_coherent(cb.cases_, cb.default_case_);
  return cb;
}

Casebase Casebase::empty(Outcome default_outcome, Outcome other) {
  return validate({}, Case{"default", {}, std::move(default_outcome)}, std::move(other));
}

Casebase Casebase::with_case(Case c) const {
  std::vector<Case> next = cases_;
  if (c.id.empty()) c.id = fresh_id(next, next.size());
  next.push_back(std::move(c));
  return validate(std::move(next), default_case_, other_);
}

Casebase Casebase::without_case(const Case& c) const {
  return filtered([&](const Case& x) {
    return !(x.characterisation == c.characterisation && x.outcome == c.outcome);
  });
}

Casebase Casebase::filtered(const std::function<bool(const Case&)>& keep) const {
  Casebase out = *this;
  out.cases_.clear();
  for (const auto& c : cases_)
    if (keep(c)) out.cases_.push_back(c);
  out.coherent_ = is_coherent(out.cases_, out.default_case_);
  return out;
}

Casebase Casebase::with_cases(std::vector<Case> cases) const {
  return validate(std::move(cases), default_case_, other_);
}

bool Casebase::has_characterisation(const Characterisation& c) const {
  return std::any_of(cases_.begin(), cases_.end(),
                     [&](const Case& x) { return x.characterisation == c; });
}

std::vector<Case> nearest_cases(const Casebase& cb, const Characterisation& query) {
  std::vector<const Case*> below;
  for (const auto& c : cb.cases())
    if (geq(query, c.characterisation)) below.push_back(&c);

  std::vector<Case> out;
  for (const Case* a : below) {
    bool maximal = std::none_of(below.begin(), below.end(), [&](const Case* b) {
      return gt(b->characterisation, a->characterisation);
    });
    if (maximal) out.push_back(*a);
  }
  return out;
}

}  // namespace aacbr

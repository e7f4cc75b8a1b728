#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "aacbr/error.hpp"

namespace aacbr {

/// A finite set of opaque feature identifiers, ordered by inclusion.
///
/// The stored vector is kept sorted and duplicate-free, so equality and
/// the total order used for deterministic output are plain vector
/// comparisons. Specificity is superset inclusion: a characterisation is
/// at least as specific as every one of its subsets, and the empty set is
/// the least element.
class Characterisation {
 public:
  Characterisation() = default;
  explicit Characterisation(std::vector<std::string> features);
  Characterisation(std::initializer_list<std::string> features);

  const std::vector<std::string>& features() const { return features_; }
  std::size_t size() const { return features_.size(); }
  bool empty() const { return features_.empty(); }

  /// Renders as "{a,b,c}".
  std::string to_string() const;

  friend bool operator==(const Characterisation&, const Characterisation&) = default;
  friend auto operator<=>(const Characterisation&, const Characterisation&) = default;

 private:
  std::vector<std::string> features_;
};

/// a ⪰ b: a is at least as specific as b (a ⊇ b).
bool geq(const Characterisation& a, const Characterisation& b);
/// a ≻ b: strictly more specific.
bool gt(const Characterisation& a, const Characterisation& b);
/// True when `past` is irrelevant to the new case `query`, i.e. query ⋡ past.
bool irrelevant_to(const Characterisation& query, const Characterisation& past);

class Outcome {
 public:
  Outcome() = default;
  explicit Outcome(std::string label) : label_(std::move(label)) {}

  const std::string& label() const { return label_; }

  friend bool operator==(const Outcome&, const Outcome&) = default;
  friend auto operator<=>(const Outcome&, const Outcome&) = default;

 private:
  std::string label_;
};

struct Case {
  std::string id;
  Characterisation characterisation;
  Outcome outcome;

  friend bool operator==(const Case&, const Case&) = default;
};

/// A case awaiting classification; it carries no outcome.
struct NewCase {
  std::string id;
  Characterisation characterisation;
};

/// A validated set of past cases together with the default argument.
///
/// Instances are immutable; the `with_*`/`without_*` helpers return new
/// casebases. Exact duplicates (same characterisation and outcome) are
/// merged on construction. Contradictory duplicates are kept and only
/// clear the coherence flag.
class Casebase {
 public:
  /// Validates `cases` against `default_case`.
  ///
  /// Cases with an empty id receive "c<index>" from their input position.
  /// Throws DefaultNotLeast when the default characterisation is not the
  /// empty set, DuplicateId on id collisions between distinct cases, and
  /// UnknownOutcome when a label is neither the default's nor `other`.
  static Casebase validate(std::vector<Case> cases, Case default_case, Outcome other);

  /// Empty casebase with default (∅, default_outcome).
  static Casebase empty(Outcome default_outcome, Outcome other);

  const std::vector<Case>& cases() const { return cases_; }
  const Case& default_case() const { return default_case_; }
  const Outcome& default_outcome() const { return default_case_.outcome; }
  const Outcome& nondefault_outcome() const { return other_; }
  bool coherent() const { return coherent_; }
  std::size_t size() const { return cases_.size(); }

  /// Copy with `c` added. An empty id is replaced with a fresh "c<k>".
  Casebase with_case(Case c) const;
  /// Copy without any case equal to `c` in characterisation and outcome.
  Casebase without_case(const Case& c) const;
  /// Copy keeping only cases that satisfy `keep`.
  Casebase filtered(const std::function<bool(const Case&)>& keep) const;
  /// Copy with exactly `cases` (validated again) and the same default.
  Casebase with_cases(std::vector<Case> cases) const;

  bool has_characterisation(const Characterisation& c) const;

 private:
  Casebase() = default;

  std::vector<Case> cases_;
  Case default_case_;
  Outcome other_;
  bool coherent_ = true;
};

/// Brute-force pairwise coherence check over `cases` plus the default.
bool is_coherent(const std::vector<Case>& cases, const Case& default_case);

/// The maximally specific past cases that are no more specific than `query`.
/// The default argument never counts as a nearest case.
std::vector<Case> nearest_cases(const Casebase& cb, const Characterisation& query);

}  // namespace aacbr

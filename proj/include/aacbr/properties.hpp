#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aacbr/af.hpp"
#include "aacbr/classifier.hpp"
#include "aacbr/core.hpp"
#include "aacbr/cumulative.hpp"

namespace aacbr {

enum class Engine { Plain, Cumulative };

enum class Property {
  CautiousMonotonicity,
  Cut,
  Cumulativity,
  RationalMonotonicity,
  Completeness,
  Consistency,
  Locality,          // irrelevant cases never change a prediction
  NearestAgreement,  // unanimous nearest cases fix the prediction
};

std::string_view to_string(Engine e);
std::string_view to_string(Property p);
std::optional<Engine> parse_engine(std::string_view s);
std::optional<Property> parse_property(std::string_view s);

/// A classifier prepared from one casebase. For the cumulative engine the
/// concise model is learned once on construction.
class Reasoner {
 public:
  Reasoner(Engine engine, Casebase cb);

  Engine engine() const { return engine_; }
  const Casebase& casebase() const { return cb_; }
  /// The casebase actually queried: the input, or its concise subset.
  const Casebase& effective() const { return *effective_; }
  Outcome outcome(const Characterisation& query) const;
  bool entails(const Statement& s) const;

 private:
  Engine engine_;
  Casebase cb_;
  std::optional<Casebase> effective_;
  std::optional<ArgGraph> graph_;  // labelled framework queried by outcome()
};

struct GeneratorConfig {
  std::vector<std::string> feature_universe;
  std::size_t case_count = 0;
  std::string default_outcome_label = "-";
  std::string other_label = "+";
  std::uint64_t seed = 0;
};

/// Features "a", "b", ... for a universe of `n` features (n ≤ 26).
std::vector<std::string> letter_universe(std::size_t n);

/// Random coherent casebase: `case_count` distinct characterisations drawn
/// uniformly from the power set of the universe, outcomes by fair coin, and
/// default (∅, default label). A drawn ∅ always takes the default outcome.
/// Deterministic in the seed (std::mt19937_64 plus rejection sampling, so
/// results match across standard libraries). Throws UniverseTooSmall.
Casebase gen_casebase(const GeneratorConfig& cfg);

/// Every subset of `universe`, in mask order.
std::vector<Characterisation> all_characterisations(const std::vector<std::string>& universe);

struct Counterexample {
  Casebase casebase;
  std::optional<Statement> added;  // absent for single-query properties
  Statement query;
  Outcome before;
  Outcome after;
  /// For cautious-monotonicity violations: whether the matching cut
  /// instance fails too.
  std::optional<bool> cut_also_fails;
};

struct PropertyReport {
  Property property = Property::CautiousMonotonicity;
  Engine engine = Engine::Plain;
  std::size_t trials = 0;
  std::size_t checks = 0;          // premise-satisfying instances evaluated
  std::size_t skipped_stored = 0;  // additions skipped: characterisation already stored
  bool exhaustive = false;
  std::vector<Counterexample> violations;

  bool holds() const { return violations.empty(); }
};

struct QueryMode {
  bool exhaustive = true;
  std::size_t sample_k = 32;
};

/// A casebase plus explicit (n1, n2) pairs to audit; used to pin known
/// counterexamples into a run.
struct Fixture {
  Casebase casebase;
  std::vector<std::pair<Characterisation, Characterisation>> pairs;
};

Fixture theorem4_fixture();

/// Audits one casebase against one property over the given queries.
///
/// For the addition properties `first` supplies n1 and `second` n2;
/// additions whose characterisation is already stored (or is the default's)
/// are skipped and counted. Single-query properties evaluate the queries in
/// `second`; locality also adds each fresh characterisation of `first`, with
/// either outcome, as a perturbation.
PropertyReport check_property_on(Engine engine, Property property, const Casebase& cb,
                                 const std::vector<Characterisation>& first,
                                 const std::vector<Characterisation>& second);

/// Seeded audit: trial t uses seed cfg.seed + t. Queries range over the
/// universe's power set (exhaustive) or k draws without replacement from the
/// fresh characterisations. Fixtures are audited after the random trials.
PropertyReport check_property(Engine engine, Property property, const GeneratorConfig& cfg,
                              std::size_t trials, const QueryMode& mode,
                              const std::vector<Fixture>& fixtures = {});

/// Locality: filtering the casebase to cases ⪯ n, or adding a fresh case
/// ⋠ n, never changes the prediction for n.
PropertyReport check_lemma_locality(Engine engine, const GeneratorConfig& cfg, std::size_t trials,
                                    const QueryMode& mode = {});

}  // namespace aacbr

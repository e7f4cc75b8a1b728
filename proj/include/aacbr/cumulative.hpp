#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "aacbr/af.hpp"
#include "aacbr/classifier.hpp"
#include "aacbr/core.hpp"

namespace aacbr {

/// True iff the rest of the casebase fails to predict `c`'s own outcome.
bool is_surprising(const Casebase& cb, const Case& c);

/// Extends a framework mined from a coherent casebase with the labelled case
/// `n`, without re-mining.
///
/// The new case attacks exactly those labelled arguments with a different
/// outcome that the unlabelled probe (n, ?) defends in the probe framework.
/// The result equals mine_af() over the old cases plus `n` provided no
/// argument in `g` is strictly more specific than `n`; OrderViolation is
/// thrown otherwise. DuplicateCharacterisation is thrown if a labelled
/// argument already has n's characterisation, and IncoherentSource if `g`
/// is cyclic or holds two labelled arguments with equal characterisations.
ArgGraph simple_add(const ArgGraph& g, const Case& n);

/// Partitions cases into strata by repeated extraction of the ⪯-minimal
/// elements (Kahn layering of the strict-inclusion DAG). Each stratum keeps
/// input order.
std::vector<std::vector<Case>> stratify(const std::vector<Case>& cases);

struct AuditEntry {
  Case c;
  bool kept = false;
  std::size_t stratum = 0;  // 1-based
  Outcome predicted;        // outcome of the concise-so-far model at test time
};

struct ConciseModel {
  Casebase source;
  Casebase concise;
  ArgGraph graph;  // mined from `concise` alone
  std::vector<AuditEntry> audit;
};

struct LearnOptions {
  /// When set, each stratum is tested and added in an order shuffled with
  /// this seed instead of input order. The result must not change.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Learns the concise subset stratum by stratum: every member of a stratum
/// is tested for surprise against the same snapshot of the model, then the
/// surprising ones are added with simple_add(). Throws IncoherentCasebase.
ConciseModel learn_concise(const Casebase& cb, const LearnOptions& options = {});

/// Prediction over the concise subset, with the source's default argument.
Prediction predict_cumulative(const ConciseModel& m, const Characterisation& query);

inline constexpr std::size_t kConciseEnumerationLimit = 12;

/// Every S' ⊆ cb.cases equal to the set of cases of cb that are surprising
/// w.r.t. S'. Test oracle; throws TooLarge above kConciseEnumerationLimit.
std::vector<std::vector<Case>> concise_subsets_bruteforce(const Casebase& cb);

}  // namespace aacbr

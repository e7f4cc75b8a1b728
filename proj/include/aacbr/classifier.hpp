#pragma once

#include <optional>

#include "aacbr/af.hpp"
#include "aacbr/core.hpp"

namespace aacbr {

struct Prediction {
  Outcome outcome;
  Extension grounded;
  ArgGraph graph;
  bool default_in_grounded = false;
  /// Set when the casebase was incoherent; the outcome is still defined.
  bool incoherent = false;
};

/// A sentence (x, y) or ¬(x, y) of the inference language.
struct Statement {
  Characterisation characterisation;
  Outcome outcome;
  bool negated = false;

  Statement negation() const { return {characterisation, outcome, !negated}; }
};

/// Mines AF(cb, n) and returns the default outcome iff the default argument
/// is in the grounded extension, the other outcome otherwise.
Prediction predict(const Casebase& cb, const Characterisation& query);

/// Outcome for `query` against a framework over labelled arguments only.
/// Skips building a Prediction; used by the learner and the audit loops.
Outcome outcome_on_graph(const ArgGraph& labelled, const Characterisation& query,
                         const Outcome& nondefault);

/// cb ⊢ s: (x,y) holds iff the predicted outcome for x is y, ¬(x,y) iff it
/// is not.
bool infer(const Casebase& cb, const Statement& s);

/// When every nearest case agrees on an outcome o, returns o after checking
/// that predict() also gives o (throws Error on disagreement). Returns
/// nothing when there are no nearest cases or they disagree.
/// Throws IncoherentCasebase on incoherent input.
std::optional<Outcome> check_nearest_agreement(const Casebase& cb, const Characterisation& query);

}  // namespace aacbr

#include "aacbr/classifier.hpp"

#include <algorithm>

namespace aacbr {

Prediction predict(const Casebase& cb, const Characterisation& query) {
  ArgGraph graph = mine_af(cb, NewCase{"new", query});
  Extension grounded = grounded_extension(graph);
  const bool in = grounded.contains(graph.default_index());
  return Prediction{in ? cb.default_outcome() : cb.nondefault_outcome(), std::move(grounded),
                    std::move(graph), in, !cb.coherent()};
}

Outcome outcome_on_graph(const ArgGraph& labelled, const Characterisation& query,
                         const Outcome& nondefault) {
  const ArgGraph graph = attach_new_case(labelled, NewCase{"new", query});
  const auto& def = graph.argument(graph.default_index());
  return grounded_extension(graph).contains(graph.default_index()) ? *def.outcome : nondefault;
}

bool infer(const Casebase& cb, const Statement& s) {
  const bool match = predict(cb, s.characterisation).outcome == s.outcome;
  return s.negated ? !match : match;
}

std::optional<Outcome> check_nearest_agreement(const Casebase& cb, const Characterisation& query) {
  if (!cb.coherent()) throw IncoherentCasebase("nearest-case agreement requires a coherent casebase");
  const auto nearest = nearest_cases(cb, query);
  if (nearest.empty()) return std::nullopt;
  const Outcome& o = nearest.front().outcome;
  if (!std::all_of(nearest.begin(), nearest.end(), [&](const Case& c) { return c.outcome == o; }))
    return std::nullopt;
  const Outcome predicted = predict(cb, query).outcome;
  if (predicted != o)
    throw Error("nearest cases agree on '" + o.label() + "' but prediction for " +
                query.to_string() + " is '" + predicted.label() + "'");
  return o;
}

}  // namespace aacbr

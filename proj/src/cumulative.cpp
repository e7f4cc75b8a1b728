#include "aacbr/cumulative.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace aacbr {

bool is_surprising(const Casebase& cb, const Case& c) {
  return predict(cb.without_case(c), c.characterisation).outcome != c.outcome;
}

ArgGraph simple_add(const ArgGraph& g, const Case& n) {
  const ArgGraph base = g.without_new_case();
  const auto& args = base.arguments();

  for (std::size_t i = 0; i < args.size(); ++i) {
    for (std::size_t j = i + 1; j < args.size(); ++j)
      if (args[i].characterisation == args[j].characterisation)
        throw IncoherentSource("two labelled arguments share characterisation " +
                               args[i].characterisation.to_string());
  }
  if (!is_acyclic(base)) throw IncoherentSource("framework has an attack cycle");

  for (const auto& a : args) {
    if (a.characterisation == n.characterisation) {
      if (*a.outcome == n.outcome) return base;
      throw DuplicateCharacterisation("characterisation " + n.characterisation.to_string() +
                                      " already present with outcome '" + a.outcome->label() +
                                      "'");
    }
    if (gt(a.characterisation, n.characterisation))
      throw OrderViolation("argument '" + a.id + "' is more specific than " +
                           n.characterisation.to_string());
  }

  // DEF: labelled arguments the unlabelled probe defends on its own.
  const ArgGraph probe_af = attach_new_case(base, NewCase{"probe", n.characterisation});
  const std::vector<std::size_t> probe{*probe_af.new_case_index()};

  std::vector<Argument> next_args = args;
  std::vector<Attack> next_attacks = base.attacks();
  const std::size_t added = next_args.size();
  next_args.push_back({ArgKind::PastCase, n.id, n.characterisation, n.outcome});

  // probe_af and base share argument order: the probe sorts after every
  // labelled argument.
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (*args[i].outcome == n.outcome) continue;
    if (defends(probe_af, probe, i)) next_attacks.emplace_back(added, i);
  }
  return ArgGraph(std::move(next_args), std::move(next_attacks));
}

std::vector<std::vector<Case>> stratify(const std::vector<Case>& cases) {
  const std::size_t n = cases.size();
  std::vector<std::vector<std::size_t>> above(n);  // edges i -> j when i ≺ j
  std::vector<std::size_t> indegree(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (gt(cases[j].characterisation, cases[i].characterisation)) {
        above[i].push_back(j);
        ++indegree[j];
      }

  std::vector<std::vector<Case>> strata;
  std::vector<std::size_t> layer;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) layer.push_back(i);
  while (!layer.empty()) {
    std::vector<Case> stratum;
    std::vector<std::size_t> next;
    for (auto i : layer) {
      stratum.push_back(cases[i]);
      for (auto j : above[i])
        if (--indegree[j] == 0) next.push_back(j);
    }
    std::sort(next.begin(), next.end());
    strata.push_back(std::move(stratum));
    layer = std::move(next);
  }
  return strata;
}

ConciseModel learn_concise(const Casebase& cb, const LearnOptions& options) {
  if (!cb.coherent())
    throw IncoherentCasebase("concise learning is restricted to coherent casebases");

  const Casebase empty = cb.with_cases({});
  ArgGraph graph = mine_af(empty);
  std::vector<AuditEntry> audit;
  std::unordered_set<std::string> kept;
  std::mt19937_64 rng(options.shuffle_seed.value_or(0));

  const auto strata = stratify(cb.cases());
  for (std::size_t k = 0; k < strata.size(); ++k) {
    std::vector<Case> order = strata[k];
    if (options.shuffle_seed) std::shuffle(order.begin(), order.end(), rng);

    // Every surprise test reads the same snapshot of the model.
    std::vector<Case> to_add;
    for (const auto& c : order) {
      Outcome predicted = outcome_on_graph(graph, c.characterisation, cb.nondefault_outcome());
      const bool surprising = predicted != c.outcome;
      if (surprising) to_add.push_back(c);
      audit.push_back({c, surprising, k + 1, std::move(predicted)});
    }
    if (!options.shuffle_seed)
      std::sort(to_add.begin(), to_add.end(),
                [](const Case& a, const Case& b) { return a.id < b.id; });
    for (const auto& c : to_add) {
      graph = simple_add(graph, c);
      kept.insert(c.id);
    }
  }

  Casebase concise = cb.filtered([&](const Case& c) { return kept.contains(c.id); });
  return ConciseModel{cb, std::move(concise), std::move(graph), std::move(audit)};
}

Prediction predict_cumulative(const ConciseModel& m, const Characterisation& query) {
  return predict(m.concise, query);
}

std::vector<std::vector<Case>> concise_subsets_bruteforce(const Casebase& cb) {
  const auto& cases = cb.cases();
  const std::size_t n = cases.size();
  if (n > kConciseEnumerationLimit)
    throw TooLarge("concise enumeration limited to " + std::to_string(kConciseEnumerationLimit) +
                   " cases, got " + std::to_string(n));

  std::vector<std::vector<Case>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Case> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) subset.push_back(cases[i]);
    const Casebase candidate = cb.with_cases(subset);

    bool fixed_point = true;
    for (std::size_t i = 0; i < n && fixed_point; ++i) {
      const bool member = mask >> i & 1;
      fixed_point = is_surprising(candidate, cases[i]) == member;
    }
    if (fixed_point) out.push_back(std::move(subset));
  }
  return out;
}

}  // namespace aacbr

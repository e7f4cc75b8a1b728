#include "aacbr/properties.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace aacbr {

namespace {

constexpr std::array<std::pair<Engine, std::string_view>, 2> kEngineNames{{
    {Engine::Plain, "plain"},
    {Engine::Cumulative, "cumulative"},
}};

constexpr std::array<std::pair<Property, std::string_view>, 8> kPropertyNames{{
    {Property::CautiousMonotonicity, "cautious-monotonicity"},
    {Property::Cut, "cut"},
    {Property::Cumulativity, "cumulativity"},
    {Property::RationalMonotonicity, "rational-monotonicity"},
    {Property::Completeness, "completeness"},
    {Property::Consistency, "consistency"},
    {Property::Locality, "locality"},
    {Property::NearestAgreement, "nearest-agreement"},
}};

// Unbiased draw from [0, n) that does not depend on the standard library's
// distribution implementations.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

// First k entries of a partial Fisher-Yates shuffle.
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> pool, std::size_t k, std::mt19937_64& rng) {
  k = std::min(k, pool.size());
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + uniform_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

bool is_addition_property(Property p) {
  switch (p) {
    case Property::CautiousMonotonicity:
    case Property::Cut:
    case Property::Cumulativity:
    case Property::RationalMonotonicity:
      return true;
    default:
      return false;
  }
}

bool stored(const Casebase& cb, const Characterisation& c) {
  return c == cb.default_case().characterisation || cb.has_characterisation(c);
}

std::vector<Characterisation> fresh_only(const Casebase& cb, const std::vector<Characterisation>& all) {
  std::vector<Characterisation> out;
  for (const auto& c : all)
    if (!stored(cb, c)) out.push_back(c);
  return out;
}

void merge(PropertyReport& into, PropertyReport&& from) {
  into.checks += from.checks;
  into.skipped_stored += from.skipped_stored;
  for (auto& v : from.violations) into.violations.push_back(std::move(v));
}

}  // namespace

std::string_view to_string(Engine e) {
  for (auto [k, name] : kEngineNames)
    if (k == e) return name;
  return "?";
}

std::string_view to_string(Property p) {
  for (auto [k, name] : kPropertyNames)
    if (k == p) return name;
  return "?";
}

std::optional<Engine> parse_engine(std::string_view s) {
  for (auto [k, name] : kEngineNames)
    if (name == s) return k;
  return std::nullopt;
}

std::optional<Property> parse_property(std::string_view s) {
  for (auto [k, name] : kPropertyNames)
    if (name == s) return k;
  return std::nullopt;
}

Reasoner::Reasoner(Engine engine, Casebase cb) : engine_(engine), cb_(std::move(cb)) {
  if (engine_ == Engine::Plain) {
    effective_.emplace(cb_);
    graph_.emplace(mine_af(cb_));
  } else {
    ConciseModel m = learn_concise(cb_);
    effective_.emplace(std::move(m.concise));
    graph_.emplace(std::move(m.graph));
  }
}

Outcome Reasoner::outcome(const Characterisation& query) const {
  return outcome_on_graph(*graph_, query, cb_.nondefault_outcome());
}

bool Reasoner::entails(const Statement& s) const {
  const bool match = outcome(s.characterisation) == s.outcome;
  return s.negated ? !match : match;
}

std::vector<std::string> letter_universe(std::size_t n) {
  if (n > 26) throw Error("letter universe supports at most 26 features");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(1, static_cast<char>('a' + i));
  return out;
}

std::vector<Characterisation> all_characterisations(const std::vector<std::string>& universe) {
  if (universe.size() > 20) throw TooLarge("power set of more than 20 features requested");
  std::vector<Characterisation> out;
  const std::size_t total = std::size_t{1} << universe.size();
  out.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    std::vector<std::string> fs;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (mask >> i & 1) fs.push_back(universe[i]);
    out.emplace_back(std::move(fs));
  }
  return out;
}

Casebase gen_casebase(const GeneratorConfig& cfg) {
  const std::size_t k = cfg.feature_universe.size();
  if (k < 3 || k > 8) throw Error("feature universe must hold 3 to 8 features");
  const std::size_t total = std::size_t{1} << k;
  if (cfg.case_count > total)
    throw UniverseTooSmall(std::to_string(cfg.case_count) + " cases need more than " +
                           std::to_string(k) + " features");

  std::mt19937_64 rng(cfg.seed);
  std::vector<std::size_t> masks(total);
  for (std::size_t i = 0; i < total; ++i) masks[i] = i;
  masks = sample_without_replacement(std::move(masks), cfg.case_count, rng);

  const Outcome def(cfg.default_outcome_label);
  const Outcome other(cfg.other_label);
  std::vector<Case> cases;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    std::vector<std::string> fs;
    for (std::size_t b = 0; b < k; ++b)
      if (masks[i] >> b & 1) fs.push_back(cfg.feature_universe[b]);
    const bool coin = rng() >> 63;
    const Outcome& o = (masks[i] == 0 || !coin) ? def : other;
    cases.push_back(Case{"c" + std::to_string(i), Characterisation(std::move(fs)), o});
  }
  return Casebase::validate(std::move(cases), Case{"default", {}, def}, other);
}

Fixture theorem4_fixture() {
  const Outcome plus("+");
  const Outcome minus("-");
  Casebase cb = Casebase::validate(
      {
          {"a", {"a"}, plus},
          {"c", {"c"}, plus},
          {"ab", {"a", "b"}, minus},
          {"cz", {"c", "z"}, minus},
      },
      Case{"default", {}, minus}, plus);
  return Fixture{std::move(cb), {{Characterisation{"a", "b", "c"}, Characterisation{"a", "b", "c", "z"}}}};
}

PropertyReport check_property_on(Engine engine, Property property, const Casebase& cb,
                                 const std::vector<Characterisation>& first,
                                 const std::vector<Characterisation>& second) {
  PropertyReport report;
  report.property = property;
  report.engine = engine;
  report.trials = 1;

  const Reasoner base(engine, cb);
  const std::array<Outcome, 2> labels{cb.default_outcome(), cb.nondefault_outcome()};

  if (is_addition_property(property)) {
    for (const auto& n1 : first) {
      if (stored(cb, n1)) {
        ++report.skipped_stored;
        continue;
      }
      const Statement a{n1, base.outcome(n1)};

      if (property == Property::RationalMonotonicity) {
        // A ⊢ q and A ⊬ ¬b imply A ∪ {b} ⊢ q, for b = (n1, y).
        for (const auto& y : labels) {
          const Statement b{n1, y};
          if (base.entails(b.negation())) continue;
          const Reasoner extended(engine, cb.with_case(Case{"", n1, y}));
          for (const auto& n2 : second) {
            const Statement q{n2, base.outcome(n2)};
            ++report.checks;
            if (!extended.entails(q))
              report.violations.push_back({cb, b, q, q.outcome, extended.outcome(n2), std::nullopt});
          }
        }
        continue;
      }

      if (!base.entails(a)) continue;
      const Reasoner extended(engine, cb.with_case(Case{"", n1, a.outcome}));
      for (const auto& n2 : second) {
        const Outcome before = base.outcome(n2);
        const Outcome after = extended.outcome(n2);
        ++report.checks;

        // Cautious monotonicity: A ⊢ a, A ⊢ b  ⇒  A ∪ {a} ⊢ b.
        const Statement b{n2, before};
        const bool cm_fails = base.entails(b) && !extended.entails(b);
        // Cut: A ⊢ a, A ∪ {a} ⊢ q  ⇒  A ⊢ q.
        const Statement q{n2, after};
        const bool cut_fails = extended.entails(q) && !base.entails(q);

        switch (property) {
          case Property::CautiousMonotonicity:
            if (cm_fails) report.violations.push_back({cb, a, b, before, after, cut_fails});
            break;
          case Property::Cut:
            if (cut_fails) report.violations.push_back({cb, a, q, before, after, std::nullopt});
            break;
          case Property::Cumulativity:
            if (cm_fails || cut_fails)
              report.violations.push_back({cb, a, b, before, after, cut_fails});
            break;
          default:
            break;
        }
      }
    }
    return report;
  }

  switch (property) {
    case Property::Completeness:
    case Property::Consistency:
      for (const auto& n : second) {
        for (const auto& y : labels) {
          const Statement s{n, y};
          const bool pos = base.entails(s);
          const bool neg = base.entails(s.negation());
          ++report.checks;
          const bool bad = property == Property::Completeness ? !(pos || neg) : (pos && neg);
          if (bad) {
            const Outcome o = base.outcome(n);
            report.violations.push_back({cb, std::nullopt, s, o, o, std::nullopt});
          }
        }
      }
      break;

    case Property::NearestAgreement: {
      const Casebase& effective = base.effective();
      for (const auto& n : second) {
        const auto nearest = nearest_cases(effective, n);
        if (nearest.empty()) continue;
        const Outcome& o = nearest.front().outcome;
        if (!std::all_of(nearest.begin(), nearest.end(),
                         [&](const Case& c) { return c.outcome == o; }))
          continue;
        ++report.checks;
        const Outcome predicted = base.outcome(n);
        if (predicted != o)
          report.violations.push_back({cb, std::nullopt, Statement{n, o}, o, predicted, std::nullopt});
      }
      break;
    }

    case Property::Locality: {
      // Filtered form: only cases ⪯ n matter.
      for (const auto& n : second) {
        const Casebase core =
            cb.filtered([&](const Case& c) { return geq(n, c.characterisation); });
        const Reasoner local(engine, core);
        const Outcome before = base.outcome(n);
        const Outcome after = local.outcome(n);
        ++report.checks;
        if (before != after)
          report.violations.push_back({core, std::nullopt, Statement{n, before}, before, after, std::nullopt});
      }
      // Perturbation form: a fresh case ⋠ n leaves n's prediction alone.
      for (const auto& m : first) {
        if (stored(cb, m)) {
          ++report.skipped_stored;
          continue;
        }
        for (const auto& y : labels) {
          const Statement added{m, y};
          const Reasoner extended(engine, cb.with_case(Case{"", m, y}));
          for (const auto& n : second) {
            if (geq(n, m)) continue;
            const Outcome before = base.outcome(n);
            const Outcome after = extended.outcome(n);
            ++report.checks;
            if (before != after)
              report.violations.push_back({cb, added, Statement{n, before}, before, after, std::nullopt});
          }
        }
      }
      break;
    }

    default:
      break;
  }
  return report;
}

PropertyReport check_property(Engine engine, Property property, const GeneratorConfig& cfg,
                              std::size_t trials, const QueryMode& mode,
                              const std::vector<Fixture>& fixtures) {
  PropertyReport report;
  report.property = property;
  report.engine = engine;
  report.exhaustive = mode.exhaustive;

  const auto universe = all_characterisations(cfg.feature_universe);
  for (std::size_t t = 0; t < trials; ++t) {
    GeneratorConfig trial_cfg = cfg;
    trial_cfg.seed = cfg.seed + t;
    const Casebase cb = gen_casebase(trial_cfg);
    const auto fresh = fresh_only(cb, universe);

    std::vector<Characterisation> first = fresh;
    std::vector<Characterisation> second = is_addition_property(property) ? fresh : universe;
    if (!mode.exhaustive) {
      std::mt19937_64 rng(trial_cfg.seed ^ 0x9e3779b97f4a7c15ULL);
      first = sample_without_replacement(std::move(first), mode.sample_k, rng);
      second = sample_without_replacement(std::move(second), mode.sample_k, rng);
    }
    merge(report, check_property_on(engine, property, cb, first, second));
    ++report.trials;
  }

  for (const auto& fixture : fixtures) {
    for (const auto& [n1, n2] : fixture.pairs) {
      if (is_addition_property(property))
        merge(report, check_property_on(engine, property, fixture.casebase, {n1}, {n2}));
      else
        merge(report, check_property_on(engine, property, fixture.casebase, {n1}, {n1, n2}));
    }
    ++report.trials;
  }
  return report;
}

PropertyReport check_lemma_locality(Engine engine, const GeneratorConfig& cfg, std::size_t trials,
                                    const QueryMode& mode) {
  return check_property(engine, Property::Locality, cfg, trials, mode);
}

}  // namespace aacbr

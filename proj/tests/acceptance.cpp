// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Seeds are fixed so every run audits the same instances.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "aacbr/af.hpp"
#include "aacbr/classifier.hpp"
#include "aacbr/cli.hpp"
#include "aacbr/cumulative.hpp"
#include "aacbr/properties.hpp"
#include "fixtures.hpp"

namespace {

using namespace aacbr;
using aacbr::testing::kMinus;
using aacbr::testing::kPlus;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int n, const char* name, const std::function<Verdict()>& body) {
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  if (!v.pass) ++failures;
  std::printf("[%s] %d. %s: %s\n", v.pass ? "PASS" : "FAIL", n, name, v.detail.c_str());
  std::fflush(stdout);
}

// Shape of trial t for sweeps bounded by `max_features` and `max_cases`.
GeneratorConfig sweep(std::uint64_t t, std::size_t max_features, std::size_t max_cases,
                      std::uint64_t base_seed) {
  GeneratorConfig cfg;
  const std::size_t features = 3 + t % (max_features - 2);
  cfg.feature_universe = letter_universe(features);
  cfg.case_count = std::min<std::size_t>(t % (max_cases + 1), std::size_t{1} << features);
  cfg.seed = base_seed + t;
  return cfg;
}

Verdict legal_example() {
  double worst_ms = 0;
  auto timed = [&](const Casebase& cb) {
    const auto start = Clock::now();
    const Outcome o = predict(cb, {"hm", "sd"}).outcome;
    worst_ms = std::max(worst_ms, seconds_since(start) * 1e3);
    return o;
  };
  const Outcome before = timed(testing::legal_initial());
  const Outcome after = timed(testing::legal_revised());
  const bool ok = before == kPlus && after == kMinus && worst_ms < 1.0;
  return {ok, "before=" + before.label() + " after=" + after.label() +
                  " slowest=" + std::to_string(worst_ms) + "ms"};
}

Verdict theorem4() {
  const Casebase d = testing::counterexample();
  const Outcome abc = predict(d, {"a", "b", "c"}).outcome;
  const Outcome abcz = predict(d, {"a", "b", "c", "z"}).outcome;
  const Outcome abcz_after = predict(testing::counterexample_extended(), {"a", "b", "c", "z"}).outcome;

  std::ostringstream out, err;
  const int code = cli::run({"check", "--engine", "plain", "--property", "cautious-monotonicity",
                             "--fixture", "theorem4"},
                            out, err);
  const bool ok = abc == kPlus && abcz == kMinus && abcz_after == kPlus && code == cli::kViolations;
  return {ok, "outcomes=" + abc.label() + "," + abcz.label() + "," + abcz_after.label() +
                  " check-exit=" + std::to_string(code)};
}

Verdict example3_replay() {
  const ConciseModel m = learn_concise(testing::counterexample_extended());
  std::vector<std::vector<std::string>> strata(3);
  std::vector<std::string> dropped;
  for (const auto& e : m.audit) {
    if (e.stratum < 1 || e.stratum > 3) return {false, "unexpected stratum for " + e.c.id};
    strata[e.stratum - 1].push_back(e.c.characterisation.to_string());
    if (!e.kept) dropped.push_back(e.c.characterisation.to_string() + e.c.outcome.label());
  }
  for (auto& s : strata) std::sort(s.begin(), s.end());
  const bool strata_ok = strata == std::vector<std::vector<std::string>>{
                                       {"{a}", "{c}"}, {"{a,b}", "{c,z}"}, {"{a,b,c}"}};
  const bool dropped_ok = dropped == std::vector<std::string>{"{a,b,c}+"};

  const Outcome before = predict_cumulative(learn_concise(testing::counterexample()), {"a", "b", "c", "z"}).outcome;
  const Outcome after = predict_cumulative(m, {"a", "b", "c", "z"}).outcome;
  const bool ok = strata_ok && dropped_ok && before == kMinus && after == kMinus;
  return {ok, std::string("strata ") + (strata_ok ? "match" : "differ") + ", dropped " +
                  (dropped_ok ? "{a,b,c}+ only" : std::to_string(dropped.size()) + " cases") +
                  ", cumulative before=" + before.label() + " after=" + after.label()};
}

Verdict grounded_vs_stable() {
  const auto start = Clock::now();
  std::size_t mismatches = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const GeneratorConfig cfg = sweep(t, 5, 12, 40000);
    const Casebase cb = gen_casebase(cfg);
    if (!cb.coherent()) ++mismatches;
    // The casebase alone, and with one new case drawn from the universe.
    const auto queries = all_characterisations(cfg.feature_universe);
    for (const ArgGraph& g : {mine_af(cb), mine_af(cb, NewCase{"n", queries[t % queries.size()]})}) {
      const auto stable = stable_extensions_bruteforce(g);
      if (!is_acyclic(g) || stable.size() != 1 || stable[0] != grounded_extension(g).members)
        ++mismatches;
    }
  }
  const double s = seconds_since(start);
  return {mismatches == 0 && s < 10.0,
          std::to_string(mismatches) + " mismatches over 200 casebases in " + std::to_string(s) + "s"};
}

std::vector<std::string> sorted_ids(const std::vector<Case>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(c.id);
  std::sort(out.begin(), out.end());
  return out;
}

Verdict concise_oracle() {
  const auto start = Clock::now();
  std::size_t mismatches = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const Casebase cb = gen_casebase(sweep(t, 4, 8, 50000));
    const auto fixed_points = concise_subsets_bruteforce(cb);
    if (fixed_points.size() != 1 ||
        sorted_ids(fixed_points[0]) != sorted_ids(learn_concise(cb).concise.cases()))
      ++mismatches;
  }
  const double s = seconds_since(start);
  return {mismatches == 0 && s < 60.0,
          std::to_string(mismatches) + " mismatches over 200 casebases in " + std::to_string(s) + "s"};
}

Verdict incremental_growth() {
  std::size_t mismatches = 0, additions = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const Casebase cb = gen_casebase(sweep(t, 5, 12, 60000));
    ArgGraph g = mine_af(cb.with_cases({}));
    std::vector<Case> grown;
    for (const auto& stratum : stratify(cb.cases())) {
      for (const auto& c : stratum) {
        if (c.characterisation.empty()) continue;  // same argument as the default
        g = simple_add(g, c);
        grown.push_back(c);
        ++additions;
      }
    }
    if (testing::edges(g) != testing::edges(mine_af(cb.with_cases(grown)))) ++mismatches;
  }
  return {mismatches == 0,
          std::to_string(mismatches) + " mismatches over 200 casebases (" + std::to_string(additions) +
              " additions)"};
}

Verdict property_suites() {
  const auto start = Clock::now();
  GeneratorConfig cfg;
  cfg.feature_universe = letter_universe(5);
  cfg.case_count = 10;
  cfg.seed = 70000;
  const QueryMode exhaustive{};
  std::ostringstream detail;
  bool ok = true;

  for (auto p : {Property::CautiousMonotonicity, Property::Cut, Property::RationalMonotonicity}) {
    const auto r = check_property(Engine::Cumulative, p, cfg, 1000, exhaustive);
    ok = ok && r.holds() && r.trials == 1000;
    detail << "cumulative " << to_string(p) << "=" << r.violations.size() << "/" << r.checks << "; ";
  }

  const auto plain_cm =
      check_property(Engine::Plain, Property::CautiousMonotonicity, cfg, 1000, exhaustive, {theorem4_fixture()});
  ok = ok && !plain_cm.holds();
  detail << "plain cautious-monotonicity=" << plain_cm.violations.size() << "/" << plain_cm.checks << "; ";

  for (auto e : {Engine::Plain, Engine::Cumulative})
    for (auto p : {Property::Completeness, Property::Consistency}) {
      const auto r = check_property(e, p, cfg, 1000, exhaustive);
      ok = ok && r.holds();
      detail << to_string(e) << " " << to_string(p) << "=" << r.violations.size() << "; ";
    }

  const double s = seconds_since(start);
  ok = ok && s < 300.0;
  detail << "total " << s << "s";
  return {ok, detail.str()};
}

Verdict nearest_agreement() {
  GeneratorConfig cfg;
  cfg.feature_universe = letter_universe(5);
  cfg.case_count = 10;
  cfg.seed = 80000;
  const auto r = check_property(Engine::Plain, Property::NearestAgreement, cfg, 500, QueryMode{});
  return {r.holds() && r.trials == 500, std::to_string(r.violations.size()) + " violations over " +
                                            std::to_string(r.checks) + " unanimous queries"};
}

Verdict locality() {
  GeneratorConfig cfg;
  cfg.feature_universe = letter_universe(5);
  cfg.case_count = 10;
  cfg.seed = 90000;
  const auto r = check_lemma_locality(Engine::Plain, cfg, 500);
  return {r.holds() && r.trials == 500,
          std::to_string(r.violations.size()) + " violations over " + std::to_string(r.checks) + " checks"};
}

}  // namespace

int main() {
  criterion(1, "legal example", legal_example);
  criterion(2, "cautious monotonicity counterexample", theorem4);
  criterion(3, "concise learning replay", example3_replay);
  criterion(4, "grounded equals unique stable extension", grounded_vs_stable);
  criterion(5, "concise subset oracle", concise_oracle);
  criterion(6, "incremental addition equals mining", incremental_growth);
  criterion(7, "property suites", property_suites);
  criterion(8, "unanimous nearest cases fix the prediction", nearest_agreement);
  criterion(9, "locality of prediction", locality);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

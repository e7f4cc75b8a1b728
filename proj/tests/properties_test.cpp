#include <gtest/gtest.h>

#include <set>

#include "aacbr/properties.hpp"
#include "fixtures.hpp"

namespace aacbr {
namespace {

using testing::kMinus;
using testing::kPlus;

GeneratorConfig config(std::size_t features, std::size_t cases, std::uint64_t seed = 0) {
  GeneratorConfig cfg;
  cfg.feature_universe = letter_universe(features);
  cfg.case_count = cases;
  cfg.seed = seed;
  return cfg;
}

TEST(Generator, SaturatesSmallUniverse) {
  const Casebase cb = gen_casebase(config(4, 16, 3));
  EXPECT_TRUE(cb.coherent());
  std::set<Characterisation> seen;
  for (const auto& c : cb.cases()) seen.insert(c.characterisation);
  EXPECT_EQ(seen.size(), 16u);
}

TEST(Generator, DeterministicInSeed) {
  const Casebase a = gen_casebase(config(5, 10, 42));
  const Casebase b = gen_casebase(config(5, 10, 42));
  EXPECT_EQ(a.cases(), b.cases());
  EXPECT_NE(a.cases(), gen_casebase(config(5, 10, 43)).cases());
}

TEST(Generator, FrozenDraw) {
  // std::mt19937_64 output is fixed by the standard; this pins the draw so
  // counterexamples stay reproducible.
  const Casebase cb = gen_casebase(config(3, 3, 7));
  std::vector<std::string> rendered;
  for (const auto& c : cb.cases())
    rendered.push_back(c.id + " " + c.characterisation.to_string() + c.outcome.label());
  EXPECT_EQ(rendered, (std::vector<std::string>{"c0 {a,b,c}+", "c1 {a,c}-", "c2 {b}-"}));
  EXPECT_EQ(cb.default_case().characterisation, Characterisation{});
}

TEST(Generator, Errors) {
  EXPECT_THROW(gen_casebase(config(3, 9)), UniverseTooSmall);
  EXPECT_THROW(gen_casebase(config(2, 1)), Error);
  EXPECT_THROW(gen_casebase(config(9, 1)), Error);
}

TEST(Names, RoundTrip) {
  for (auto p : {Property::CautiousMonotonicity, Property::Cut, Property::Cumulativity,
                 Property::RationalMonotonicity, Property::Completeness, Property::Consistency,
                 Property::Locality, Property::NearestAgreement})
    EXPECT_EQ(parse_property(to_string(p)), p);
  EXPECT_EQ(parse_engine("cumulative"), Engine::Cumulative);
  EXPECT_EQ(parse_engine("nope"), std::nullopt);
  EXPECT_EQ(parse_property("monotonicity"), std::nullopt);
}

TEST(Reasoner, CumulativeQueriesTheConciseSubset) {
  const Reasoner r(Engine::Cumulative, testing::counterexample_extended());
  EXPECT_EQ(r.effective().size(), 4u);
  EXPECT_EQ(r.outcome({"a", "b", "c", "z"}), kMinus);
  const Reasoner plain(Engine::Plain, testing::counterexample_extended());
  EXPECT_EQ(plain.outcome({"a", "b", "c", "z"}), kPlus);
}

TEST(Fixture, PlainEngineViolatesCautiousMonotonicity) {
  const Fixture f = theorem4_fixture();
  const auto report = check_property(Engine::Plain, Property::CautiousMonotonicity, config(4, 0), 0,
                                     QueryMode{}, {f});
  ASSERT_EQ(report.violations.size(), 1u);
  const Counterexample& v = report.violations[0];
  EXPECT_EQ(v.before, kMinus);
  EXPECT_EQ(v.after, kPlus);
  ASSERT_TRUE(v.added.has_value());
  EXPECT_EQ(v.added->characterisation, (Characterisation{"a", "b", "c"}));
  EXPECT_EQ(v.added->outcome, kPlus);
  EXPECT_EQ(v.query.characterisation, (Characterisation{"a", "b", "c", "z"}));
  EXPECT_EQ(v.cut_also_fails, true);

  // Replaying the counterexample reproduces before and after.
  EXPECT_EQ(Reasoner(Engine::Plain, v.casebase).outcome(v.query.characterisation), v.before);
  const Casebase extended = v.casebase.with_case(Case{"", v.added->characterisation, v.added->outcome});
  EXPECT_EQ(Reasoner(Engine::Plain, extended).outcome(v.query.characterisation), v.after);
}

TEST(Fixture, CumulativeEngineHolds) {
  for (auto p : {Property::CautiousMonotonicity, Property::Cut, Property::Cumulativity,
                 Property::RationalMonotonicity}) {
    const auto report =
        check_property(Engine::Cumulative, p, config(4, 0), 0, QueryMode{}, {theorem4_fixture()});
    EXPECT_TRUE(report.holds()) << to_string(p);
    EXPECT_GT(report.checks, 0u);
  }
}

TEST(Audit, CumulativeEngineSatisfiesAdditionProperties) {
  for (auto p : {Property::CautiousMonotonicity, Property::Cut, Property::Cumulativity,
                 Property::RationalMonotonicity}) {
    const auto report = check_property(Engine::Cumulative, p, config(4, 6, 11), 60, QueryMode{});
    EXPECT_TRUE(report.holds()) << to_string(p);
    EXPECT_EQ(report.trials, 60u);
    EXPECT_GT(report.checks, 0u);
  }
}

TEST(Audit, CompletenessAndConsistencyForBothEngines) {
  for (auto e : {Engine::Plain, Engine::Cumulative})
    for (auto p : {Property::Completeness, Property::Consistency}) {
      const auto report = check_property(e, p, config(4, 7, 5), 40, QueryMode{});
      EXPECT_TRUE(report.holds());
      EXPECT_EQ(report.checks, 40u * 16u * 2u);
    }
}

TEST(Audit, CautiousMonotonicityAndCutFailTogether) {
  const auto cfg = config(5, 10, 100);
  const auto cm = check_property(Engine::Plain, Property::CautiousMonotonicity, cfg, 150, QueryMode{});
  const auto cut = check_property(Engine::Plain, Property::Cut, cfg, 150, QueryMode{});
  EXPECT_FALSE(cm.holds());
  EXPECT_EQ(cm.violations.size(), cut.violations.size());
  for (const auto& v : cm.violations) EXPECT_EQ(v.cut_also_fails, true);
}

TEST(Audit, SampledModeLimitsQueries) {
  const auto report =
      check_property(Engine::Plain, Property::Consistency, config(5, 6, 1), 10, QueryMode{false, 4});
  EXPECT_FALSE(report.exhaustive);
  EXPECT_EQ(report.checks, 10u * 4u * 2u);
}

TEST(Audit, AdditionsOfStoredCharacterisationsAreSkipped) {
  const Casebase cb = testing::counterexample();
  const auto report = check_property_on(Engine::Plain, Property::CautiousMonotonicity, cb,
                                        {Characterisation{"a"}, Characterisation{}},
                                        {Characterisation{"a", "b"}});
  EXPECT_EQ(report.skipped_stored, 2u);
  EXPECT_EQ(report.checks, 0u);
}

TEST(Locality, PlainAndCumulative) {
  for (auto e : {Engine::Plain, Engine::Cumulative}) {
    const auto report = check_lemma_locality(e, config(4, 6, 9), 25);
    EXPECT_TRUE(report.holds()) << to_string(e);
    EXPECT_GT(report.checks, 0u);
  }
}

TEST(Locality, EmptyCasebase) {
  const auto report = check_property_on(Engine::Plain, Property::Locality, testing::casebase({}),
                                        {Characterisation{"a"}}, {Characterisation{"b"}});
  EXPECT_TRUE(report.holds());
}

TEST(NearestAgreement, PlainEngine) {
  const auto report = check_property(Engine::Plain, Property::NearestAgreement, config(5, 10, 3), 50,
                                     QueryMode{});
  EXPECT_TRUE(report.holds());
  EXPECT_GT(report.checks, 0u);
}

}  // namespace
}  // namespace aacbr

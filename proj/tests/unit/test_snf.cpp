#include <gtest/gtest.h>

#include "testkit.hpp"
#include "tpcheck/error.hpp"
#include "tpcheck/sat.hpp"
#include "tpcheck/snf.hpp"

using namespace tpcheck;

namespace {

Pks pessimistic_vacuum() {
  return approximate(complement_closure(testkit::vacuum()), Approximation::Pessimistic);
}

std::size_t count(const ClauseSet& cs, ProvenanceKind k) {
  std::size_t n = 0;
  for (const auto& c : cs) n += c.provenance.kind == k;
  return n;
}

}  // namespace

TEST(KsToSnf, ClauseCountFormula) {
  testkit::Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const Pks ks = approximate(complement_closure(testkit::random_pks(rng)),
                               rng.coin() ? Approximation::Optimistic : Approximation::Pessimistic);
    const ClauseSet cs = ks_to_snf(ks);
    const std::size_t n = ks.state_count();
    const std::size_t labels = n * ks.prop_count();  // complete model: every label definite
    EXPECT_EQ(cs.size(), 1 + n + labels + n * (n - 1) / 2);
    EXPECT_EQ(count(cs, ProvenanceKind::Init), 1u);
    EXPECT_EQ(count(cs, ProvenanceKind::Reach), n);
    EXPECT_EQ(count(cs, ProvenanceKind::Regularity), n * (n - 1) / 2);
    for (const auto& c : cs) {
      EXPECT_TRUE(c.provenance.is_model());
      EXPECT_NE(c.kind, SnfKind::Eventuality);
    }
  }
}

TEST(KsToSnf, VacuumReachAndInit) {
  const ClauseSet cs = ks_to_snf(pessimistic_vacuum());
  ASSERT_FALSE(cs.empty());
  EXPECT_EQ(cs[0].kind, SnfKind::Initial);
  EXPECT_EQ(cs[0].provenance, Provenance::init());
  ASSERT_EQ(cs[0].now.size(), 1u);
  EXPECT_EQ(cs[0].now[0], (SnfLiteral{state_prop("OFF"), false}));

  const SnfClause& off = cs[1];
  EXPECT_EQ(off.provenance, Provenance::reach("OFF"));
  EXPECT_EQ(off.kind, SnfKind::Global);
  ASSERT_EQ(off.now.size(), 1u);
  EXPECT_EQ(off.now[0], (SnfLiteral{state_prop("OFF"), true}));
  ASSERT_EQ(off.next.size(), 2u);
  EXPECT_EQ(off.next[0], (SnfLiteral{state_prop("OFF"), false}));
  EXPECT_EQ(off.next[1], (SnfLiteral{state_prop("IDLE"), false}));
}

TEST(KsToSnf, TwoStatesGiveOneRegularityClause) {
  const Pks ks = parse_pks("pks k\nap p\nstate s p=T\nstate t p=F\ninit s\ntrans s t\ntrans t s\n");
  const ClauseSet cs = ks_to_snf(ks);
  ASSERT_EQ(count(cs, ProvenanceKind::Regularity), 1u);
  const SnfClause& reg = cs.back();
  EXPECT_EQ(reg.provenance, Provenance::regularity("s", "t"));
  EXPECT_TRUE(reg.next.empty());
  EXPECT_EQ(reg.now.size(), 2u);
}

TEST(KsToSnf, LabelClausesFollowLabels) {
  const Pks ks = pessimistic_vacuum();
  for (const auto& c : ks_to_snf(ks)) {
    if (c.provenance.kind != ProvenanceKind::LabelTrue && c.provenance.kind != ProvenanceKind::LabelFalse) continue;
    const Tri v = ks.label(*ks.find_state(c.provenance.state), *ks.find_prop(c.provenance.other));
    EXPECT_EQ(v == Tri::True, c.provenance.kind == ProvenanceKind::LabelTrue);
    ASSERT_EQ(c.now.size(), 2u);
    EXPECT_EQ(c.now[1].negated, v == Tri::False);
  }
}

TEST(KsToSnf, RejectsUnknownLabels) {
  EXPECT_THROW(ks_to_snf(complement_closure(testkit::vacuum())), PreconditionError);
}

TEST(KsToSnf, EncodingOfAValidStructureIsSatisfiable) {
  testkit::Rng rng(23);
  for (int i = 0; i < 40; ++i) {
    const Pks ks = approximate(complement_closure(testkit::random_pks(rng)), Approximation::Optimistic);
    EXPECT_TRUE(sat(ks_to_snf(ks)).satisfiable);
  }
}

TEST(PropertyToSnf, Examples) {
  const ClauseSet lit = property_to_snf(parse_ltl("q"));
  ASSERT_EQ(lit.size(), 1u);
  EXPECT_EQ(lit[0].kind, SnfKind::Initial);
  EXPECT_EQ(lit[0].now, (std::vector<SnfLiteral>{{"q", false}}));

  const ClauseSet both = property_to_snf(parse_ltl("~p & ~q"));
  ASSERT_EQ(both.size(), 2u);
  EXPECT_EQ(both[0].now, (std::vector<SnfLiteral>{{"~p", false}}));
  EXPECT_EQ(both[1].now, (std::vector<SnfLiteral>{{"~q", false}}));

  const Formula ev = parse_ltl("F ~p");
  const ClauseSet cs = property_to_snf(ev);
  EXPECT_EQ(cs.size(), 2u);
  bool has_eventuality = false;
  for (const auto& c : cs) has_eventuality |= c.kind == SnfKind::Eventuality;
  EXPECT_TRUE(has_eventuality);
  EXPECT_EQ(sat(cs).satisfiable, sat_formula(ev).satisfiable);
  EXPECT_TRUE(sat(cs).satisfiable);
}

TEST(PropertyToSnf, ProvenanceIndices) {
  const ClauseSet cs = property_to_snf(parse_ltl("G(a -> F b) & (c U a)"));
  for (std::size_t i = 0; i < cs.size(); ++i) EXPECT_EQ(cs[i].provenance, Provenance::property(i));
}

TEST(PropertyToSnf, DeterministicFreshNames) {
  const Formula f = parse_ltl("G(a -> X(b U c)) & F G !a");
  EXPECT_EQ(to_text(property_to_snf(f)), to_text(property_to_snf(f)));
  EXPECT_NE(to_text(property_to_snf(f)).find("@x0"), std::string::npos);
}

TEST(PropertyToSnf, EquisatisfiableOnRandomFormulas) {
  testkit::Rng rng(29);
  const std::vector<std::string> props{"a", "b", "c"};
  int unsat = 0;
  for (int i = 0; i < 300; ++i) {
    const Formula f = testkit::random_formula(rng, props, 3);
    const bool direct = sat_formula(f).satisfiable;
    const SatResult viaclauses = sat(property_to_snf(f));
    ASSERT_EQ(viaclauses.satisfiable, direct) << f.to_string();
    unsat += !direct;
    if (viaclauses.satisfiable) {
      // Projected to the formula's alphabet, the clause model satisfies f.
      EXPECT_TRUE(eval_classical(f, *viaclauses.witness)) << f.to_string();
    }
  }
  EXPECT_GT(unsat, 0);
}

TEST(SnfText, DumpFormat) {
  const ClauseSet cs = ks_to_snf(pessimistic_vacuum());
  const std::string line = to_string(cs[1]);
  EXPECT_EQ(line.rfind("[", 0), 0u);
  EXPECT_NE(line.find("OFF"), std::string::npos);
  EXPECT_NE(line.find("global"), std::string::npos);
  std::size_t lines = 0;
  for (char c : to_text(cs)) lines += c == '\n';
  EXPECT_EQ(lines, cs.size());
}

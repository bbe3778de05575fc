#include <gtest/gtest.h>

#include <algorithm>

#include "testkit.hpp"
#include "tpcheck/error.hpp"

using namespace tpcheck;

namespace {

Tri at(const Pks& m, const char* s, const char* p) { return m.label(*m.find_state(s), *m.find_prop(p)); }

Pks with_label(Pks m, const char* s, const char* p, Tri v) {
  m.set_label(*m.find_state(s), *m.find_prop(p), v);
  return m;
}

}  // namespace

TEST(PksFormat, VacuumModelParses) {
  const Pks m = testkit::vacuum();
  EXPECT_EQ(m.name(), "vacuum");
  EXPECT_EQ(m.state_count(), 4u);
  EXPECT_EQ(m.prop_count(), 4u);
  EXPECT_EQ(m.transition_count(), 9u);
  EXPECT_EQ(m.unknown_count(), 4u);
  EXPECT_EQ(at(m, "MOVING", "suck"), Tri::Unknown);
  EXPECT_EQ(at(m, "CLEANING", "reached"), Tri::True);
  EXPECT_TRUE(validate(m).empty());
}

TEST(PksFormat, RoundTripIsExact) {
  const Pks m = testkit::vacuum();
  const std::string text = to_text(m);
  const Pks again = parse_pks(text);
  EXPECT_EQ(again, m);
  EXPECT_EQ(to_text(again), text);

  testkit::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const Pks r = testkit::random_pks(rng);
    EXPECT_EQ(parse_pks(to_text(r)), r);
  }
}

TEST(PksFormat, Errors) {
  EXPECT_THROW(parse_pks("ap p\n"), ParseError);                                   // header missing
  EXPECT_THROW(parse_pks("pks m\nap p\nstate s\n"), ParseError);                  // label missing
  EXPECT_THROW(parse_pks("pks m\nap p\nstate s p=X\n"), ParseError);              // bad value
  EXPECT_THROW(parse_pks("pks m\nap p\nstate s p=T\ntrans s t\n"), ParseError);   // unknown state
  EXPECT_THROW(parse_pks("pks m\nap p\nstate s p=T q=T\n"), ParseError);          // unknown prop
  EXPECT_THROW(parse_pks("pks m\nap p p\n"), ParseError);                         // duplicate prop
  EXPECT_THROW(parse_pks("pks m\nap ~p\n"), ParseError);                          // complement reserved
  EXPECT_THROW(parse_pks("pks m\nap @st_x\n"), ParseError);                       // fresh prefix reserved
  EXPECT_THROW(parse_pks("pks m\nap p\nstate s p=T\nbogus s\n"), ParseError);
  try {
    parse_pks("pks m\nap p\nstate s p=T\ninit s\ntrans s nowhere\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
    EXPECT_EQ(e.column(), 9u);
  }
}

TEST(Validate, Diagnostics) {
  const Pks dead = parse_pks("pks m\nap p\nstate s p=T\nstate t p=F\ninit s\ntrans s t\n");
  const auto d = validate(dead);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0].message, "not left-total at t");
  EXPECT_EQ(d[0].state, "t");
  const Pks no_init = parse_pks("pks m\nap p\nstate s p=T\ntrans s s\n");
  ASSERT_EQ(validate(no_init).size(), 1u);
  EXPECT_EQ(validate(no_init)[0].message, "no initial state");
}

TEST(Closure, IdleHasEightAssignments) {
  const Pks c = complement_closure(testkit::vacuum());
  EXPECT_EQ(c.prop_count(), 8u);
  EXPECT_TRUE(is_complement_closed(c));
  EXPECT_EQ(at(c, "IDLE", "move"), Tri::False);
  EXPECT_EQ(at(c, "IDLE", "~move"), Tri::True);
  EXPECT_EQ(at(c, "IDLE", "suck"), Tri::False);
  EXPECT_EQ(at(c, "IDLE", "~suck"), Tri::True);
  EXPECT_EQ(at(c, "IDLE", "on"), Tri::True);
  EXPECT_EQ(at(c, "IDLE", "~on"), Tri::False);
  EXPECT_EQ(at(c, "IDLE", "reached"), Tri::Unknown);
  EXPECT_EQ(at(c, "IDLE", "~reached"), Tri::Unknown);
  EXPECT_THROW(complement_closure(c), PreconditionError);
}

TEST(Closure, ComplementInvariant) {
  testkit::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    const Pks m = testkit::random_pks(rng);
    const Pks c = complement_closure(m);
    for (StateId s = 0; s < c.state_count(); ++s) {
      for (const auto& p : m.props()) {
        EXPECT_EQ(c.label(s, *c.find_prop(p)), comp(c.label(s, *c.find_prop(complement_name(p)))));
      }
    }
  }
}

TEST(Approximation, ResolvesUnknowns) {
  const Pks c = complement_closure(testkit::vacuum());
  const Pks pes = approximate(c, Approximation::Pessimistic);
  const Pks opt = approximate(c, Approximation::Optimistic);
  EXPECT_EQ(at(pes, "MOVING", "suck"), Tri::False);
  EXPECT_EQ(at(pes, "MOVING", "~suck"), Tri::False);
  EXPECT_EQ(at(opt, "MOVING", "suck"), Tri::True);
  EXPECT_EQ(at(opt, "MOVING", "~suck"), Tri::True);
  EXPECT_TRUE(pes.is_complete());
  EXPECT_TRUE(opt.is_complete());
  for (StateId s = 0; s < c.state_count(); ++s) {
    for (PropId p = 0; p < c.prop_count(); ++p) {
      if (c.label(s, p) != Tri::Unknown) EXPECT_EQ(pes.label(s, p), opt.label(s, p));
    }
  }
  const Pks ks = complement_closure(parse_pks("pks k\nap p\nstate s p=T\ninit s\ntrans s s\n"));
  EXPECT_EQ(approximate(ks, Approximation::Pessimistic), ks);
  EXPECT_EQ(approximate(ks, Approximation::Optimistic), ks);
}

TEST(Refinement, Examples) {
  const Pks m = testkit::vacuum();
  EXPECT_TRUE(is_refinement(m, with_label(m, "MOVING", "suck", Tri::False)));
  EXPECT_TRUE(is_refinement(m, m));
  const auto why = refinement_violation(m, with_label(m, "IDLE", "on", Tri::False));
  ASSERT_TRUE(why);
  EXPECT_NE(why->find("on in IDLE"), std::string::npos);
  EXPECT_FALSE(is_refinement(m, with_label(m, "MOVING", "move", Tri::Unknown)));
  Pks extra = m;
  extra.add_transition(*m.find_state("OFF"), *m.find_state("MOVING"));
  EXPECT_FALSE(is_refinement(m, extra));
}

TEST(Revision, Examples) {
  const Pks m = testkit::vacuum();
  EXPECT_TRUE(is_revision(m, with_label(m, "MOVING", "suck", Tri::False)));
  Pks grown = m;
  const StateId s = grown.add_state("DOCKED");
  grown.add_transition(s, s);
  grown.add_transition(*grown.find_state("IDLE"), s);
  EXPECT_TRUE(is_revision(m, grown));
  const Pks fewer = parse_pks("pks v\nap move suck on\nstate OFF move=F suck=F on=F\ninit OFF\ntrans OFF OFF\n");
  EXPECT_FALSE(is_revision(m, fewer));
}

TEST(Revision, EveryRefinementIsARevision) {
  testkit::Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const Pks m = testkit::random_pks(rng);
    Pks r = m;
    for (StateId s = 0; s < m.state_count(); ++s) {
      for (PropId p = 0; p < m.prop_count(); ++p) {
        if (m.label(s, p) == Tri::Unknown && rng.coin()) r.set_label(s, p, rng.coin() ? Tri::True : Tri::False);
      }
    }
    ASSERT_TRUE(is_refinement(m, r));
    EXPECT_TRUE(is_revision(m, r));
  }
}

TEST(Completions, VacuumHasSixteen) {
  const Pks m = testkit::vacuum();
  const auto all = completions(m);
  ASSERT_EQ(all.size(), 16u);
  for (const auto& k : all) {
    EXPECT_TRUE(k.is_complete());
    EXPECT_TRUE(is_refinement(m, k));
  }
  // Lexicographic: the first completion sets every unknown to F, the last to T.
  EXPECT_EQ(at(all.front(), "MOVING", "suck"), Tri::False);
  EXPECT_EQ(at(all.back(), "IDLE", "reached"), Tri::True);
  // IDLE.reached is the first unknown in state order, so it flips last.
  EXPECT_EQ(at(all[1], "IDLE", "reached"), Tri::False);
  EXPECT_EQ(at(all[8], "IDLE", "reached"), Tri::True);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(all[i] == all[j]);
  }
}

TEST(Completions, KsAndBound) {
  const Pks ks = parse_pks("pks k\nap p\nstate s p=T\ninit s\ntrans s s\n");
  const auto one = completions(ks);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], ks);

  Pks many("many");
  many.add_prop("p");
  for (int i = 0; i < 13; ++i) many.add_state("s" + std::to_string(i));
  EXPECT_THROW(completions(many), PreconditionError);
  EXPECT_EQ(completions(many, 13).size(), 8192u);
}

TEST(ModelSize, Formula) {
  EXPECT_EQ(model_size(testkit::vacuum()), 4u * 4u + 9u + 1u);
  EXPECT_EQ(model_size(parse_pks("pks e\nap\nstate s\ninit s\ntrans s s\n")), 2u);

  Pks callee("callee1");
  for (const char* p : {"p", "q", "r"}) callee.add_prop(p);
  for (int i = 0; i < 5; ++i) callee.add_state("s" + std::to_string(i));
  for (StateId s = 0; s < 5; ++s) {
    for (StateId t = 0; t < 3; ++t) callee.add_transition(s, (s + t) % 5);
  }
  callee.add_initial(0);
  EXPECT_EQ(callee.transition_count(), 15u);
  EXPECT_EQ(model_size(callee), 31u);
}

TEST(ModelSize, InvariantUnderStateReordering) {
  testkit::Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const Pks m = testkit::random_pks(rng);
    Pks r("reordered");
    for (const auto& p : m.props()) r.add_prop(p);
    for (std::size_t k = m.state_count(); k-- > 0;) r.add_state(m.state_name(static_cast<StateId>(k)));
    for (StateId s = 0; s < m.state_count(); ++s) {
      const StateId rs = *r.find_state(m.state_name(s));
      for (PropId p = 0; p < m.prop_count(); ++p) r.set_label(rs, p, m.label(s, p));
      for (StateId t : m.successors(s)) r.add_transition(rs, *r.find_state(m.state_name(t)));
    }
    for (StateId s : m.initial()) r.add_initial(*r.find_state(m.state_name(s)));
    EXPECT_EQ(model_size(r), model_size(m));
    EXPECT_TRUE(is_refinement(m, r));
  }
}

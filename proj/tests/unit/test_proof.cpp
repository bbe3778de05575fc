#include <gtest/gtest.h>

#include <algorithm>

#include "testkit.hpp"
#include "tpcheck/error.hpp"
#include "tpcheck/proof.hpp"

using namespace tpcheck;

namespace {

const Property& vacuum_property(const char* name) {
  static const auto props = testkit::vacuum_properties();
  return testkit::property(props, name);
}

TopologicalProof reference_proof() { return parse_proof(testkit::read_fixture("phi4_reference.proof")); }

Pks single_state() { return parse_pks("pks one\nap p\nstate s p=T\ninit s\ntrans s s\n"); }

bool shape_ok(const AnalysisResult& r) {
  switch (r.verdict) {
    case Tri::False: return r.counterexample && !r.proof;
    case Tri::True: return !r.counterexample && r.proof && r.proof->level() == Tri::True;
    case Tri::Unknown: return r.counterexample && r.proof && r.proof->level() == Tri::Unknown;
  }
  return false;
}

}  // namespace

TEST(Analyze, VacuumVerdicts) {
  const Pks m = testkit::vacuum();
  const Tri expected[] = {Tri::Unknown, Tri::True, Tri::False, Tri::Unknown};
  const char* names[] = {"phi1", "phi2", "phi3", "phi4"};
  for (int i = 0; i < 4; ++i) {
    const AnalysisResult r = analyze(m, vacuum_property(names[i]));
    EXPECT_EQ(r.verdict, expected[i]) << names[i];
    EXPECT_TRUE(shape_ok(r)) << names[i];
    if (r.proof) {
      EXPECT_EQ(r.proof->property(), names[i]);
      EXPECT_TRUE(recheck(*r.proof, m).empty()) << names[i];
    }
  }
}

TEST(Analyze, Phi3CounterexampleIsADefinitiveViolation) {
  const Pks m = testkit::vacuum();
  const AnalysisResult r = analyze(m, vacuum_property("phi3"));
  ASSERT_TRUE(r.counterexample);
  const Pks opt = approximate(complement_closure(m), Approximation::Optimistic);
  const Formula tau = tau_transform(vacuum_property("phi3").formula);
  EXPECT_TRUE(is_path_of(*r.counterexample, opt));
  EXPECT_TRUE(eval_classical(tau, trace_of(*r.counterexample, opt)));
  const StatePath known{{"OFF"}, {"IDLE"}};
  EXPECT_TRUE(eval_classical(tau, trace_of(known, opt)));
  EXPECT_EQ(eval_three_valued(vacuum_property("phi3").formula, known, m), Tri::False);
}

TEST(Analyze, Phi4ProofMatchesReference) {
  const AnalysisResult r = analyze(testkit::vacuum(), vacuum_property("phi4"));
  ASSERT_TRUE(r.proof);
  EXPECT_EQ(proof_size(*r.proof), 10u);
  EXPECT_TRUE(r.proof->same_clauses(reference_proof()));
}

TEST(Analyze, RejectsBadInput) {
  EXPECT_THROW(analyze(testkit::vacuum(), {"bad", parse_ltl("G unknown")}), PreconditionError);
  const Pks dead = parse_pks("pks m\nap p\nstate s p=T\nstate t p=F\ninit s\ntrans s t\n");
  EXPECT_THROW(analyze(dead, {"x", parse_ltl("G p")}), PreconditionError);
}

TEST(Analyze, ShapeAndVerdictOracle) {
  testkit::Rng rng(71);
  int counts[3] = {0, 0, 0};
  for (int i = 0; i < 200; ++i) {
    const Pks m = testkit::random_pks(rng);
    const std::vector<std::string> used(m.props().begin(), m.props().end());
    const Property phi{"p" + std::to_string(i), testkit::random_formula(rng, used, 3)};
    const AnalysisResult r = analyze(m, phi);
    ++counts[static_cast<int>(r.verdict)];
    ASSERT_TRUE(shape_ok(r)) << phi.formula.to_string();
    EXPECT_EQ(r.verdict, three_valued_verdict(m, phi.formula));

    // The verdict is the minimum of the path values: no bounded path goes
    // below it, and the returned counterexample attains it.
    Tri lowest = Tri::True;
    testkit::for_each_path(m, 4, [&](const StatePath& p) {
      lowest = tri_min(lowest, eval_three_valued(phi.formula, p, m));
    });
    EXPECT_LE(r.verdict, lowest) << phi.formula.to_string();
    if (r.counterexample) {
      EXPECT_TRUE(is_path_of(*r.counterexample, m));
      EXPECT_EQ(eval_three_valued(phi.formula, *r.counterexample, m), r.verdict) << phi.formula.to_string();
    }
    if (r.proof) {
      for (const auto& c : r.proof->tpps()) {
        EXPECT_EQ(c.value, m.label(*m.find_state(c.state), *m.find_prop(c.prop)));
      }
      EXPECT_TRUE(recheck(*r.proof, m).empty());
    }
  }
  for (int c : counts) EXPECT_GT(c, 0);
}

TEST(Analyze, KripkeStructuresNeverGiveUnknown) {
  testkit::Rng rng(73);
  testkit::PksShape shape;
  shape.max_unknown = 0;
  for (int i = 0; i < 100; ++i) {
    const Pks m = testkit::random_pks(rng, shape);
    ASSERT_TRUE(m.is_complete());
    const std::vector<std::string> used(m.props().begin(), m.props().end());
    const AnalysisResult r = analyze(m, {"k", testkit::random_formula(rng, used, 3)});
    EXPECT_NE(r.verdict, Tri::Unknown);
  }
}

TEST(ComputeTp, SingleStateExample) {
  const Pks m = single_state();
  const Pks ks = complement_closure(m);
  const TopologicalProof p = compute_tp(m, ks, tau_transform(parse_ltl("G p")));
  ASSERT_TRUE(p.tpi());
  EXPECT_EQ(p.tpi()->states, (std::vector<std::string>{"s"}));
  ASSERT_NE(p.find_tpp("s", "p"), nullptr);
  EXPECT_EQ(p.find_tpp("s", "p")->value, Tri::True);
  EXPECT_THROW(compute_tp(m, ks, tau_transform(parse_ltl("G !p"))), PreconditionError);
}

TEST(GetTp, Table3Rows) {
  const Pks m = testkit::vacuum();
  const ClauseSet cs = ks_to_snf(approximate(complement_closure(m), Approximation::Pessimistic));
  UnsatCore core;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Provenance& p = cs[i].provenance;
    const bool moving_suck = p.state == "MOVING" && base_name(p.other) == "suck" &&
                             (p.kind == ProvenanceKind::LabelTrue || p.kind == ProvenanceKind::LabelFalse);
    if (p.kind == ProvenanceKind::Init || moving_suck || p == Provenance::reach("IDLE") ||
        p.kind == ProvenanceKind::Regularity) {
      core.clauses.push_back(cs[i]);
      core.indices.push_back(i);
    }
  }
  const TopologicalProof tp = get_tp(m, core);
  ASSERT_TRUE(tp.tpi());
  EXPECT_EQ(tp.tpi()->states, (std::vector<std::string>{"OFF"}));
  ASSERT_EQ(tp.tpps().size(), 1u);
  EXPECT_EQ(tp.tpps()[0], (Tpp{"MOVING", "suck", Tri::Unknown}));
  ASSERT_EQ(tp.tpts().size(), 1u);
  EXPECT_EQ(tp.tpts()[0], (Tpt{"IDLE", {"OFF", "IDLE", "MOVING"}}));
  EXPECT_EQ(tp.clause_count(), 3u);
}

TEST(GetTp, UnknownStateIsAnError) {
  UnsatCore core;
  core.clauses.push_back({SnfKind::Global, {{state_prop("GHOST"), true}}, {{state_prop("GHOST"), false}},
                          std::nullopt, Provenance::reach("GHOST")});
  core.indices.push_back(0);
  EXPECT_THROW(get_tp(testkit::vacuum(), core), PreconditionError);
}

TEST(Recheck, Examples) {
  const Pks m = testkit::vacuum();
  const TopologicalProof p = reference_proof();
  EXPECT_TRUE(recheck(p, m).empty());

  Pks moved = m;
  moved.clear_initial();
  moved.add_initial(*m.find_state("IDLE"));
  const auto v = recheck(p, moved);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].clause, "tpi OFF");
  EXPECT_NE(v[0].observed.find("IDLE"), std::string::npos);

  // MOVING gone: every clause naming it fails.
  const Pks smaller = parse_pks(
      "pks s\nap move suck on reached\nstate OFF move=F suck=F on=F reached=F\n"
      "state IDLE move=F suck=F on=T reached=?\ninit OFF\ntrans OFF OFF\ntrans OFF IDLE\n"
      "trans IDLE OFF\ntrans IDLE IDLE\n");
  EXPECT_EQ(recheck(p, smaller).size(), 3u);

  EXPECT_FALSE(recheck(p, m, {"move", "suck", "on", "reached", "extra"}).empty());
}

TEST(Recheck, RevisionTwoKeepsAllProofs) {
  const Pks m = testkit::vacuum();
  const Pks r2 = parse_pks(testkit::read_fixture("revision2.pks"));
  for (const char* name : {"phi1", "phi2", "phi3", "phi4"}) {
    const AnalysisResult r = analyze(m, vacuum_property(name));
    if (!r.proof) continue;
    EXPECT_TRUE(recheck(*r.proof, r2).empty()) << name;
    EXPECT_GE(analyze(r2, vacuum_property(name)).verdict, r.proof->level()) << name;
  }
}

TEST(Recheck, AgreesWithDefinition) {
  testkit::Rng rng(79);
  for (int i = 0; i < 150; ++i) {
    const Pks m = testkit::random_pks(rng);
    const std::vector<std::string> used(m.props().begin(), m.props().end());
    const AnalysisResult r = analyze(m, {"x", testkit::random_formula(rng, used, 3)});
    if (!r.proof) continue;
    for (int k = 0; k < 5; ++k) {
      const Pks m2 = testkit::random_revision(rng, m);
      EXPECT_EQ(recheck(*r.proof, m2).empty(), testkit::omega_related(*r.proof, m2));
    }
  }
}

TEST(ProofSize, Examples) {
  EXPECT_EQ(proof_size(reference_proof()), 10u);
  EXPECT_EQ(proof_size(TopologicalProof{}), 0u);
  EXPECT_LT(proof_size(reference_proof()), model_size(testkit::vacuum()));
}

TEST(ProofText, RoundTrip) {
  const std::string text = testkit::read_fixture("phi4_reference.proof");
  const TopologicalProof p = parse_proof(text);
  EXPECT_EQ(to_text(p), text);
  EXPECT_EQ(parse_proof(to_text(p)), p);
  EXPECT_EQ(p.level(), Tri::Unknown);
  EXPECT_EQ(p.property(), "phi4");
}

TEST(ProofText, Errors) {
  EXPECT_THROW(parse_proof("tpi OFF\n"), ParseError);
  EXPECT_THROW(parse_proof("proof x level=F\n"), ParseError);
  EXPECT_THROW(parse_proof("proof x level=T\ntpp OFF suck maybe\n"), ParseError);
  EXPECT_THROW(parse_proof("proof x level=T\ntpt OFF :\n"), ParseError);
  EXPECT_THROW(parse_proof("proof x level=T\ntpp OFF suck T\ntpp OFF suck F\n"), ParseError);
}

TEST(Proof, ClauseInvariants) {
  TopologicalProof p("x", Tri::True, {"a"});
  p.add_tpp({"s", "a", Tri::True});
  p.add_tpp({"s", "a", Tri::True});
  EXPECT_EQ(p.clause_count(), 1u);
  EXPECT_THROW(p.add_tpp({"s", "a", Tri::False}), PreconditionError);
  EXPECT_THROW(p.add_tpt({"s", {}}), PreconditionError);
  EXPECT_THROW(p.set_level(Tri::False), PreconditionError);
}

TEST(CounterexampleText, RoundTrip) {
  const Counterexample ce{"phi3", {{"OFF"}, {"IDLE"}}};
  const std::string text = to_text(ce);
  EXPECT_EQ(text, "ce phi3 prefix: OFF loop: IDLE\n");
  EXPECT_EQ(parse_counterexample(text), ce);
  const Counterexample empty_prefix{"p", {{}, {"A", "B"}}};
  EXPECT_EQ(parse_counterexample(to_text(empty_prefix)), empty_prefix);
  EXPECT_THROW(parse_counterexample("ce p prefix: A loop:\n"), ParseError);
}

TEST(Mutants, PreserveProofAndVerdict) {
  const Pks m = testkit::vacuum();
  const TopologicalProof p = reference_proof();
  EXPECT_TRUE(omega_related_mutants(m, p, 0, 1).empty());
  const auto mutants = omega_related_mutants(m, p, 200, 7);
  ASSERT_EQ(mutants.size(), 200u);
  EXPECT_EQ(mutants, omega_related_mutants(m, p, 200, 7));
  bool idle_move_flipped = false;
  bool moving_cleaning_removed = false;
  const StateId moving = *m.find_state("MOVING");
  for (const Pks& k : mutants) {
    EXPECT_TRUE(validate(k).empty());
    EXPECT_TRUE(recheck(p, k).empty());
    EXPECT_TRUE(testkit::omega_related(p, k));
    idle_move_flipped |= k.label(*k.find_state("IDLE"), *k.find_prop("move")) != Tri::False;
    if (!k.has_transition(moving, *k.find_state("CLEANING"))) {
      moving_cleaning_removed = true;
      EXPECT_FALSE(k.successors(moving).empty());
    }
  }
  EXPECT_TRUE(idle_move_flipped);
  EXPECT_TRUE(moving_cleaning_removed);
}

TEST(Mutants, MutantsKeepVerdictOnVacuum) {
  const Pks m = testkit::vacuum();
  for (const char* name : {"phi1", "phi2", "phi4"}) {
    const AnalysisResult r = analyze(m, vacuum_property(name));
    ASSERT_TRUE(r.proof);
    for (const Pks& k : omega_related_mutants(m, *r.proof, 30, 3)) {
      const Tri v = analyze(k, vacuum_property(name)).verdict;
      EXPECT_GE(v, r.proof->level()) << name;
      if (r.verdict == Tri::True) EXPECT_EQ(v, Tri::True);
    }
  }
}

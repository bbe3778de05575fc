#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tpcheck/ltl.hpp"
#include "tpcheck/pks.hpp"
#include "tpcheck/sat.hpp"
#include "tpcheck/semantics.hpp"
#include "tpcheck/snf.hpp"
#include "tpcheck/tri.hpp"
#include "tpcheck/uc.hpp"

namespace tpcheck {

/// ⟨s, α, v⟩: proposition α must keep value v in state s.
struct Tpp {
  std::string state;
  std::string prop;
  Tri value;
  friend bool operator==(const Tpp&, const Tpp&) = default;
};

/// ⟨s, T⟩: the successors of s must be exactly T.
struct Tpt {
  std::string state;
  std::vector<std::string> successors;
  friend bool operator==(const Tpt&, const Tpt&) = default;
};

/// ⟨S0⟩: the initial states must be exactly S0.
struct Tpi {
  std::vector<std::string> states;
  friend bool operator==(const Tpi&, const Tpi&) = default;
};

/// Proof clauses plus the verdict level they certify. At most one TPI, one
/// TPT per state and one TPP per (state, proposition); adding an identical
/// clause again is a no-op, adding a conflicting one throws PreconditionError.
class TopologicalProof {
 public:
  TopologicalProof() = default;
  TopologicalProof(std::string property, Tri level, std::vector<std::string> origin_ap);

  const std::string& property() const noexcept { return property_; }
  void set_property(std::string name) { property_ = std::move(name); }
  Tri level() const noexcept { return level_; }
  void set_level(Tri level);
  const std::vector<std::string>& origin_ap() const noexcept { return origin_ap_; }
  void set_origin_ap(std::vector<std::string> ap) { origin_ap_ = std::move(ap); }
  /// Name of the model the proof was computed on (not serialized).
  const std::string& origin() const noexcept { return origin_; }
  void set_origin(std::string name) { origin_ = std::move(name); }

  void set_tpi(Tpi c);
  void add_tpt(Tpt c);
  void add_tpp(Tpp c);

  const std::optional<Tpi>& tpi() const noexcept { return tpi_; }
  const std::vector<Tpt>& tpts() const noexcept { return tpts_; }
  const std::vector<Tpp>& tpps() const noexcept { return tpps_; }
  const Tpt* find_tpt(std::string_view state) const;
  const Tpp* find_tpp(std::string_view state, std::string_view prop) const;
  std::size_t clause_count() const noexcept { return tpps_.size() + tpts_.size() + (tpi_ ? 1 : 0); }

  /// Same level, alphabet and clause sets (clause order and successor order ignored).
  bool same_clauses(const TopologicalProof& other) const;
  friend bool operator==(const TopologicalProof&, const TopologicalProof&) = default;

 private:
  std::string property_;
  Tri level_ = Tri::True;
  std::vector<std::string> origin_ap_;
  std::string origin_;
  std::optional<Tpi> tpi_;
  std::vector<Tpt> tpts_;
  std::vector<Tpp> tpps_;
};

/// Σ over clauses: 1 per TPP, |T| per TPT, |S0| per TPI.
std::size_t proof_size(const TopologicalProof& proof);

struct AnalysisResult {
  Tri verdict = Tri::Unknown;
  /// Definitive counterexample when verdict is False, possible one when Unknown.
  std::optional<StatePath> counterexample;
  /// Level-True proof when verdict is True, level-Unknown proof when Unknown.
  std::optional<TopologicalProof> proof;
};

struct AnalyzeOptions {
  SatOptions sat;
  bool verify_uc = false;
};

/// Intermediate artifacts of the proof computation, for debug dumps.
struct ProofTrace {
  ClauseSet clauses;
  UnsatCore core;
};

/// Three-valued verdict of `phi` on `m` with its counterexample and proof.
/// The ? → ⊥ approximation decides ⊥ (a violation there exists in every
/// completion); the ? → ⊤ approximation decides ⊤. Throws PreconditionError
/// on an invalid model or a property mentioning propositions outside AP(m).
AnalysisResult analyze(const Pks& m, const Property& phi, const AnalyzeOptions& options = {},
                       ProofTrace* trace = nullptr);

/// Verdict only: the two approximation checks without proof extraction.
Tri three_valued_verdict(const Pks& m, const Formula& phi, const SatOptions& options = {});

/// Unsatisfiable core of ks_to_snf(a) ∪ property_to_snf(psi) mapped to TP
/// clauses of `m`. Level defaults to True and the property name is empty.
/// Throws PreconditionError when the clause set is satisfiable.
TopologicalProof compute_tp(const Pks& m, const Pks& a, const Formula& psi, const AnalyzeOptions& options = {},
                            ProofTrace* trace = nullptr);

/// TP clauses for the model-derived clauses of `core`. Label clauses record
/// the original value L_m(s, base(α)); regularity and property clauses are
/// dropped. Throws PreconditionError when the core names a state or
/// proposition absent from `m`.
TopologicalProof get_tp(const Pks& m, const UnsatCore& core);

struct Violation {
  std::string clause;    // the violated clause in proof-file syntax
  std::string observed;  // what the revised model has instead
};

/// Every Ω-relatedness condition `m2` breaks; empty means the re-check passes.
/// A state the proof names but `m2` lacks violates each clause naming it.
std::vector<Violation> recheck(const TopologicalProof& proof, const Pks& m2,
                               const std::vector<std::string>& original_ap);
/// Uses the proof's recorded origin alphabet.
std::vector<Violation> recheck(const TopologicalProof& proof, const Pks& m2);

/// `n` deterministic mutants of `m` that keep every clause of `proof`: at most
/// two label flips outside TPP clauses, two transition edits on sources
/// without a TPT clause, and one added state each; S0 is kept when the proof
/// has a TPI clause. Every mutant is left-total.
std::vector<Pks> omega_related_mutants(const Pks& m, const TopologicalProof& proof, std::size_t n,
                                       std::uint64_t seed);

// Text formats.
std::string to_text(const TopologicalProof& proof);
TopologicalProof parse_proof(std::string_view text);

struct Counterexample {
  std::string property;
  StatePath path;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// `ce <name> prefix: s0 s1 ... loop: t0 t1 ...`
std::string to_text(const Counterexample& ce);
Counterexample parse_counterexample(std::string_view text);

}  // namespace tpcheck

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "tpcheck/ltl.hpp"
#include "tpcheck/pks.hpp"
#include "tpcheck/semantics.hpp"
#include "tpcheck/snf.hpp"

namespace tpcheck {

struct SatOptions {
  /// Maximum number of automaton (or product) nodes explored before giving up
  /// with ResourceLimitError.
  std::size_t node_limit = 1'000'000;
};

struct SatResult {
  bool satisfiable = false;
  /// Present iff satisfiable. Assigns every proposition of the input.
  std::optional<Lasso<Valuation>> witness;
};

/// Satisfiability of the conjunction of `clauses` over infinite words.
SatResult sat(const ClauseSet& clauses, const SatOptions& options = {});

/// Satisfiability of `f` decided directly on the formula, independent of the
/// clause engine.
SatResult sat_formula(const Formula& f, const SatOptions& options = {});

struct CheckStarResult {
  bool holds = false;
  /// Present iff !holds: a path of the structure whose trace satisfies τ(phi).
  std::optional<StatePath> counterexample;
};

/// True iff no path of the complement-closed Kripke structure `ks` satisfies
/// tau_transform(phi). Decided on the product of `ks` with a tableau for
/// τ(phi).
CheckStarResult check_star(const Pks& ks, const Formula& phi, const SatOptions& options = {});

/// Reachable tableau graph for NNF(f) as a text adjacency list.
std::string automaton_text(const Formula& f, const SatOptions& options = {});

}  // namespace tpcheck

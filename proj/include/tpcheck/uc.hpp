#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "tpcheck/sat.hpp"
#include "tpcheck/snf.hpp"

namespace tpcheck {

/// An unsatisfiable subset of a clause set, in input order.
struct UnsatCore {
  ClauseSet clauses;
  std::vector<std::size_t> indices;  // positions in the input set

  /// Clauses from the Kripke-structure rules (init, reach, label).
  ClauseSet ks_part() const;
  ClauseSet regularity_part() const;
  ClauseSet property_part() const;
};

struct UcOptions {
  SatOptions sat;
  /// Within one provenance group, clauses with a lower rank are tried for
  /// deletion first. Unset means input order.
  std::function<int(const SnfClause&)> rank;
  /// Re-checks local minimality after extraction (one sat call per clause).
  bool verify = false;
};

/// Deletion-based extraction. Clauses are tried in group order regularity,
/// property, label, reach, init; each is dropped when the rest stays
/// unsatisfiable. Throws PreconditionError if `clauses` is satisfiable.
UnsatCore extract_uc(const ClauseSet& clauses, const UcOptions& options = {});

/// True when `clauses` is unsatisfiable and dropping any single clause makes
/// it satisfiable.
bool is_locally_minimal(const ClauseSet& clauses, const SatOptions& options = {});

}  // namespace tpcheck

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tpcheck/ltl.hpp"
#include "tpcheck/pks.hpp"

namespace tpcheck {

struct SnfLiteral {
  std::string prop;
  bool negated = false;

  std::string to_string() const { return negated ? "!" + prop : prop; }
  friend bool operator==(const SnfLiteral&, const SnfLiteral&) = default;
};

enum class SnfKind { Initial, Global, Eventuality };

enum class ProvenanceKind { Init, Reach, LabelTrue, LabelFalse, Regularity, Property };

/// Which encoding rule produced a clause. `state`/`other` hold the state and
/// proposition for label rows, the two states for regularity rows.
struct Provenance {
  ProvenanceKind kind = ProvenanceKind::Property;
  std::string state;
  std::string other;
  std::size_t index = 0;

  static Provenance init() { return {ProvenanceKind::Init, {}, {}, 0}; }
  static Provenance reach(std::string s) { return {ProvenanceKind::Reach, std::move(s), {}, 0}; }
  static Provenance label(bool value, std::string s, std::string prop) {
    return {value ? ProvenanceKind::LabelTrue : ProvenanceKind::LabelFalse, std::move(s),
            std::move(prop), 0};
  }
  static Provenance regularity(std::string s, std::string t) {
    return {ProvenanceKind::Regularity, std::move(s), std::move(t), 0};
  }
  static Provenance property(std::size_t i) { return {ProvenanceKind::Property, {}, {}, i}; }

  bool is_model() const noexcept { return kind != ProvenanceKind::Property; }
  std::string to_string() const;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// initial:     now[0] | ... | now[k]
/// global:      G(now... | X(next...))      -- empty `next` means G(now...)
/// eventuality: G(now... | F eventuality)
struct SnfClause {
  SnfKind kind = SnfKind::Initial;
  std::vector<SnfLiteral> now;
  std::vector<SnfLiteral> next;
  std::optional<SnfLiteral> eventuality;
  Provenance provenance;

  friend bool operator==(const SnfClause&, const SnfClause&) = default;
};

using ClauseSet = std::vector<SnfClause>;

inline constexpr std::string_view kStatePropPrefix = "@st_";
inline constexpr std::string_view kFreshPropPrefix = "@x";

/// Name of the proposition that is true exactly when the model is in `state`.
std::string state_prop(std::string_view state);

/// Clauses for a Kripke structure, in the order: initial-state clause, one
/// reach clause per state, label clauses (state then proposition order), one
/// regularity clause per unordered state pair. Throws PreconditionError on an
/// Unknown label or a proposition using a reserved `@` prefix.
ClauseSet ks_to_snf(const Pks& ks);

/// Equisatisfiable clause form of `f` (converted to NNF first) using fresh
/// definition propositions `@x<n>` allocated in preorder. A top-level
/// conjunction is split into one initial clause per conjunct. Every clause is
/// tagged Property(i), i its position in the result.
ClauseSet property_to_snf(const Formula& f);

Formula to_formula(const SnfClause& c);
/// The conjunction of all clauses (`true` for the empty set).
Formula to_formula(const ClauseSet& clauses);

/// One-line dump: `[provenance] kind: literals...`
std::string to_string(const SnfClause& c);
std::string to_text(const ClauseSet& clauses);

}  // namespace tpcheck

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tpcheck/tri.hpp"

namespace tpcheck {

using StateId = std::uint32_t;
using PropId = std::uint32_t;

/// Partial Kripke structure. States and propositions keep declaration order;
/// transitions and initial states have set semantics (duplicates ignored).
/// A Kripke structure is the special case with no Unknown labels.
class Pks {
 public:
  explicit Pks(std::string name = "model");

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// New states start with every label Unknown. Throws on duplicate names.
  StateId add_state(std::string name);
  /// New propositions start Unknown in every existing state.
  PropId add_prop(std::string name);
  void set_label(StateId s, PropId p, Tri v);
  void add_transition(StateId from, StateId to);
  void remove_transition(StateId from, StateId to);
  void add_initial(StateId s);
  void clear_initial();

  std::size_t state_count() const noexcept { return states_.size(); }
  std::size_t prop_count() const noexcept { return props_.size(); }
  std::size_t transition_count() const noexcept;

  const std::string& state_name(StateId s) const { return states_.at(s); }
  const std::string& prop_name(PropId p) const { return props_.at(p); }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::vector<std::string>& props() const noexcept { return props_; }
  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<PropId> find_prop(std::string_view name) const;

  Tri label(StateId s, PropId p) const { return labels_.at(s * props_.size() + p); }
  std::span<const StateId> successors(StateId s) const { return succ_.at(s); }
  bool has_transition(StateId from, StateId to) const;
  const std::vector<StateId>& initial() const noexcept { return initial_; }
  bool is_initial(StateId s) const;

  /// True when no label is Unknown.
  bool is_complete() const noexcept;
  std::size_t unknown_count() const noexcept;

 private:
  std::string name_;
  std::vector<std::string> states_;
  std::vector<std::string> props_;
  std::unordered_map<std::string, StateId> state_index_;
  std::unordered_map<std::string, PropId> prop_index_;
  std::vector<Tri> labels_;  // state-major, states_.size() * props_.size()
  std::vector<std::vector<StateId>> succ_;
  std::vector<StateId> initial_;
};

/// Structural equality: same names, order, labels, transitions, initials.
bool operator==(const Pks& a, const Pks& b);

struct Diagnostic {
  std::string message;
  std::optional<std::string> state;
};

/// Empty when every structural invariant holds (left-total, nonempty S0).
std::vector<Diagnostic> validate(const Pks& m);

/// Adds `~p` for every proposition, labelled with comp(L(s, p)). Throws
/// PreconditionError if the model already has complement propositions.
Pks complement_closure(const Pks& m);
bool is_complement_closed(const Pks& m);

enum class Approximation { Pessimistic, Optimistic };

/// Resolves every Unknown to False (pessimistic) or True (optimistic).
Pks approximate(const Pks& closed, Approximation mode);

bool is_refinement(const Pks& m, const Pks& m2);
bool is_revision(const Pks& m, const Pks& m2);

/// First reason `m2` fails to refine `m`, or nullopt when it does.
std::optional<std::string> refinement_violation(const Pks& m, const Pks& m2);

inline constexpr std::size_t kDefaultCompletionBound = 12;

/// Calls `fn` on each of the 2^k completions, k = number of Unknown labels.
/// Unknown labels are ordered by state then proposition; completion i sets
/// the j-th unknown to True iff bit (k-1-j) of i is set, so the sequence is
/// lexicographic with False before True. Stops early if `fn` returns false.
/// Throws PreconditionError if k exceeds `bound`.
void for_each_completion(const Pks& m, const std::function<bool(const Pks&)>& fn,
                         std::size_t bound = kDefaultCompletionBound);
std::vector<Pks> completions(const Pks& m, std::size_t bound = kDefaultCompletionBound);

/// |AP| * |S| + |R| + |S0|
std::size_t model_size(const Pks& m);

// Text format.
Pks parse_pks(std::string_view text);
std::string to_text(const Pks& m);

}  // namespace tpcheck

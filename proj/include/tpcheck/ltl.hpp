#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tpcheck {

enum class Op {
  True,
  False,
  Atom,
  Not,
  And,
  Or,
  Implies,
  Next,
  Globally,
  Finally,
  Until,
  WeakUntil,
  Release,
};

bool is_unary(Op op) noexcept;
bool is_binary(Op op) noexcept;
bool is_temporal(Op op) noexcept;

/// Immutable LTL term. Copies share structure; equality is structural.
class Formula {
 public:
  static Formula constant(bool value);
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula next(Formula f);
  static Formula globally(Formula f);
  static Formula finally(Formula f);
  static Formula until(Formula a, Formula b);
  static Formula weak_until(Formula a, Formula b);
  static Formula release(Formula a, Formula b);
  static Formula unary(Op op, Formula f);
  static Formula binary(Op op, Formula a, Formula b);

  Op op() const noexcept;
  /// Proposition name; only meaningful for Op::Atom.
  const std::string& name() const;
  /// Operand of a unary node, left operand of a binary node.
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool is_literal() const noexcept;

  /// Fully parenthesised text that parse_ltl reads back to an equal term.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// A named property from a property file (`name: formula`).
struct Property {
  std::string name;
  Formula formula;
};

Formula parse_ltl(std::string_view text);

/// Reads `name: formula` lines; `#` starts a comment, blank lines skipped.
std::vector<Property> parse_properties(std::string_view text);

// Complement-closed propositions are spelled `~` + base name.
inline constexpr char kComplementMark = '~';

std::string complement_name(std::string_view base);
bool is_complement_name(std::string_view name) noexcept;
/// Strips a leading `~`, if present.
std::string_view base_name(std::string_view name) noexcept;

Formula to_nnf(const Formula& f);
bool is_nnf(const Formula& f);
bool is_tau_normal(const Formula& f);
std::size_t negation_count(const Formula& f);
std::set<std::string> atoms(const Formula& f);

/// NNF of the negated formula with every negated atom `!a` replaced by the
/// complement proposition `~a`. Throws PreconditionError if `f` already
/// mentions complement propositions.
Formula tau_transform(const Formula& f);

}  // namespace tpcheck

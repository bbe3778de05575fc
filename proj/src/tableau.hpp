#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "tpcheck/ltl.hpp"

namespace tpcheck::detail {

/// Hash-consed NNF subformulas. Until and Finally nodes get a dense
/// eventuality index used as the acceptance-set number.
class FormulaTable {
 public:
  struct Entry {
    Op op;
    std::string name;  // Atom, and Not over an atom
    std::uint32_t lhs = 0;
    std::uint32_t rhs = 0;
    int eventuality = -1;
    Formula formula;
  };

  /// `f` must be in negation normal form.
  std::uint32_t intern(const Formula& f);
  const Entry& at(std::uint32_t id) const { return entries_[id]; }
  unsigned eventuality_count() const noexcept { return eventualities_; }

 private:
  std::map<std::tuple<Op, std::string, std::uint32_t, std::uint32_t>, std::uint32_t> index_;
  std::vector<Entry> entries_;
  unsigned eventualities_ = 0;
};

/// One way to satisfy a set of obligations in the current position.
struct Outcome {
  std::vector<std::uint32_t> lits;  // sorted literal ids (empty when an oracle decides them)
  std::vector<std::uint32_t> next;  // sorted obligations for the next position
  std::uint64_t postponed = 0;      // eventualities deferred at this position

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Decides a literal against a fixed valuation.
using LiteralOracle = std::function<bool(const FormulaTable::Entry&)>;

/// Expands `now` into its ⊆-minimal outcomes. Literals are checked against
/// `oracle` when given, otherwise recorded and checked for consistency.
std::vector<Outcome> expand(const FormulaTable& table, const std::vector<std::uint32_t>& now,
                            const LiteralOracle* oracle);

}  // namespace tpcheck::detail

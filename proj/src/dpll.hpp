#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tpcheck::detail {

// Literal encoding shared by the engines: 2 * var + (negated ? 1 : 0).
using Lit = std::uint32_t;
constexpr Lit make_lit(std::uint32_t var, bool negated) { return 2 * var + (negated ? 1 : 0); }
constexpr std::uint32_t lit_var(Lit l) { return l >> 1; }
constexpr bool lit_negated(Lit l) { return l & 1U; }
constexpr Lit lit_not(Lit l) { return l ^ 1U; }

using Clause = std::vector<Lit>;

/// Small DPLL solver for the per-step propositional constraints. Clause sets
/// here have a few dozen variables at most, so there are no watched literals.
class Dpll {
 public:
  explicit Dpll(std::uint32_t vars) : vars_(vars) {}

  /// On success `model` holds a total assignment (unconstrained variables
  /// are false).
  bool solve(std::span<const Clause* const> clauses, std::vector<bool>& model) {
    std::vector<std::int8_t> assign(vars_, -1);
    if (!search(clauses, assign)) return false;
    model.assign(vars_, false);
    for (std::uint32_t v = 0; v < vars_; ++v) model[v] = assign[v] == 1;
    return true;
  }

 private:
  static int value(const std::vector<std::int8_t>& a, Lit l) {
    const std::int8_t v = a[lit_var(l)];
    if (v < 0) return -1;
    return (v == 1) != lit_negated(l) ? 1 : 0;
  }

  // Unit propagation to fixpoint; false on conflict.
  static bool propagate(std::span<const Clause* const> clauses, std::vector<std::int8_t>& a) {
    for (bool changed = true; changed;) {
      changed = false;
      for (const Clause* c : clauses) {
        int free = 0;
        Lit last = 0;
        bool sat = false;
        for (Lit l : *c) {
          const int v = value(a, l);
          if (v == 1) {
            sat = true;
            break;
          }
          if (v < 0) {
            ++free;
            last = l;
          }
        }
        if (sat) continue;
        if (free == 0) return false;
        if (free == 1) {
          a[lit_var(last)] = lit_negated(last) ? 0 : 1;
          changed = true;
        }
      }
    }
    return true;
  }

  bool search(std::span<const Clause* const> clauses, std::vector<std::int8_t>& a) {
    if (!propagate(clauses, a)) return false;
    for (const Clause* c : clauses) {
      bool sat = false;
      Lit pick = 0;
      bool have = false;
      for (Lit l : *c) {
        const int v = value(a, l);
        if (v == 1) {
          sat = true;
          break;
        }
        if (v < 0 && !have) {
          pick = l;
          have = true;
        }
      }
      if (sat) continue;
      // Try making the literal true first, then false.
      for (bool polarity : {true, false}) {
        std::vector<std::int8_t> trial = a;
        trial[lit_var(pick)] = (polarity != lit_negated(pick)) ? 1 : 0;
        if (search(clauses, trial)) {
          a = std::move(trial);
          return true;
        }
      }
      return false;
    }
    return true;
  }

  std::uint32_t vars_;
};

}  // namespace tpcheck::detail

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tpcheck/ltl.hpp"
#include "tpcheck/pks.hpp"
#include "tpcheck/tri.hpp"

namespace tpcheck {

/// Ultimately periodic sequence: prefix followed by loop repeated forever.
template <class T>
struct Lasso {
  std::vector<T> prefix;
  std::vector<T> loop;  // nonempty

  std::size_t size() const noexcept { return prefix.size() + loop.size(); }
  /// Element at position i of the infinite sequence.
  const T& at(std::size_t i) const {
    return i < prefix.size() ? prefix[i] : loop[(i - prefix.size()) % loop.size()];
  }
  friend bool operator==(const Lasso&, const Lasso&) = default;
};

using Valuation = std::map<std::string, bool, std::less<>>;
using StatePath = Lasso<std::string>;

/// `s0,s1,(t0,...,tk)^ω`
std::string to_string(const StatePath& path);

/// Classical truth of `f` on the word. Throws PreconditionError when a
/// proposition of `f` is not assigned by some valuation, or the loop is empty.
bool eval_classical(const Formula& f, const Lasso<Valuation>& word);

/// Three-valued truth of `f` on a path of `m` (min/max over False < Unknown <
/// True, comp for negation). Throws PreconditionError if `path` is not a path
/// of `m` or mentions a proposition outside AP(m).
Tri eval_three_valued(const Formula& f, const StatePath& path, const Pks& m);

/// Valuation trace of a state path of a Kripke structure (all labels definite).
Lasso<Valuation> trace_of(const StatePath& path, const Pks& ks);

/// True when every consecutive pair (including loop closure) is a transition
/// of `m` and all names exist.
bool is_path_of(const StatePath& path, const Pks& m);

}  // namespace tpcheck

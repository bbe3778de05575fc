#include "tpcheck/semantics.hpp"

#include <stdexcept>

#include "tpcheck/error.hpp"

namespace tpcheck {

std::string to_string(const StatePath& path) {
  std::string out;
  for (const auto& s : path.prefix) out += s + ",";
  out += "(";
  for (std::size_t i = 0; i < path.loop.size(); ++i) {
    if (i) out += ",";
    out += path.loop[i];
  }
  out += ")^ω";
  return out;
}

namespace {

// Positions 0..n-1 of the lasso; the successor of the last one is the loop head.
struct Positions {
  std::size_t n;
  std::size_t loop_start;
  std::size_t succ(std::size_t i) const { return i + 1 < n ? i + 1 : loop_start; }
};

// Fixpoint of v[i] = step(i, v[succ(i)]), started from `init`. The dependency
// graph is a lasso, so at most n sweeps are needed.
template <class V, class Step>
std::vector<V> fixpoint(const Positions& pos, V init, Step step) {
  std::vector<V> v(pos.n, init);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = pos.n; k-- > 0;) {
      V next = step(k, v[pos.succ(k)]);
      if (next != v[k]) {
        v[k] = next;
        changed = true;
      }
    }
  }
  return v;
}

class ClassicalEval {
 public:
  ClassicalEval(const Lasso<Valuation>& w)
      : w_(w), pos_{w.size(), w.prefix.size()} {}

  std::vector<bool> eval(const Formula& f) const {
    const std::size_t n = pos_.n;
    std::vector<bool> out(n);
    switch (f.op()) {
      case Op::True:
      case Op::False:
        return std::vector<bool>(n, f.op() == Op::True);
      case Op::Atom:
        for (std::size_t i = 0; i < n; ++i) {
          const Valuation& v = w_.at(i);
          auto it = v.find(f.name());
          if (it == v.end()) {
            throw PreconditionError("proposition '" + f.name() + "' unassigned at position " +
                                    std::to_string(i));
          }
          out[i] = it->second;
        }
        return out;
      case Op::Not: {
        auto a = eval(f.lhs());
        for (std::size_t i = 0; i < n; ++i) out[i] = !a[i];
        return out;
      }
      case Op::Next: {
        auto a = eval(f.lhs());
        for (std::size_t i = 0; i < n; ++i) out[i] = a[pos_.succ(i)];
        return out;
      }
      case Op::Globally: {
        auto a = eval(f.lhs());
        return fixpoint<bool>(pos_, true, [&](std::size_t i, bool nx) { return a[i] && nx; });
      }
      case Op::Finally: {
        auto a = eval(f.lhs());
        return fixpoint<bool>(pos_, false, [&](std::size_t i, bool nx) { return a[i] || nx; });
      }
      default:
        break;
    }
    auto a = eval(f.lhs());
    auto b = eval(f.rhs());
    switch (f.op()) {
      case Op::And:
        for (std::size_t i = 0; i < n; ++i) out[i] = a[i] && b[i];
        return out;
      case Op::Or:
        for (std::size_t i = 0; i < n; ++i) out[i] = a[i] || b[i];
        return out;
      case Op::Implies:
        for (std::size_t i = 0; i < n; ++i) out[i] = !a[i] || b[i];
        return out;
      case Op::Until:
        return fixpoint<bool>(pos_, false,
                              [&](std::size_t i, bool nx) { return b[i] || (a[i] && nx); });
      case Op::WeakUntil:
        return fixpoint<bool>(pos_, true,
                              [&](std::size_t i, bool nx) { return b[i] || (a[i] && nx); });
      case Op::Release:
        return fixpoint<bool>(pos_, true,
                              [&](std::size_t i, bool nx) { return b[i] && (a[i] || nx); });
      default:
        throw std::logic_error("unknown operator");
    }
  }

 private:
  const Lasso<Valuation>& w_;
  Positions pos_;
};

// Direct transcription of the inductive three-valued rules: only atoms,
// comp, min, X and U are primitive; everything else is derived from them.
class ThreeValuedEval {
 public:
  ThreeValuedEval(std::vector<StateId> states, std::size_t loop_start, const Pks& m)
      : states_(std::move(states)), pos_{states_.size(), loop_start}, m_(m) {}

  std::vector<Tri> eval(const Formula& f) const {
    const std::size_t n = pos_.n;
    using F = Formula;
    switch (f.op()) {
      case Op::True:
      case Op::False:
        return std::vector<Tri>(n, f.op() == Op::True ? Tri::True : Tri::False);
      case Op::Atom: {
        auto p = m_.find_prop(f.name());
        if (!p) throw PreconditionError("proposition '" + f.name() + "' not in model");
        std::vector<Tri> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = m_.label(states_[i], *p);
        return out;
      }
      case Op::Not:
        return map1(eval(f.lhs()), comp);
      case Op::And:
        return map2(eval(f.lhs()), eval(f.rhs()), tri_min);
      case Op::Or:
        return eval(F::negation(F::conj(F::negation(f.lhs()), F::negation(f.rhs()))));
      case Op::Implies:
        return eval(F::disj(F::negation(f.lhs()), f.rhs()));
      case Op::Next: {
        auto a = eval(f.lhs());
        std::vector<Tri> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = a[pos_.succ(i)];
        return out;
      }
      case Op::Until: {
        // max over j of min(a_0..a_{j-1}, b_j): least fixpoint from False.
        auto a = eval(f.lhs());
        auto b = eval(f.rhs());
        return fixpoint<Tri>(pos_, Tri::False, [&](std::size_t i, Tri nx) {
          return tri_max(b[i], tri_min(a[i], nx));
        });
      }
      case Op::Finally:
        return eval(F::until(F::constant(true), f.lhs()));
      case Op::Globally:
        return eval(F::negation(F::finally(F::negation(f.lhs()))));
      case Op::WeakUntil:
        return eval(F::disj(F::until(f.lhs(), f.rhs()), F::globally(f.lhs())));
      case Op::Release:
        return eval(F::negation(F::until(F::negation(f.lhs()), F::negation(f.rhs()))));
    }
    throw std::logic_error("unknown operator");
  }

 private:
  template <class Fn>
  static std::vector<Tri> map1(std::vector<Tri> v, Fn fn) {
    for (auto& x : v) x = fn(x);
    return v;
  }
  template <class Fn>
  static std::vector<Tri> map2(std::vector<Tri> a, const std::vector<Tri>& b, Fn fn) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = fn(a[i], b[i]);
    return a;
  }

  std::vector<StateId> states_;
  Positions pos_;
  const Pks& m_;
};

}  // namespace

bool eval_classical(const Formula& f, const Lasso<Valuation>& word) {
  if (word.loop.empty()) throw PreconditionError("lasso loop is empty");
  return ClassicalEval(word).eval(f)[0];
}

bool is_path_of(const StatePath& path, const Pks& m) {
  if (path.loop.empty()) return false;
  std::vector<StateId> ids;
  for (std::size_t i = 0; i < path.size(); ++i) {
    auto s = m.find_state(path.at(i));
    if (!s) return false;
    ids.push_back(*s);
  }
  for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
    if (!m.has_transition(ids[i], ids[i + 1])) return false;
  }
  return m.has_transition(ids.back(), ids[path.prefix.size()]);
}

Tri eval_three_valued(const Formula& f, const StatePath& path, const Pks& m) {
  if (!is_path_of(path, m)) throw PreconditionError("not a path of the model");
  std::vector<StateId> ids;
  for (std::size_t i = 0; i < path.size(); ++i) ids.push_back(*m.find_state(path.at(i)));
  return ThreeValuedEval(std::move(ids), path.prefix.size(), m).eval(f)[0];
}

Lasso<Valuation> trace_of(const StatePath& path, const Pks& ks) {
  auto valuation = [&](const std::string& name) {
    auto s = ks.find_state(name);
    if (!s) throw PreconditionError("unknown state '" + name + "'");
    Valuation v;
    for (PropId p = 0; p < ks.prop_count(); ++p) {
      const Tri t = ks.label(*s, p);
      if (t == Tri::Unknown) throw PreconditionError("trace of a partial model");
      v.emplace(ks.prop_name(p), t == Tri::True);
    }
    return v;
  };
  Lasso<Valuation> out;
  for (const auto& s : path.prefix) out.prefix.push_back(valuation(s));
  for (const auto& s : path.loop) out.loop.push_back(valuation(s));
  return out;
}

}  // namespace tpcheck

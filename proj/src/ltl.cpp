#include "tpcheck/ltl.hpp"

#include <functional>
#include <stdexcept>

#include "tpcheck/error.hpp"

namespace tpcheck {

struct Formula::Node {
  Op op;
  std::string name;
  std::vector<Formula> kids;
};

bool is_unary(Op op) noexcept {
  return op == Op::Not || op == Op::Next || op == Op::Globally || op == Op::Finally;
}

bool is_binary(Op op) noexcept {
  switch (op) {
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Until:
    case Op::WeakUntil:
    case Op::Release:
      return true;
    default:
      return false;
  }
}

bool is_temporal(Op op) noexcept {
  switch (op) {
    case Op::Next:
    case Op::Globally:
    case Op::Finally:
    case Op::Until:
    case Op::WeakUntil:
    case Op::Release:
      return true;
    default:
      return false;
  }
}

Formula Formula::constant(bool value) {
  return Formula(std::make_shared<const Node>(Node{value ? Op::True : Op::False, {}, {}}));
}

Formula Formula::atom(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty proposition name");
  return Formula(std::make_shared<const Node>(Node{Op::Atom, std::move(name), {}}));
}

Formula Formula::unary(Op op, Formula f) {
  if (!is_unary(op)) throw std::invalid_argument("not a unary operator");
  return Formula(std::make_shared<const Node>(Node{op, {}, {std::move(f)}}));
}

Formula Formula::binary(Op op, Formula a, Formula b) {
  if (!is_binary(op)) throw std::invalid_argument("not a binary operator");
  return Formula(std::make_shared<const Node>(Node{op, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::negation(Formula f) { return unary(Op::Not, std::move(f)); }
Formula Formula::next(Formula f) { return unary(Op::Next, std::move(f)); }
Formula Formula::globally(Formula f) { return unary(Op::Globally, std::move(f)); }
Formula Formula::finally(Formula f) { return unary(Op::Finally, std::move(f)); }
Formula Formula::conj(Formula a, Formula b) { return binary(Op::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return binary(Op::Or, std::move(a), std::move(b)); }
Formula Formula::implies(Formula a, Formula b) {
  return binary(Op::Implies, std::move(a), std::move(b));
}
Formula Formula::until(Formula a, Formula b) { return binary(Op::Until, std::move(a), std::move(b)); }
Formula Formula::weak_until(Formula a, Formula b) {
  return binary(Op::WeakUntil, std::move(a), std::move(b));
}
Formula Formula::release(Formula a, Formula b) {
  return binary(Op::Release, std::move(a), std::move(b));
}

Op Formula::op() const noexcept { return node_->op; }

const std::string& Formula::name() const { return node_->name; }

const Formula& Formula::lhs() const {
  if (node_->kids.empty()) throw std::logic_error("formula has no operands");
  return node_->kids[0];
}

const Formula& Formula::rhs() const {
  if (node_->kids.size() < 2) throw std::logic_error("formula has no right operand");
  return node_->kids[1];
}

bool Formula::is_literal() const noexcept {
  return op() == Op::Atom || (op() == Op::Not && lhs().op() == Op::Atom);
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op() || a.node_->name != b.node_->name) return false;
  return a.node_->kids == b.node_->kids;
}

namespace {

const char* binary_symbol(Op op) {
  switch (op) {
    case Op::And: return "&";
    case Op::Or: return "|";
    case Op::Implies: return "->";
    case Op::Until: return "U";
    case Op::WeakUntil: return "W";
    case Op::Release: return "R";
    default: return "?";
  }
}

const char* unary_symbol(Op op) {
  switch (op) {
    case Op::Not: return "!";
    case Op::Next: return "X ";
    case Op::Globally: return "G ";
    case Op::Finally: return "F ";
    default: return "?";
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::True: out += "true"; return;
    case Op::False: out += "false"; return;
    case Op::Atom: out += f.name(); return;
    default: break;
  }
  if (is_unary(f.op())) {
    out += unary_symbol(f.op());
    print(f.lhs(), out);
    return;
  }
  out += '(';
  print(f.lhs(), out);
  out += ' ';
  out += binary_symbol(f.op());
  out += ' ';
  print(f.rhs(), out);
  out += ')';
}

}  // namespace

std::string Formula::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

std::string complement_name(std::string_view base) {
  if (is_complement_name(base)) {
    throw PreconditionError("complement of complement proposition '" + std::string(base) + "'");
  }
  std::string out(1, kComplementMark);
  out += base;
  return out;
}

bool is_complement_name(std::string_view name) noexcept {
  return !name.empty() && name.front() == kComplementMark;
}

std::string_view base_name(std::string_view name) noexcept {
  return is_complement_name(name) ? name.substr(1) : name;
}

namespace {

Formula nnf(const Formula& f, bool negated) {
  using F = Formula;
  switch (f.op()) {
    case Op::True:
    case Op::False:
      return negated ? F::constant(f.op() == Op::False) : f;
    case Op::Atom:
      return negated ? F::negation(f) : f;
    case Op::Not:
      return nnf(f.lhs(), !negated);
    case Op::Implies:
      return nnf(F::disj(F::negation(f.lhs()), f.rhs()), negated);
    case Op::And:
      return negated ? F::disj(nnf(f.lhs(), true), nnf(f.rhs(), true))
                     : F::conj(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::Or:
      return negated ? F::conj(nnf(f.lhs(), true), nnf(f.rhs(), true))
                     : F::disj(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::Next:
      return F::next(nnf(f.lhs(), negated));
    case Op::Globally:
      return negated ? F::finally(nnf(f.lhs(), true)) : F::globally(nnf(f.lhs(), false));
    case Op::Finally:
      return negated ? F::globally(nnf(f.lhs(), true)) : F::finally(nnf(f.lhs(), false));
    case Op::Until:
      // !(a U b) == !b W (!a & !b)
      if (negated) {
        return F::weak_until(nnf(f.rhs(), true),
                             F::conj(nnf(f.lhs(), true), nnf(f.rhs(), true)));
      }
      return F::until(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::WeakUntil:
      // !(a W b) == !b U (!a & !b)
      if (negated) {
        return F::until(nnf(f.rhs(), true), F::conj(nnf(f.lhs(), true), nnf(f.rhs(), true)));
      }
      return F::weak_until(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Op::Release:
      // !(a R b) == !a U !b
      if (negated) return F::until(nnf(f.lhs(), true), nnf(f.rhs(), true));
      return F::release(nnf(f.lhs(), false), nnf(f.rhs(), false));
  }
  throw std::logic_error("unknown operator");
}

Formula replace_negated_atoms(const Formula& f) {
  switch (f.op()) {
    case Op::True:
    case Op::False:
    case Op::Atom:
      return f;
    case Op::Not:
      return Formula::atom(complement_name(f.lhs().name()));
    default:
      break;
  }
  if (is_unary(f.op())) return Formula::unary(f.op(), replace_negated_atoms(f.lhs()));
  return Formula::binary(f.op(), replace_negated_atoms(f.lhs()), replace_negated_atoms(f.rhs()));
}

void visit(const Formula& f, const std::function<void(const Formula&)>& fn) {
  fn(f);
  if (is_unary(f.op())) {
    visit(f.lhs(), fn);
  } else if (is_binary(f.op())) {
    visit(f.lhs(), fn);
    visit(f.rhs(), fn);
  }
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

bool is_nnf(const Formula& f) {
  bool ok = true;
  visit(f, [&](const Formula& g) {
    if (g.op() == Op::Implies) ok = false;
    if (g.op() == Op::Not && g.lhs().op() != Op::Atom) ok = false;
  });
  return ok;
}

bool is_tau_normal(const Formula& f) { return is_nnf(f) && negation_count(f) == 0; }

std::size_t negation_count(const Formula& f) {
  std::size_t n = 0;
  visit(f, [&](const Formula& g) {
    if (g.op() == Op::Not) ++n;
  });
  return n;
}

std::set<std::string> atoms(const Formula& f) {
  std::set<std::string> out;
  visit(f, [&](const Formula& g) {
    if (g.op() == Op::Atom) out.insert(g.name());
  });
  return out;
}

Formula tau_transform(const Formula& f) {
  for (const auto& a : atoms(f)) {
    if (is_complement_name(a)) {
      throw PreconditionError("property already mentions complement proposition '" + a + "'");
    }
  }
  return replace_negated_atoms(to_nnf(Formula::negation(f)));
}

}  // namespace tpcheck

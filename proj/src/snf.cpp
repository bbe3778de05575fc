#include "tpcheck/snf.hpp"

#include <map>
#include <stdexcept>

#include "tpcheck/error.hpp"

namespace tpcheck {

std::string Provenance::to_string() const {
  switch (kind) {
    case ProvenanceKind::Init: return "init";
    case ProvenanceKind::Reach: return "reach " + state;
    case ProvenanceKind::LabelTrue: return "label+ " + state + " " + other;
    case ProvenanceKind::LabelFalse: return "label- " + state + " " + other;
    case ProvenanceKind::Regularity: return "reg " + state + " " + other;
    case ProvenanceKind::Property: return "prop " + std::to_string(index);
  }
  return "?";
}

std::string state_prop(std::string_view state) {
  std::string out(kStatePropPrefix);
  out += state;
  return out;
}

ClauseSet ks_to_snf(const Pks& ks) {
  for (const auto& p : ks.props()) {
    if (!p.empty() && p.front() == '@') {
      throw PreconditionError("proposition '" + p + "' uses a reserved '@' prefix");
    }
  }
  ClauseSet out;
  const auto pos = [&](StateId s) { return SnfLiteral{state_prop(ks.state_name(s)), false}; };
  const auto neg = [&](StateId s) { return SnfLiteral{state_prop(ks.state_name(s)), true}; };

  SnfClause init{SnfKind::Initial, {}, {}, std::nullopt, Provenance::init()};
  for (StateId s : ks.initial()) init.now.push_back(pos(s));
  out.push_back(std::move(init));

  for (StateId s = 0; s < ks.state_count(); ++s) {
    SnfClause reach{SnfKind::Global, {neg(s)}, {}, std::nullopt,
                    Provenance::reach(ks.state_name(s))};
    for (StateId t : ks.successors(s)) reach.next.push_back(pos(t));
    out.push_back(std::move(reach));
  }

  for (StateId s = 0; s < ks.state_count(); ++s) {
    for (PropId p = 0; p < ks.prop_count(); ++p) {
      const Tri v = ks.label(s, p);
      if (v == Tri::Unknown) {
        throw PreconditionError("Kripke structure expected: " + ks.prop_name(p) + " is ? in " +
                                ks.state_name(s));
      }
      const bool value = v == Tri::True;
      out.push_back({SnfKind::Global,
                     {neg(s), SnfLiteral{ks.prop_name(p), !value}},
                     {},
                     std::nullopt,
                     Provenance::label(value, ks.state_name(s), ks.prop_name(p))});
    }
  }

  for (StateId s = 0; s < ks.state_count(); ++s) {
    for (StateId t = s + 1; t < ks.state_count(); ++t) {
      out.push_back({SnfKind::Global,
                     {neg(s), neg(t)},
                     {},
                     std::nullopt,
                     Provenance::regularity(ks.state_name(s), ks.state_name(t))});
    }
  }
  return out;
}

namespace {

SnfLiteral literal_of(const Formula& f) {
  if (f.op() == Op::Atom) return {f.name(), false};
  return {f.lhs().name(), true};
}

SnfLiteral negate(SnfLiteral l) {
  l.negated = !l.negated;
  return l;
}

class PropertyEncoder {
 public:
  ClauseSet encode(const Formula& nnf) {
    std::vector<Formula> conjuncts;
    split(nnf, conjuncts);
    for (const auto& c : conjuncts) allocate(c);
    for (const auto& c : conjuncts) {
      if (c.op() == Op::True) continue;
      if (c.op() == Op::False) {
        emit({SnfKind::Initial, {}, {}, std::nullopt, {}});
        continue;
      }
      emit({SnfKind::Initial, {rep(c)}, {}, std::nullopt, {}});
    }
    for (std::size_t i = 0; i < defined_.size(); ++i) define(defined_[i]);
    return std::move(out_);
  }

 private:
  static void split(const Formula& f, std::vector<Formula>& out) {
    if (f.op() == Op::And) {
      split(f.lhs(), out);
      split(f.rhs(), out);
    } else {
      out.push_back(f);
    }
  }

  // Names are handed out in preorder, before any clause is emitted.
  void allocate(const Formula& f) {
    if (f.is_literal()) return;
    const std::string key = f.to_string();
    if (names_.count(key)) return;
    names_.emplace(key, std::string(kFreshPropPrefix) + std::to_string(names_.size()));
    defined_.push_back(f);
    if (is_unary(f.op())) {
      allocate(f.lhs());
    } else if (is_binary(f.op())) {
      allocate(f.lhs());
      allocate(f.rhs());
    }
  }

  SnfLiteral rep(const Formula& f) const {
    if (f.is_literal()) return literal_of(f);
    return {names_.at(f.to_string()), false};
  }

  void global(std::vector<SnfLiteral> now, std::vector<SnfLiteral> next) {
    emit({SnfKind::Global, std::move(now), std::move(next), std::nullopt, {}});
  }

  void define(const Formula& f) {
    const SnfLiteral x = rep(f);
    const SnfLiteral nx = negate(x);
    switch (f.op()) {
      case Op::True:
        return;
      case Op::False:
        global({nx}, {});
        return;
      case Op::And:
        global({nx, rep(f.lhs())}, {});
        global({nx, rep(f.rhs())}, {});
        return;
      case Op::Or:
        global({nx, rep(f.lhs()), rep(f.rhs())}, {});
        return;
      case Op::Next:
        global({nx}, {rep(f.lhs())});
        return;
      case Op::Globally:
        global({nx, rep(f.lhs())}, {});
        global({nx}, {x});
        return;
      case Op::Finally:
        emit({SnfKind::Eventuality, {nx}, {}, rep(f.lhs()), {}});
        return;
      case Op::Until:
        global({nx, rep(f.rhs()), rep(f.lhs())}, {});
        global({nx, rep(f.rhs())}, {x});
        emit({SnfKind::Eventuality, {nx}, {}, rep(f.rhs()), {}});
        return;
      case Op::WeakUntil:
        global({nx, rep(f.rhs()), rep(f.lhs())}, {});
        global({nx, rep(f.rhs())}, {x});
        return;
      case Op::Release:
        global({nx, rep(f.rhs())}, {});
        global({nx, rep(f.lhs())}, {x});
        return;
      default:
        throw std::logic_error("formula not in negation normal form");
    }
  }

  void emit(SnfClause c) {
    c.provenance = Provenance::property(out_.size());
    out_.push_back(std::move(c));
  }

  std::map<std::string, std::string> names_;
  std::vector<Formula> defined_;
  ClauseSet out_;
};

Formula disjunction(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::constant(false);
  Formula f = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) f = Formula::disj(f, parts[i]);
  return f;
}

Formula literal_formula(const SnfLiteral& l) {
  Formula a = Formula::atom(l.prop);
  return l.negated ? Formula::negation(a) : a;
}

std::string join(const std::vector<SnfLiteral>& lits) {
  std::string out;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i) out += " | ";
    out += lits[i].to_string();
  }
  return out;
}

}  // namespace

ClauseSet property_to_snf(const Formula& f) { return PropertyEncoder().encode(to_nnf(f)); }

Formula to_formula(const SnfClause& c) {
  std::vector<Formula> parts;
  for (const auto& l : c.now) parts.push_back(literal_formula(l));
  switch (c.kind) {
    case SnfKind::Initial:
      return disjunction(parts);
    case SnfKind::Global:
      if (!c.next.empty()) {
        std::vector<Formula> nexts;
        for (const auto& l : c.next) nexts.push_back(literal_formula(l));
        parts.push_back(Formula::next(disjunction(nexts)));
      }
      return Formula::globally(disjunction(parts));
    case SnfKind::Eventuality:
      parts.push_back(Formula::finally(literal_formula(*c.eventuality)));
      return Formula::globally(disjunction(parts));
  }
  throw std::logic_error("unknown clause kind");
}

Formula to_formula(const ClauseSet& clauses) {
  if (clauses.empty()) return Formula::constant(true);
  Formula f = to_formula(clauses.front());
  for (std::size_t i = 1; i < clauses.size(); ++i) f = Formula::conj(f, to_formula(clauses[i]));
  return f;
}

std::string to_string(const SnfClause& c) {
  std::string out = "[" + c.provenance.to_string() + "] ";
  std::string body = join(c.now);
  switch (c.kind) {
    case SnfKind::Initial:
      out += "initial: ";
      break;
    case SnfKind::Global:
      out += "global: ";
      if (!c.next.empty()) {
        if (!body.empty()) body += " | ";
        body += "X(" + join(c.next) + ")";
      }
      break;
    case SnfKind::Eventuality:
      out += "eventuality: ";
      if (!body.empty()) body += " | ";
      body += "F " + c.eventuality->to_string();
      break;
  }
  return out + (body.empty() ? "false" : body);
}

std::string to_text(const ClauseSet& clauses) {
  std::string out;
  for (const auto& c : clauses) out += to_string(c) + "\n";
  return out;
}

}  // namespace tpcheck

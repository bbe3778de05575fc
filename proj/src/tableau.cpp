#include "tableau.hpp"

#include <algorithm>
#include <stdexcept>

#include "tpcheck/error.hpp"

namespace tpcheck::detail {

std::uint32_t FormulaTable::intern(const Formula& f) {
  std::uint32_t l = 0;
  std::uint32_t r = 0;
  std::string name;
  switch (f.op()) {
    case Op::Atom:
      name = f.name();
      break;
    case Op::Not:
      if (f.lhs().op() != Op::Atom) throw std::logic_error("formula not in negation normal form");
      name = f.lhs().name();
      break;
    case Op::Implies:
      throw std::logic_error("formula not in negation normal form");
    default:
      if (is_unary(f.op())) l = intern(f.lhs());
      if (is_binary(f.op())) {
        l = intern(f.lhs());
        r = intern(f.rhs());
      }
  }
  auto key = std::make_tuple(f.op(), name, l, r);
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  Entry e{f.op(), name, l, r, -1, f};
  if (f.op() == Op::Until || f.op() == Op::Finally) {
    if (eventualities_ == 64) throw ResourceLimitError("more than 64 eventualities in one formula");
    e.eventuality = static_cast<int>(eventualities_++);
  }
  const auto id = static_cast<std::uint32_t>(entries_.size());
  entries_.push_back(std::move(e));
  index_.emplace(std::move(key), id);
  return id;
}

namespace {

void insert_sorted(std::vector<std::uint32_t>& v, std::uint32_t x) {
  auto it = std::lower_bound(v.begin(), v.end(), x);
  if (it == v.end() || *it != x) v.insert(it, x);
}

class Expander {
 public:
  Expander(const FormulaTable& t, const LiteralOracle* o) : table_(t), oracle_(o) {}

  void run(std::vector<std::uint32_t> todo, Outcome cur) {
    while (!todo.empty()) {
      const std::uint32_t id = todo.back();
      todo.pop_back();
      const auto& e = table_.at(id);
      switch (e.op) {
        case Op::True:
          break;
        case Op::False:
          return;
        case Op::Atom:
        case Op::Not:
          if (!add_literal(cur, id)) return;
          break;
        case Op::And:
          todo.push_back(e.rhs);
          todo.push_back(e.lhs);
          break;
        case Op::Or:
          run(with(todo, {e.lhs}), cur);
          todo.push_back(e.rhs);
          break;
        case Op::Next:
          insert_sorted(cur.next, e.lhs);
          break;
        case Op::Globally:
          insert_sorted(cur.next, id);
          todo.push_back(e.lhs);
          break;
        case Op::Finally:
          run(with(todo, {e.lhs}), cur);
          insert_sorted(cur.next, id);
          cur.postponed |= std::uint64_t{1} << e.eventuality;
          break;
        case Op::Until:
          run(with(todo, {e.rhs}), cur);
          insert_sorted(cur.next, id);
          cur.postponed |= std::uint64_t{1} << e.eventuality;
          todo.push_back(e.lhs);
          break;
        case Op::WeakUntil:
          run(with(todo, {e.rhs}), cur);
          insert_sorted(cur.next, id);
          todo.push_back(e.lhs);
          break;
        case Op::Release:
          run(with(todo, {e.lhs, e.rhs}), cur);
          insert_sorted(cur.next, id);
          todo.push_back(e.rhs);
          break;
        case Op::Implies:
          throw std::logic_error("formula not in negation normal form");
      }
    }
    out_.push_back(std::move(cur));
  }

  std::vector<Outcome> take() { return std::move(out_); }

 private:
  static std::vector<std::uint32_t> with(std::vector<std::uint32_t> todo,
                                         std::initializer_list<std::uint32_t> extra) {
    for (auto x : extra) todo.push_back(x);
    return todo;
  }

  bool add_literal(Outcome& cur, std::uint32_t id) {
    const auto& e = table_.at(id);
    if (oracle_) return (*oracle_)(e);
    const bool neg = e.op == Op::Not;
    for (std::uint32_t other : cur.lits) {
      const auto& o = table_.at(other);
      if (o.name == e.name && (o.op == Op::Not) != neg) return false;
    }
    insert_sorted(cur.lits, id);
    return true;
  }

  const FormulaTable& table_;
  const LiteralOracle* oracle_;
  std::vector<Outcome> out_;
};

bool dominates(const Outcome& a, const Outcome& b) {
  return (a.postponed & ~b.postponed) == 0 &&
         std::includes(b.lits.begin(), b.lits.end(), a.lits.begin(), a.lits.end()) &&
         std::includes(b.next.begin(), b.next.end(), a.next.begin(), a.next.end());
}

}  // namespace

std::vector<Outcome> expand(const FormulaTable& table, const std::vector<std::uint32_t>& now,
                            const LiteralOracle* oracle) {
  Expander ex(table, oracle);
  std::vector<std::uint32_t> todo(now.rbegin(), now.rend());
  ex.run(std::move(todo), Outcome{});
  std::vector<Outcome> all = ex.take();

  // Keep the first representative of each ⊆-minimal outcome, in discovery order.
  std::vector<Outcome> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < all.size() && !drop; ++j) {
      if (i == j || !dominates(all[j], all[i])) continue;
      drop = !dominates(all[i], all[j]) || j < i;
    }
    if (!drop) kept.push_back(all[i]);
  }
  return kept;
}

}  // namespace tpcheck::detail

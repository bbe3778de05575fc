// Clause-level satisfiability for SNF sets. Each automaton state records
// which step clauses fired at the previous position and which eventuality
// literals are still owed; one position is solved by enumerating, per step
// and eventuality clause, whether its present part is satisfied or it fires,
// with a propositional check after every choice.

#include <algorithm>
#include <map>
#include <unordered_map>

#include "buchi.hpp"
#include "dpll.hpp"
#include "tpcheck/error.hpp"
#include "tpcheck/sat.hpp"

namespace tpcheck {
namespace {

using detail::Clause;
using detail::Edge;
using detail::Lit;

struct StepClause {
  Clause now;
  Clause next;
};

struct EventualityClause {
  Clause now;
  unsigned literal;  // index into SnfGraph::eventualities_
};

struct Node {
  bool start;
  std::vector<std::uint32_t> triggered;  // sorted step clause ids
  std::uint64_t pending;

  friend auto operator<=>(const Node&, const Node&) = default;
};

class SnfGraph : public detail::GeneralizedGraph {
 public:
  explicit SnfGraph(const ClauseSet& clauses) {
    for (const auto& c : clauses) {
      switch (c.kind) {
        case SnfKind::Initial:
          initial_clauses_.push_back(encode(c.now));
          break;
        case SnfKind::Global:
          if (c.next.empty()) {
            invariants_.push_back(encode(c.now));
          } else {
            step_.push_back({encode(c.now), encode(c.next)});
          }
          break;
        case SnfKind::Eventuality: {
          const Lit l = lit(*c.eventuality);
          auto it = std::find(eventualities_.begin(), eventualities_.end(), l);
          const auto idx = static_cast<unsigned>(it - eventualities_.begin());
          if (it == eventualities_.end()) {
            if (eventualities_.size() == 64) {
              throw ResourceLimitError("more than 64 distinct eventuality literals");
            }
            eventualities_.push_back(l);
          }
          events_.push_back({encode(c.now), idx});
          break;
        }
      }
    }
  }

  unsigned acceptance_sets() const override { return static_cast<unsigned>(eventualities_.size()); }

  std::vector<std::uint32_t> initial() override { return {node_id({true, {}, 0})}; }

  std::vector<Edge> successors(std::uint32_t id) override {
    if (auto it = cache_.find(id); it != cache_.end()) return it->second;
    const Node node = nodes_[id];
    Search search{*this, node, {}, {}, 0, 0, {}};
    for (const Clause& c : invariants_) search.base.push_back(&c);
    if (node.start) {
      for (const Clause& c : initial_clauses_) search.base.push_back(&c);
    }
    for (auto s : node.triggered) search.base.push_back(&step_[s].next);
    std::vector<Edge> out;
    if (search.consistent()) search.decide(0);

    const unsigned k = acceptance_sets();
    const std::uint64_t mask = k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
    for (auto& r : search.results) {
      out.push_back({node_id({false, std::move(r.triggered), r.pending}), mask & ~r.pending,
                     valuation_id(std::move(r.model))});
    }
    cache_.emplace(id, out);
    return out;
  }

  Valuation valuation(std::uint32_t label) const {
    Valuation v;
    const auto& model = valuations_[label];
    for (std::size_t i = 0; i < names_.size(); ++i) v.emplace(names_[i], model[i]);
    return v;
  }

 private:
  struct Result {
    std::vector<std::uint32_t> triggered;
    std::uint64_t pending;
    std::vector<bool> model;
  };

  struct Search {
    SnfGraph& g;
    const Node& node;
    std::vector<const Clause*> base;
    std::vector<Clause> extra;
    std::uint64_t required = 0;
    std::uint64_t pending = 0;
    std::vector<std::uint32_t> triggered;
    std::vector<Result> results = {};

    bool solve(std::vector<bool>* model) {
      std::vector<const Clause*> all = base;
      for (const Clause& c : extra) all.push_back(&c);
      std::vector<bool> scratch;
      return detail::Dpll(static_cast<std::uint32_t>(g.names_.size())).solve(all, model ? *model : scratch);
    }
    bool consistent() { return solve(nullptr); }

    // Pushes `clauses`, recurses if still consistent, then pops them.
    template <class Then>
    void branch(const std::vector<Clause>& clauses, Then then) {
      const std::size_t mark = extra.size();
      extra.insert(extra.end(), clauses.begin(), clauses.end());
      if (consistent()) then();
      extra.resize(mark);
    }

    static std::vector<Clause> units_against(const Clause& now) {
      std::vector<Clause> out;
      for (Lit l : now) out.push_back({detail::lit_not(l)});
      return out;
    }

    void decide(std::size_t i) {
      const std::size_t steps = g.step_.size();
      const std::size_t events = g.events_.size();
      if (i < steps) {
        const Clause& now = g.step_[i].now;
        if (!now.empty()) branch(std::vector<Clause>{now}, [&] { decide(i + 1); });
        branch(units_against(now), [&] {
          triggered.push_back(static_cast<std::uint32_t>(i));
          decide(i + 1);
          triggered.pop_back();
        });
        return;
      }
      if (i < steps + events) {
        const auto& e = g.events_[i - steps];
        if (!e.now.empty()) branch(std::vector<Clause>{e.now}, [&] { decide(i + 1); });
        branch(units_against(e.now), [&] {
          const std::uint64_t saved = required;
          required |= std::uint64_t{1} << e.literal;
          decide(i + 1);
          required = saved;
        });
        return;
      }
      settle(0, required | node.pending);
    }

    // Per owed eventuality literal: discharge it now or carry it forward.
    void settle(unsigned j, std::uint64_t owed) {
      if (j == g.eventualities_.size()) {
        record();
        return;
      }
      if (!((owed >> j) & 1U)) {
        settle(j + 1, owed);
        return;
      }
      const Lit l = g.eventualities_[j];
      branch(std::vector<Clause>{Clause{l}}, [&] { settle(j + 1, owed); });
      branch(std::vector<Clause>{Clause{detail::lit_not(l)}}, [&] {
        pending |= std::uint64_t{1} << j;
        settle(j + 1, owed);
        pending &= ~(std::uint64_t{1} << j);
      });
    }

    void record() {
      std::vector<std::uint32_t> t = triggered;
      std::sort(t.begin(), t.end());
      auto covers = [](const Result& a, const std::vector<std::uint32_t>& tb, std::uint64_t pb) {
        return (a.pending & ~pb) == 0 && std::includes(tb.begin(), tb.end(), a.triggered.begin(), a.triggered.end());
      };
      for (const Result& r : results) {
        if (covers(r, t, pending)) return;
      }
      std::erase_if(results, [&](const Result& r) {
        Result mine{t, pending, {}};
        return covers(mine, r.triggered, r.pending);
      });
      Result r{std::move(t), pending, {}};
      solve(&r.model);
      results.push_back(std::move(r));
    }
  };

  std::uint32_t var(const std::string& name) {
    auto [it, inserted] = vars_.emplace(name, static_cast<std::uint32_t>(names_.size()));
    if (inserted) names_.push_back(name);
    return it->second;
  }
  Lit lit(const SnfLiteral& l) { return detail::make_lit(var(l.prop), l.negated); }
  Clause encode(const std::vector<SnfLiteral>& lits) {
    Clause c;
    for (const auto& l : lits) c.push_back(lit(l));
    return c;
  }

  std::uint32_t node_id(Node n) {
    auto [it, inserted] = node_index_.emplace(n, static_cast<std::uint32_t>(nodes_.size()));
    if (inserted) nodes_.push_back(std::move(n));
    return it->second;
  }

  std::uint32_t valuation_id(std::vector<bool> model) {
    auto [it, inserted] = valuation_index_.emplace(model, static_cast<std::uint32_t>(valuations_.size()));
    if (inserted) valuations_.push_back(std::move(model));
    return it->second;
  }

  std::map<std::string, std::uint32_t> vars_;
  std::vector<std::string> names_;
  std::vector<Clause> initial_clauses_;
  std::vector<Clause> invariants_;
  std::vector<StepClause> step_;
  std::vector<EventualityClause> events_;
  std::vector<Lit> eventualities_;

  std::map<Node, std::uint32_t> node_index_;
  std::vector<Node> nodes_;
  std::map<std::vector<bool>, std::uint32_t> valuation_index_;
  std::vector<std::vector<bool>> valuations_;
  std::unordered_map<std::uint32_t, std::vector<Edge>> cache_;
};

}  // namespace

SatResult sat(const ClauseSet& clauses, const SatOptions& options) {
  SnfGraph g(clauses);
  auto lasso = detail::find_accepting_lasso(g, options.node_limit);
  if (!lasso) return {};
  Lasso<Valuation> w;
  for (auto l : lasso->prefix) w.prefix.push_back(g.valuation(l));
  for (auto l : lasso->loop) w.loop.push_back(g.valuation(l));
  return {true, std::move(w)};
}

}  // namespace tpcheck

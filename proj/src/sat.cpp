#include "tpcheck/sat.hpp"

#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>

#include "buchi.hpp"
#include "tableau.hpp"
#include "tpcheck/error.hpp"

namespace tpcheck {
namespace {

using detail::Edge;
using detail::FormulaTable;
using detail::Outcome;

std::uint64_t all_sets(unsigned k) { return k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1; }

template <class Key>
class Interner {
 public:
  std::uint32_t get(const Key& k) {
    auto [it, inserted] = index_.emplace(k, static_cast<std::uint32_t>(keys_.size()));
    if (inserted) keys_.push_back(k);
    return it->second;
  }
  const Key& operator[](std::uint32_t id) const { return keys_[id]; }
  std::size_t size() const noexcept { return keys_.size(); }

 private:
  std::map<Key, std::uint32_t> index_;
  std::vector<Key> keys_;
};

using Obligations = std::vector<std::uint32_t>;

// Word automaton for a single NNF formula; edges are labelled by literal sets.
class FormulaGraph : public detail::GeneralizedGraph {
 public:
  explicit FormulaGraph(const Formula& nnf) : root_(table_.intern(nnf)) {}

  unsigned acceptance_sets() const override { return table_.eventuality_count(); }
  std::vector<std::uint32_t> initial() override { return {nodes_.get({root_})}; }

  std::vector<Edge> successors(std::uint32_t node) override {
    if (auto it = cache_.find(node); it != cache_.end()) return it->second;
    const Obligations now = nodes_[node];
    std::vector<Edge> out;
    const std::uint64_t mask = all_sets(acceptance_sets());
    for (const Outcome& o : detail::expand(table_, now, nullptr)) {
      out.push_back({nodes_.get(o.next), mask & ~o.postponed, labels_.get(o.lits)});
    }
    cache_.emplace(node, out);
    return out;
  }

  const FormulaTable& table() const { return table_; }
  const Obligations& obligations(std::uint32_t node) const { return nodes_[node]; }
  const std::vector<std::uint32_t>& literals(std::uint32_t label) const { return labels_[label]; }
  std::size_t node_count() const { return nodes_.size(); }

 private:
  FormulaTable table_;
  std::uint32_t root_;
  Interner<Obligations> nodes_;
  Interner<std::vector<std::uint32_t>> labels_;
  std::unordered_map<std::uint32_t, std::vector<Edge>> cache_;
};

// Product of a Kripke structure with the tableau of a negation-free formula;
// edges are labelled by the source model state.
class ProductGraph : public detail::GeneralizedGraph {
 public:
  ProductGraph(const Pks& ks, const Formula& tau) : ks_(ks), root_(table_.intern(tau)) {}

  unsigned acceptance_sets() const override { return table_.eventuality_count(); }

  std::vector<std::uint32_t> initial() override {
    std::vector<std::uint32_t> out;
    const std::uint32_t q = sets_.get({root_});
    for (StateId s : ks_.initial()) out.push_back(nodes_.get({s, q}));
    return out;
  }

  std::vector<Edge> successors(std::uint32_t node) override {
    if (auto it = cache_.find(node); it != cache_.end()) return it->second;
    const auto [s, q] = nodes_[node];
    const Obligations now = sets_[q];
    const detail::LiteralOracle oracle = [&](const FormulaTable::Entry& e) {
      const bool value = ks_.label(s, *ks_.find_prop(e.name)) == Tri::True;
      return e.op == Op::Not ? !value : value;
    };
    std::vector<Edge> out;
    const std::uint64_t mask = all_sets(acceptance_sets());
    for (const Outcome& o : detail::expand(table_, now, &oracle)) {
      const std::uint32_t next = sets_.get(o.next);
      for (StateId t : ks_.successors(s)) out.push_back({nodes_.get({t, next}), mask & ~o.postponed, s});
    }
    cache_.emplace(node, out);
    return out;
  }

 private:
  const Pks& ks_;
  FormulaTable table_;
  std::uint32_t root_;
  Interner<Obligations> sets_;
  Interner<std::pair<StateId, std::uint32_t>> nodes_;
  std::unordered_map<std::uint32_t, std::vector<Edge>> cache_;
};

Valuation valuation_of(const FormulaGraph& g, const std::set<std::string>& props, std::uint32_t label) {
  Valuation v;
  for (const auto& p : props) v.emplace(p, false);
  for (std::uint32_t id : g.literals(label)) {
    const auto& e = g.table().at(id);
    v[e.name] = e.op == Op::Atom;
  }
  return v;
}

}  // namespace

SatResult sat_formula(const Formula& f, const SatOptions& options) {
  FormulaGraph g(to_nnf(f));
  auto lasso = detail::find_accepting_lasso(g, options.node_limit);
  if (!lasso) return {};
  const auto props = atoms(f);
  Lasso<Valuation> w;
  for (auto l : lasso->prefix) w.prefix.push_back(valuation_of(g, props, l));
  for (auto l : lasso->loop) w.loop.push_back(valuation_of(g, props, l));
  return {true, std::move(w)};
}

CheckStarResult check_star(const Pks& ks, const Formula& phi, const SatOptions& options) {
  if (!ks.is_complete()) throw PreconditionError("check_star expects a Kripke structure without ? labels");
  const Formula tau = tau_transform(phi);
  for (const auto& a : atoms(tau)) {
    if (!ks.find_prop(a)) throw PreconditionError("proposition '" + a + "' is not in the model");
  }
  ProductGraph g(ks, tau);
  auto lasso = detail::find_accepting_lasso(g, options.node_limit, true);
  if (!lasso) return {true, std::nullopt};
  StatePath path;
  for (auto s : lasso->prefix) path.prefix.push_back(ks.state_name(s));
  for (auto s : lasso->loop) path.loop.push_back(ks.state_name(s));
  return {false, std::move(path)};
}

std::string automaton_text(const Formula& f, const SatOptions& options) {
  FormulaGraph g(to_nnf(f));
  std::ostringstream out;
  auto set_text = [&](const std::vector<std::uint32_t>& ids) {
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i) s += ", ";
      s += g.table().at(ids[i]).formula.to_string();
    }
    return s + "}";
  };
  out << "acceptance-sets " << g.acceptance_sets() << "\n";
  std::queue<std::uint32_t> queue;
  std::vector<bool> seen;
  auto visit = [&](std::uint32_t n) {
    if (n >= seen.size()) seen.resize(n + 1, false);
    if (seen[n]) return;
    if (g.node_count() > options.node_limit) {
      throw ResourceLimitError("automaton exceeded " + std::to_string(options.node_limit) + " nodes");
    }
    seen[n] = true;
    queue.push(n);
  };
  for (auto n : g.initial()) {
    out << "initial n" << n << "\n";
    visit(n);
  }
  while (!queue.empty()) {
    const std::uint32_t n = queue.front();
    queue.pop();
    out << "n" << n << " " << set_text(g.obligations(n)) << "\n";
    for (const Edge& e : g.successors(n)) {
      out << "  -> n" << e.target << " " << set_text(g.literals(e.label)) << " acc";
      bool any = false;
      for (unsigned i = 0; i < g.acceptance_sets(); ++i) {
        if ((e.acc >> i) & 1U) {
          out << (any ? "," : "=") << i;
          any = true;
        }
      }
      if (!any) out << "=none";
      out << "\n";
      visit(e.target);
    }
  }
  return out.str();
}

}  // namespace tpcheck

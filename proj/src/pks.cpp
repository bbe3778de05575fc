#include "tpcheck/pks.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "tpcheck/error.hpp"
#include "tpcheck/ltl.hpp"

namespace tpcheck {

Pks::Pks(std::string name) : name_(std::move(name)) {}

StateId Pks::add_state(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty state name");
  if (state_index_.count(name)) throw std::invalid_argument("duplicate state '" + name + "'");
  const auto id = static_cast<StateId>(states_.size());
  state_index_.emplace(name, id);
  states_.push_back(std::move(name));
  labels_.resize(states_.size() * props_.size(), Tri::Unknown);
  succ_.emplace_back();
  return id;
}

PropId Pks::add_prop(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty proposition name");
  if (prop_index_.count(name)) throw std::invalid_argument("duplicate proposition '" + name + "'");
  const auto id = static_cast<PropId>(props_.size());
  const std::size_t old_width = props_.size();
  std::vector<Tri> relabelled(states_.size() * (old_width + 1), Tri::Unknown);
  for (std::size_t s = 0; s < states_.size(); ++s) {
    std::copy_n(labels_.begin() + static_cast<std::ptrdiff_t>(s * old_width), old_width,
                relabelled.begin() + static_cast<std::ptrdiff_t>(s * (old_width + 1)));
  }
  labels_ = std::move(relabelled);
  prop_index_.emplace(name, id);
  props_.push_back(std::move(name));
  return id;
}

void Pks::set_label(StateId s, PropId p, Tri v) {
  if (s >= states_.size() || p >= props_.size()) throw std::out_of_range("label index");
  labels_[s * props_.size() + p] = v;
}

void Pks::add_transition(StateId from, StateId to) {
  if (from >= states_.size() || to >= states_.size()) throw std::out_of_range("transition state");
  auto& out = succ_[from];
  if (std::find(out.begin(), out.end(), to) == out.end()) out.push_back(to);
}

void Pks::remove_transition(StateId from, StateId to) {
  if (from >= states_.size()) throw std::out_of_range("transition state");
  auto& out = succ_[from];
  out.erase(std::remove(out.begin(), out.end(), to), out.end());
}

void Pks::add_initial(StateId s) {
  if (s >= states_.size()) throw std::out_of_range("initial state");
  if (!is_initial(s)) initial_.push_back(s);
}

void Pks::clear_initial() { initial_.clear(); }

std::size_t Pks::transition_count() const noexcept {
  std::size_t n = 0;
  for (const auto& out : succ_) n += out.size();
  return n;
}

std::optional<StateId> Pks::find_state(std::string_view name) const {
  auto it = state_index_.find(std::string(name));
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<PropId> Pks::find_prop(std::string_view name) const {
  auto it = prop_index_.find(std::string(name));
  if (it == prop_index_.end()) return std::nullopt;
  return it->second;
}

bool Pks::has_transition(StateId from, StateId to) const {
  const auto& out = succ_.at(from);
  return std::find(out.begin(), out.end(), to) != out.end();
}

bool Pks::is_initial(StateId s) const {
  return std::find(initial_.begin(), initial_.end(), s) != initial_.end();
}

bool Pks::is_complete() const noexcept {
  return std::none_of(labels_.begin(), labels_.end(), [](Tri v) { return v == Tri::Unknown; });
}

std::size_t Pks::unknown_count() const noexcept {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), Tri::Unknown));
}

bool operator==(const Pks& a, const Pks& b) {
  if (a.name() != b.name() || a.states() != b.states() || a.props() != b.props()) return false;
  if (a.initial() != b.initial()) return false;
  for (StateId s = 0; s < a.state_count(); ++s) {
    const auto sa = a.successors(s);
    const auto sb = b.successors(s);
    if (!std::equal(sa.begin(), sa.end(), sb.begin(), sb.end())) return false;
    for (PropId p = 0; p < a.prop_count(); ++p) {
      if (a.label(s, p) != b.label(s, p)) return false;
    }
  }
  return true;
}

std::vector<Diagnostic> validate(const Pks& m) {
  std::vector<Diagnostic> out;
  if (m.state_count() == 0) out.push_back({"model has no states", std::nullopt});
  if (m.initial().empty()) out.push_back({"no initial state", std::nullopt});
  for (StateId s = 0; s < m.state_count(); ++s) {
    if (m.successors(s).empty()) {
      out.push_back({"not left-total at " + m.state_name(s), m.state_name(s)});
    }
  }
  return out;
}

bool is_complement_closed(const Pks& m) {
  return std::all_of(m.props().begin(), m.props().end(), [&](const std::string& p) {
    return is_complement_name(p) ? m.find_prop(base_name(p)).has_value()
                                 : m.find_prop(complement_name(p)).has_value();
  });
}

Pks complement_closure(const Pks& m) {
  for (const auto& p : m.props()) {
    if (is_complement_name(p)) {
      throw PreconditionError("model already has complement proposition '" + p + "'");
    }
  }
  Pks out = m;
  const std::size_t n = m.prop_count();
  for (PropId p = 0; p < n; ++p) {
    const PropId c = out.add_prop(complement_name(m.prop_name(p)));
    for (StateId s = 0; s < m.state_count(); ++s) out.set_label(s, c, comp(m.label(s, p)));
  }
  return out;
}

Pks approximate(const Pks& closed, Approximation mode) {
  const Tri fill = mode == Approximation::Pessimistic ? Tri::False : Tri::True;
  Pks out = closed;
  for (StateId s = 0; s < closed.state_count(); ++s) {
    for (PropId p = 0; p < closed.prop_count(); ++p) {
      if (closed.label(s, p) == Tri::Unknown) out.set_label(s, p, fill);
    }
  }
  return out;
}

namespace {

std::set<std::pair<std::string, std::string>> named_edges(const Pks& m) {
  std::set<std::pair<std::string, std::string>> out;
  for (StateId s = 0; s < m.state_count(); ++s) {
    for (StateId t : m.successors(s)) out.emplace(m.state_name(s), m.state_name(t));
  }
  return out;
}

std::set<std::string> named_initial(const Pks& m) {
  std::set<std::string> out;
  for (StateId s : m.initial()) out.insert(m.state_name(s));
  return out;
}

}  // namespace

std::optional<std::string> refinement_violation(const Pks& m, const Pks& m2) {
  if (std::set(m.states().begin(), m.states().end()) !=
      std::set(m2.states().begin(), m2.states().end())) {
    return "state sets differ";
  }
  if (std::set(m.props().begin(), m.props().end()) !=
      std::set(m2.props().begin(), m2.props().end())) {
    return "proposition sets differ";
  }
  if (named_edges(m) != named_edges(m2)) return "transition relations differ";
  if (named_initial(m) != named_initial(m2)) return "initial state sets differ";
  for (StateId s = 0; s < m.state_count(); ++s) {
    const StateId s2 = *m2.find_state(m.state_name(s));
    for (PropId p = 0; p < m.prop_count(); ++p) {
      const Tri v = m.label(s, p);
      if (v == Tri::Unknown) continue;
      const Tri v2 = m2.label(s2, *m2.find_prop(m.prop_name(p)));
      if (v2 != v) {
        return "label of " + m.prop_name(p) + " in " + m.state_name(s) + " changed from " +
               tri_char(v) + " to " + tri_char(v2);
      }
    }
  }
  return std::nullopt;
}

bool is_refinement(const Pks& m, const Pks& m2) { return !refinement_violation(m, m2); }

bool is_revision(const Pks& m, const Pks& m2) {
  return std::all_of(m.props().begin(), m.props().end(),
                     [&](const std::string& p) { return m2.find_prop(p).has_value(); });
}

void for_each_completion(const Pks& m, const std::function<bool(const Pks&)>& fn,
                         std::size_t bound) {
  std::vector<std::pair<StateId, PropId>> unknown;
  for (StateId s = 0; s < m.state_count(); ++s) {
    for (PropId p = 0; p < m.prop_count(); ++p) {
      if (m.label(s, p) == Tri::Unknown) unknown.emplace_back(s, p);
    }
  }
  if (unknown.size() > bound) {
    throw PreconditionError(std::to_string(unknown.size()) + " unknown labels exceed bound " +
                            std::to_string(bound));
  }
  const std::size_t k = unknown.size();
  Pks current = m;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    for (std::size_t j = 0; j < k; ++j) {
      const bool value = (bits >> (k - 1 - j)) & 1U;
      current.set_label(unknown[j].first, unknown[j].second, to_tri(value));
    }
    if (!fn(current)) return;
  }
}

std::vector<Pks> completions(const Pks& m, std::size_t bound) {
  std::vector<Pks> out;
  for_each_completion(
      m,
      [&](const Pks& k) {
        out.push_back(k);
        return true;
      },
      bound);
  return out;
}

std::size_t model_size(const Pks& m) {
  return m.prop_count() * m.state_count() + m.transition_count() + m.initial().size();
}

}  // namespace tpcheck

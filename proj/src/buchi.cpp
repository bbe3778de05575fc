#include "buchi.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <string>
#include <unordered_map>

#include "tpcheck/error.hpp"

namespace tpcheck::detail {
namespace {

struct Out {
  std::uint32_t target;
  std::uint32_t label;
};

// Counter degeneralization: node (v, c) has seen acceptance sets 0..c-1 in
// order since the last accepting visit; c == k marks the accepting copies.
class Degeneralized {
 public:
  Degeneralized(GeneralizedGraph& g, std::size_t limit)
      : g_(g), k_(g.acceptance_sets()), limit_(limit) {}

  std::vector<std::uint32_t> initial() {
    std::vector<std::uint32_t> out;
    for (auto v : g_.initial()) out.push_back(intern(v, 0));
    return out;
  }

  bool accepting(std::uint32_t d) const { return counter_[d] == k_; }
  std::size_t size() const { return base_.size(); }

  const std::vector<Out>& succ(std::uint32_t d) {
    if (!expanded_[d]) {
      std::vector<Out> out;
      const unsigned start = counter_[d] == k_ ? 0 : counter_[d];
      for (const Edge& e : g_.successors(base_[d])) {
        unsigned c = start;
        while (c < k_ && ((e.acc >> c) & 1U)) ++c;
        out.push_back({intern(e.target, c), e.label});
      }
      succ_[d] = std::move(out);
      expanded_[d] = true;
    }
    return succ_[d];
  }

 private:
  std::uint32_t intern(std::uint32_t v, unsigned c) {
    const std::uint64_t key = static_cast<std::uint64_t>(v) * (k_ + 1) + c;
    auto [it, inserted] = index_.emplace(key, static_cast<std::uint32_t>(base_.size()));
    if (inserted) {
      if (base_.size() >= limit_) {
        throw ResourceLimitError("exploration exceeded " + std::to_string(limit_) + " nodes");
      }
      base_.push_back(v);
      counter_.push_back(c);
      succ_.emplace_back();
      expanded_.push_back(false);
    }
    return it->second;
  }

  GeneralizedGraph& g_;
  unsigned k_;
  std::size_t limit_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::uint32_t> base_;
  std::vector<unsigned> counter_;
  std::deque<std::vector<Out>> succ_;
  std::vector<bool> expanded_;
};

enum class Color : std::uint8_t { White, Cyan, Blue };

class NestedDfs {
 public:
  explicit NestedDfs(Degeneralized& d) : d_(d) {}

  // Returns an accepting node lying on a cycle, if any.
  std::optional<std::uint32_t> run() {
    for (std::uint32_t root : d_.initial()) {
      grow(root);
      if (color_[root] != Color::White) continue;
      std::vector<std::pair<std::uint32_t, std::size_t>> stack{{root, 0}};
      color_[root] = Color::Cyan;
      while (!stack.empty()) {
        const std::uint32_t v = stack.back().first;
        const std::size_t i = stack.back().second;
        const auto& out = d_.succ(v);
        if (i < out.size()) {
          ++stack.back().second;
          const std::uint32_t w = out[i].target;
          grow(w);
          if (color_[w] == Color::White) {
            color_[w] = Color::Cyan;
            stack.emplace_back(w, 0);
          }
          continue;
        }
        if (d_.accepting(v) && red_search(v)) return v;
        color_[v] = Color::Blue;
        stack.pop_back();
      }
    }
    return std::nullopt;
  }

 private:
  void grow(std::uint32_t v) {
    if (v >= color_.size()) {
      color_.resize(d_.size(), Color::White);
      red_.resize(d_.size(), false);
    }
  }

  // Any cyan node reached from the seed lies on the blue stack below it, so
  // it closes a cycle through the seed.
  bool red_search(std::uint32_t seed) {
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{seed, 0}};
    red_[seed] = true;
    while (!stack.empty()) {
      const std::uint32_t v = stack.back().first;
      const std::size_t i = stack.back().second;
      const auto& out = d_.succ(v);
      if (i == out.size()) {
        stack.pop_back();
        continue;
      }
      ++stack.back().second;
      const std::uint32_t w = out[i].target;
      grow(w);
      if (color_[w] == Color::Cyan) return true;
      if (!red_[w]) {
        red_[w] = true;
        stack.emplace_back(w, 0);
      }
    }
    return false;
  }

  Degeneralized& d_;
  std::vector<Color> color_;
  std::vector<bool> red_;
};

// Shortest edge-label path from any of `sources` to `goal` (at least one edge
// when `nonempty`).
std::vector<std::uint32_t> shortest_labels(Degeneralized& d, const std::vector<std::uint32_t>& sources,
                                           std::uint32_t goal, bool nonempty) {
  std::unordered_map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> parent;  // node -> (prev, label)
  std::queue<std::uint32_t> queue;
  std::vector<bool> seen;
  auto mark = [&](std::uint32_t v) {
    if (v >= seen.size()) seen.resize(std::max<std::size_t>(d.size(), v + 1), false);
    const bool was = seen[v];
    seen[v] = true;
    return !was;
  };
  auto unwind = [&](std::uint32_t v, std::uint32_t stop) {
    std::vector<std::uint32_t> labels;
    while (true) {
      auto it = parent.find(v);
      if (it == parent.end()) break;
      labels.push_back(it->second.second);
      v = it->second.first;
      if (v == stop && nonempty) break;
    }
    std::reverse(labels.begin(), labels.end());
    return labels;
  };

  if (!nonempty) {
    for (auto s : sources) {
      if (s == goal) return {};
      if (mark(s)) queue.push(s);
    }
  } else {
    // Loop search: expand the goal's successors first; the goal itself is the target.
    for (const Out& e : d.succ(goal)) {
      if (e.target == goal) return {e.label};
      if (mark(e.target)) {
        parent[e.target] = {goal, e.label};
        queue.push(e.target);
      }
    }
  }
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop();
    for (const Out& e : d.succ(v)) {
      if (e.target == goal) {
        parent[goal] = {v, e.label};
        return unwind(goal, goal);
      }
      if (mark(e.target)) {
        parent[e.target] = {v, e.label};
        queue.push(e.target);
      }
    }
  }
  return {};
}

// Same infinite word, with the loop entered as early as possible and reduced
// to its primitive period.
void normalize(LabelLasso& l) {
  while (!l.prefix.empty() && l.prefix.back() == l.loop.back()) {
    l.prefix.pop_back();
    std::rotate(l.loop.rbegin(), l.loop.rbegin() + 1, l.loop.rend());
  }
  const std::size_t n = l.loop.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = l.loop[i] == l.loop[i - p];
    if (periodic) {
      l.loop.resize(p);
      break;
    }
  }
}

// Scans accepting nodes in breadth-first order and keeps the lasso through
// the one with the fewest positions (ties broken by normalized length).
LabelLasso shortest_lasso(Degeneralized& d, LabelLasso found) {
  std::vector<std::uint32_t> order;
  std::unordered_map<std::uint32_t, std::pair<std::uint32_t, std::uint32_t>> parent;
  std::unordered_map<std::uint32_t, std::size_t> dist;
  std::queue<std::uint32_t> queue;
  for (auto s : d.initial()) {
    if (dist.emplace(s, 0).second) queue.push(s);
  }
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop();
    order.push_back(v);
    for (const Out& e : d.succ(v)) {
      if (dist.emplace(e.target, dist[v] + 1).second) {
        parent[e.target] = {v, e.label};
        queue.push(e.target);
      }
    }
  }
  auto raw = [](const LabelLasso& l) { return l.prefix.size() + l.loop.size(); };
  LabelLasso best = found;
  std::size_t best_raw = raw(found);
  normalize(best);
  for (std::uint32_t v : order) {
    if (dist[v] + 1 > best_raw) break;
    if (!d.accepting(v)) continue;
    LabelLasso l;
    l.loop = shortest_labels(d, {}, v, true);
    if (l.loop.empty() || dist[v] + l.loop.size() > best_raw) continue;
    for (std::uint32_t u = v; parent.count(u); u = parent[u].first) l.prefix.push_back(parent[u].second);
    std::reverse(l.prefix.begin(), l.prefix.end());
    const std::size_t r = raw(l);
    normalize(l);
    if (r < best_raw || raw(l) < raw(best)) {
      best_raw = std::min(best_raw, r);
      best = std::move(l);
    }
  }
  return best;
}

}  // namespace

std::optional<LabelLasso> find_accepting_lasso(GeneralizedGraph& g, std::size_t node_limit, bool shortest) {
  Degeneralized d(g, node_limit);
  auto seed = NestedDfs(d).run();
  if (!seed) return std::nullopt;
  LabelLasso out;
  out.prefix = shortest_labels(d, d.initial(), *seed, false);
  out.loop = shortest_labels(d, {}, *seed, true);
  if (shortest) return shortest_lasso(d, std::move(out));
  normalize(out);
  return out;
}

}  // namespace tpcheck::detail

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace tpcheck::detail {

/// Edge of a transition-based generalized Büchi graph. Bit i of `acc` marks
/// membership in acceptance set i. `label` is opaque to the search.
struct Edge {
  std::uint32_t target;
  std::uint64_t acc;
  std::uint32_t label;
};

/// Lazily explored graph. Node ids are dense and assigned by the implementer.
class GeneralizedGraph {
 public:
  virtual ~GeneralizedGraph() = default;
  virtual unsigned acceptance_sets() const = 0;
  virtual std::vector<std::uint32_t> initial() = 0;
  virtual std::vector<Edge> successors(std::uint32_t node) = 0;
};

/// Labels read along an accepting run: prefix, then loop repeated forever.
struct LabelLasso {
  std::vector<std::uint32_t> prefix;
  std::vector<std::uint32_t> loop;
};

/// Degeneralizes with a counter, then runs a nested depth-first search for
/// an accepting cycle. The witness is rebuilt with breadth-first searches, so
/// it has a shortest prefix to the accepting node the search found and a
/// shortest loop through it. Throws ResourceLimitError when more than
/// `node_limit` degeneralized nodes are created. With `shortest`, the whole
/// reachable graph is explored to pick the accepting node with the shortest
/// prefix plus loop instead of the first one found.
std::optional<LabelLasso> find_accepting_lasso(GeneralizedGraph& g, std::size_t node_limit,
                                               bool shortest = false);

}  // namespace tpcheck::detail

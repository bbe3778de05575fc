#include "tpcheck/uc.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tpcheck/error.hpp"

namespace tpcheck {
namespace {

int group(ProvenanceKind k) {
  switch (k) {
    case ProvenanceKind::Regularity: return 0;
    case ProvenanceKind::Property: return 1;
    case ProvenanceKind::LabelTrue:
    case ProvenanceKind::LabelFalse: return 2;
    case ProvenanceKind::Reach: return 3;
    case ProvenanceKind::Init: return 4;
  }
  return 5;
}

ClauseSet select(const ClauseSet& in, const std::vector<std::size_t>& keep) {
  ClauseSet out;
  out.reserve(keep.size());
  for (auto i : keep) out.push_back(in[i]);
  return out;
}

ClauseSet filter(const ClauseSet& in, bool (*pred)(const SnfClause&)) {
  ClauseSet out;
  std::copy_if(in.begin(), in.end(), std::back_inserter(out), pred);
  return out;
}

}  // namespace

ClauseSet UnsatCore::ks_part() const {
  return filter(clauses, [](const SnfClause& c) {
    return c.provenance.is_model() && c.provenance.kind != ProvenanceKind::Regularity;
  });
}

ClauseSet UnsatCore::regularity_part() const {
  return filter(clauses, [](const SnfClause& c) { return c.provenance.kind == ProvenanceKind::Regularity; });
}

ClauseSet UnsatCore::property_part() const {
  return filter(clauses, [](const SnfClause& c) { return c.provenance.kind == ProvenanceKind::Property; });
}

UnsatCore extract_uc(const ClauseSet& clauses, const UcOptions& options) {
  if (sat(clauses, options.sat).satisfiable) {
    throw PreconditionError("clause set is satisfiable; no unsatisfiable core exists");
  }
  std::vector<std::size_t> order(clauses.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<int> ranks(clauses.size(), 0);
  if (options.rank) {
    for (std::size_t i = 0; i < clauses.size(); ++i) ranks[i] = options.rank(clauses[i]);
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const int ga = group(clauses[a].provenance.kind);
    const int gb = group(clauses[b].provenance.kind);
    if (ga != gb) return ga < gb;
    return ranks[a] < ranks[b];
  });

  std::vector<bool> kept(clauses.size(), true);
  for (std::size_t i : order) {
    kept[i] = false;
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < clauses.size(); ++j) {
      if (kept[j]) rest.push_back(j);
    }
    if (sat(select(clauses, rest), options.sat).satisfiable) kept[i] = true;
  }

  UnsatCore core;
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    if (kept[j]) core.indices.push_back(j);
  }
  core.clauses = select(clauses, core.indices);
  if (options.verify && !is_locally_minimal(core.clauses, options.sat)) {
    throw std::logic_error("extracted core is not locally minimal");
  }
  return core;
}

bool is_locally_minimal(const ClauseSet& clauses, const SatOptions& options) {
  if (sat(clauses, options).satisfiable) return false;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    ClauseSet rest;
    for (std::size_t j = 0; j < clauses.size(); ++j) {
      if (j != i) rest.push_back(clauses[j]);
    }
    if (!sat(rest, options).satisfiable) return false;
  }
  return true;
}

}  // namespace tpcheck

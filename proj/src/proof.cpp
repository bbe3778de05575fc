#include "tpcheck/proof.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "text_util.hpp"
#include "tpcheck/error.hpp"

namespace tpcheck {

TopologicalProof::TopologicalProof(std::string property, Tri level, std::vector<std::string> origin_ap)
    : property_(std::move(property)), origin_ap_(std::move(origin_ap)) {
  set_level(level);
}

void TopologicalProof::set_level(Tri level) {
  if (level == Tri::False) throw PreconditionError("a topological proof certifies T or ?, never F");
  level_ = level;
}

void TopologicalProof::set_tpi(Tpi c) {
  if (tpi_ && *tpi_ != c) throw PreconditionError("proof already has a different tpi clause");
  tpi_ = std::move(c);
}

void TopologicalProof::add_tpt(Tpt c) {
  if (c.successors.empty()) throw PreconditionError("tpt " + c.state + " has no successors");
  if (const Tpt* old = find_tpt(c.state)) {
    if (*old != c) throw PreconditionError("conflicting tpt clauses for state " + c.state);
    return;
  }
  tpts_.push_back(std::move(c));
}

void TopologicalProof::add_tpp(Tpp c) {
  if (const Tpp* old = find_tpp(c.state, c.prop)) {
    if (*old != c) throw PreconditionError("conflicting tpp clauses for " + c.state + " " + c.prop);
    return;
  }
  tpps_.push_back(std::move(c));
}

const Tpt* TopologicalProof::find_tpt(std::string_view state) const {
  for (const auto& c : tpts_) {
    if (c.state == state) return &c;
  }
  return nullptr;
}

const Tpp* TopologicalProof::find_tpp(std::string_view state, std::string_view prop) const {
  for (const auto& c : tpps_) {
    if (c.state == state && c.prop == prop) return &c;
  }
  return nullptr;
}

bool TopologicalProof::same_clauses(const TopologicalProof& other) const {
  using Names = std::set<std::string>;
  auto names = [](const std::vector<std::string>& v) { return Names(v.begin(), v.end()); };
  if (level_ != other.level_ || names(origin_ap_) != names(other.origin_ap_)) return false;
  if (tpi_.has_value() != other.tpi_.has_value()) return false;
  if (tpi_ && names(tpi_->states) != names(other.tpi_->states)) return false;
  if (tpts_.size() != other.tpts_.size() || tpps_.size() != other.tpps_.size()) return false;
  for (const auto& c : tpts_) {
    const Tpt* o = other.find_tpt(c.state);
    if (!o || names(o->successors) != names(c.successors)) return false;
  }
  for (const auto& c : tpps_) {
    const Tpp* o = other.find_tpp(c.state, c.prop);
    if (!o || o->value != c.value) return false;
  }
  return true;
}

std::size_t proof_size(const TopologicalProof& proof) {
  std::size_t n = proof.tpps().size();
  for (const auto& c : proof.tpts()) n += c.successors.size();
  if (proof.tpi()) n += proof.tpi()->states.size();
  return n;
}

namespace {

std::vector<std::string> names_of(const Pks& m, std::span<const StateId> ids) {
  std::vector<std::string> out;
  for (StateId s : ids) out.push_back(m.state_name(s));
  return out;
}

std::string join(const std::vector<std::string>& v, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

std::string clause_text(const Tpp& c) { return "tpp " + c.state + " " + c.prop + " " + tri_char(c.value); }
std::string clause_text(const Tpt& c) { return "tpt " + c.state + " : " + join(c.successors); }
std::string clause_text(const Tpi& c) { return "tpi " + join(c.states); }

void check_property(const Pks& m, const Formula& phi) {
  const auto diags = validate(m);
  if (!diags.empty()) throw PreconditionError("invalid model: " + diags.front().message);
  for (const auto& a : atoms(phi)) {
    if (!m.find_prop(a)) throw PreconditionError("proposition '" + a + "' is not in the model");
  }
}

}  // namespace

TopologicalProof get_tp(const Pks& m, const UnsatCore& core) {
  TopologicalProof proof("", Tri::True, m.props());
  proof.set_origin(m.name());
  auto state = [&](const std::string& name) {
    auto s = m.find_state(name);
    if (!s) throw PreconditionError("core names state '" + name + "' absent from the model");
    return *s;
  };
  for (const auto& c : core.clauses) {
    const Provenance& p = c.provenance;
    switch (p.kind) {
      case ProvenanceKind::Init:
        proof.set_tpi({names_of(m, m.initial())});
        break;
      case ProvenanceKind::Reach: {
        const StateId s = state(p.state);
        proof.add_tpt({p.state, names_of(m, m.successors(s))});
        break;
      }
      case ProvenanceKind::LabelTrue:
      case ProvenanceKind::LabelFalse: {
        const StateId s = state(p.state);
        const std::string base(base_name(p.other));
        auto prop = m.find_prop(base);
        if (!prop) throw PreconditionError("core names proposition '" + base + "' absent from the model");
        proof.add_tpp({p.state, base, m.label(s, *prop)});
        break;
      }
      case ProvenanceKind::Regularity:
      case ProvenanceKind::Property:
        break;
    }
  }
  return proof;
}

TopologicalProof compute_tp(const Pks& m, const Pks& a, const Formula& psi, const AnalyzeOptions& options,
                            ProofTrace* trace) {
  ClauseSet clauses = ks_to_snf(a);
  ClauseSet property = property_to_snf(psi);
  clauses.insert(clauses.end(), property.begin(), property.end());

  UcOptions uc;
  uc.sat = options.sat;
  uc.verify = options.verify_uc;
  // Label clauses over unknown values of the origin model go first, so the
  // proof pins down as few ? labels as the core allows.
  uc.rank = [&m](const SnfClause& c) {
    const Provenance& p = c.provenance;
    if (p.kind != ProvenanceKind::LabelTrue && p.kind != ProvenanceKind::LabelFalse) return 0;
    auto s = m.find_state(p.state);
    auto prop = m.find_prop(base_name(p.other));
    return s && prop && m.label(*s, *prop) == Tri::Unknown ? 0 : 1;
  };
  UnsatCore core = extract_uc(clauses, uc);
  TopologicalProof proof = get_tp(m, core);
  if (trace) {
    trace->clauses = std::move(clauses);
    trace->core = std::move(core);
  }
  return proof;
}

Tri three_valued_verdict(const Pks& m, const Formula& phi, const SatOptions& options) {
  check_property(m, phi);
  const Pks closed = complement_closure(m);
  if (!check_star(approximate(closed, Approximation::Pessimistic), phi, options).holds) return Tri::False;
  if (check_star(approximate(closed, Approximation::Optimistic), phi, options).holds) return Tri::True;
  return Tri::Unknown;
}

AnalysisResult analyze(const Pks& m, const Property& phi, const AnalyzeOptions& options, ProofTrace* trace) {
  check_property(m, phi.formula);
  const Pks closed = complement_closure(m);
  const Pks pes = approximate(closed, Approximation::Pessimistic);
  auto low = check_star(pes, phi.formula, options.sat);
  if (!low.holds) return {Tri::False, std::move(low.counterexample), std::nullopt};

  const Pks opt = approximate(closed, Approximation::Optimistic);
  auto high = check_star(opt, phi.formula, options.sat);
  const Formula psi = tau_transform(phi.formula);
  AnalysisResult out;
  if (high.holds) {
    out.verdict = Tri::True;
    out.proof = compute_tp(m, opt, psi, options, trace);
  } else {
    out.verdict = Tri::Unknown;
    out.counterexample = std::move(high.counterexample);
    out.proof = compute_tp(m, pes, psi, options, trace);
  }
  out.proof->set_level(out.verdict);
  out.proof->set_property(phi.name);
  return out;
}

std::vector<Violation> recheck(const TopologicalProof& proof, const Pks& m2,
                               const std::vector<std::string>& original_ap) {
  std::vector<Violation> out;
  for (const auto& p : original_ap) {
    if (!m2.find_prop(p)) out.push_back({"origin-ap " + p, "proposition missing"});
  }
  auto set_of = [](const std::vector<std::string>& v) { return std::set<std::string>(v.begin(), v.end()); };

  if (const auto& tpi = proof.tpi()) {
    const auto observed = names_of(m2, m2.initial());
    if (set_of(observed) != set_of(tpi->states)) out.push_back({clause_text(*tpi), "init " + join(observed)});
  }
  for (const auto& c : proof.tpts()) {
    auto s = m2.find_state(c.state);
    if (!s) {
      out.push_back({clause_text(c), "state missing"});
      continue;
    }
    const auto observed = names_of(m2, m2.successors(*s));
    if (set_of(observed) != set_of(c.successors)) out.push_back({clause_text(c), "successors " + join(observed)});
  }
  for (const auto& c : proof.tpps()) {
    auto s = m2.find_state(c.state);
    auto p = m2.find_prop(c.prop);
    if (!s) {
      out.push_back({clause_text(c), "state missing"});
    } else if (!p) {
      out.push_back({clause_text(c), "proposition missing"});
    } else if (m2.label(*s, *p) != c.value) {
      out.push_back({clause_text(c), std::string("value ") + tri_char(m2.label(*s, *p))});
    }
  }
  return out;
}

std::vector<Violation> recheck(const TopologicalProof& proof, const Pks& m2) {
  return recheck(proof, m2, proof.origin_ap());
}

std::vector<Pks> omega_related_mutants(const Pks& m, const TopologicalProof& proof, std::size_t n,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };
  std::vector<Pks> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    Pks mut = m;
    auto free_source = [&](StateId s) { return proof.find_tpt(mut.state_name(s)) == nullptr; };

    if (draw(2) == 1) {
      std::string name = "new" + std::to_string(k);
      while (mut.find_state(name)) name += "_";
      const StateId fresh = mut.add_state(name);
      for (PropId p = 0; p < mut.prop_count(); ++p) mut.set_label(fresh, p, static_cast<Tri>(draw(3)));
      const std::size_t targets = 1 + draw(2);
      for (std::size_t i = 0; i < targets; ++i) {
        mut.add_transition(fresh, static_cast<StateId>(draw(mut.state_count())));
      }
      std::vector<StateId> sources;
      for (StateId s = 0; s < fresh; ++s) {
        if (free_source(s)) sources.push_back(s);
      }
      if (!sources.empty() && draw(2) == 1) mut.add_transition(sources[draw(sources.size())], fresh);
    }

    const std::size_t flips = draw(3);
    for (std::size_t i = 0; i < flips; ++i) {
      std::vector<std::pair<StateId, PropId>> open;
      for (StateId s = 0; s < mut.state_count(); ++s) {
        for (PropId p = 0; p < mut.prop_count(); ++p) {
          if (!proof.find_tpp(mut.state_name(s), mut.prop_name(p))) open.emplace_back(s, p);
        }
      }
      if (open.empty()) break;
      const auto [s, p] = open[draw(open.size())];
      const auto old = static_cast<std::size_t>(mut.label(s, p));
      mut.set_label(s, p, static_cast<Tri>((old + 1 + draw(2)) % 3));
    }

    const std::size_t edits = draw(3);
    for (std::size_t i = 0; i < edits; ++i) {
      std::vector<StateId> sources;
      for (StateId s = 0; s < mut.state_count(); ++s) {
        if (free_source(s)) sources.push_back(s);
      }
      if (sources.empty()) break;
      const StateId s = sources[draw(sources.size())];
      const auto succ = mut.successors(s);
      if (draw(2) == 0 || succ.size() < 2) {
        mut.add_transition(s, static_cast<StateId>(draw(mut.state_count())));
      } else {
        mut.remove_transition(s, succ[draw(succ.size())]);
      }
    }

    if (!proof.tpi() && draw(2) == 1) mut.add_initial(static_cast<StateId>(draw(mut.state_count())));
    out.push_back(std::move(mut));
  }
  return out;
}

std::string to_text(const TopologicalProof& proof) {
  std::string out = "proof " + proof.property() + " level=" + tri_char(proof.level()) + "\n";
  out += "origin-ap";
  for (const auto& p : proof.origin_ap()) out += " " + p;
  out += "\n";
  if (proof.tpi()) out += clause_text(*proof.tpi()) + "\n";
  for (const auto& c : proof.tpts()) out += clause_text(c) + "\n";
  for (const auto& c : proof.tpps()) out += clause_text(c) + "\n";
  return out;
}

TopologicalProof parse_proof(std::string_view text) {
  TopologicalProof proof;
  bool have_header = false;
  bool have_ap = false;
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto fields = detail::split_fields(line);
    if (fields.empty()) return;
    const std::string& kw = fields[0].text;
    auto fail = [&](std::size_t i, const std::string& msg) {
      const std::size_t col = i < fields.size() ? fields[i].column : fields.back().column + fields.back().text.size();
      throw ParseError(line_no, col, msg);
    };
    auto name_at = [&](std::size_t i) {
      if (i >= fields.size()) fail(i, "missing name");
      if (!detail::is_identifier(fields[i].text)) fail(i, "invalid name '" + fields[i].text + "'");
      return fields[i].text;
    };

    if (kw == "proof") {
      if (have_header) fail(0, "duplicate 'proof' header");
      if (fields.size() != 3 || fields[2].text.rfind("level=", 0) != 0) {
        fail(0, "expected 'proof <name> level=T|?'");
      }
      proof.set_property(name_at(1));
      const auto level = tri_from_text(std::string_view(fields[2].text).substr(6));
      if (!level || *level == Tri::False) fail(2, "level must be T or ?");
      proof.set_level(*level);
      have_header = true;
      return;
    }
    if (!have_header) fail(0, "expected 'proof <name> level=T|?' header first");

    try {
      if (kw == "origin-ap") {
        if (have_ap) fail(0, "duplicate 'origin-ap' line");
        std::vector<std::string> ap;
        for (std::size_t i = 1; i < fields.size(); ++i) ap.push_back(name_at(i));
        proof.set_origin_ap(std::move(ap));
        have_ap = true;
      } else if (kw == "tpi") {
        if (proof.tpi()) fail(0, "duplicate 'tpi' clause");
        if (fields.size() < 2) fail(1, "'tpi' needs at least one state");
        Tpi c;
        for (std::size_t i = 1; i < fields.size(); ++i) c.states.push_back(name_at(i));
        proof.set_tpi(std::move(c));
      } else if (kw == "tpt") {
        Tpt c{name_at(1), {}};
        if (fields.size() < 3 || fields[2].text != ":") fail(2, "expected ':' after the state");
        for (std::size_t i = 3; i < fields.size(); ++i) c.successors.push_back(name_at(i));
        if (c.successors.empty()) fail(3, "'tpt' needs at least one successor");
        if (proof.find_tpt(c.state)) fail(1, "duplicate 'tpt' clause for " + c.state);
        proof.add_tpt(std::move(c));
      } else if (kw == "tpp") {
        if (fields.size() != 4) fail(0, "expected 'tpp <state> <prop> T|F|?'");
        Tpp c{name_at(1), name_at(2), Tri::Unknown};
        const auto v = tri_from_text(fields[3].text);
        if (!v) fail(3, "value must be T, F or ?");
        c.value = *v;
        if (proof.find_tpp(c.state, c.prop)) fail(1, "duplicate 'tpp' clause");
        proof.add_tpp(std::move(c));
      } else {
        fail(0, "unknown keyword '" + kw + "'");
      }
    } catch (const PreconditionError& e) {
      fail(0, e.what());
    }
  });
  if (!have_header) throw ParseError(1, 1, "missing 'proof' header");
  return proof;
}

std::string to_text(const Counterexample& ce) {
  std::string out = "ce " + ce.property + " prefix:";
  for (const auto& s : ce.path.prefix) out += " " + s;
  out += " loop:";
  for (const auto& s : ce.path.loop) out += " " + s;
  return out + "\n";
}

Counterexample parse_counterexample(std::string_view text) {
  std::optional<Counterexample> out;
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto fields = detail::split_fields(line);
    if (fields.empty()) return;
    if (out) throw ParseError(line_no, 1, "expected a single 'ce' line");
    if (fields[0].text != "ce") throw ParseError(line_no, fields[0].column, "expected 'ce'");
    if (fields.size() < 3 || !detail::is_identifier(fields[1].text) || fields[2].text != "prefix:") {
      throw ParseError(line_no, 1, "expected 'ce <name> prefix: ... loop: ...'");
    }
    Counterexample ce{fields[1].text, {}};
    bool in_loop = false;
    for (std::size_t i = 3; i < fields.size(); ++i) {
      const auto& f = fields[i];
      if (f.text == "loop:") {
        if (in_loop) throw ParseError(line_no, f.column, "duplicate 'loop:'");
        in_loop = true;
      } else if (!detail::is_identifier(f.text)) {
        throw ParseError(line_no, f.column, "invalid state name '" + f.text + "'");
      } else {
        (in_loop ? ce.path.loop : ce.path.prefix).push_back(f.text);
      }
    }
    if (!in_loop || ce.path.loop.empty()) throw ParseError(line_no, 1, "the loop must name at least one state");
    out = std::move(ce);
  });
  if (!out) throw ParseError(1, 1, "missing 'ce' line");
  return *out;
}

}  // namespace tpcheck

#include "tpcheck/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tpcheck/error.hpp"
#include "tpcheck/proof.hpp"

namespace tpcheck {
namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out << text;
}

// Parse failures are reported with the file name in front of line:column.
template <class T, class Fn>
T load(const std::string& path, Fn parse) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw Error(path + ":" + e.what());
  }
}

Pks load_model(const std::string& path) {
  Pks m = load<Pks>(path, [](const std::string& t) { return parse_pks(t); });
  const auto diags = validate(m);
  if (!diags.empty()) {
    std::string msg = path + ": invalid model";
    for (const auto& d : diags) msg += "\n  " + d.message;
    throw Error(msg);
  }
  return m;
}

std::vector<Property> load_properties(const std::string& path) {
  return load<std::vector<Property>>(path, [](const std::string& t) { return parse_properties(t); });
}

TopologicalProof load_proof(const std::string& path) {
  return load<TopologicalProof>(path, [](const std::string& t) { return parse_proof(t); });
}

struct AnalyzeFlags {
  std::string model;
  std::string properties;
  std::string out_dir;
  bool dump_snf = false;
  bool dump_uc = false;
  bool dump_automaton = false;
  bool timing = false;
  bool verify_uc = false;
  unsigned jobs = 1;
};

struct Row {
  std::string name;
  std::optional<AnalysisResult> result;
  std::string error;
  ClauseSet snf;
  ClauseSet core;
  std::string automaton;
  double millis = 0;
};

void analyze_one(const Pks& m, const Property& p, const AnalyzeFlags& flags, Row& row) {
  row.name = p.name;
  const auto start = std::chrono::steady_clock::now();
  try {
    AnalyzeOptions options;
    options.verify_uc = flags.verify_uc;
    ProofTrace trace;
    row.result = analyze(m, p, options, &trace);
    if (flags.dump_snf) {
      if (row.result->proof) {
        row.snf = trace.clauses;
      } else {
        row.snf = ks_to_snf(approximate(complement_closure(m), Approximation::Pessimistic));
        const ClauseSet prop = property_to_snf(tau_transform(p.formula));
        row.snf.insert(row.snf.end(), prop.begin(), prop.end());
      }
    }
    if (flags.dump_uc && row.result->proof) row.core = trace.core.clauses;
    if (flags.dump_automaton) row.automaton = automaton_text(tau_transform(p.formula));
  } catch (const Error& e) {
    row.result.reset();
    row.error = e.what();
  }
  row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int cmd_analyze(const AnalyzeFlags& flags, std::ostream& out) {
  const Pks m = load_model(flags.model);
  const auto props = load_properties(flags.properties);
  std::vector<Row> rows(props.size());

  const unsigned jobs = std::max(1U, std::min<unsigned>(flags.jobs, static_cast<unsigned>(props.size())));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < props.size();) analyze_one(m, props[i], flags, rows[i]);
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  if (!flags.out_dir.empty()) fs::create_directories(flags.out_dir);
  std::size_t width = 8;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  out << std::left << std::setw(static_cast<int>(width)) << "property" << "  verdict  proof  counterexample";
  if (flags.timing) out << "  time_ms";
  out << "\n";

  bool any_false = false;
  bool any_unknown = false;
  bool any_error = false;
  for (const auto& r : rows) {
    out << std::left << std::setw(static_cast<int>(width)) << r.name << "  ";
    if (!r.result) {
      any_error = true;
      out << "error    -      " << r.error << "\n";
      continue;
    }
    const AnalysisResult& a = *r.result;
    any_false |= a.verdict == Tri::False;
    any_unknown |= a.verdict == Tri::Unknown;
    out << std::setw(7) << tri_char(a.verdict) << "  " << std::setw(5)
        << (a.proof ? std::to_string(proof_size(*a.proof)) : "-") << "  "
        << (a.counterexample ? to_string(*a.counterexample) : "-");
    if (flags.timing) out << "  " << std::fixed << std::setprecision(1) << r.millis;
    out << "\n";
    if (!flags.out_dir.empty()) {
      if (a.proof) write_file(fs::path(flags.out_dir) / (r.name + ".proof"), to_text(*a.proof));
      if (a.counterexample) {
        write_file(fs::path(flags.out_dir) / (r.name + ".ce"), to_text(Counterexample{r.name, *a.counterexample}));
      }
    }
  }
  for (const auto& r : rows) {
    if (flags.dump_snf && r.result) out << "# snf " << r.name << "\n" << to_text(r.snf);
    if (flags.dump_uc && r.result && r.result->proof) out << "# uc " << r.name << "\n" << to_text(r.core);
    if (flags.dump_automaton && r.result) out << "# automaton " << r.name << "\n" << r.automaton;
  }
  if (any_error) return kExitError;
  if (any_false) return kExitSomeFalse;
  if (any_unknown) return kExitSomeUnknown;
  return kExitAllTrue;
}

int cmd_recheck(const std::vector<std::string>& proofs, const std::string& model, std::ostream& out) {
  const Pks m2 = load_model(model);
  bool all = true;
  for (const auto& path : proofs) {
    const TopologicalProof proof = load_proof(path);
    const auto violations = recheck(proof, m2);
    out << proof.property() << ": " << (violations.empty() ? "PASS" : "FAIL") << "\n";
    for (const auto& v : violations) out << "  violated: " << v.clause << " (observed: " << v.observed << ")\n";
    all &= violations.empty();
  }
  return all ? 0 : 1;
}

int cmd_relation(const std::string& a, const std::string& b, bool refinement, std::ostream& out) {
  const Pks m = load_model(a);
  const Pks m2 = load_model(b);
  if (refinement) {
    if (auto why = refinement_violation(m, m2)) {
      out << "not a refinement: " << *why << "\n";
      return 1;
    }
    out << "refinement\n";
    return 0;
  }
  for (const auto& p : m.props()) {
    if (!m2.find_prop(p)) {
      out << "not a revision: proposition " << p << " missing\n";
      return 1;
    }
  }
  out << "revision\n";
  return 0;
}

// First word of the first line that is neither blank nor a comment.
std::string first_keyword(std::string_view text) {
  std::string word;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    std::istringstream fields(line);
    if (fields >> word && word[0] != '#') return word;
  }
  return {};
}

int cmd_metrics(const std::vector<std::string>& files, std::ostream& out) {
  for (const auto& path : files) {
    const std::string text = read_file(path);
    if (first_keyword(text) == "proof") {
      const TopologicalProof proof = load_proof(path);
      out << "proof " << proof.property() << ": size " << proof_size(proof) << " (tpp " << proof.tpps().size()
          << ", tpt " << proof.tpts().size() << ", tpi " << (proof.tpi() ? 1 : 0) << ")\n";
    } else {
      const Pks m = load_model(path);
      out << "model " << m.name() << ": size " << model_size(m) << " (|AP| " << m.prop_count() << ", |S| "
          << m.state_count() << ", |R| " << m.transition_count() << ", |S0| " << m.initial().size() << ")\n";
    }
  }
  return 0;
}

struct StressFlags {
  std::string model;
  std::string properties;
  std::string proof;
  std::size_t mutants = 200;
  std::uint64_t seed = 1;
};

int cmd_stress(const StressFlags& flags, std::ostream& out) {
  const Pks m = load_model(flags.model);
  const auto props = load_properties(flags.properties);
  std::optional<TopologicalProof> given;
  if (!flags.proof.empty()) {
    given = load_proof(flags.proof);
    const bool known = std::any_of(props.begin(), props.end(), [&](const Property& p) { return p.name == given->property(); });
    if (!known) throw Error("property '" + given->property() + "' is not in " + flags.properties);
  }
  std::size_t total = 0;
  for (const auto& p : props) {
    std::optional<TopologicalProof> proof;
    if (given) {
      if (given->property() != p.name) continue;
      proof = given;
    } else {
      auto r = analyze(m, p);
      if (!r.proof) {
        out << p.name << ": verdict F, no proof to check\n";
        continue;
      }
      proof = std::move(r.proof);
    }
    std::size_t bad = 0;
    if (!recheck(*proof, m).empty()) {
      ++bad;
      out << "  origin model fails the re-check\n";
    }
    const auto mutants = omega_related_mutants(m, *proof, flags.mutants, flags.seed);
    for (std::size_t i = 0; i < mutants.size(); ++i) {
      const Tri v = three_valued_verdict(mutants[i], p.formula);
      if (v < proof->level() || !recheck(*proof, mutants[i]).empty()) {
        ++bad;
        out << "  mutant " << i << ": verdict " << tri_char(v) << " below level " << tri_char(proof->level()) << "\n";
      }
    }
    out << p.name << ": level " << tri_char(proof->level()) << ", " << mutants.size() << " mutants, " << bad
        << " violations\n";
    total += bad;
  }
  return total == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Three-valued LTL checking of partial Kripke structures with topological proofs", "tpcheck"};
  app.require_subcommand(1);

  AnalyzeFlags af;
  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze every property of a file against a model");
  analyze_cmd->add_option("model", af.model, "Model file")->required();
  analyze_cmd->add_option("properties", af.properties, "Property file")->required();
  analyze_cmd->add_option("-o,--out", af.out_dir, "Directory for .proof and .ce files");
  analyze_cmd->add_flag("--dump-snf", af.dump_snf, "Print the SNF clause set of each property");
  analyze_cmd->add_flag("--dump-uc", af.dump_uc, "Print the unsatisfiable core behind each proof");
  analyze_cmd->add_flag("--dump-automaton", af.dump_automaton, "Print the tableau of each negated property");
  analyze_cmd->add_flag("--timing", af.timing, "Add a wall-time column");
  analyze_cmd->add_flag("--verify-uc", af.verify_uc, "Check local minimality of every core");
  analyze_cmd->add_option("-j,--jobs", af.jobs, "Properties analyzed in parallel")->check(CLI::PositiveNumber);

  std::vector<std::string> recheck_files;
  auto* recheck_cmd = app.add_subcommand("recheck", "Check a revised model against stored proofs");
  recheck_cmd->add_option("files", recheck_files, "Proof files followed by the revised model file")
      ->required()
      ->expected(2, CLI::detail::expected_max_vector_size);

  std::string a;
  std::string b;
  auto* refine_cmd = app.add_subcommand("check-refinement", "Exit 0 iff the second model refines the first");
  refine_cmd->add_option("model", a)->required();
  refine_cmd->add_option("refined", b)->required();
  std::string ra;
  std::string rb;
  auto* revise_cmd = app.add_subcommand("check-revision", "Exit 0 iff the second model revises the first");
  revise_cmd->add_option("model", ra)->required();
  revise_cmd->add_option("revised", rb)->required();

  std::vector<std::string> metric_files;
  auto* metrics_cmd = app.add_subcommand("metrics", "Print model and proof sizes");
  metrics_cmd->add_option("files", metric_files, "Model or proof files")->required();

  StressFlags sf;
  auto* stress_cmd = app.add_subcommand("stress-proof", "Re-analyze random proof-preserving mutants");
  stress_cmd->add_option("model", sf.model)->required();
  stress_cmd->add_option("properties", sf.properties)->required();
  stress_cmd->add_option("--proof", sf.proof, "Check this proof instead of computing one");
  stress_cmd->add_option("--mutants", sf.mutants, "Mutants per proof");
  stress_cmd->add_option("--seed", sf.seed, "Mutation seed");

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(af, out);
    if (*recheck_cmd) {
      const std::vector<std::string> proofs(recheck_files.begin(), recheck_files.end() - 1);
      return cmd_recheck(proofs, recheck_files.back(), out);
    }
    if (*refine_cmd) return cmd_relation(a, b, true, out);
    if (*revise_cmd) return cmd_relation(ra, rb, false, out);
    if (*metrics_cmd) return cmd_metrics(metric_files, out);
    if (*stress_cmd) return cmd_stress(sf, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitError;
}

}  // namespace tpcheck

#include "aacbr/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "aacbr/af.hpp"
#include "aacbr/classifier.hpp"
#include "aacbr/cumulative.hpp"
#include "aacbr/io.hpp"
#include "aacbr/properties.hpp"
#include "json.hpp"

namespace aacbr::cli {

namespace {

namespace fs = std::filesystem;

struct PredictArgs {
  std::string casebase;
  std::string queries;
  std::string engine = "plain";
  std::string out = "-";
  std::string dot_dir;
  bool warn_incoherent = false;
};

struct ConciseArgs {
  std::string casebase;
  std::string out = "-";
  std::string audit;
};

struct CheckArgs {
  std::string engine = "plain";
  std::string property = "cautious-monotonicity";
  std::size_t features = 5;
  std::size_t cases = 10;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::size_t samples = 32;
  std::string fixture;
  std::string dump_dir;
};

struct ExportArgs {
  std::string casebase;
  std::optional<std::string> query;
  std::string out = "-";
};

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-")
    out << content;
  else
    io::write_file(path, content);
}

std::string safe_filename(std::string id) {
  for (char& ch : id)
    if (ch == '/' || ch == '\\') ch = '_';
  return id;
}

int cmd_predict(const PredictArgs& a, std::ostream& out, std::ostream& err) {
  const auto engine = parse_engine(a.engine);
  if (!engine) {
    err << "unknown engine '" << a.engine << "'\n";
    return kParseError;
  }
  const Casebase cb = io::to_casebase(io::parse_casebase_file(io::read_file(a.casebase)));
  const auto queries = io::parse_query_file(io::read_file(a.queries));

  if (!cb.coherent()) {
    if (*engine == Engine::Cumulative) {
      err << "casebase is incoherent; the cumulative engine requires coherence\n";
      return kIncoherent;
    }
    if (a.warn_incoherent) err << "warning: casebase is incoherent\n";
  }

  std::optional<ConciseModel> model;
  if (*engine == Engine::Cumulative) model = learn_concise(cb);
  if (!a.dot_dir.empty()) fs::create_directories(a.dot_dir);

  std::string records;
  for (const auto& q : queries) {
    const Prediction p = model ? predict_cumulative(*model, q.characterisation)
                               : predict(cb, q.characterisation);
    nlohmann::ordered_json rec{{"id", q.id},
                               {"outcome", p.outcome.label()},
                               {"default_in_grounded", p.default_in_grounded},
                               {"engine", to_string(*engine)}};
    records += rec.dump() + "\n";
    if (!a.dot_dir.empty()) {
      const ArgGraph g = attach_new_case(p.graph, q);
      io::write_file(fs::path(a.dot_dir) / (safe_filename(q.id) + ".dot"),
                     to_dot(g, grounded_extension(g)));
    }
  }
  emit(a.out, records, out);
  return kOk;
}

int cmd_concise(const ConciseArgs& a, std::ostream& out, std::ostream& err) {
  const Casebase cb = io::to_casebase(io::parse_casebase_file(io::read_file(a.casebase)));
  if (!cb.coherent()) {
    err << "casebase is incoherent; concise learning requires coherence\n";
    return kIncoherent;
  }
  const ConciseModel m = learn_concise(cb);
  emit(a.out, io::serialize(io::to_file(m.concise)), out);
  if (!a.audit.empty()) io::write_file(a.audit, io::audit_to_jsonl(m));
  return kOk;
}

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const auto engine = parse_engine(a.engine);
  const auto property = parse_property(a.property);
  if (!engine) {
    err << "unknown engine '" << a.engine << "'\n";
    return kParseError;
  }
  if (!property) {
    err << "unknown property '" << a.property << "'\n";
    return kParseError;
  }

  PropertyReport report;
  if (!a.fixture.empty()) {
    if (a.fixture != "theorem4") {
      err << "unknown fixture '" << a.fixture << "'\n";
      return kParseError;
    }
    report = check_property(*engine, *property, GeneratorConfig{letter_universe(a.features)}, 0,
                            QueryMode{}, {theorem4_fixture()});
  } else {
    GeneratorConfig cfg;
    cfg.feature_universe = letter_universe(a.features);
    cfg.case_count = a.cases;
    cfg.seed = a.seed;
    report = check_property(*engine, *property, cfg, a.trials, QueryMode{a.exhaustive, a.samples});
  }

  out << io::report_to_jsonl(report);
  if (!a.dump_dir.empty()) {
    fs::create_directories(a.dump_dir);
    for (std::size_t i = 0; i < report.violations.size(); ++i)
      io::write_file(fs::path(a.dump_dir) / ("counterexample-" + std::to_string(i) + ".json"),
                     io::serialize(io::to_file(report.violations[i].casebase)));
  }
  return report.holds() ? kOk : kViolations;
}

int cmd_export_dot(const ExportArgs& a, std::ostream& out) {
  const Casebase cb = io::to_casebase(io::parse_casebase_file(io::read_file(a.casebase)));
  std::optional<NewCase> q;
  if (a.query) q = NewCase{"query", io::parse_feature_list(*a.query)};
  const ArgGraph g = mine_af(cb, q);
  emit(a.out, to_dot(g, grounded_extension(g)), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Argumentation-based case-based reasoning"};
  app.name("aacbr");
  app.require_subcommand(1);

  PredictArgs pa;
  auto* predict_cmd = app.add_subcommand("predict", "Classify new cases against a casebase");
  predict_cmd->add_option("--casebase", pa.casebase, "Casebase file")->required();
  predict_cmd->add_option("--queries", pa.queries, "Query file")->required();
  predict_cmd->add_option("--engine", pa.engine, "plain or cumulative");
  predict_cmd->add_option("--out", pa.out, "Output path, - for stdout");
  predict_cmd->add_option("--dot", pa.dot_dir, "Directory for one DOT file per query");
  predict_cmd->add_flag("--warn-incoherent", pa.warn_incoherent, "Warn on incoherent casebases");

  ConciseArgs ca;
  auto* concise_cmd = app.add_subcommand("concise", "Learn the concise subset of a casebase");
  concise_cmd->add_option("--casebase", ca.casebase, "Casebase file")->required();
  concise_cmd->add_option("--out", ca.out, "Output path, - for stdout");
  concise_cmd->add_option("--audit", ca.audit, "Audit sidecar path (JSON lines)");

  CheckArgs ka;
  auto* check_cmd = app.add_subcommand("check", "Audit a non-monotonicity property");
  check_cmd->add_option("--engine", ka.engine, "plain or cumulative");
  check_cmd->add_option("--property", ka.property, "Property name");
  check_cmd->add_option("--features", ka.features, "Feature universe size")->check(CLI::Range(3, 8));
  check_cmd->add_option("--cases", ka.cases, "Cases per generated casebase");
  check_cmd->add_option("--trials", ka.trials, "Number of seeded casebases");
  check_cmd->add_option("--seed", ka.seed, "Base seed; trial t uses seed + t");
  check_cmd->add_flag("--exhaustive", ka.exhaustive, "Query every characterisation");
  check_cmd->add_option("--samples", ka.samples, "Queries sampled per trial when not exhaustive");
  check_cmd->add_option("--fixture", ka.fixture, "Audit a built-in fixture instead (theorem4)");
  check_cmd->add_option("--dump-dir", ka.dump_dir, "Write counterexample casebases here");

  ExportArgs ea;
  auto* export_cmd = app.add_subcommand("export-dot", "Render the mined framework as DOT");
  export_cmd->add_option("--casebase", ea.casebase, "Casebase file")->required();
  export_cmd->add_option("--query", ea.query, "Comma-separated features of a new case");
  export_cmd->add_option("--out", ea.out, "Output path, - for stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*predict_cmd) return cmd_predict(pa, out, err);
    if (*concise_cmd) return cmd_concise(ca, out, err);
    if (*check_cmd) return cmd_check(ka, out, err);
    if (*export_cmd) return cmd_export_dot(ea, out);
  } catch (const IncoherentCasebase& e) {
    err << e.what() << "\n";
    return kIncoherent;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kParseError;
  } catch (const fs::filesystem_error& e) {
    err << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}

}  // namespace aacbr::cli

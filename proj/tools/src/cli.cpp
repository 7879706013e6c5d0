#include "eggraph/cli/cli.hpp"

#include "eggraph/analysis.hpp"
#include "eggraph/dynamics.hpp"
#include "eggraph/error.hpp"
#include "eggraph/io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace eggraph::cli {
namespace fs = std::filesystem;

namespace {

struct Output {
  std::string format = "text";
  bool json() const { return format == "json"; }
  bool csv() const { return format == "csv"; }
};

void add_format(CLI::App* cmd, Output& output) {
  cmd->add_option("--format", output.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string structural_string(const std::map<std::string, std::int64_t>& params) {
  std::vector<std::string> parts;
  for (const auto& [name, value] : params) parts.push_back(name + "=" + std::to_string(value));
  return join(parts, " ");
}

std::string csv_quote(const std::string& text) {
  if (text.find_first_of(",\"") == std::string::npos) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Graph plus initial state, from either an instance file or a graph file and
// a bit string.
struct Subject {
  std::optional<ConstructedInstance> instance;
  Graph graph;
  StrategyVector x0;
};

Subject load_subject(const std::string& instance_path, const std::string& graph_path,
                     const std::string& state) {
  Subject subject;
  if (!instance_path.empty()) {
    subject.instance = instance_from_json(read_json_file(instance_path));
    subject.graph = subject.instance->graph;
    subject.x0 = subject.instance->x0;
    return subject;
  }
  if (graph_path.empty() || state.empty()) {
    throw InvalidArgument("give --instance, or --graph together with --state");
  }
  subject.graph = graph_from_json(read_json_file(graph_path));
  subject.x0 = StrategyVector::from_string(state);
  if (subject.x0.size() != subject.graph.size()) {
    throw InvalidArgument("state has " + std::to_string(subject.x0.size()) + " entries, graph has " +
                          std::to_string(subject.graph.size()) + " vertices");
  }
  return subject;
}

int cmd_classify(const std::string& params_text, const Output& output, std::ostream& out) {
  const GameParams params = parse_params(params_text);
  const Scenario scenario = classify_scenario(params);
  const std::string name(to_string(scenario));
  if (output.json()) {
    Json j;
    j["params"] = params_to_json(params);
    j["scenario"] = name;
    j["generic"] = params.generic();
    out << j.dump(2) << '\n';
  } else if (output.csv()) {
    out << "a,b,c,d,scenario,generic\n"
        << to_string(params.a) << ',' << to_string(params.b) << ',' << to_string(params.c) << ','
        << to_string(params.d) << ',' << name << ',' << (params.generic() ? 1 : 0) << '\n';
  } else {
    out << name << '\n';
  }
  return scenario == Scenario::NonAdmissible ? kBadInput : kOk;
}

struct WitnessArgs {
  std::string params;
  std::int64_t period = 0;
  std::int64_t min_period = 0;
  bool tree = false;
  std::string out_dir = ".";
  std::uint64_t max_candidates = SolverOptions{}.max_candidates;
};

int cmd_witness(const WitnessArgs& args, const Output& output, std::ostream& out, std::ostream& err) {
  const GameParams params = parse_params(args.params);
  if (classify_scenario(params) == Scenario::NonAdmissible) {
    throw ScenarioError("params " + to_string(params) + " are not admissible");
  }
  const std::int64_t period = args.tree ? args.min_period : args.period;
  if (period <= 0) throw InvalidArgument(args.tree ? "--tree needs --min-period" : "--period is required");

  SolverOptions options;
  options.max_candidates = args.max_candidates;
  options.log = [&err](std::string_view note) { err << note << '\n'; };
  const Witness witness = make_witness(params, period, args.tree, options);
  const ConstructedInstance& inst = witness.instance;

  const fs::path dir(args.out_dir);
  fs::create_directories(dir);
  const fs::path instance_file = dir / "instance.json";
  const fs::path certificate_file = dir / "certificate.json";
  const fs::path dot_file = dir / "instance.dot";
  write_json_file(instance_file, instance_to_json(inst));
  write_json_file(certificate_file, certificate_to_json(witness.certificate));
  write_text_file(dot_file, to_dot(inst.graph, inst.x0, &inst.roles));

  if (output.json()) {
    Json j;
    j["construction"] = std::string(to_string(inst.kind));
    j["structural_params"] = inst.structural_params;
    j["vertices"] = inst.graph.size();
    j["edges"] = inst.graph.edge_count();
    j["predicted_period"] = inst.predicted_period;
    j["files"] = {instance_file.string(), certificate_file.string(), dot_file.string()};
    out << j.dump(2) << '\n';
  } else if (output.csv()) {
    out << "construction,structural_params,vertices,edges,predicted_period\n"
        << to_string(inst.kind) << ',' << structural_string(inst.structural_params) << ','
        << inst.graph.size() << ',' << inst.graph.edge_count() << ',' << inst.predicted_period << '\n';
  } else {
    out << "construction=" << to_string(inst.kind) << ' ' << structural_string(inst.structural_params)
        << " vertices=" << inst.graph.size() << '\n'
        << "predicted_period=" << inst.predicted_period << '\n';
  }
  return kOk;
}

struct SimulateArgs {
  std::string instance;
  std::string graph;
  std::string state;
  std::string params;
  std::size_t max_steps = 1'000'000;
  std::string out_dir = ".";
};

int cmd_simulate(const SimulateArgs& args, const Output& output, std::ostream& out) {
  const GameParams params = parse_params(args.params);
  const Subject subject = load_subject(args.instance, args.graph, args.state);
  const TrajectoryReport report =
      trajectory(subject.graph, params, subject.x0, UpdateSchedule::synchronous(), args.max_steps);
  const auto series = cooperator_series(report);

  const fs::path dir(args.out_dir);
  fs::create_directories(dir);
  write_json_file(dir / "trajectory.json", trajectory_to_json(report));
  write_text_file(dir / "counts.csv", series_to_csv(series));

  if (output.json()) {
    Json j;
    j["transient"] = report.transient;
    j["period"] = report.minimal_period;
    j["vertices"] = subject.graph.size();
    j["cooperator_counts"] = report.cooperator_counts;
    out << j.dump(2) << '\n';
  } else if (output.csv()) {
    out << series_to_csv(series);
  } else {
    out << "transient=" << report.transient << " period=" << report.minimal_period << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  std::string instance;
  std::string params;
  bool lemmas = false;
  std::string report;
};

void print_violations(const VerificationReport& report, std::ostream& out) {
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < std::min(kShown, report.violations.size()); ++i) {
    const InvariantViolation& v = report.violations[i];
    out << "  t=" << v.time << ' ' << v.invariant;
    if (v.vertex) out << " vertex=" << *v.vertex;
    out << " expected=" << v.expected << " observed=" << v.observed << '\n';
  }
  if (report.violations.size() > kShown) {
    out << "  ... " << report.violations.size() - kShown << " more" << (report.truncated ? " (truncated)" : "")
        << '\n';
  }
}

int cmd_verify(const VerifyArgs& args, const Output& output, std::ostream& out) {
  const GameParams params = parse_params(args.params);
  const ConstructedInstance inst = instance_from_json(read_json_file(args.instance));
  VerificationReport report = verify_instance(inst, params);
  std::optional<VerificationReport> lemmas;
  if (args.lemmas) {
    if (inst.kind != ConstructionKind::Tree) throw InvalidArgument("--lemmas applies to tree instances only");
    lemmas = scan_tree_lemmas(inst, params, static_cast<std::size_t>(2 * inst.param("q") - 6));
  }
  const bool ok = report.ok() && (!lemmas || lemmas->ok());

  Json j = verification_to_json(report);
  if (lemmas) j["lemmas"] = verification_to_json(*lemmas);
  j["ok"] = ok;
  if (!args.report.empty()) write_json_file(args.report, j);

  if (output.json()) {
    out << j.dump(2) << '\n';
  } else if (output.csv()) {
    out << "time,invariant,vertex,expected,observed\n";
    auto rows = [&out](const VerificationReport& r) {
      for (const InvariantViolation& v : r.violations) {
        out << v.time << ',' << v.invariant << ',' << (v.vertex ? std::to_string(*v.vertex) : "") << ','
            << v.expected << ',' << v.observed << '\n';
      }
    };
    rows(report);
    if (lemmas) rows(*lemmas);
  } else {
    out << "checked " << report.checked.size() << " invariant families:\n";
    for (const std::string& family : report.checked) out << "  " << family << '\n';
    if (lemmas) {
      out << "checked " << lemmas->checked.size() << " lemma families:\n";
      for (const std::string& family : lemmas->checked) out << "  " << family << '\n';
    }
    out << "transient=" << report.observed_transient << " period=" << report.observed_period << '\n';
    out << "violations=" << report.violations.size() + (lemmas ? lemmas->violations.size() : 0) << '\n';
    print_violations(report, out);
    if (lemmas) print_violations(*lemmas, out);
    out << (ok ? "OK" : "FAILED") << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

struct SweepArgs {
  std::vector<std::string> params;
  std::string params_file;
  std::vector<std::int64_t> periods;
  bool tree = false;
  unsigned jobs = 1;
  std::uint64_t max_candidates = SolverOptions{}.max_candidates;
};

struct SweepRow {
  std::string params;
  std::string scenario;
  std::int64_t period = 0;
  std::string construction;
  std::map<std::string, std::int64_t> structural;
  std::size_t vertices = 0;
  std::size_t predicted = 0;
  std::size_t observed_transient = 0;
  std::size_t observed_period = 0;
  std::size_t violations = 0;
  std::string status;
  std::string message;
};

SweepRow sweep_one(const std::string& params_text, std::int64_t period, const SweepArgs& args) {
  SweepRow row;
  row.params = params_text;
  row.period = period;
  try {
    const GameParams params = parse_params(params_text);
    row.scenario = std::string(to_string(classify_scenario(params)));
    SolverOptions options;
    options.max_candidates = args.max_candidates;
    const Witness witness = make_witness(params, period, args.tree, options);
    const ConstructedInstance& inst = witness.instance;
    row.construction = std::string(to_string(inst.kind));
    row.structural = inst.structural_params;
    row.vertices = inst.graph.size();
    row.predicted = inst.predicted_period;
    const VerificationReport report = verify_instance(inst, params);
    row.observed_transient = report.observed_transient;
    row.observed_period = report.observed_period;
    row.violations = report.violations.size();
    row.status = report.ok() ? "ok" : "failed";
  } catch (const BudgetExhausted& e) {
    row.status = "budget";
    row.message = e.what();
  } catch (const std::exception& e) {
    row.status = "invalid";
    row.message = e.what();
  }
  return row;
}

std::vector<std::string> read_params_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

int cmd_sweep(const SweepArgs& args, const Output& output, std::ostream& out) {
  std::vector<std::string> all_params = args.params;
  if (!args.params_file.empty()) {
    const auto more = read_params_file(args.params_file);
    all_params.insert(all_params.end(), more.begin(), more.end());
  }
  if (all_params.empty()) throw InvalidArgument("sweep needs --params or --params-file");
  if (args.periods.empty()) throw InvalidArgument("sweep needs --periods");

  std::vector<std::pair<std::string, std::int64_t>> tasks;
  for (const auto& p : all_params) {
    for (std::int64_t period : args.periods) tasks.emplace_back(p, period);
  }
  std::vector<SweepRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      rows[i] = sweep_one(tasks[i].first, tasks[i].second, args);
    }
  };
  const unsigned jobs = std::clamp<unsigned>(args.jobs, 1, static_cast<unsigned>(tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (output.json()) {
    Json arr = Json::array();
    for (const SweepRow& r : rows) {
      Json j;
      j["params"] = r.params;
      j["scenario"] = r.scenario;
      j["period"] = r.period;
      j["status"] = r.status;
      if (!r.message.empty()) j["message"] = r.message;
      if (!r.construction.empty()) {
        j["construction"] = r.construction;
        j["structural_params"] = r.structural;
        j["vertices"] = r.vertices;
        j["predicted_period"] = r.predicted;
        j["observed_transient"] = r.observed_transient;
        j["observed_period"] = r.observed_period;
        j["violations"] = r.violations;
      }
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
  } else {
    const bool csv = output.csv();
    const char* sep = csv ? "," : " ";
    if (csv) {
      out << "params,scenario,period,construction,structural_params,vertices,predicted_period,"
             "observed_transient,observed_period,violations,status,message\n";
    }
    for (const SweepRow& r : rows) {
      if (csv) {
        out << csv_quote(r.params) << sep << r.scenario << sep << r.period << sep << r.construction << sep
            << structural_string(r.structural) << sep << r.vertices << sep << r.predicted << sep
            << r.observed_transient << sep << r.observed_period << sep << r.violations << sep << r.status
            << sep << csv_quote(r.message) << '\n';
      } else {
        out << r.params << " p=" << r.period << ' ' << r.scenario << ' ';
        if (r.construction.empty()) {
          out << r.status << ": " << r.message << '\n';
          continue;
        }
        out << r.construction << " [" << structural_string(r.structural) << "] n=" << r.vertices
            << " transient=" << r.observed_transient << " period=" << r.observed_period << '/'
            << r.predicted << " violations=" << r.violations << ' ' << r.status << '\n';
      }
    }
  }

  int code = kOk;
  auto any = [&rows](const char* status) {
    return std::any_of(rows.begin(), rows.end(), [status](const SweepRow& r) { return r.status == status; });
  };
  if (any("invalid")) code = kBadInput;
  if (any("budget")) code = kBudgetExhausted;
  if (any("failed")) code = kVerificationFailed;
  return code;
}

struct DotArgs {
  std::string instance;
  std::string graph;
  std::string state;
  std::string params;
  std::size_t time = 0;
  bool labels = false;
  std::string out_file;
};

int cmd_export_dot(const DotArgs& args, std::ostream& out) {
  const Subject subject = load_subject(args.instance, args.graph, args.state);
  StrategyVector state = subject.x0;
  if (args.time > 0) {
    if (args.params.empty()) throw InvalidArgument("--time needs --params");
    const GameParams params = parse_params(args.params);
    const Stepper stepper(subject.graph, params);
    for (std::size_t t = 0; t < args.time; ++t) state = stepper(state);
  }
  const std::vector<Role>* roles = nullptr;
  if (args.labels) {
    if (!subject.instance) throw InvalidArgument("--labels needs --instance");
    roles = &subject.instance->roles;
  }
  const std::string dot = to_dot(subject.graph, state, roles);
  if (args.out_file.empty()) {
    out << dot;
  } else {
    write_text_file(args.out_file, dot);
  }
  return kOk;
}

}  // namespace

Witness make_witness(const GameParams& params, std::int64_t period, bool tree, const SolverOptions& options) {
  if (tree) {
    TreeSolution sol = solve_tree(params, period, options);
    return Witness{build_tree(sol.r, sol.q), std::move(sol.certificate)};
  }
  switch (classify_scenario(params)) {
    case Scenario::FC:
    case Scenario::SH: {
      FcshSolution sol = solve_fcsh(params, period, options);
      return Witness{build_fcsh(period, sol.q, sol.r, sol.s), std::move(sol.certificate)};
    }
    case Scenario::HD:
    case Scenario::PD: {
      HdpdSolution sol = solve_hdpd(params, period, options);
      return Witness{build_hdpd(period, sol.o, sol.q, sol.r, sol.s), std::move(sol.certificate)};
    }
    case Scenario::NonAdmissible: break;
  }
  throw ScenarioError("params " + to_string(params) + " are not admissible");
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Imitation dynamics on graphs: periodic witnesses, simulation and verification", "eggraph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "eggraph 0.1.0");

  Output output;

  std::string classify_params;
  auto* classify = app.add_subcommand("classify", "Report the scenario of a payoff quadruple");
  classify->add_option("--params", classify_params, "Payoffs a,b,c,d (decimals or p/q)")->required();
  add_format(classify, output);

  WitnessArgs witness_args;
  auto* witness = app.add_subcommand("witness", "Build a graph whose trajectory has a prescribed period");
  witness->add_option("--params", witness_args.params, "Payoffs a,b,c,d")->required();
  auto* period_opt = witness->add_option("--period", witness_args.period, "Minimal period p >= 2");
  auto* tree_flag = witness->add_flag("--tree", witness_args.tree, "Use the acyclic construction (HD only)");
  auto* min_period_opt =
      witness->add_option("--min-period", witness_args.min_period, "Lower bound p0 on the tree's period");
  min_period_opt->needs(tree_flag);
  period_opt->excludes(tree_flag);
  witness->add_option("--out", witness_args.out_dir, "Output directory")->capture_default_str();
  witness->add_option("--max-candidates", witness_args.max_candidates, "Solver scan cap")->capture_default_str();
  add_format(witness, output);

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Iterate the dynamics until the trajectory cycles");
  auto* sim_instance = simulate->add_option("--instance", sim_args.instance, "Instance JSON file");
  auto* sim_graph = simulate->add_option("--graph", sim_args.graph, "Graph JSON file");
  auto* sim_state = simulate->add_option("--state", sim_args.state, "Initial state as a 0/1 string");
  sim_instance->excludes(sim_graph)->excludes(sim_state);
  sim_graph->needs(sim_state);
  sim_state->needs(sim_graph);
  simulate->add_option("--params", sim_args.params, "Payoffs a,b,c,d")->required();
  simulate->add_option("--max-steps", sim_args.max_steps, "Step budget")->capture_default_str();
  simulate->add_option("--out", sim_args.out_dir, "Output directory")->capture_default_str();
  add_format(simulate, output);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check a constructed instance against its predicted dynamics");
  verify->add_option("--instance", verify_args.instance, "Instance JSON file")->required();
  verify->add_option("--params", verify_args.params, "Payoffs a,b,c,d")->required();
  verify->add_flag("--lemmas", verify_args.lemmas, "Also scan the local tree lemmas");
  verify->add_option("--report", verify_args.report, "Write the report as JSON");
  add_format(verify, output);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Solve, build and verify over a grid of payoffs and periods");
  sweep->add_option("--params", sweep_args.params, "Payoff quadruple, repeatable");
  sweep->add_option("--params-file", sweep_args.params_file, "File with one quadruple per line");
  sweep->add_option("--periods", sweep_args.periods, "Periods (p0 with --tree)")->delimiter(',')->required();
  sweep->add_flag("--tree", sweep_args.tree, "Use the acyclic construction");
  sweep->add_option("--jobs", sweep_args.jobs, "Worker threads")->capture_default_str();
  sweep->add_option("--max-candidates", sweep_args.max_candidates, "Solver scan cap")->capture_default_str();
  add_format(sweep, output);

  DotArgs dot_args;
  auto* dot = app.add_subcommand("export-dot", "Render a graph and state as Graphviz");
  auto* dot_instance = dot->add_option("--instance", dot_args.instance, "Instance JSON file");
  auto* dot_graph = dot->add_option("--graph", dot_args.graph, "Graph JSON file");
  auto* dot_state = dot->add_option("--state", dot_args.state, "State as a 0/1 string");
  dot_instance->excludes(dot_graph)->excludes(dot_state);
  dot_graph->needs(dot_state);
  dot->add_option("--params", dot_args.params, "Payoffs, needed with --time");
  dot->add_option("--time", dot_args.time, "Render X(t) instead of the initial state");
  dot->add_flag("--labels", dot_args.labels, "Label vertices with their roles");
  dot->add_option("--out", dot_args.out_file, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (classify->parsed()) return cmd_classify(classify_params, output, out);
    if (witness->parsed()) return cmd_witness(witness_args, output, out, err);
    if (simulate->parsed()) return cmd_simulate(sim_args, output, out);
    if (verify->parsed()) return cmd_verify(verify_args, output, out);
    if (sweep->parsed()) return cmd_sweep(sweep_args, output, out);
    if (dot->parsed()) return cmd_export_dot(dot_args, out);
  } catch (const TrajectoryBudgetExhausted& e) {
    err << "error: " << e.what() << " (" << e.partial_states().size() << " states recorded)\n";
    return kBudgetExhausted;
  } catch (const BudgetExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExhausted;
  } catch (const Json::exception& e) {
    err << "error: malformed JSON: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"eggraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace eggraph::cli

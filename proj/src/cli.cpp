#include "graphdep/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "graphdep/errors.hpp"
#include "graphdep/io.hpp"

namespace graphdep::cli {

namespace {

enum class Format { kCsv, kJson };

struct Output {
  std::string path;
  Format format = Format::kCsv;
};

struct BoundsArgs {
  std::string graph;
  std::string c = "uniform:1";
  double t = 0;
  std::string methods = "all";
  std::string strategy = "auto";
  std::optional<int> m;
  bool independent = false;
  std::string statistic = "sum";
  bool decomposable = false;
  Output output;
};

struct CoversArgs {
  std::string quantity;
  std::string graph;
  std::string c = "uniform:1";
  std::string strategy = "auto";
  Output output{"", Format::kJson};
};

struct SimulateArgs {
  std::string spec;
  std::uint64_t seed = 0;
  double n = 1e6;
  std::string t_grid = "auto";
  int threads = 0;
  bool independent = false;
  Output output;
};

struct VerifyArgs {
  std::string spec;
  std::string graph;
  std::string variant = "construction";
  Output output{"", Format::kJson};
};

const std::map<std::string, Format> kFormats{{"csv", Format::kCsv}, {"json", Format::kJson}};

const std::map<std::string, CoverStrategy> kStrategies{{"auto", CoverStrategy::kAuto},
                                                       {"lp", CoverStrategy::kEnumeratedLp},
                                                       {"enumerated", CoverStrategy::kEnumeratedLp},
                                                       {"colgen", CoverStrategy::kColumnGeneration},
                                                       {"greedy", CoverStrategy::kGreedy}};

void add_output(CLI::App& app, Output& output) {
  app.add_option("--format", output.format, "csv or json")->transform(CLI::CheckedTransformer(kFormats));
  app.add_option("--output,-o", output.path, "write data here instead of standard output");
}

void emit(const Output& output, const std::string& text, std::ostream& out) {
  if (output.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output.path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("cannot write " + output.path);
  file << text;
  if (!file) throw InputError("failed while writing " + output.path);
}

std::string with_newline(const Json& json) { return json.dump(2) + '\n'; }

// Prefixes parse diagnostics with the file they came from.
template <class F>
auto from_file(const std::string& path, F&& parse) {
  const std::string text = read_text_file(path);
  try {
    return parse(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

// JSON file through a converter, with diagnostics naming the file.
template <class F>
auto decode(const std::string& path, F&& convert) {
  return from_file(path, [&](const std::string& text) {
    Json json;
    try {
      json = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return convert(json);
  });
}

Graph load_graph(const std::string& path) {
  return from_file(path, [](const std::string& text) { return parse_graph(text); });
}

CoverOptions cover_options(const std::string& strategy) {
  CoverOptions options;
  options.strategy = kStrategies.at(strategy);
  return options;
}

std::set<BoundMethod> parse_methods(const std::string& list) {
  std::set<BoundMethod> methods;
  if (list == "all") return methods;
  std::stringstream in(list);
  std::string name;
  while (std::getline(in, name, ',')) {
    auto method = parse_bound_method(name);
    if (!method) throw InputError("unknown method \"" + name + "\"");
    methods.insert(*method);
  }
  if (methods.empty()) throw InputError("--methods names no method");
  return methods;
}

int run_bounds(const BoundsArgs& args, std::ostream& out) {
  if (!(args.t > 0)) throw InputError("--t must be positive");
  const Graph graph = load_graph(args.graph);
  const LipschitzProfile c = parse_profile(args.c, graph.order());

  CompareOptions options;
  options.methods = parse_methods(args.methods);
  options.independence_assumed = args.independent;
  options.sum_statistic = args.statistic == "sum";
  options.assume_decomposable = args.decomposable;
  options.m = args.m;
  options.cover = cover_options(args.strategy);
  const auto reports = compare_bounds(graph, c, args.t, options);

  if (args.output.format == Format::kCsv) {
    emit(args.output, bound_reports_to_csv(reports), out);
  } else {
    Json rows = Json::array();
    for (const auto& r : reports) rows.push_back(bound_report_to_json(r));
    emit(args.output, with_newline(Json{{"graph", graph_to_json(graph)}, {"t", args.t}, {"bounds", rows}}), out);
  }
  return kExitOk;
}

int run_covers(const CoversArgs& args, std::ostream& out) {
  const Graph graph = load_graph(args.graph);
  const CoverOptions options = cover_options(args.strategy);
  CoverSolution solution;
  if (args.quantity == "chi-f") {
    solution = fractional_chromatic_number(graph, options);
  } else if (args.quantity == "a-f") {
    solution = fractional_vertex_arboricity(graph, options);
  } else {
    solution = optimize_D(graph, parse_profile(args.c, graph.order()), options);
  }

  if (args.output.format == Format::kJson) {
    emit(args.output, with_newline(cover_solution_to_json(solution, args.quantity)), out);
  } else {
    std::string text = "quantity,value,value_exact,objective,method,optimality\n";
    text += args.quantity + ',' + format_double(solution.value) + ',' +
            (solution.value_exact ? to_string(*solution.value_exact) : "") + ',' + format_double(solution.objective) +
            ',' + to_string(solution.method) + ',' + to_string(solution.optimality) + '\n';
    emit(args.output, text, out);
  }
  return kExitOk;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double t = 0;
    try {
      t = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || !(t > 0)) throw InputError("--t-grid entry \"" + item + "\" is not a positive number");
    grid.push_back(t);
  }
  if (grid.empty()) throw InputError("--t-grid is empty");
  return grid;
}

int run_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
  if (!(args.n >= 1) || args.n != std::floor(args.n) || args.n > 1e12) throw InputError("--N must be a positive integer");
  const auto n = static_cast<std::uint64_t>(args.n);
  const Sampler sampler(decode(args.spec, sampler_spec_from_json));
  MonteCarloOptions options;
  options.threads = args.threads;
  // The auto grid stops before bounds fall below what N samples can resolve.
  const double floor = std::max(1e-4, 2 * clopper_pearson_upper(0, n, options.confidence));
  const auto grid = args.t_grid == "auto" ? default_t_grid(sampler, 10, floor) : parse_grid(args.t_grid);
  const auto table = validate_bounds(sampler, grid, args.seed, n, args.independent, options);
  emit(args.output,
       args.output.format == Format::kCsv ? validation_to_csv(table, args.seed, n)
                                          : with_newline(validation_to_json(table, args.seed, n)),
       out);
  if (!table.sound()) {
    err << "bound violated: the confidence limit exceeds a bound that is valid under dependence\n";
    return kExitVerification;
  }
  return kExitOk;
}

JointSpec load_joint(const VerifyArgs& args) {
  JointSpec spec = decode(args.spec, joint_spec_from_json);
  if (!args.graph.empty()) {
    Graph graph = load_graph(args.graph);
    if (graph.order() != spec.joint.size()) throw InputError("--graph has a different vertex count than the joint");
    spec.joint = FiniteJoint(spec.joint.radix(), spec.joint.pmf(), std::move(graph));
  }
  return spec;
}

Json dependency_json(const DependencyReport& report) {
  return Json{{"ok", report.ok}, {"s", report.s}, {"t", report.t}, {"deviation", to_string(report.deviation)}};
}

int run_verify_dependency(const VerifyArgs& args, std::ostream& out) {
  const JointSpec spec = load_joint(args);
  const auto report = verify_dependency(spec.joint, spec.joint.dependency());
  Json json{{"check", "dependency"}, {"graph", graph_to_json(spec.joint.dependency())}};
  json["dependency"] = dependency_json(report);
  emit(args.output, with_newline(json), out);
  return report.ok ? kExitOk : kExitVerification;
}

int run_verify_coupling(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const JointSpec spec = load_joint(args);
  const Graph& graph = spec.joint.dependency();
  if (!classify(graph).is_forest) throw KindError("the dependency graph has a cycle; the coupling needs a forest");
  if (auto violation = validate_lipschitz(spec.f)) {
    throw InputError("the function is not Lipschitz for the given c at coordinate " +
                     std::to_string(violation->coordinate));
  }

  Json json{{"check", "coupling"}, {"graph", graph_to_json(graph)}};
  const auto dependency = verify_dependency(spec.joint, graph);
  json["dependency"] = dependency_json(dependency);
  if (!dependency.ok) {
    json["ok"] = false;
    emit(args.output, with_newline(json), out);
    err << "the joint is not dependent on the declared graph\n";
    return kExitVerification;
  }

  const OrderedTree tree = ordered_forest(graph, spec.f.c);
  const FiniteJoint joint = spec.joint.permuted(tree.labels);
  const LipschitzFunction f = spec.f.permuted(tree.labels);
  const auto variant =
      args.variant == "corrupted" ? CouplingVariant::kCorruptedMarginal : CouplingVariant::kConstruction;

  Rational marginal = 0, structure = 0, independence = 0;
  const auto contexts = coupling_contexts(joint);
  for (const auto& context : contexts) {
    const auto pair = build_coupling(joint, tree, context, variant);
    marginal = std::max(marginal, verify_coupling_marginals(pair, joint));
    structure = std::max(structure, coupling_structure_defect(pair));
  }
  for (int i = 1; i < joint.size(); ++i) independence = std::max(independence, verify_independence_lemma(joint, tree, i));
  const auto difference = verify_difference_bound(joint, tree, f);
  const Rational excess = std::max(Rational(0), difference.max_excess);
  const Rational deviation = std::max({marginal, structure, independence, excess});

  json["order"] = tree.labels;
  json["contexts"] = contexts.size();
  json["variant"] = args.variant;
  json["marginal_deviation"] = to_string(marginal);
  json["structure_defect"] = to_string(structure);
  json["independence_deviation"] = to_string(independence);
  json["difference_excess"] = to_string(difference.max_excess);
  json["max_deviation"] = to_string(deviation);
  json["ok"] = deviation == 0;
  emit(args.output, with_newline(json), out);
  if (deviation != 0) {
    err << "coupling deviation " << to_string(deviation) << '\n';
    return kExitVerification;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tail bounds for Lipschitz functions of graph-dependent variables", "graphdep"};
  app.require_subcommand(1);

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "compare tail bounds at one t");
  bounds_cmd->add_option("--graph", bounds.graph, "graph file (JSON or edge list)")->required();
  bounds_cmd->add_option("--c", bounds.c, "uniform:x or a comma-separated list")->capture_default_str();
  bounds_cmd->add_option("--t", bounds.t, "deviation t > 0")->required();
  bounds_cmd->add_option("--methods", bounds.methods, "comma-separated methods or all")->capture_default_str();
  bounds_cmd->add_option("--strategy", bounds.strategy)->check(CLI::IsMember(kStrategies))->capture_default_str();
  bounds_cmd->add_option("--m", bounds.m, "dependence order for m-dependent bounds");
  bounds_cmd->add_flag("--independent", bounds.independent, "add the McDiarmid reference line");
  bounds_cmd->add_option("--statistic", bounds.statistic)->check(CLI::IsMember({"sum", "general"}))->capture_default_str();
  bounds_cmd->add_flag("--decomposable", bounds.decomposable, "assert f is forest-decomposable");
  add_output(*bounds_cmd, bounds.output);

  CoversArgs covers;
  auto* covers_cmd = app.add_subcommand("covers", "fractional covers: chi-f, a-f or D");
  covers_cmd->add_option("quantity", covers.quantity)->required()->check(CLI::IsMember({"chi-f", "a-f", "D"}));
  covers_cmd->add_option("--graph", covers.graph)->required();
  covers_cmd->add_option("--c", covers.c)->capture_default_str();
  covers_cmd->add_option("--strategy", covers.strategy)->check(CLI::IsMember(kStrategies))->capture_default_str();
  add_output(*covers_cmd, covers.output);

  SimulateArgs simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo check of every applicable bound");
  simulate_cmd->add_option("--spec", simulate.spec, "sampler spec (JSON)")->required();
  simulate_cmd->add_option("--seed", simulate.seed)->required();
  simulate_cmd->add_option("--N", simulate.n, "samples per t")->capture_default_str();
  simulate_cmd->add_option("--t-grid", simulate.t_grid, "auto or a comma-separated list")->capture_default_str();
  simulate_cmd->add_option("--threads", simulate.threads, "0: GRAPHDEP_THREADS or the hardware")->check(CLI::NonNegativeNumber);
  simulate_cmd->add_flag("--independent", simulate.independent, "add the McDiarmid reference line");
  add_output(*simulate_cmd, simulate.output);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "exact checks on a finite joint law");
  verify_cmd->require_subcommand(1);
  auto* coupling_cmd = verify_cmd->add_subcommand("coupling", "coupling construction and difference bound");
  auto* dependency_cmd = verify_cmd->add_subcommand("dependency", "the joint is dependent on its graph");
  for (auto* cmd : {coupling_cmd, dependency_cmd}) {
    cmd->add_option("--spec", verify.spec, "joint spec (JSON)")->required();
    cmd->add_option("--graph", verify.graph, "override the declared dependency graph");
    cmd->add_option("--output,-o", verify.output.path);
  }
  coupling_cmd->add_option("--variant", verify.variant)->check(CLI::IsMember({"construction", "corrupted"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*bounds_cmd) return run_bounds(bounds, out);
    if (*covers_cmd) return run_covers(covers, out);
    if (*simulate_cmd) return run_simulate(simulate, out, err);
    if (*coupling_cmd) return run_verify_coupling(verify, out, err);
    return run_verify_dependency(verify, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const KindError& e) {
    err << "kind error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ScaleError& e) {
    err << "scale error: " << e.what() << '\n';
    return kExitScale;
  } catch (const nlohmann::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerification;
  }
}

}  // namespace graphdep::cli

#include "graphdep/io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "graphdep/errors.hpp"

namespace graphdep {

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

const Json& field(const Json& json, const char* key, const std::string& where) {
  if (!json.is_object() || !json.contains(key)) throw InputError(where + ": missing field \"" + key + "\"");
  return json.at(key);
}

int int_field(const Json& json, const char* key, const std::string& where) {
  const auto& v = field(json, key, where);
  if (!v.is_number_integer()) throw InputError(where + ": field \"" + key + "\" must be an integer");
  return v.get<int>();
}

double number(const Json& json, const std::string& where) {
  if (!json.is_number()) throw InputError(where + " must be a finite number");
  return json.get<double>();
}

Rational rational_from_json(const Json& json, const std::string& where) {
  if (json.is_string()) return parse_rational(json.get<std::string>());
  if (json.is_number()) return parse_rational(json.dump());
  throw InputError(where + " must be a number or a \"p/q\" string");
}

std::vector<Rational> rational_list(const Json& json, const std::string& where) {
  if (!json.is_array()) throw InputError(where + " must be a list");
  std::vector<Rational> out;
  for (std::size_t j = 0; j < json.size(); ++j) out.push_back(rational_from_json(json[j], where + "[" + std::to_string(j) + "]"));
  return out;
}

std::vector<int> int_list(const Json& json, const std::string& where) {
  if (!json.is_array()) throw InputError(where + " must be a list");
  std::vector<int> out;
  for (const auto& v : json) {
    if (!v.is_number_integer()) throw InputError(where + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json optional_rational(const std::optional<Rational>& value) {
  return value ? Json(to_string(*value)) : Json(nullptr);
}

Json blocks_to_json(const BlockPartition& blocks) {
  return Json{{"n", blocks.n}, {"m", blocks.m}, {"blocks", blocks.blocks}};
}

Json trees_to_json(const OrderedTree& tree) {
  std::vector<int> parent_labels;
  for (int pos = 1; pos <= tree.size(); ++pos) {
    parent_labels.push_back(tree.parent_of(pos) == 0 ? 0 : tree.label(tree.parent_of(pos)));
  }
  return Json{{"order", tree.labels}, {"parent", parent_labels}};
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Graph graph_from_json(const Json& json) {
  const std::string where = "graph";
  const int n = int_field(json, "n", where);
  if (n < 1) throw InputError("graph: n must be at least 1");
  std::vector<std::pair<int, int>> edges;
  const auto& list = json.contains("edges") ? json.at("edges") : Json::array();
  if (!list.is_array()) throw InputError("graph: \"edges\" must be a list of pairs");
  for (std::size_t j = 0; j < list.size(); ++j) {
    const auto& e = list[j];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw InputError("graph: edge " + std::to_string(j + 1) + " is not a pair of integers");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return build_graph(n, edges);
}

Graph parse_graph(std::string_view text) {
  const std::string body = trim(text);
  if (body.empty()) throw InputError("graph input is empty");
  if (body.front() == '{') return graph_from_json(parse_json(body));

  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string content = trim(line);
    if (content.empty()) continue;
    std::istringstream fields(content);
    const std::string where = "edge list line " + std::to_string(line_number);
    if (n < 0) {
      if (!(fields >> n) || !(fields >> std::ws).eof()) throw InputError(where + ": expected the vertex count");
      if (n < 1) throw InputError(where + ": vertex count must be at least 1");
      continue;
    }
    int u = 0, v = 0;
    if (!(fields >> u >> v) || !(fields >> std::ws).eof()) throw InputError(where + ": expected two vertex labels");
    if (u == v) throw InputError(where + ": self-loop at vertex " + std::to_string(u));
    if (u < 1 || v < 1 || u > n || v > n) throw InputError(where + ": vertex outside [1, " + std::to_string(n) + "]");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw InputError("edge list has no vertex count");
  return build_graph(n, edges);
}

Json graph_to_json(const Graph& graph) {
  Json edges = Json::array();
  for (const auto& e : graph.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", graph.order()}, {"edges", edges}};
}

LipschitzProfile parse_profile(std::string_view spec, int n) {
  const std::string text = trim(spec);
  constexpr std::string_view uniform = "uniform:";
  std::vector<Rational> values;
  if (text.rfind(uniform, 0) == 0) {
    values.assign(n, parse_rational(text.substr(uniform.size())));
  } else {
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) values.push_back(parse_rational(trim(item)));
    if (static_cast<int>(values.size()) != n) {
      throw InputError("Lipschitz profile has " + std::to_string(values.size()) + " entries but the graph has " +
                       std::to_string(n) + " vertices");
    }
  }
  for (const auto& c : values) {
    if (c < 0) throw InputError("Lipschitz coefficients must be nonnegative");
  }
  return LipschitzProfile(std::move(values));
}

Json cover_to_json(const WeightedCover& cover) {
  Json parts = Json::array();
  for (const auto& p : cover.parts) {
    parts.push_back({{"vertices", p.vertices}, {"weight", to_string(p.weight)}});
  }
  return Json{{"kind", to_string(cover.kind)}, {"parts", parts}};
}

Json cover_solution_to_json(const CoverSolution& solution, std::string_view quantity) {
  Json out;
  out["quantity"] = quantity;
  out["objective"] = solution.objective;
  out["objective_exact"] = optional_rational(solution.objective_exact);
  out["value"] = solution.value;
  out["value_exact"] = optional_rational(solution.value_exact);
  out["method"] = to_string(solution.method);
  out["optimality"] = to_string(solution.optimality);
  out["cover"] = cover_to_json(solution.cover);
  return out;
}

Json bound_report_to_json(const BoundReport& r) {
  Json out;
  out["method"] = to_string(r.method);
  out["applicable"] = r.applicable;
  if (r.applicable) {
    out["denominator"] = r.denominator.value;
    if (r.denominator.exact) out["denominator_exact"] = to_string(*r.denominator.exact);
    out["t"] = r.t;
    out["bound"] = r.bound;
    out["valid_under"] = to_string(r.valid_under);
    if (r.optimality) out["optimality"] = to_string(*r.optimality);
    if (r.cover) {
      out["witness"] = cover_to_json(*r.cover);
    } else if (r.blocks) {
      out["witness"] = blocks_to_json(*r.blocks);
    } else if (r.trees) {
      out["witness"] = trees_to_json(*r.trees);
    }
  } else {
    out["t"] = r.t;
  }
  if (!r.reason.empty()) out["note"] = r.reason;
  return out;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

std::string bound_reports_to_csv(const std::vector<BoundReport>& reports) {
  std::string out = "method,applicable,t,denominator,denominator_exact,bound,valid_under,optimality,note\n";
  for (const auto& r : reports) {
    out += to_string(r.method) + ',' + (r.applicable ? "true" : "false") + ',' + format_double(r.t) + ',';
    if (r.applicable) {
      out += format_double(r.denominator.value) + ',' + (r.denominator.exact ? to_string(*r.denominator.exact) : "") +
             ',' + format_double(r.bound) + ',' + to_string(r.valid_under) + ',' +
             (r.optimality ? to_string(*r.optimality) : "");
    } else {
      out += ",,,,";
    }
    out += ',' + csv_field(r.reason) + '\n';
  }
  return out;
}

LatentDistribution latent_from_json(const Json& json) {
  const std::string where = "latent";
  if (!json.is_object()) throw InputError("latent distribution must be an object");
  const auto& kind = field(json, "dist", where);
  if (!kind.is_string()) throw InputError("latent: \"dist\" must be a string");
  const std::string name = kind.get<std::string>();
  if (name == "uniform") {
    return LatentDistribution::uniform(number(field(json, "lo", where), "latent lo"),
                                       number(field(json, "hi", where), "latent hi"));
  }
  if (name == "bernoulli") return LatentDistribution::bernoulli(number(field(json, "p", where), "latent p"));
  if (name == "constant") return LatentDistribution::constant(number(field(json, "value", where), "latent value"));
  if (name == "discrete") {
    std::vector<double> values, probs;
    for (const auto& v : field(json, "values", where)) values.push_back(number(v, "latent value"));
    for (const auto& p : field(json, "probs", where)) probs.push_back(number(p, "latent probability"));
    return LatentDistribution::discrete(std::move(values), std::move(probs));
  }
  throw InputError("latent: unknown distribution \"" + name + "\" (uniform, bernoulli, discrete, constant)");
}

namespace {

Combine combine_from_json(const Json& json, const std::string& where) {
  if (!json.is_string()) throw InputError(where + " must be one of mean, sum, max, min");
  auto c = parse_combine(json.get<std::string>());
  if (!c) throw InputError(where + ": unknown combiner \"" + json.get<std::string>() + "\"");
  return *c;
}

}  // namespace

SamplerSpec sampler_spec_from_json(const Json& json) {
  const std::string where = "sampler spec";
  if (!json.is_object()) throw InputError("sampler spec must be a JSON object");
  const auto& model = field(json, "model", where);
  Statistic statistic = Statistic::kSum;
  if (json.contains("statistic")) {
    const auto& s = json.at("statistic");
    auto parsed = s.is_string() ? parse_statistic(s.get<std::string>()) : std::nullopt;
    if (!parsed) throw InputError("sampler spec: statistic must be \"sum\" or \"max\"");
    statistic = *parsed;
  }
  if (model == "block_factor") {
    return block_factor_spec(int_field(json, "n", where), int_field(json, "k", where),
                             latent_from_json(field(json, "latent", where)),
                             combine_from_json(field(json, "g", where), "block factor g"), statistic);
  }
  if (model != "latent_graph") throw InputError("sampler spec: model must be \"latent_graph\" or \"block_factor\"");

  SamplerSpec spec;
  spec.model = SamplerModel::kLatentGraph;
  spec.statistic = statistic;
  spec.graph = graph_from_json(field(json, "graph", where));
  const int n = spec.graph.order();
  if (json.contains("vertex_latents")) {
    const auto& list = json.at("vertex_latents");
    if (!list.is_array() || static_cast<int>(list.size()) != n) throw InputError("sampler spec: one vertex latent (or null) per vertex");
    for (const auto& v : list) spec.vertex_latents.push_back(v.is_null() ? std::nullopt : std::optional(latent_from_json(v)));
  } else if (json.contains("vertex_latent")) {
    spec.vertex_latents.assign(n, latent_from_json(json.at("vertex_latent")));
  } else {
    spec.vertex_latents.assign(n, std::nullopt);
  }
  if (json.contains("edge_latent")) {
    const auto latent = latent_from_json(json.at("edge_latent"));
    for (const auto& e : spec.graph.edges()) {
      spec.factors.push_back({e.u, e.v});
      spec.factor_latents.push_back(latent);
    }
  }
  if (json.contains("factors")) {
    for (const auto& f : json.at("factors")) {
      spec.factors.push_back(int_list(field(f, "vertices", "factor"), "factor vertices"));
      spec.factor_latents.push_back(latent_from_json(field(f, "latent", "factor")));
    }
  }
  const auto& emit = json.contains("emit") ? json.at("emit") : Json("mean");
  if (emit.is_array()) {
    for (const auto& e : emit) spec.emit.push_back(combine_from_json(e, "emit"));
  } else {
    spec.emit.push_back(combine_from_json(emit, "emit"));
  }
  return spec;
}

Json validation_to_json(const ValidationTable& table, std::uint64_t seed, std::uint64_t n) {
  Json rows = Json::array();
  for (const auto& v : table.rows) {
    rows.push_back({{"method", to_string(v.bound.method)},
                    {"t", v.estimate.t},
                    {"denominator", v.bound.denominator.value},
                    {"bound", v.bound.bound},
                    {"p_hat", v.estimate.p_hat},
                    {"ci_upper", v.estimate.ci_upper},
                    {"hits", v.estimate.hits},
                    {"verdict", v.pass ? "PASS" : "FAIL"},
                    {"valid_under", to_string(v.bound.valid_under)}});
  }
  return Json{{"seed", seed},
              {"N", n},
              {"mean", table.mean.value},
              {"mean_margin", table.mean.margin},
              {"mean_analytic", table.mean.analytic},
              {"sound", table.sound()},
              {"rows", rows}};
}

std::string validation_to_csv(const ValidationTable& table, std::uint64_t seed, std::uint64_t n) {
  std::string out = "method,t,denominator,bound,p_hat,ci_upper,verdict,seed,N\n";
  for (const auto& v : table.rows) {
    out += to_string(v.bound.method) + ',' + format_double(v.estimate.t) + ',' +
           format_double(v.bound.denominator.value) + ',' + format_double(v.bound.bound) + ',' +
           format_double(v.estimate.p_hat) + ',' + format_double(v.estimate.ci_upper) + ',' +
           (v.pass ? "PASS" : "FAIL") + ',' + std::to_string(seed) + ',' + std::to_string(n) + '\n';
  }
  return out;
}

namespace {

LatentTreeSpec::Emit emit_table(const Json& json, const Graph& g, const std::vector<int>& alphabet) {
  // json: per vertex, a list of {"inputs": [vertex latent, edge latents..], "value": x}.
  if (!json.is_array() || static_cast<int>(json.size()) != g.order()) {
    throw InputError("joint spec: emit table needs one entry list per vertex");
  }
  std::vector<std::map<std::vector<int>, int>> table(g.order());
  for (int v = 0; v < g.order(); ++v) {
    for (const auto& entry : json[v]) {
      const int value = int_field(entry, "value", "emit entry");
      if (value < 0 || value >= alphabet[v]) throw InputError("joint spec: emit value outside the alphabet");
      table[v][int_list(field(entry, "inputs", "emit entry"), "emit inputs")] = value;
    }
  }
  return [table](int vertex, int vertex_latent, std::span<const int> edges) {
    std::vector<int> key{vertex_latent};
    key.insert(key.end(), edges.begin(), edges.end());
    const auto& t = table[vertex - 1];
    const auto it = t.find(key);
    if (it == t.end()) throw InputError("joint spec: emit table has no entry for vertex " + std::to_string(vertex));
    return it->second;
  };
}

LipschitzFunction function_from_json(const Json& json, const std::vector<int>& radix) {
  if (json.contains("function") && !(json.at("function").is_string() && json.at("function") == "sum")) {
    const auto& f = json.at("function");
    auto values = rational_list(field(f, "table", "function"), "function table");
    std::size_t size = 1;
    for (int r : radix) size *= r;
    if (values.size() != size) throw InputError("function table must list one value per assignment");
    auto out = LipschitzFunction::tabulate(
        radix, [](const Assignment&) { return Rational(0); }, LipschitzProfile::uniform(static_cast<int>(radix.size()), 0));
    out.values = std::move(values);
    out.c = tight_profile(out);
    return out;
  }
  return LipschitzFunction::coordinate_sum(radix);
}

}  // namespace

JointSpec joint_spec_from_json(const Json& json) {
  const std::string where = "joint spec";
  if (!json.is_object()) throw InputError("joint spec must be a JSON object");
  JointSpec out;
  if (json.contains("pmf")) {
    Graph g = graph_from_json(field(json, "graph", where));
    auto radix = int_list(field(json, "spaces", where), "spaces");
    if (static_cast<int>(radix.size()) != g.order()) throw InputError("joint spec: one space size per vertex");
    if (static_cast<int>(radix.size()) > kMaxJointCoordinates) throw ScaleError("exact joints are limited to 8 coordinates");
    for (int r : radix) {
      if (r < 1) throw InputError("joint spec: space sizes must be positive");
      if (r > kMaxAlphabet) throw ScaleError("exact joints are limited to alphabets of 6 symbols");
    }
    std::size_t size = 1;
    for (int r : radix) size *= r;
    std::vector<Rational> pmf(size, Rational(0));
    const auto& entries = json.at("pmf");
    if (!entries.is_array()) throw InputError("joint spec: pmf must be a list of {x, p}");
    for (std::size_t j = 0; j < entries.size(); ++j) {
      const std::string at = "pmf entry " + std::to_string(j + 1);
      auto x = int_list(field(entries[j], "x", at), at + " x");
      if (x.size() != radix.size()) throw InputError(at + ": assignment has the wrong length");
      std::size_t idx = 0;
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] < 0 || x[k] >= radix[k]) throw InputError(at + ": value outside its space");
        idx = idx * radix[k] + x[k];
      }
      pmf[idx] += rational_from_json(field(entries[j], "p", at), at + " p");
    }
    out.joint = FiniteJoint(radix, std::move(pmf), std::move(g));
  } else {
    LatentTreeSpec spec;
    spec.graph = graph_from_json(field(json, "tree", where));
    spec.alphabet = int_list(field(json, "alphabets", where), "alphabets");
    if (json.contains("latents")) {
      const auto& latents = json.at("latents");
      if (latents.contains("vertex")) {
        for (const auto& v : latents.at("vertex")) spec.vertex_latents.push_back(rational_list(v, "vertex latent"));
      }
      if (latents.contains("edge")) {
        for (const auto& e : latents.at("edge")) spec.edge_latents.push_back(rational_list(e, "edge latent"));
      }
    }
    const auto& emit = json.contains("emit") ? json.at("emit") : Json("sum_mod");
    if (emit.is_string() && emit == "sum_mod") {
      spec.emit = sum_mod_emit(spec.alphabet);
    } else if (emit.is_object() && emit.contains("table")) {
      if (static_cast<int>(spec.alphabet.size()) != spec.graph.order()) throw InputError("joint spec: one alphabet per vertex");
      spec.emit = emit_table(emit.at("table"), spec.graph, spec.alphabet);
    } else {
      throw InputError("joint spec: emit must be \"sum_mod\" or {\"table\": ...}");
    }
    out.joint = build_tree_joint(spec);
  }
  out.f = function_from_json(json, out.joint.radix());
  if (json.contains("c")) {
    auto c = rational_list(json.at("c"), "c");
    if (static_cast<int>(c.size()) != out.joint.size()) throw InputError("joint spec: c needs one entry per coordinate");
    out.f.c = LipschitzProfile(std::move(c));
  }
  return out;
}

}  // namespace graphdep

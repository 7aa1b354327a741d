#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "graphdep/cli.hpp"
#include "graphdep/errors.hpp"
#include "graphdep/io.hpp"
#include "oracles.hpp"

using namespace graphdep;

namespace {

const std::string kData = GRAPHDEP_TEST_DATA;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "graphdep");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return kData + "/" + name; }

std::filesystem::path scratch_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("graphdep_test_" + name);
  std::ofstream(path, std::ios::binary) << contents;
  return path;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::string field;
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') {
        quoted = !quoted;
      } else if (ch == ',' && !quoted) {
        row.push_back(field);
        field.clear();
      } else {
        field += ch;
      }
    }
    row.push_back(field);
    rows.push_back(row);
  }
  return rows;
}

std::map<std::string, std::string> row_of(const std::vector<std::vector<std::string>>& rows, const std::string& method) {
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r][0] != method) continue;
    std::map<std::string, std::string> out;
    for (std::size_t k = 0; k < rows[0].size(); ++k) out[rows[0][k]] = rows[r][k];
    return out;
  }
  return {};
}

}  // namespace

TEST_CASE("bounds on the triangle plus six isolated vertices") {
  auto r = invoke({"bounds", "--graph", data("ex9.json"), "--c", "uniform:1", "--t", "3", "--methods", "janson,decomposable"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 3);
  const auto janson = row_of(rows, "janson");
  const auto decomposable = row_of(rows, "decomposable");
  CHECK(janson.at("denominator_exact") == "27");
  CHECK(std::stod(decomposable.at("denominator")) <= 20.25);
  // applicable methods come first, tightest bound first
  CHECK(rows[1][0] == "decomposable");

  auto json = invoke({"bounds", "--graph", data("ex9.json"), "--t", "3", "--format", "json"});
  REQUIRE(json.code == 0);
  const auto parsed = Json::parse(json.out);
  CHECK(parsed.at("bounds").size() == 7);
  bool annotated = false;
  for (const auto& b : parsed.at("bounds")) {
    if (b.at("method") == "mcdiarmid") annotated = b.contains("note");
  }
  CHECK(annotated);
}

TEST_CASE("covers on a tree") {
  auto r = invoke({"covers", "chi-f", "--graph", data("tree.json")});
  REQUIRE(r.code == 0);
  const auto json = Json::parse(r.out);
  CHECK(json.at("value_exact") == "2");
  CHECK(json.at("optimality") == "exact");

  auto arboricity = invoke({"covers", "a-f", "--graph", data("tree.json"), "--format", "csv"});
  REQUIRE(arboricity.code == 0);
  CHECK(row_of(csv_rows(arboricity.out), "a-f").at("value_exact") == "1");

  auto d = invoke({"covers", "D", "--graph", data("tree.json"), "--c", "uniform:1"});
  REQUIRE(d.code == 0);
  // the whole tree as one part costs 4n - 3k = 21; splitting does better
  const auto dj = Json::parse(d.out);
  CHECK(dj.at("value").get<double>() <= 21);
  CHECK(dj.at("cover").at("kind") == "forest");
}

TEST_CASE("verify exits 0 on a correct construction and 3 on a failure") {
  auto ok = invoke({"verify", "coupling", "--spec", data("p2xor.json")});
  REQUIRE(ok.code == 0);
  const auto report = Json::parse(ok.out);
  CHECK(report.at("max_deviation") == "0");
  CHECK(report.at("ok") == true);

  auto corrupted = invoke({"verify", "coupling", "--spec", data("p2xor.json"), "--variant", "corrupted"});
  CHECK(corrupted.code == cli::kExitVerification);
  CHECK(Json::parse(corrupted.out).at("ok") == false);
  CHECK_FALSE(corrupted.err.empty());

  auto edgeless = scratch_file("edgeless.txt", "2\n");
  auto dependency = invoke({"verify", "dependency", "--spec", data("p2xor.json"), "--graph", edgeless.string()});
  CHECK(dependency.code == cli::kExitVerification);
  CHECK(Json::parse(dependency.out).at("dependency").at("deviation") == "1/8");

  auto declared = invoke({"verify", "dependency", "--spec", data("p2xor.json")});
  CHECK(declared.code == 0);
}

TEST_CASE("raw and latent joint forms agree") {
  const auto latent = joint_spec_from_json(Json::parse(read_text_file(data("p2xor.json"))));
  const auto raw = joint_spec_from_json(Json::parse(R"({
    "graph": {"n": 2, "edges": [[1, 2]]}, "spaces": [2, 2],
    "pmf": [{"x": [0, 0], "p": "5/16"}, {"x": [0, 1], "p": "3/16"},
            {"x": [1, 0], "p": "3/16"}, {"x": [1, 1], "p": "5/16"}]})"));
  CHECK(latent.joint.pmf() == raw.joint.pmf());
  CHECK(latent.f.values == raw.f.values);
  CHECK(latent.f.c == LipschitzProfile::uniform(2, 1));
}

TEST_CASE("graph inputs") {
  CHECK(parse_graph("3\n1 2\n2 3") == path_graph(3));
  CHECK(parse_graph("# comment\n3  # vertices\n\n2 3\n1 2\n") == path_graph(3));
  CHECK(parse_graph(R"({"n": 3, "edges": [[2, 1], [3, 2]]})") == path_graph(3));
  CHECK(parse_graph(read_text_file(data("path3.txt"))) == path_graph(3));

  CHECK_THROWS_WITH_AS(parse_graph("3\n1 1\n"), doctest::Contains("self-loop"), InputError);
  CHECK_THROWS_WITH_AS(parse_graph("3\n1 4\n"), doctest::Contains("outside"), InputError);
  CHECK_THROWS_WITH_AS(parse_graph("3\n1\n"), doctest::Contains("line 2"), InputError);
  CHECK_THROWS_WITH_AS(parse_graph("{\"n\": 3, \"edges\": [[1, 2]"), doctest::Contains("line 1"), InputError);
  CHECK_THROWS_AS(parse_graph(""), InputError);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = oracle::random_graph(rng, n, 0.4);
    CHECK(graph_from_json(Json::parse(graph_to_json(g).dump())) == g);
    std::string edge_list = std::to_string(n) + "\n";
    for (const auto& e : g.edges()) edge_list += std::to_string(e.v) + " " + std::to_string(e.u) + "\n";
    CHECK(parse_graph(edge_list) == g);
  }
}

TEST_CASE("profile inputs") {
  CHECK(parse_profile("uniform:2.5", 4) == LipschitzProfile::uniform(4, Rational(5, 2)));
  CHECK(parse_profile("1, 1/2,3", 3) == LipschitzProfile(std::vector<Rational>{1, Rational(1, 2), 3}));
  CHECK_THROWS_WITH_AS(parse_profile("1,2", 3), doctest::Contains("2 entries"), InputError);
  CHECK_THROWS_AS(parse_profile("1,-2", 2), InputError);

  auto short_list = invoke({"bounds", "--graph", data("tree.json"), "--c", "1,1,1", "--t", "1"});
  CHECK(short_list.code == cli::kExitInput);
  CHECK(short_list.out.empty());
  CHECK(short_list.err.find("entries") != std::string::npos);
}

TEST_CASE("exit codes and diagnostics") {
  CHECK(invoke({}).code == cli::kExitInput);
  CHECK(invoke({"bounds", "--graph", data("tree.json")}).code == cli::kExitInput);
  CHECK(invoke({"bounds", "--graph", data("tree.json"), "--t", "-1"}).code == cli::kExitInput);
  CHECK(invoke({"bounds", "--graph", data("tree.json"), "--t", "1", "--methods", "chernoff"}).code == cli::kExitInput);
  CHECK(invoke({"simulate", "--spec", data("block_factor.json")}).code == cli::kExitInput);
  CHECK(invoke({"covers", "chi-f", "--graph", data("missing.json")}).code == cli::kExitInput);

  auto malformed = scratch_file("malformed.json", "{\"n\": 3,\n \"edges\": [[1, 2],\n");
  auto r = invoke({"covers", "chi-f", "--graph", malformed.string()});
  CHECK(r.code == cli::kExitInput);
  CHECK(r.err.find("line 2") != std::string::npos);
  CHECK(r.out.empty());

  // nine coordinates exceed the exact-joint cap
  Json big{{"graph", {{"n", 9}, {"edges", Json::array()}}}, {"spaces", std::vector<int>(9, 2)},
           {"pmf", Json::array({{{"x", std::vector<int>(9, 0)}, {"p", 1}}})}};
  auto scale = invoke({"verify", "dependency", "--spec", scratch_file("big.json", big.dump()).string()});
  CHECK(scale.code == cli::kExitScale);

  auto cyclic = invoke({"bounds", "--graph", data("ex9.json"), "--t", "1", "--methods", "tree"});
  REQUIRE(cyclic.code == 0);
  CHECK(row_of(csv_rows(cyclic.out), "tree").at("applicable") == "false");

  auto bad_latent = scratch_file("bad_latent.json", R"({"model": "block_factor", "n": 4, "k": 2,
    "latent": {"dist": "gaussian"}, "g": "mean"})");
  auto latent = invoke({"simulate", "--spec", bad_latent.string(), "--seed", "1", "--N", "10"});
  CHECK(latent.code == cli::kExitInput);
  CHECK(latent.err.find("gaussian") != std::string::npos);
}

TEST_CASE("simulate output is valid and byte-identical across runs and workers") {
  const std::vector<std::string> base{"simulate", "--spec", data("forest_uniform.json"), "--seed", "42", "--N", "30000"};
  auto with = [&](std::vector<std::string> extra) {
    auto args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return invoke(args);
  };
  const auto first = with({"--threads", "1"});
  REQUIRE(first.code == 0);
  CHECK(first.out == with({"--threads", "1"}).out);
  CHECK(first.out == with({"--threads", "4"}).out);

  const auto rows = csv_rows(first.out);
  REQUIRE(rows.size() > 1);
  CHECK(rows[0] == std::vector<std::string>{"method", "t", "denominator", "bound", "p_hat", "ci_upper", "verdict", "seed", "N"});
  for (std::size_t r = 1; r < rows.size(); ++r) {
    CHECK(rows[r].size() == rows[0].size());
    CHECK(rows[r][6] == "PASS");
  }

  const auto json = with({"--format", "json", "--threads", "3"});
  REQUIRE(json.code == 0);
  const auto parsed = Json::parse(json.out);
  CHECK(parsed.at("rows").size() == rows.size() - 1);
  CHECK(parsed.at("sound") == true);

  const auto path = std::filesystem::temp_directory_path() / "graphdep_test_simulate.csv";
  auto to_file = with({"--output", path.string()});
  REQUIRE(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(read_text_file(path) == first.out);
}

TEST_CASE("explicit grids and the reference line") {
  auto r = invoke({"simulate", "--spec", data("shared_k10.json"), "--seed", "5", "--N", "20000", "--t-grid", "1,2,3",
                   "--independent"});
  // McDiarmid is only a reference line on K10, so its failures do not fail the run
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(r.out);
  bool reference_failed = false;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (rows[k][0] == "mcdiarmid" && rows[k][6] == "FAIL") reference_failed = true;
    if (rows[k][0] != "mcdiarmid") CHECK(rows[k][6] == "PASS");
  }
  CHECK(reference_failed);
  CHECK(invoke({"simulate", "--spec", data("shared_k10.json"), "--seed", "5", "--t-grid", "1,x"}).code == cli::kExitInput);
}

TEST_CASE("csv fields and number formatting") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"x\"") == "\"say \"\"x\"\"\"");
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(27) == "27");
  for (double x : {1.0 / 3, 2.0 / 7, 1e-300, 123456.789}) CHECK(std::stod(format_double(x)) == x);
}

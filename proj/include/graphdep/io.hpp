#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "graphdep/bounds.hpp"
#include "graphdep/coupling.hpp"
#include "graphdep/covers.hpp"
#include "graphdep/graph.hpp"
#include "graphdep/montecarlo.hpp"
#include "graphdep/profile.hpp"

namespace graphdep {

using Json = nlohmann::ordered_json;

/// Reads a whole file; InputError naming the path when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// Graph from JSON {"n": .., "edges": [[u, v], ..]} or from an edge list
/// (first line n, then one "u v" pair per line, '#' starts a comment).
/// The format is chosen by the first non-blank character.
Graph parse_graph(std::string_view text);
Graph graph_from_json(const Json& json);
Json graph_to_json(const Graph& graph);

/// "uniform:x" or a comma-separated list; InputError on a length mismatch.
LipschitzProfile parse_profile(std::string_view spec, int n);

Json cover_to_json(const WeightedCover& cover);
Json cover_solution_to_json(const CoverSolution& solution, std::string_view quantity);

Json bound_report_to_json(const BoundReport& report);
std::string bound_reports_to_csv(const std::vector<BoundReport>& reports);

LatentDistribution latent_from_json(const Json& json);
SamplerSpec sampler_spec_from_json(const Json& json);

Json validation_to_json(const ValidationTable& table, std::uint64_t seed, std::uint64_t n);
std::string validation_to_csv(const ValidationTable& table, std::uint64_t seed, std::uint64_t n);

/// An exact joint with the statistic to verify against it.
struct JointSpec {
  FiniteJoint joint;
  LipschitzFunction f;
};

/// Latent form {"tree", "alphabets", "latents": {"vertex", "edge"}, "emit",
/// "function"?, "c"?} or raw form {"graph", "spaces", "pmf": [{"x", "p"}]}.
/// Without "c" the tight profile of the function is used.
JointSpec joint_spec_from_json(const Json& json);

/// CSV field, quoted when it holds a comma, quote or newline.
std::string csv_field(std::string_view text);
/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

}  // namespace graphdep

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphdep/graph.hpp"
#include "graphdep/lp.hpp"
#include "graphdep/profile.hpp"
#include "graphdep/rational.hpp"

namespace graphdep {

enum class CoverKind { kIndependent, kForest };

struct CoverPart {
  std::vector<int> vertices;  // sorted, 1-based
  Rational weight;
};

/// A family {(S_k, w_k)}; a valid cover has every vertex covered with total
/// weight exactly one and every part of the declared kind.
struct WeightedCover {
  CoverKind kind = CoverKind::kForest;
  std::vector<CoverPart> parts;
};

struct CoverViolation {
  enum class Type { kCoverage, kNotIndependent, kNotForest, kEmptyPart, kNegativeWeight, kOutOfRange };
  Type type;
  int index;  // vertex for kCoverage, part index (0-based) otherwise
  std::string message;
};

/// Every vertex with coverage != 1 and every part that breaks its kind.
/// An empty result means the cover is valid.
std::vector<CoverViolation> validate_cover(const Graph& graph, const WeightedCover& cover);

VertexSet to_vertex_set(std::span<const int> vertices);
std::vector<int> to_vertices(VertexSet set);

bool is_independent(const Graph& graph, VertexSet set);
bool induces_forest(const Graph& graph, VertexSet set);

/// All nonempty independent sets (or only the maximal ones). Throws
/// ScaleError once more than `cap` sets are found.
std::vector<std::vector<int>> enumerate_independent_sets(const Graph& graph, std::size_t cap,
                                                         bool maximal_only = false);

/// All nonempty vertex sets that induce a forest. Throws ScaleError past `cap`.
std::vector<std::vector<int>> enumerate_induced_forests(const Graph& graph, std::size_t cap);

/// Square of forest_part_cost, exact. Throws KindError when graph[F] has a cycle.
Rational forest_part_cost_squared(const Graph& graph, std::span<const int> part, const LipschitzProfile& c);

/// sqrt( sum over edges {i,j} of graph[F] of (c_i + c_j)^2
///       + sum over trees T of graph[F] of (min_{i in T} c_i)^2 ).
double forest_part_cost(const Graph& graph, std::span<const int> part, const LipschitzProfile& c);

enum class CoverStrategy { kAuto, kEnumeratedLp, kColumnGeneration, kGreedy };
enum class CoverMethod { kEnumeratedLp, kColumnGeneration, kHeuristic };
enum class Optimality { kExact, kUpperBound };

struct CoverOptions {
  CoverStrategy strategy = CoverStrategy::kAuto;
  std::size_t enumeration_cap = std::size_t{1} << 17;
  /// Unit-cost LPs are solved in exact arithmetic up to this many vertices;
  /// above it the simplex runs in double and only the final basis is exact.
  int exact_vertex_limit = 15;
  /// Column generation prices by exhaustive search over at most this many
  /// family members, then falls back to local search.
  std::size_t pricing_budget = std::size_t{1} << 20;
  int column_generation_rounds = 400;
};

struct CoverSolution {
  /// For chi_f and a_f: sum of weights. For D: the minimized
  /// sum_k w_k * forest_part_cost(F_k); the denominator is value = objective^2.
  double objective = 0;
  std::optional<Rational> objective_exact;
  double value = 0;
  std::optional<Rational> value_exact;
  WeightedCover cover;
  CoverMethod method = CoverMethod::kEnumeratedLp;
  Optimality optimality = Optimality::kExact;
  /// LP duals (one per vertex) of the final master problem; for enumerated
  /// solves they certify optimality.
  std::vector<double> duals;
};

CoverSolution fractional_chromatic_number(const Graph& graph, const CoverOptions& options = {});
CoverSolution fractional_vertex_arboricity(const Graph& graph, const CoverOptions& options = {});

/// Minimum of sum_k w_k forest_part_cost(F_k) over exact fractional forest
/// covers; value holds the squared optimum D(G, c).
CoverSolution optimize_D(const Graph& graph, const LipschitzProfile& c, const CoverOptions& options = {});

/// sum_k w_k * forest_part_cost(F_k) for an arbitrary forest cover.
double cover_objective(const Graph& graph, const WeightedCover& cover, const LipschitzProfile& c);
/// Exact version, std::nullopt when some part cost is irrational.
std::optional<Rational> cover_objective_exact(const Graph& graph, const WeightedCover& cover,
                                              const LipschitzProfile& c);

/// Turns a >= 1 cover into an exact cover by deleting surplus vertices from
/// parts (splitting a part when only part of its weight is surplus). Parts of
/// a monotone family stay in the family and part costs never increase.
WeightedCover normalize_cover(const WeightedCover& cover, int n);

std::string to_string(CoverKind kind);
std::string to_string(CoverMethod method);
std::string to_string(Optimality optimality);

}  // namespace graphdep

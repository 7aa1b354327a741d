#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graphdep/covers.hpp"
#include "graphdep/graph.hpp"
#include "graphdep/profile.hpp"
#include "graphdep/rational.hpp"

namespace graphdep {

enum class BoundMethod {
  kMcDiarmid,
  kJanson,
  kTree,
  kForest,
  kDecomposable,
  kMDependent,
  kMDependentPaulin,
};

enum class ValidUnder { kDependence, kIndependenceOnly };

/// The quantity under 2t^2 in exp(-2t^2 / denominator).
struct Denominator {
  double value = 0;
  std::optional<Rational> exact;
};

struct BoundReport {
  BoundMethod method = BoundMethod::kMcDiarmid;
  bool applicable = true;
  std::string reason;  // why the method was skipped, or a caveat when applicable
  Denominator denominator;
  double t = 0;
  double bound = 1;
  ValidUnder valid_under = ValidUnder::kDependence;
  std::optional<Optimality> optimality;  // decomposable and Janson only
  std::optional<WeightedCover> cover;
  std::optional<BlockPartition> blocks;
  std::optional<OrderedTree> trees;
};

/// exp(-2 t^2 / denominator), at most 1. Throws InputError for t < 0 and for
/// a non-positive denominator (an all-zero Lipschitz profile).
double tail_bound(double denominator, double t);

/// sum c_i^2.
Rational mcdiarmid_denominator(const LipschitzProfile& c);

struct CoverDenominator {
  Denominator denominator;
  CoverSolution solution;
};

/// chi_f(G) |c|^2 with the fractional colouring as witness.
CoverDenominator janson_denominator(const Graph& graph, const LipschitzProfile& c, const CoverOptions& options = {});

/// sum over trees of (min c over the tree)^2 + sum over edges (c_i + c_j)^2.
/// Throws KindError when the graph has a cycle.
Rational forest_denominator(const Graph& graph, const LipschitzProfile& c);

/// D(G, c) with its minimizing forest cover.
CoverDenominator decomposable_denominator(const Graph& graph, const LipschitzProfile& c,
                                          const CoverOptions& options = {});

enum class MDependentVariant { kMinBlock, kPaulin };

struct MDependentDenominator {
  Rational value;
  BlockPartition blocks;
};

/// With block sums S_1..S_p over the consecutive blocks of block_partition(n, m):
///   sum_{i<p} (S_i + S_{i+1})^2 + min_i S_i^2   (kMinBlock)
///   sum_{i<p} (S_i + S_{i+1})^2 + S_p^2         (kPaulin)
/// `override_blocks` replaces the uniform grouping after validation.
MDependentDenominator m_dependent_denominator(int n, int m, const LipschitzProfile& c, MDependentVariant variant,
                                              const std::optional<BlockPartition>& override_blocks = std::nullopt);

struct CompareOptions {
  /// Empty means every method.
  std::set<BoundMethod> methods;
  /// Adds McDiarmid as a reference line even when the graph has edges.
  bool independence_assumed = false;
  /// The statistic is a sum of the coordinates (enables Janson, and the
  /// decomposable bound without further assumptions).
  bool sum_statistic = true;
  /// Caller asserts that f is forest-decomposable (for non-sum statistics).
  bool assume_decomposable = false;
  std::optional<int> m;
  std::optional<BlockPartition> blocks;
  CoverOptions cover;
};

/// Applicable methods sorted by bound (ascending), then the skipped ones with
/// their reasons.
std::vector<BoundReport> compare_bounds(const Graph& graph, const LipschitzProfile& c, double t,
                                        const CompareOptions& options = {});

std::string to_string(BoundMethod method);
std::optional<BoundMethod> parse_bound_method(const std::string& name);
std::string to_string(ValidUnder valid_under);

}  // namespace graphdep

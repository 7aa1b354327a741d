#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "graphdep/bounds.hpp"
#include "graphdep/coupling.hpp"
#include "graphdep/graph.hpp"
#include "graphdep/profile.hpp"

namespace graphdep {

/// A latent law with bounded support, sampled by inversion from one uniform.
struct LatentDistribution {
  enum class Kind { kUniform, kBernoulli, kDiscrete, kConstant };

  Kind kind = Kind::kUniform;
  double lo = 0;  // uniform support
  double hi = 1;
  double p = 0.5;                // Bernoulli success probability
  std::vector<double> values;    // discrete support
  std::vector<double> probs;

  static LatentDistribution uniform(double lo, double hi);
  static LatentDistribution bernoulli(double p);
  static LatentDistribution discrete(std::vector<double> values, std::vector<double> probs);
  static LatentDistribution constant(double value);

  double draw(double u) const;
  double mean() const;
  double min() const;
  double max() const;
};

enum class Combine { kMean, kSum, kMax, kMin };
enum class Statistic { kSum, kMax };
enum class SamplerModel { kLatentGraph, kBlockFactor };

struct SamplerSpec {
  SamplerModel model = SamplerModel::kLatentGraph;
  Statistic statistic = Statistic::kSum;

  // Latent graph: X_v = emit_v(xi_v, {xi_F : v in F}) over cliques F of `graph`.
  Graph graph;
  std::vector<std::optional<LatentDistribution>> vertex_latents;  // nullopt: no own latent
  std::vector<std::vector<int>> factors;
  std::vector<LatentDistribution> factor_latents;
  std::vector<Combine> emit;

  // Block factor: X_i = g(Y_i, .., Y_{i+k-1}) with Y_j i.i.d.
  int n = 0;
  int k = 1;
  LatentDistribution block_latent;
  Combine g = Combine::kMean;
};

/// One latent per vertex (optional) and one per edge.
SamplerSpec latent_graph_spec(const Graph& graph, std::optional<LatentDistribution> vertex_latent,
                              std::optional<LatentDistribution> edge_latent, Combine emit,
                              Statistic statistic = Statistic::kSum);
SamplerSpec block_factor_spec(int n, int k, LatentDistribution latent, Combine g,
                              Statistic statistic = Statistic::kSum);

/// Validated, ready-to-draw form of a SamplerSpec. Coordinate v takes values
/// in [lower(v), upper(v)], so f is c-Lipschitz with c_v = upper(v) - lower(v).
class Sampler {
 public:
  /// Throws InputError for an ill-formed spec (unbounded or non-normalized
  /// latents, a factor that is not a clique, a vertex with no latent).
  explicit Sampler(SamplerSpec spec);

  const SamplerSpec& spec() const { return spec_; }
  int dimension() const { return dimension_; }
  const Graph& dependency_graph() const { return graph_; }
  /// k - 1 for block factors (at least 1); nullopt for latent graphs.
  std::optional<int> m() const;

  double lower(int v) const { return lower_[v - 1]; }
  double upper(int v) const { return upper_[v - 1]; }
  LipschitzProfile profile() const;
  /// max f - min f over the declared ranges.
  double statistic_range() const;

  /// Deterministic in (seed, index); x has dimension() entries.
  void draw(std::uint64_t seed, std::uint64_t index, std::span<double> x, std::uint16_t stream = 0) const;
  double statistic(std::span<const double> x) const;
  /// E f when every emit is a mean or sum and the statistic is a sum.
  std::optional<double> analytic_mean() const;

 private:
  SamplerSpec spec_;
  Graph graph_;
  int dimension_ = 0;
  std::vector<LatentDistribution> latents_;
  std::vector<std::vector<int>> sources_;  // latent ids feeding each coordinate
  std::vector<Combine> combine_;
  std::vector<double> lower_, upper_;
};

/// Rows of draws for sample indices first .. first + count - 1.
std::vector<std::vector<double>> sample(const Sampler& sampler, std::uint64_t seed, std::uint64_t first,
                                        std::uint64_t count);

/// Exact law of a sampler whose latents all have finite support, with each
/// coordinate's values relabeled 0, 1, .. in increasing order. Probabilities
/// are the exact binary values of the doubles, renormalized.
FiniteJoint exact_joint(const Sampler& sampler);

struct MonteCarloOptions {
  int threads = 0;  // 0: GRAPHDEP_THREADS, else the hardware concurrency
  double confidence = 0.99;
  std::uint64_t mean_pass_factor = 10;
  double mean_failure_probability = 1e-3;
};

/// Worker count from `requested`, then GRAPHDEP_THREADS, then the hardware.
int resolve_threads(int requested);

struct MeanEstimate {
  double value = 0;
  double margin = 0;  // Hoeffding half-width at mean_failure_probability; 0 if analytic
  bool analytic = true;
  std::uint64_t samples = 0;
};

MeanEstimate estimate_mean(const Sampler& sampler, std::uint64_t seed, std::uint64_t n,
                           const MonteCarloOptions& options = {});

struct TailEstimate {
  double t = 0;
  std::uint64_t n_samples = 0;
  std::uint64_t hits = 0;
  double p_hat = 0;
  double ci_upper = 1;
  std::uint64_t seed = 0;
};

/// Exact (Clopper-Pearson) one-sided upper limit for a binomial proportion.
double clopper_pearson_upper(std::uint64_t hits, std::uint64_t n, double confidence);

/// Counts f(X) >= mean - margin + t, which over-covers {f(X) - Ef >= t}
/// whenever the mean estimate is within its margin.
std::vector<TailEstimate> estimate_tails(const Sampler& sampler, std::span<const double> t_grid,
                                         std::uint64_t seed, std::uint64_t n, const MeanEstimate& mean,
                                         const MonteCarloOptions& options = {});
TailEstimate estimate_tail(const Sampler& sampler, double t, std::uint64_t seed, std::uint64_t n,
                           const MonteCarloOptions& options = {});

struct Verdict {
  BoundReport bound;
  TailEstimate estimate;
  bool pass = true;  // ci_upper <= bound
};

struct ValidationTable {
  MeanEstimate mean;
  std::vector<Verdict> rows;
  /// Every row of a method valid under dependence passes.
  bool sound() const;
  /// Some row fails (used for the reference-line negative control).
  bool any_fail() const;
};

/// compare_bounds on the sampler's graph and profile, then one verdict per
/// applicable method and t. Statistic and m are taken from the sampler.
ValidationTable validate_bounds(const Sampler& sampler, std::span<const double> t_grid, std::uint64_t seed,
                                std::uint64_t n, bool independence_reference = false,
                                const MonteCarloOptions& options = {});

/// `points` evenly spaced t up to where the tightest bound valid under
/// dependence reaches `floor_bound`.
std::vector<double> default_t_grid(const Sampler& sampler, int points = 10, double floor_bound = 1e-4);

/// Largest |sample correlation| over coordinate pairs more than `distance` apart.
double max_far_correlation(const Sampler& sampler, std::uint64_t seed, std::uint64_t n, int distance,
                           const MonteCarloOptions& options = {});

std::string to_string(Combine combine);
std::string to_string(Statistic statistic);
std::optional<Combine> parse_combine(const std::string& name);
std::optional<Statistic> parse_statistic(const std::string& name);

}  // namespace graphdep

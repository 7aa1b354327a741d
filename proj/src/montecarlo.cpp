#include "graphdep/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include <boost/math/special_functions/beta.hpp>

#include "graphdep/errors.hpp"
#include "graphdep/philox.hpp"

namespace graphdep {

namespace {

constexpr std::uint64_t kChunk = std::uint64_t{1} << 14;
constexpr std::size_t kMaxExactConfigurations = std::size_t{1} << 22;
constexpr std::uint16_t kTailStream = 0;
constexpr std::uint16_t kMeanStream = 1;

bool finite(double x) { return std::isfinite(x); }

void validate_latent(const LatentDistribution& d, const std::string& where) {
  using Kind = LatentDistribution::Kind;
  switch (d.kind) {
    case Kind::kUniform:
      if (!finite(d.lo) || !finite(d.hi) || d.lo > d.hi) throw InputError(where + ": uniform latent needs finite lo <= hi");
      break;
    case Kind::kBernoulli:
      if (!(d.p >= 0 && d.p <= 1)) throw InputError(where + ": Bernoulli probability outside [0, 1]");
      break;
    case Kind::kConstant:
      if (!finite(d.lo)) throw InputError(where + ": constant latent must be finite");
      break;
    case Kind::kDiscrete: {
      if (d.values.empty() || d.values.size() != d.probs.size()) {
        throw InputError(where + ": discrete latent needs matching nonempty values and probs");
      }
      double total = 0;
      for (std::size_t j = 0; j < d.values.size(); ++j) {
        if (!finite(d.values[j])) throw InputError(where + ": discrete latent has an unbounded value");
        if (!(d.probs[j] >= 0)) throw InputError(where + ": discrete latent has a negative probability");
        total += d.probs[j];
      }
      if (std::abs(total - 1) > 1e-12) throw InputError(where + ": discrete probabilities do not sum to 1");
      break;
    }
  }
}

double combine_values(Combine how, std::span<const double> xs) {
  switch (how) {
    case Combine::kMean: return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
    case Combine::kSum: return std::accumulate(xs.begin(), xs.end(), 0.0);
    case Combine::kMax: return *std::max_element(xs.begin(), xs.end());
    case Combine::kMin: return *std::min_element(xs.begin(), xs.end());
  }
  return 0;
}

// Runs fn(first, last) over fixed-size chunks of [0, n) and returns the
// per-chunk results in chunk order, independent of the worker count.
template <typename Result, typename Fn>
std::vector<Result> run_chunks(std::uint64_t n, int threads, Fn fn) {
  const std::uint64_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<Result> results(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      try {
        results[c] = fn(c * kChunk, std::min(n, (c + 1) * kChunk));
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int workers = static_cast<int>(std::min<std::uint64_t>(std::max(1, threads), std::max<std::uint64_t>(chunks, 1)));
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

CompareOptions compare_options(const Sampler& sampler, bool independence_reference) {
  CompareOptions opts;
  opts.independence_assumed = independence_reference;
  opts.sum_statistic = sampler.spec().statistic == Statistic::kSum;
  opts.m = sampler.m();
  return opts;
}

}  // namespace

LatentDistribution LatentDistribution::uniform(double lo, double hi) {
  LatentDistribution d;
  d.kind = Kind::kUniform;
  d.lo = lo;
  d.hi = hi;
  return d;
}

LatentDistribution LatentDistribution::bernoulli(double p) {
  LatentDistribution d;
  d.kind = Kind::kBernoulli;
  d.p = p;
  return d;
}

LatentDistribution LatentDistribution::discrete(std::vector<double> values, std::vector<double> probs) {
  LatentDistribution d;
  d.kind = Kind::kDiscrete;
  d.values = std::move(values);
  d.probs = std::move(probs);
  return d;
}

LatentDistribution LatentDistribution::constant(double value) {
  LatentDistribution d;
  d.kind = Kind::kConstant;
  d.lo = d.hi = value;
  return d;
}

double LatentDistribution::draw(double u) const {
  switch (kind) {
    case Kind::kUniform: return lo + (hi - lo) * u;
    case Kind::kBernoulli: return u < p ? 1.0 : 0.0;
    case Kind::kConstant: return lo;
    case Kind::kDiscrete: {
      double cumulative = 0;
      for (std::size_t j = 0; j + 1 < values.size(); ++j) {
        cumulative += probs[j];
        if (u < cumulative) return values[j];
      }
      return values.back();
    }
  }
  return 0;
}

double LatentDistribution::mean() const {
  switch (kind) {
    case Kind::kUniform: return (lo + hi) / 2;
    case Kind::kBernoulli: return p;
    case Kind::kConstant: return lo;
    case Kind::kDiscrete: {
      double m = 0;
      for (std::size_t j = 0; j < values.size(); ++j) m += values[j] * probs[j];
      return m;
    }
  }
  return 0;
}

double LatentDistribution::min() const {
  switch (kind) {
    case Kind::kBernoulli: return p < 1 ? 0.0 : 1.0;
    case Kind::kDiscrete: {
      double m = INFINITY;
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (probs[j] > 0) m = std::min(m, values[j]);
      }
      return m;
    }
    default: return lo;
  }
}

double LatentDistribution::max() const {
  switch (kind) {
    case Kind::kBernoulli: return p > 0 ? 1.0 : 0.0;
    case Kind::kDiscrete: {
      double m = -INFINITY;
      for (std::size_t j = 0; j < values.size(); ++j) {
        if (probs[j] > 0) m = std::max(m, values[j]);
      }
      return m;
    }
    default: return hi;
  }
}

SamplerSpec latent_graph_spec(const Graph& graph, std::optional<LatentDistribution> vertex_latent,
                              std::optional<LatentDistribution> edge_latent, Combine emit, Statistic statistic) {
  SamplerSpec spec;
  spec.model = SamplerModel::kLatentGraph;
  spec.statistic = statistic;
  spec.graph = graph;
  spec.vertex_latents.assign(graph.order(), vertex_latent);
  if (edge_latent) {
    for (const auto& e : graph.edges()) {
      spec.factors.push_back({e.u, e.v});
      spec.factor_latents.push_back(*edge_latent);
    }
  }
  spec.emit.assign(graph.order(), emit);
  return spec;
}

SamplerSpec block_factor_spec(int n, int k, LatentDistribution latent, Combine g, Statistic statistic) {
  SamplerSpec spec;
  spec.model = SamplerModel::kBlockFactor;
  spec.statistic = statistic;
  spec.n = n;
  spec.k = k;
  spec.block_latent = std::move(latent);
  spec.g = g;
  return spec;
}

Sampler::Sampler(SamplerSpec spec) : spec_(std::move(spec)) {
  if (spec_.model == SamplerModel::kBlockFactor) {
    if (spec_.n < 1 || spec_.k < 1) throw InputError("block factor needs n >= 1 and k >= 1");
    validate_latent(spec_.block_latent, "block latent");
    dimension_ = spec_.n;
    graph_ = spec_.k >= 2 ? m_dependence_graph(spec_.n, spec_.k - 1) : empty_graph(spec_.n);
    latents_.assign(spec_.n + spec_.k - 1, spec_.block_latent);
    for (int i = 0; i < spec_.n; ++i) {
      std::vector<int> window(spec_.k);
      std::iota(window.begin(), window.end(), i);
      sources_.push_back(std::move(window));
    }
    combine_.assign(spec_.n, spec_.g);
  } else {
    graph_ = spec_.graph;
    dimension_ = graph_.order();
    if (dimension_ < 1) throw InputError("latent graph spec needs at least one vertex");
    if (spec_.vertex_latents.empty()) spec_.vertex_latents.assign(dimension_, std::nullopt);
    if (static_cast<int>(spec_.vertex_latents.size()) != dimension_) {
      throw InputError("vertex latents must be listed for every vertex");
    }
    if (spec_.factors.size() != spec_.factor_latents.size()) throw InputError("one latent per factor is required");
    if (spec_.emit.size() == 1) spec_.emit.assign(dimension_, spec_.emit.front());
    if (static_cast<int>(spec_.emit.size()) != dimension_) throw InputError("emit must be listed for every vertex");
    sources_.resize(dimension_);
    for (int v = 1; v <= dimension_; ++v) {
      if (const auto& d = spec_.vertex_latents[v - 1]) {
        validate_latent(*d, "vertex " + std::to_string(v));
        sources_[v - 1].push_back(static_cast<int>(latents_.size()));
        latents_.push_back(*d);
      }
    }
    for (std::size_t f = 0; f < spec_.factors.size(); ++f) {
      auto members = spec_.factors[f];
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      const std::string where = "factor " + std::to_string(f + 1);
      if (members.empty()) throw InputError(where + " is empty");
      for (std::size_t a = 0; a < members.size(); ++a) {
        if (members[a] < 1 || members[a] > dimension_) throw InputError(where + " names a vertex out of range");
        for (std::size_t b = a + 1; b < members.size(); ++b) {
          if (!graph_.adjacent(members[a], members[b])) {
            throw InputError(where + " is not a clique of the graph: " + std::to_string(members[a]) + " and " +
                             std::to_string(members[b]) + " are not adjacent");
          }
        }
      }
      validate_latent(spec_.factor_latents[f], where);
      for (int v : members) sources_[v - 1].push_back(static_cast<int>(latents_.size()));
      latents_.push_back(spec_.factor_latents[f]);
    }
    for (int v = 1; v <= dimension_; ++v) {
      if (sources_[v - 1].empty()) throw InputError("vertex " + std::to_string(v) + " has no latent");
    }
    combine_ = spec_.emit;
  }

  lower_.resize(dimension_);
  upper_.resize(dimension_);
  std::vector<double> lo, hi;
  for (int v = 0; v < dimension_; ++v) {
    lo.clear();
    hi.clear();
    for (int id : sources_[v]) {
      lo.push_back(latents_[id].min());
      hi.push_back(latents_[id].max());
    }
    lower_[v] = combine_values(combine_[v], lo);
    upper_[v] = combine_values(combine_[v], hi);
  }
}

std::optional<int> Sampler::m() const {
  if (spec_.model != SamplerModel::kBlockFactor) return std::nullopt;
  return std::max(1, spec_.k - 1);
}

LipschitzProfile Sampler::profile() const {
  std::vector<double> c(dimension_);
  for (int v = 0; v < dimension_; ++v) c[v] = upper_[v] - lower_[v];
  return LipschitzProfile::from_doubles(c);
}

double Sampler::statistic_range() const {
  if (spec_.statistic == Statistic::kSum) {
    double r = 0;
    for (int v = 0; v < dimension_; ++v) r += upper_[v] - lower_[v];
    return r;
  }
  return *std::max_element(upper_.begin(), upper_.end()) - *std::max_element(lower_.begin(), lower_.end());
}

void Sampler::draw(std::uint64_t seed, std::uint64_t index, std::span<double> x, std::uint16_t stream) const {
  double latent[64];
  std::vector<double> spill;
  double* values = latent;
  if (latents_.size() > 64) {
    spill.resize(latents_.size());
    values = spill.data();
  }
  for (std::size_t id = 0; id < latents_.size(); ++id) {
    PhiloxStream rng(seed, index, static_cast<std::uint32_t>(id), stream);
    values[id] = latents_[id].draw(rng.uniform());
  }
  double inputs[64];
  std::vector<double> input_spill;
  for (int v = 0; v < dimension_; ++v) {
    const auto& src = sources_[v];
    double* in = inputs;
    if (src.size() > 64) {
      input_spill.resize(src.size());
      in = input_spill.data();
    }
    for (std::size_t j = 0; j < src.size(); ++j) in[j] = values[src[j]];
    x[v] = combine_values(combine_[v], std::span<const double>(in, src.size()));
  }
}

double Sampler::statistic(std::span<const double> x) const {
  if (spec_.statistic == Statistic::kSum) return std::accumulate(x.begin(), x.end(), 0.0);
  return *std::max_element(x.begin(), x.end());
}

std::optional<double> Sampler::analytic_mean() const {
  if (spec_.statistic != Statistic::kSum) return std::nullopt;
  double total = 0;
  for (int v = 0; v < dimension_; ++v) {
    if (combine_[v] != Combine::kMean && combine_[v] != Combine::kSum) return std::nullopt;
    double s = 0;
    for (int id : sources_[v]) s += latents_[id].mean();
    total += combine_[v] == Combine::kMean ? s / static_cast<double>(sources_[v].size()) : s;
  }
  return total;
}

std::vector<std::vector<double>> sample(const Sampler& sampler, std::uint64_t seed, std::uint64_t first,
                                        std::uint64_t count) {
  std::vector<std::vector<double>> rows(count, std::vector<double>(sampler.dimension()));
  for (std::uint64_t r = 0; r < count; ++r) sampler.draw(seed, first + r, rows[r]);
  return rows;
}

FiniteJoint exact_joint(const Sampler& sampler) {
  const auto& spec = sampler.spec();
  // Rebuild the latent list in the sampler's id order.
  std::vector<LatentDistribution> latents;
  std::vector<std::vector<int>> sources(sampler.dimension());
  std::vector<Combine> combine;
  if (spec.model == SamplerModel::kBlockFactor) {
    latents.assign(spec.n + spec.k - 1, spec.block_latent);
    for (int i = 0; i < spec.n; ++i) {
      for (int j = 0; j < spec.k; ++j) sources[i].push_back(i + j);
    }
    combine.assign(spec.n, spec.g);
  } else {
    for (int v = 1; v <= sampler.dimension(); ++v) {
      if (spec.vertex_latents[v - 1]) {
        sources[v - 1].push_back(static_cast<int>(latents.size()));
        latents.push_back(*spec.vertex_latents[v - 1]);
      }
    }
    for (std::size_t f = 0; f < spec.factors.size(); ++f) {
      auto members = spec.factors[f];
      std::sort(members.begin(), members.end());
      members.erase(std::unique(members.begin(), members.end()), members.end());
      for (int v : members) sources[v - 1].push_back(static_cast<int>(latents.size()));
      latents.push_back(spec.factor_latents[f]);
    }
    combine = spec.emit;
  }

  using Kind = LatentDistribution::Kind;
  std::vector<std::vector<std::pair<double, Rational>>> support;
  std::size_t configurations = 1;
  for (const auto& d : latents) {
    std::vector<std::pair<double, Rational>> s;
    switch (d.kind) {
      case Kind::kUniform:
        if (d.lo != d.hi) throw InputError("exact joints need finitely supported latents");
        s.emplace_back(d.lo, Rational(1));
        break;
      case Kind::kConstant: s.emplace_back(d.lo, Rational(1)); break;
      case Kind::kBernoulli:
        if (d.p < 1) s.emplace_back(0.0, Rational(1 - d.p));
        if (d.p > 0) s.emplace_back(1.0, Rational(d.p));
        break;
      case Kind::kDiscrete:
        for (std::size_t j = 0; j < d.values.size(); ++j) {
          if (d.probs[j] > 0) s.emplace_back(d.values[j], Rational(d.probs[j]));
        }
        break;
    }
    configurations *= s.size();
    if (configurations > kMaxExactConfigurations) throw ScaleError("too many latent configurations for an exact joint");
    support.push_back(std::move(s));
  }

  const int n = sampler.dimension();
  std::map<std::vector<double>, Rational> law;
  std::vector<std::size_t> digit(latents.size(), 0);
  std::vector<double> x(n), in;
  for (std::size_t config = 0; config < configurations; ++config) {
    Rational p = 1;
    for (std::size_t id = 0; id < latents.size(); ++id) p *= support[id][digit[id]].second;
    for (int v = 0; v < n; ++v) {
      in.clear();
      for (int id : sources[v]) in.push_back(support[id][digit[id]].first);
      x[v] = combine_values(combine[v], in);
    }
    law[x] += p;
    for (std::size_t id = 0; id < latents.size(); ++id) {
      if (++digit[id] < support[id].size()) break;
      digit[id] = 0;
    }
  }

  std::vector<std::vector<double>> alphabet(n);
  for (const auto& [value, p] : law) {
    for (int v = 0; v < n; ++v) alphabet[v].push_back(value[v]);
  }
  std::vector<int> radix(n);
  for (int v = 0; v < n; ++v) {
    std::sort(alphabet[v].begin(), alphabet[v].end());
    alphabet[v].erase(std::unique(alphabet[v].begin(), alphabet[v].end()), alphabet[v].end());
    radix[v] = static_cast<int>(alphabet[v].size());
  }
  if (n > kMaxJointCoordinates) throw ScaleError("exact joints are limited to 8 coordinates");
  for (int r : radix) {
    if (r > kMaxAlphabet) throw ScaleError("an emitted coordinate takes more than 6 values");
  }
  std::size_t size = 1;
  for (int r : radix) size *= r;
  std::vector<Rational> pmf(size, Rational(0));
  Rational total = 0;
  for (const auto& [value, p] : law) {
    std::size_t idx = 0;
    for (int v = 0; v < n; ++v) {
      const auto pos = std::lower_bound(alphabet[v].begin(), alphabet[v].end(), value[v]) - alphabet[v].begin();
      idx = idx * radix[v] + static_cast<std::size_t>(pos);
    }
    pmf[idx] += p;
    total += p;
  }
  for (auto& p : pmf) p /= total;
  return FiniteJoint(std::move(radix), std::move(pmf), sampler.dependency_graph());
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GRAPHDEP_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value <= 1024) return static_cast<int>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

MeanEstimate estimate_mean(const Sampler& sampler, std::uint64_t seed, std::uint64_t n,
                           const MonteCarloOptions& options) {
  if (auto exact = sampler.analytic_mean()) return {*exact, 0, true, 0};
  const std::uint64_t samples = std::max<std::uint64_t>(1, n * options.mean_pass_factor);
  const auto partial = run_chunks<double>(samples, resolve_threads(options.threads), [&](std::uint64_t a, std::uint64_t b) {
    std::vector<double> x(sampler.dimension());
    double sum = 0;
    for (std::uint64_t s = a; s < b; ++s) {
      sampler.draw(seed, s, x, kMeanStream);
      sum += sampler.statistic(x);
    }
    return sum;
  });
  double total = 0;
  for (double s : partial) total += s;
  MeanEstimate m;
  m.analytic = false;
  m.samples = samples;
  m.value = total / static_cast<double>(samples);
  m.margin = sampler.statistic_range() *
             std::sqrt(std::log(2 / options.mean_failure_probability) / (2 * static_cast<double>(samples)));
  return m;
}

double clopper_pearson_upper(std::uint64_t hits, std::uint64_t n, double confidence) {
  if (n == 0) return 1;
  if (hits >= n) return 1;
  return boost::math::ibeta_inv(static_cast<double>(hits + 1), static_cast<double>(n - hits), confidence);
}

std::vector<TailEstimate> estimate_tails(const Sampler& sampler, std::span<const double> t_grid,
                                         std::uint64_t seed, std::uint64_t n, const MeanEstimate& mean,
                                         const MonteCarloOptions& options) {
  if (n == 0) throw InputError("at least one sample is required");
  for (double t : t_grid) {
    if (!(t >= 0)) throw InputError("tail thresholds must be nonnegative");
  }
  const double base = mean.value - mean.margin;
  const std::vector<double> grid(t_grid.begin(), t_grid.end());
  const auto partial = run_chunks<std::vector<std::uint64_t>>(
      n, resolve_threads(options.threads), [&](std::uint64_t a, std::uint64_t b) {
        std::vector<std::uint64_t> hits(grid.size(), 0);
        std::vector<double> x(sampler.dimension());
        for (std::uint64_t s = a; s < b; ++s) {
          sampler.draw(seed, s, x, kTailStream);
          const double deviation = sampler.statistic(x) - base;
          for (std::size_t j = 0; j < grid.size(); ++j) hits[j] += deviation >= grid[j];
        }
        return hits;
      });
  std::vector<TailEstimate> out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    auto& e = out[j];
    e.t = grid[j];
    e.n_samples = n;
    e.seed = seed;
    for (const auto& h : partial) e.hits += h[j];
    e.p_hat = static_cast<double>(e.hits) / static_cast<double>(n);
    e.ci_upper = clopper_pearson_upper(e.hits, n, options.confidence);
  }
  return out;
}

TailEstimate estimate_tail(const Sampler& sampler, double t, std::uint64_t seed, std::uint64_t n,
                           const MonteCarloOptions& options) {
  const double grid[] = {t};
  return estimate_tails(sampler, grid, seed, n, estimate_mean(sampler, seed, n, options), options).front();
}

bool ValidationTable::sound() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const Verdict& v) { return v.pass || v.bound.valid_under != ValidUnder::kDependence; });
}

bool ValidationTable::any_fail() const {
  return std::any_of(rows.begin(), rows.end(), [](const Verdict& v) { return !v.pass; });
}

ValidationTable validate_bounds(const Sampler& sampler, std::span<const double> t_grid, std::uint64_t seed,
                                std::uint64_t n, bool independence_reference, const MonteCarloOptions& options) {
  ValidationTable table;
  table.mean = estimate_mean(sampler, seed, n, options);
  const auto tails = estimate_tails(sampler, t_grid, seed, n, table.mean, options);
  const auto reports = compare_bounds(sampler.dependency_graph(), sampler.profile(), 1.0,
                                      compare_options(sampler, independence_reference));
  for (const auto& report : reports) {
    if (!report.applicable) continue;
    for (const auto& tail : tails) {
      Verdict v;
      v.bound = report;
      v.bound.t = tail.t;
      v.bound.bound = tail_bound(report.denominator.value, tail.t);
      v.estimate = tail;
      v.pass = tail.ci_upper <= v.bound.bound;
      table.rows.push_back(std::move(v));
    }
  }
  return table;
}

std::vector<double> default_t_grid(const Sampler& sampler, int points, double floor_bound) {
  if (points < 1) throw InputError("a t grid needs at least one point");
  const auto reports = compare_bounds(sampler.dependency_graph(), sampler.profile(), 1.0, compare_options(sampler, false));
  double tightest = INFINITY;
  for (const auto& r : reports) {
    if (r.applicable && r.valid_under == ValidUnder::kDependence) tightest = std::min(tightest, r.denominator.value);
  }
  if (!std::isfinite(tightest)) throw InputError("no bound applies to this sampler");
  const double t_max = std::sqrt(tightest * std::log(1 / floor_bound) / 2);
  std::vector<double> grid;
  for (int j = 1; j <= points; ++j) grid.push_back(t_max * j / points);
  return grid;
}

double max_far_correlation(const Sampler& sampler, std::uint64_t seed, std::uint64_t n, int distance,
                           const MonteCarloOptions& options) {
  const int d = sampler.dimension();
  struct Moments {
    std::vector<double> sum, cross;
  };
  const auto partial = run_chunks<Moments>(n, resolve_threads(options.threads), [&](std::uint64_t a, std::uint64_t b) {
    Moments m{std::vector<double>(d, 0), std::vector<double>(d * d, 0)};
    std::vector<double> x(d);
    for (std::uint64_t s = a; s < b; ++s) {
      sampler.draw(seed, s, x, kTailStream);
      for (int i = 0; i < d; ++i) {
        m.sum[i] += x[i];
        for (int j = i; j < d; ++j) m.cross[i * d + j] += x[i] * x[j];
      }
    }
    return m;
  });
  std::vector<double> sum(d, 0), cross(d * d, 0);
  for (const auto& m : partial) {
    for (int i = 0; i < d; ++i) sum[i] += m.sum[i];
    for (int i = 0; i < d * d; ++i) cross[i] += m.cross[i];
  }
  const double count = static_cast<double>(n);
  double worst = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + distance + 1; j < d; ++j) {
      const double mi = sum[i] / count, mj = sum[j] / count;
      const double cov = cross[i * d + j] / count - mi * mj;
      const double vi = cross[i * d + i] / count - mi * mi;
      const double vj = cross[j * d + j] / count - mj * mj;
      if (vi <= 0 || vj <= 0) continue;
      worst = std::max(worst, std::abs(cov / std::sqrt(vi * vj)));
    }
  }
  return worst;
}

std::string to_string(Combine combine) {
  switch (combine) {
    case Combine::kMean: return "mean";
    case Combine::kSum: return "sum";
    case Combine::kMax: return "max";
    case Combine::kMin: return "min";
  }
  return "mean";
}

std::string to_string(Statistic statistic) { return statistic == Statistic::kSum ? "sum" : "max"; }

std::optional<Combine> parse_combine(const std::string& name) {
  for (auto c : {Combine::kMean, Combine::kSum, Combine::kMax, Combine::kMin}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::optional<Statistic> parse_statistic(const std::string& name) {
  if (name == "sum") return Statistic::kSum;
  if (name == "max") return Statistic::kMax;
  return std::nullopt;
}

}  // namespace graphdep

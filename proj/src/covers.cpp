#include "graphdep/covers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_set>

#include "graphdep/errors.hpp"

namespace graphdep {

namespace {

std::vector<VertexSet> adjacency_masks(const Graph& graph) {
  if (graph.order() > kMaxCoverVertices) {
    throw ScaleError("cover computations support at most 64 vertices, got " + std::to_string(graph.order()));
  }
  std::vector<VertexSet> adj(static_cast<std::size_t>(graph.order()), 0);
  for (const auto& e : graph.edges()) {
    adj[e.u - 1] |= VertexSet{1} << (e.v - 1);
    adj[e.v - 1] |= VertexSet{1} << (e.u - 1);
  }
  return adj;
}

VertexSet full_set(int n) { return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

int lowest(VertexSet s) { return std::countr_zero(s); }

/// Enumerates the family by extension in ascending vertex order; each member
/// is visited once. Returns false when `budget` members were visited before
/// the enumeration finished.
class FamilyWalker {
 public:
  FamilyWalker(const Graph& graph, CoverKind kind) : kind_(kind), n_(graph.order()), adj_(adjacency_masks(graph)) {}

  bool walk(std::size_t budget, const std::function<void(VertexSet)>& visit) {
    budget_ = budget;
    visited_ = 0;
    visit_ = &visit;
    if (kind_ == CoverKind::kIndependent) {
      return independent(full_set(n_), 0);
    }
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    return forest(0, 0, comp);
  }

 private:
  bool emit(VertexSet s) {
    if (visited_ >= budget_) return false;
    ++visited_;
    (*visit_)(s);
    return true;
  }

  bool independent(VertexSet candidates, VertexSet current) {
    while (candidates != 0) {
      const int v = lowest(candidates);
      candidates &= candidates - 1;
      const VertexSet next = current | (VertexSet{1} << v);
      if (!emit(next)) return false;
      if (!independent(candidates & ~adj_[v], next)) return false;
    }
    return true;
  }

  bool forest(int start, VertexSet current, const std::vector<int>& comp) {
    for (int v = start; v < n_; ++v) {
      // Adding v keeps the induced graph acyclic iff its neighbours in the
      // current set lie in pairwise distinct components.
      VertexSet nb = adj_[v] & current;
      bool ok = true;
      VertexSet seen_components = 0;
      for (VertexSet s = nb; s != 0; s &= s - 1) {
        const VertexSet bit = VertexSet{1} << comp[lowest(s)];
        if (seen_components & bit) {
          ok = false;
          break;
        }
        seen_components |= bit;
      }
      if (!ok) continue;
      std::vector<int> next_comp = comp;
      for (int u = 0; u < n_; ++u) {
        if (((current >> u) & 1U) && ((seen_components >> comp[u]) & 1U)) next_comp[u] = v;
      }
      next_comp[v] = v;
      const VertexSet next = current | (VertexSet{1} << v);
      if (!emit(next)) return false;
      if (!forest(v + 1, next, next_comp)) return false;
    }
    return true;
  }

  CoverKind kind_;
  int n_;
  std::vector<VertexSet> adj_;
  std::size_t budget_ = 0;
  std::size_t visited_ = 0;
  const std::function<void(VertexSet)>* visit_ = nullptr;
};

std::vector<VertexSet> enumerate_family(const Graph& graph, CoverKind kind, std::size_t cap) {
  std::vector<VertexSet> out;
  FamilyWalker walker(graph, kind);
  if (!walker.walk(cap, [&](VertexSet s) { out.push_back(s); })) {
    throw ScaleError("more than " + std::to_string(cap) + " " +
                     (kind == CoverKind::kIndependent ? "independent sets" : "induced forests") +
                     "; use the column-generation strategy");
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_family(const Graph& graph, CoverKind kind, VertexSet s) {
  return kind == CoverKind::kIndependent ? is_independent(graph, s) : induces_forest(graph, s);
}

/// Cost of a part as the LP sees it.
class PartCost {
 public:
  PartCost(const Graph& graph, const LipschitzProfile* c) : graph_(graph), c_(c) {
    if (c_ != nullptr) {
      for (const auto& e : graph.edges()) {
        edges_.push_back({e.u - 1, e.v - 1, (c->c(e.u) + c->c(e.v)) * (c->c(e.u) + c->c(e.v))});
      }
    }
  }

  bool unit() const { return c_ == nullptr; }

  double squared(VertexSet s) const {
    const int n = graph_.order();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    double total = 0;
    for (const auto& e : edges_) {
      if (((s >> e.u) & 1U) && ((s >> e.v) & 1U)) {
        total += e.weight;
        parent[find(e.u)] = find(e.v);
      }
    }
    std::vector<double> minimum(static_cast<std::size_t>(n), INFINITY);
    for (VertexSet t = s; t != 0; t &= t - 1) {
      const int v = lowest(t);
      const int r = find(v);
      minimum[r] = std::min(minimum[r], c_->c(v + 1));
    }
    for (VertexSet t = s; t != 0; t &= t - 1) {
      const int v = lowest(t);
      if (find(v) == v) total += minimum[v] * minimum[v];
    }
    return total;
  }

  double operator()(VertexSet s) const { return unit() ? 1.0 : std::sqrt(squared(s)); }

  Rational exact_lp_cost(VertexSet s) const { return unit() ? Rational(1) : Rational((*this)(s)); }

 private:
  struct WeightedEdge {
    int u, v;
    double weight;
  };
  const Graph& graph_;
  const LipschitzProfile* c_;
  std::vector<WeightedEdge> edges_;
};

std::vector<VertexSet> greedy_partition(const Graph& graph, CoverKind kind) {
  std::vector<VertexSet> classes;
  for (int v = 0; v < graph.order(); ++v) {
    const VertexSet bit = VertexSet{1} << v;
    bool placed = false;
    for (auto& cls : classes) {
      if (in_family(graph, kind, cls | bit)) {
        cls |= bit;
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back(bit);
  }
  return classes;
}

WeightedCover merge_parts(WeightedCover cover) {
  std::map<std::vector<int>, Rational> merged;
  for (auto& part : cover.parts) {
    if (sgn(part.weight) == 0 || part.vertices.empty()) continue;
    merged[part.vertices] += part.weight;
  }
  cover.parts.clear();
  for (auto& [vertices, weight] : merged) cover.parts.push_back({vertices, weight});
  return cover;
}

struct MasterResult {
  std::vector<Rational> weights;
  std::vector<double> duals;
};

/// Final master solve over `columns`: exact arithmetic when `exact`, otherwise
/// a double simplex whose basis is then solved exactly.
MasterResult solve_master(int n, const std::vector<VertexSet>& columns, const PartCost& cost, bool exact) {
  std::vector<Rational> rcosts;
  std::vector<double> dcosts;
  rcosts.reserve(columns.size());
  dcosts.reserve(columns.size());
  for (VertexSet s : columns) {
    rcosts.push_back(cost.exact_lp_cost(s));
    dcosts.push_back(rcosts.back().get_d());
  }
  auto approx = solve_covering_lp<double>(n, columns, dcosts);
  if (!exact) {
    if (auto w = exact_basic_weights(n, columns, approx.basis)) {
      if (std::all_of(w->begin(), w->end(), [](const Rational& x) { return sgn(x) >= 0; })) {
        return {std::move(*w), approx.duals};
      }
    }
  }
  auto sol = solve_covering_lp<Rational>(n, columns, rcosts, approx.basis);
  std::vector<double> duals;
  for (const auto& y : sol.duals) duals.push_back(y.get_d());
  return {std::move(sol.weights), std::move(duals)};
}

std::vector<VertexSet> with_singletons(int n, std::vector<VertexSet> columns) {
  std::unordered_set<VertexSet> present(columns.begin(), columns.end());
  for (int v = 0; v < n; ++v) {
    if (!present.count(VertexSet{1} << v)) columns.push_back(VertexSet{1} << v);
  }
  return columns;
}

/// Best reduced-cost members found by exhaustive walk (within budget) or by
/// greedy local search from every vertex.
std::vector<VertexSet> price(const Graph& graph, CoverKind kind, const PartCost& cost, const std::vector<double>& duals,
                             std::size_t budget, std::size_t keep) {
  constexpr double kTol = 1e-9;
  auto reduced = [&](VertexSet s) {
    double d = cost(s);
    for (VertexSet t = s; t != 0; t &= t - 1) d -= duals[lowest(t)];
    return d;
  };
  std::vector<std::pair<double, VertexSet>> best;
  auto offer = [&](VertexSet s) {
    const double d = reduced(s);
    if (d >= -kTol) return;
    best.emplace_back(d, s);
    if (best.size() > 4 * keep) {
      std::nth_element(best.begin(), best.begin() + static_cast<long>(keep), best.end());
      best.resize(keep);
    }
  };
  FamilyWalker walker(graph, kind);
  const bool complete = walker.walk(budget, offer);
  if (!complete) {
    const int n = graph.order();
    for (int start = 0; start < n; ++start) {
      VertexSet s = VertexSet{1} << start;
      double current = reduced(s);
      while (true) {
        int best_v = -1;
        double best_d = current;
        for (int v = 0; v < n; ++v) {
          const VertexSet bit = VertexSet{1} << v;
          if (s & bit) continue;
          if (!in_family(graph, kind, s | bit)) continue;
          const double d = reduced(s | bit);
          if (d < best_d - 1e-12) {
            best_d = d;
            best_v = v;
          }
        }
        if (best_v < 0) break;
        s |= VertexSet{1} << best_v;
        current = best_d;
      }
      offer(s);
    }
  }
  std::sort(best.begin(), best.end());
  best.erase(std::unique(best.begin(), best.end(), [](auto& a, auto& b) { return a.second == b.second; }),
             best.end());
  std::vector<VertexSet> out;
  for (std::size_t k = 0; k < best.size() && k < keep; ++k) out.push_back(best[k].second);
  return out;
}

std::vector<VertexSet> column_generation(const Graph& graph, CoverKind kind, const PartCost& cost,
                                         const CoverOptions& options) {
  const int n = graph.order();
  std::vector<VertexSet> columns = greedy_partition(graph, kind);
  if (in_family(graph, kind, full_set(n))) columns.push_back(full_set(n));
  columns = with_singletons(n, std::move(columns));
  std::unordered_set<VertexSet> present(columns.begin(), columns.end());
  for (int round = 0; round < options.column_generation_rounds; ++round) {
    std::vector<double> dcosts;
    for (VertexSet s : columns) dcosts.push_back(cost(s));
    auto sol = solve_covering_lp<double>(n, columns, dcosts);
    auto fresh = price(graph, kind, cost, sol.duals, options.pricing_budget, 16);
    bool added = false;
    for (VertexSet s : fresh) {
      if (present.insert(s).second) {
        columns.push_back(s);
        added = true;
      }
    }
    if (!added) break;
  }
  return columns;
}

WeightedCover cover_from_weights(CoverKind kind, const std::vector<VertexSet>& columns,
                                 const std::vector<Rational>& weights, int n) {
  WeightedCover raw{kind, {}};
  for (std::size_t k = 0; k < columns.size(); ++k) {
    if (sgn(weights[k]) > 0) raw.parts.push_back({to_vertices(columns[k]), weights[k]});
  }
  return merge_parts(normalize_cover(raw, n));
}

CoverSolution unit_cover_solution(const Graph& graph, CoverKind kind, const CoverOptions& options) {
  const int n = graph.order();
  if (n < 1) throw InputError("graph has no vertices");
  PartCost cost(graph, nullptr);
  CoverSolution out;

  std::vector<VertexSet> columns;
  CoverStrategy strategy = options.strategy;
  if (strategy == CoverStrategy::kAuto || strategy == CoverStrategy::kEnumeratedLp) {
    try {
      columns = enumerate_family(graph, kind, options.enumeration_cap);
      strategy = CoverStrategy::kEnumeratedLp;
    } catch (const ScaleError&) {
      if (strategy == CoverStrategy::kEnumeratedLp) throw;
      strategy = CoverStrategy::kColumnGeneration;
    }
  }

  if (strategy == CoverStrategy::kGreedy) {
    out.cover.kind = kind;
    for (VertexSet s : greedy_partition(graph, kind)) out.cover.parts.push_back({to_vertices(s), Rational(1)});
    out.method = CoverMethod::kHeuristic;
    out.optimality = Optimality::kUpperBound;
  } else {
    if (strategy == CoverStrategy::kColumnGeneration) columns = column_generation(graph, kind, cost, options);
    const bool exact = n <= options.exact_vertex_limit;
    auto master = solve_master(n, columns, cost, exact);
    out.cover = cover_from_weights(kind, columns, master.weights, n);
    out.duals = std::move(master.duals);
    out.method = strategy == CoverStrategy::kEnumeratedLp ? CoverMethod::kEnumeratedLp : CoverMethod::kColumnGeneration;
    out.optimality = strategy == CoverStrategy::kEnumeratedLp ? Optimality::kExact : Optimality::kUpperBound;
  }
  Rational total = 0;
  for (const auto& part : out.cover.parts) total += part.weight;
  out.objective_exact = total;
  out.objective = total.get_d();
  out.value_exact = total;
  out.value = out.objective;
  return out;
}

}  // namespace

VertexSet to_vertex_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxCoverVertices) throw InputError("vertex " + std::to_string(v) + " outside [1, 64]");
    s |= VertexSet{1} << (v - 1);
  }
  return s;
}

std::vector<int> to_vertices(VertexSet set) {
  std::vector<int> out;
  for (; set != 0; set &= set - 1) out.push_back(lowest(set) + 1);
  return out;
}

bool is_independent(const Graph& graph, VertexSet set) {
  for (const auto& e : graph.edges()) {
    if (((set >> (e.u - 1)) & 1U) && ((set >> (e.v - 1)) & 1U)) return false;
  }
  return true;
}

bool induces_forest(const Graph& graph, VertexSet set) {
  std::vector<int> parent(static_cast<std::size_t>(graph.order()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : graph.edges()) {
    if (((set >> (e.u - 1)) & 1U) && ((set >> (e.v - 1)) & 1U)) {
      const int a = find(e.u), b = find(e.v);
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return true;
}

std::vector<std::vector<int>> enumerate_independent_sets(const Graph& graph, std::size_t cap, bool maximal_only) {
  std::vector<std::vector<int>> out;
  const auto adj = adjacency_masks(graph);
  const VertexSet all = full_set(graph.order());
  for (VertexSet s : enumerate_family(graph, CoverKind::kIndependent, cap)) {
    if (maximal_only) {
      VertexSet blocked = s;
      for (VertexSet t = s; t != 0; t &= t - 1) blocked |= adj[lowest(t)];
      if (blocked != all) continue;
    }
    out.push_back(to_vertices(s));
  }
  return out;
}

std::vector<std::vector<int>> enumerate_induced_forests(const Graph& graph, std::size_t cap) {
  std::vector<std::vector<int>> out;
  for (VertexSet s : enumerate_family(graph, CoverKind::kForest, cap)) out.push_back(to_vertices(s));
  return out;
}

std::vector<CoverViolation> validate_cover(const Graph& graph, const WeightedCover& cover) {
  using Type = CoverViolation::Type;
  std::vector<CoverViolation> out;
  const int n = graph.order();
  std::vector<Rational> coverage(static_cast<std::size_t>(n) + 1, Rational(0));
  for (std::size_t k = 0; k < cover.parts.size(); ++k) {
    const auto& part = cover.parts[k];
    const int idx = static_cast<int>(k);
    if (part.vertices.empty()) {
      out.push_back({Type::kEmptyPart, idx, "part " + std::to_string(k + 1) + " is empty"});
      continue;
    }
    if (sgn(part.weight) < 0) {
      out.push_back({Type::kNegativeWeight, idx, "part " + std::to_string(k + 1) + " has negative weight"});
    }
    bool in_range = true;
    for (int v : part.vertices) {
      if (v < 1 || v > n) {
        out.push_back({Type::kOutOfRange, idx,
                       "part " + std::to_string(k + 1) + " holds vertex " + std::to_string(v) + " outside [1, n]"});
        in_range = false;
      } else {
        coverage[v] += part.weight;
      }
    }
    if (!in_range) continue;
    const VertexSet s = n <= kMaxCoverVertices ? to_vertex_set(part.vertices) : 0;
    if (cover.kind == CoverKind::kIndependent && !is_independent(graph, s)) {
      out.push_back({Type::kNotIndependent, idx, "part " + std::to_string(k + 1) + " is not an independent set"});
    }
    if (cover.kind == CoverKind::kForest && !induces_forest(graph, s)) {
      out.push_back({Type::kNotForest, idx, "part " + std::to_string(k + 1) + " does not induce a forest"});
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (coverage[v] != 1) {
      out.push_back({Type::kCoverage, v,
                     "vertex " + std::to_string(v) + " is covered with weight " + to_string(coverage[v])});
    }
  }
  return out;
}

Rational forest_part_cost_squared(const Graph& graph, std::span<const int> part, const LipschitzProfile& c) {
  if (c.size() != graph.order()) throw InputError("Lipschitz profile length does not match the graph");
  auto sub = induced_subgraph(graph, part);
  const auto cls = classify(sub.graph);
  if (!cls.is_forest) throw KindError("part does not induce a forest");
  Rational total = 0;
  for (const auto& e : sub.graph.edges()) {
    const Rational s = c.exact_c(sub.labels[e.u - 1]) + c.exact_c(sub.labels[e.v - 1]);
    total += s * s;
  }
  for (const auto& tree : cls.components) {
    Rational m = c.exact_c(sub.labels[tree.front() - 1]);
    for (int v : tree) m = std::min(m, Rational(c.exact_c(sub.labels[v - 1])));
    total += m * m;
  }
  return total;
}

double forest_part_cost(const Graph& graph, std::span<const int> part, const LipschitzProfile& c) {
  return std::sqrt(forest_part_cost_squared(graph, part, c).get_d());
}

double cover_objective(const Graph& graph, const WeightedCover& cover, const LipschitzProfile& c) {
  long double total = 0;
  for (const auto& part : cover.parts) {
    total += static_cast<long double>(part.weight.get_d()) * forest_part_cost(graph, part.vertices, c);
  }
  return static_cast<double>(total);
}

std::optional<Rational> cover_objective_exact(const Graph& graph, const WeightedCover& cover,
                                              const LipschitzProfile& c) {
  Rational total = 0;
  for (const auto& part : cover.parts) {
    auto root = exact_sqrt(forest_part_cost_squared(graph, part.vertices, c));
    if (!root) return std::nullopt;
    total += part.weight * *root;
  }
  return total;
}

WeightedCover normalize_cover(const WeightedCover& cover, int n) {
  WeightedCover out{cover.kind, {}};
  for (const auto& part : cover.parts) {
    if (sgn(part.weight) > 0 && !part.vertices.empty()) out.parts.push_back(part);
  }
  for (int v = 1; v <= n; ++v) {
    Rational excess = -1;
    for (const auto& part : out.parts) {
      if (std::binary_search(part.vertices.begin(), part.vertices.end(), v)) excess += part.weight;
    }
    for (std::size_t k = 0; k < out.parts.size() && sgn(excess) > 0; ++k) {
      auto& part = out.parts[k];
      auto it = std::lower_bound(part.vertices.begin(), part.vertices.end(), v);
      if (it == part.vertices.end() || *it != v) continue;
      if (part.weight <= excess) {
        excess -= part.weight;
        part.vertices.erase(it);
      } else {
        CoverPart rest{part.vertices, excess};
        rest.vertices.erase(rest.vertices.begin() + (it - part.vertices.begin()));
        part.weight -= excess;
        excess = 0;
        out.parts.push_back(std::move(rest));
      }
    }
  }
  std::erase_if(out.parts, [](const CoverPart& p) { return p.vertices.empty(); });
  return out;
}

CoverSolution fractional_chromatic_number(const Graph& graph, const CoverOptions& options) {
  return unit_cover_solution(graph, CoverKind::kIndependent, options);
}

CoverSolution fractional_vertex_arboricity(const Graph& graph, const CoverOptions& options) {
  return unit_cover_solution(graph, CoverKind::kForest, options);
}

CoverSolution optimize_D(const Graph& graph, const LipschitzProfile& c, const CoverOptions& options) {
  const int n = graph.order();
  if (n < 1) throw InputError("graph has no vertices");
  if (c.size() != n) throw InputError("Lipschitz profile length does not match the graph");
  PartCost cost(graph, &c);
  CoverSolution out;
  out.cover.kind = CoverKind::kForest;

  CoverStrategy strategy = options.strategy;
  std::vector<VertexSet> columns;
  if (strategy == CoverStrategy::kAuto || strategy == CoverStrategy::kEnumeratedLp) {
    try {
      columns = enumerate_family(graph, CoverKind::kForest, options.enumeration_cap);
      strategy = CoverStrategy::kEnumeratedLp;
    } catch (const ScaleError&) {
      if (strategy == CoverStrategy::kEnumeratedLp) throw;
      strategy = CoverStrategy::kColumnGeneration;
    }
  }

  if (strategy == CoverStrategy::kGreedy) {
    // Best of: the greedy forest partition, the greedy independent partition,
    // and the whole vertex set when it already induces a forest.
    std::vector<std::vector<VertexSet>> candidates{greedy_partition(graph, CoverKind::kForest),
                                                   greedy_partition(graph, CoverKind::kIndependent)};
    if (induces_forest(graph, full_set(n))) candidates.push_back({full_set(n)});
    double best = INFINITY;
    for (const auto& candidate : candidates) {
      double objective = 0;
      for (VertexSet s : candidate) objective += cost(s);
      if (objective < best) {
        best = objective;
        out.cover.parts.clear();
        for (VertexSet s : candidate) out.cover.parts.push_back({to_vertices(s), Rational(1)});
      }
    }
    out.method = CoverMethod::kHeuristic;
    out.optimality = Optimality::kUpperBound;
  } else {
    if (strategy == CoverStrategy::kColumnGeneration) {
      columns = column_generation(graph, CoverKind::kForest, cost, options);
    }
    // LP costs are the rounded square roots; the basis is then solved exactly.
    auto master = solve_master(n, columns, cost, true);
    out.cover = cover_from_weights(CoverKind::kForest, columns, master.weights, n);
    out.duals = std::move(master.duals);
    out.method = strategy == CoverStrategy::kEnumeratedLp ? CoverMethod::kEnumeratedLp : CoverMethod::kColumnGeneration;
    out.optimality = strategy == CoverStrategy::kEnumeratedLp ? Optimality::kExact : Optimality::kUpperBound;
  }

  out.objective = cover_objective(graph, out.cover, c);
  out.objective_exact = cover_objective_exact(graph, out.cover, c);

  // Every fractional independent cover is a forest cover, so D never exceeds
  // chi_f(G) * |c|^2. Heuristic answers fall back to the independent witness.
  if (out.optimality == Optimality::kUpperBound || n <= options.exact_vertex_limit) {
    CoverOptions chi_options = options;
    chi_options.strategy = CoverStrategy::kAuto;
    const auto chi = fractional_chromatic_number(graph, chi_options);
    const double janson = chi.objective * c.squared_norm().get_d();
    if (out.optimality == Optimality::kUpperBound) {
      WeightedCover witness = chi.cover;
      witness.kind = CoverKind::kForest;
      const double alternative = cover_objective(graph, witness, c);
      if (alternative < out.objective) {
        out.cover = std::move(witness);
        out.objective = alternative;
        out.objective_exact = cover_objective_exact(graph, out.cover, c);
      }
    }
    if (out.objective * out.objective > janson * (1 + 1e-9) + 1e-12) {
      throw InternalError("decomposable denominator exceeds chi_f(G) * |c|^2");
    }
  }

  out.value = out.objective * out.objective;
  if (out.objective_exact) out.value_exact = *out.objective_exact * *out.objective_exact;
  return out;
}

std::string to_string(CoverKind kind) { return kind == CoverKind::kIndependent ? "independent" : "forest"; }

std::string to_string(CoverMethod method) {
  switch (method) {
    case CoverMethod::kEnumeratedLp: return "enumerated_lp";
    case CoverMethod::kColumnGeneration: return "column_generation";
    case CoverMethod::kHeuristic: return "heuristic";
  }
  return "unknown";
}

std::string to_string(Optimality optimality) {
  return optimality == Optimality::kExact ? "exact" : "upper_bound";
}

}  // namespace graphdep

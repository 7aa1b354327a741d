#include "graphdep/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "graphdep/errors.hpp"

namespace graphdep {

namespace {

void require_matching(const Graph& graph, const LipschitzProfile& c) {
  if (c.size() != graph.order()) {
    throw InputError("Lipschitz profile has " + std::to_string(c.size()) + " entries but the graph has " +
                     std::to_string(graph.order()) + " vertices");
  }
}

Denominator from_exact(const Rational& value) { return {value.get_d(), value}; }

BoundReport skipped(BoundMethod method, double t, std::string reason) {
  BoundReport r;
  r.method = method;
  r.applicable = false;
  r.reason = std::move(reason);
  r.t = t;
  r.bound = 1;
  return r;
}

BoundReport with_bound(BoundMethod method, Denominator d, double t) {
  BoundReport r;
  r.method = method;
  r.denominator = std::move(d);
  r.t = t;
  r.bound = tail_bound(r.denominator.value, t);
  return r;
}

}  // namespace

double tail_bound(double denominator, double t) {
  if (!(t >= 0)) throw InputError("deviation t must be nonnegative");
  if (!(denominator > 0)) {
    throw InputError("degenerate denominator: the Lipschitz profile is all zero");
  }
  return std::min(1.0, std::exp(-2.0 * t * t / denominator));
}

Rational mcdiarmid_denominator(const LipschitzProfile& c) { return c.squared_norm(); }

CoverDenominator janson_denominator(const Graph& graph, const LipschitzProfile& c, const CoverOptions& options) {
  require_matching(graph, c);
  auto chi = fractional_chromatic_number(graph, options);
  const Rational norm = c.squared_norm();
  Denominator d{chi.objective * norm.get_d(), std::nullopt};
  if (chi.objective_exact) d.exact = *chi.objective_exact * norm;
  if (d.exact) d.value = d.exact->get_d();
  return {d, std::move(chi)};
}

Rational forest_denominator(const Graph& graph, const LipschitzProfile& c) {
  require_matching(graph, c);
  const auto cls = classify(graph);
  if (!cls.is_forest) {
    throw KindError("the forest bound needs an acyclic dependency graph; use the decomposable bound instead");
  }
  Rational total = 0;
  for (const auto& tree : cls.components) {
    Rational m = c.exact_c(tree.front());
    for (int v : tree) m = std::min(m, Rational(c.exact_c(v)));
    total += m * m;
  }
  for (const auto& e : graph.edges()) {
    const Rational s = c.exact_c(e.u) + c.exact_c(e.v);
    total += s * s;
  }
  return total;
}

CoverDenominator decomposable_denominator(const Graph& graph, const LipschitzProfile& c,
                                          const CoverOptions& options) {
  require_matching(graph, c);
  auto sol = optimize_D(graph, c, options);
  Denominator d{sol.value, sol.value_exact};
  return {d, std::move(sol)};
}

MDependentDenominator m_dependent_denominator(int n, int m, const LipschitzProfile& c, MDependentVariant variant,
                                              const std::optional<BlockPartition>& override_blocks) {
  if (c.size() != n) throw InputError("Lipschitz profile length does not match n");
  BlockPartition blocks = override_blocks ? *override_blocks : block_partition(n, m);
  if (override_blocks) {
    if (blocks.n != n || blocks.m != m) throw InputError("block partition override has different n or m");
    validate_block_partition(blocks);
  }
  std::vector<Rational> sums;
  for (const auto& block : blocks.blocks) {
    Rational s = 0;
    for (int k : block) s += c.exact_c(k);
    sums.push_back(s);
  }
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < sums.size(); ++i) {
    const Rational pair = sums[i] + sums[i + 1];
    total += pair * pair;
  }
  if (variant == MDependentVariant::kMinBlock) {
    Rational smallest = *std::min_element(sums.begin(), sums.end());
    total += smallest * smallest;
  } else {
    total += sums.back() * sums.back();
  }
  return {total, std::move(blocks)};
}

std::vector<BoundReport> compare_bounds(const Graph& graph, const LipschitzProfile& c, double t,
                                        const CompareOptions& options) {
  require_matching(graph, c);
  if (!(t > 0)) throw InputError("deviation t must be positive");
  auto wanted = [&](BoundMethod m) { return options.methods.empty() || options.methods.count(m) > 0; };

  std::vector<BoundReport> applicable, skipped_reports;
  auto push = [&](BoundReport r) { (r.applicable ? applicable : skipped_reports).push_back(std::move(r)); };

  if (c.all_zero()) {
    for (auto m : {BoundMethod::kMcDiarmid, BoundMethod::kJanson, BoundMethod::kTree, BoundMethod::kForest,
                   BoundMethod::kDecomposable, BoundMethod::kMDependent, BoundMethod::kMDependentPaulin}) {
      if (wanted(m)) push(skipped(m, t, "degenerate: every Lipschitz coefficient is zero, f is constant"));
    }
    return skipped_reports;
  }

  const auto cls = classify(graph);
  const bool decomposable = options.sum_statistic || options.assume_decomposable;

  if (wanted(BoundMethod::kMcDiarmid)) {
    if (graph.edge_count() == 0 || options.independence_assumed) {
      auto r = with_bound(BoundMethod::kMcDiarmid, from_exact(mcdiarmid_denominator(c)), t);
      if (graph.edge_count() > 0) {
        r.valid_under = ValidUnder::kIndependenceOnly;
        r.reason = "not valid under dependence - reference line";
      }
      push(std::move(r));
    } else {
      push(skipped(BoundMethod::kMcDiarmid, t, "requires independence; pass the independence flag for a reference line"));
    }
  }

  if (wanted(BoundMethod::kJanson)) {
    if (!options.sum_statistic) {
      push(skipped(BoundMethod::kJanson, t, "applies only to sums of bounded variables"));
    } else {
      auto janson = janson_denominator(graph, c, options.cover);
      auto r = with_bound(BoundMethod::kJanson, janson.denominator, t);
      r.optimality = janson.solution.optimality;
      r.cover = janson.solution.cover;
      push(std::move(r));
    }
  }

  if (wanted(BoundMethod::kTree)) {
    if (cls.is_forest && cls.tree_count == 1) {
      auto r = with_bound(BoundMethod::kTree, from_exact(forest_denominator(graph, c)), t);
      r.trees = ordered_forest(graph, c);
      push(std::move(r));
    } else {
      push(skipped(BoundMethod::kTree, t, cls.is_forest ? "dependency graph is not connected" : "dependency graph has a cycle"));
    }
  }

  if (wanted(BoundMethod::kForest)) {
    if (cls.is_forest) {
      auto r = with_bound(BoundMethod::kForest, from_exact(forest_denominator(graph, c)), t);
      r.trees = ordered_forest(graph, c);
      push(std::move(r));
    } else {
      push(skipped(BoundMethod::kForest, t, "dependency graph has a cycle; see the decomposable bound"));
    }
  }

  if (wanted(BoundMethod::kDecomposable)) {
    if (!decomposable) {
      push(skipped(BoundMethod::kDecomposable, t, "f must be forest-decomposable; assert it explicitly to apply"));
    } else {
      auto dec = decomposable_denominator(graph, c, options.cover);
      auto r = with_bound(BoundMethod::kDecomposable, dec.denominator, t);
      r.optimality = dec.solution.optimality;
      r.cover = dec.solution.cover;
      if (!options.sum_statistic) r.reason = "assumes f is forest-decomposable";
      push(std::move(r));
    }
  }

  for (auto method : {BoundMethod::kMDependent, BoundMethod::kMDependentPaulin}) {
    if (!wanted(method)) continue;
    if (!options.m) {
      push(skipped(method, t, "no dependence range m given"));
      continue;
    }
    const int m = *options.m;
    bool fits = m >= 1;
    for (const auto& e : graph.edges()) fits = fits && (e.v - e.u) <= m;
    if (!fits) {
      push(skipped(method, t, "dependency graph has an edge longer than m = " + std::to_string(m)));
      continue;
    }
    auto md = m_dependent_denominator(graph.order(), m, c,
                                      method == BoundMethod::kMDependent ? MDependentVariant::kMinBlock
                                                                         : MDependentVariant::kPaulin,
                                      options.blocks);
    auto r = with_bound(method, from_exact(md.value), t);
    r.blocks = std::move(md.blocks);
    push(std::move(r));
  }

  std::stable_sort(applicable.begin(), applicable.end(), [](const BoundReport& a, const BoundReport& b) {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.method < b.method;
  });
  applicable.insert(applicable.end(), skipped_reports.begin(), skipped_reports.end());
  return applicable;
}

std::string to_string(BoundMethod method) {
  switch (method) {
    case BoundMethod::kMcDiarmid: return "mcdiarmid";
    case BoundMethod::kJanson: return "janson";
    case BoundMethod::kTree: return "tree";
    case BoundMethod::kForest: return "forest";
    case BoundMethod::kDecomposable: return "decomposable";
    case BoundMethod::kMDependent: return "m_dependent";
    case BoundMethod::kMDependentPaulin: return "m_dependent_paulin";
  }
  return "unknown";
}

std::optional<BoundMethod> parse_bound_method(const std::string& name) {
  for (auto m : {BoundMethod::kMcDiarmid, BoundMethod::kJanson, BoundMethod::kTree, BoundMethod::kForest,
                 BoundMethod::kDecomposable, BoundMethod::kMDependent, BoundMethod::kMDependentPaulin}) {
    if (to_string(m) == name) return m;
  }
  if (name == "paulin") return BoundMethod::kMDependentPaulin;
  if (name == "m-dependent" || name == "mdep") return BoundMethod::kMDependent;
  return std::nullopt;
}

std::string to_string(ValidUnder valid_under) {
  return valid_under == ValidUnder::kDependence ? "dependence" : "independence-only";
}

}  // namespace graphdep

#include <algorithm>
#include <cmath>
#include <random>
#include <numeric>
#include <set>

#include "doctest.h"
#include "graphdep/covers.hpp"
#include "graphdep/errors.hpp"
#include "oracles.hpp"

using namespace graphdep;

namespace {

using Sets = std::vector<std::vector<int>>;

Sets sorted(Sets s) {
  std::sort(s.begin(), s.end());
  return s;
}

Graph example_graph() { return disjoint_union(complete_graph(3), empty_graph(6)); }

WeightedCover three_part_cover() {
  return {CoverKind::kForest,
          {{{1, 2, 4, 5, 6, 7}, Rational(1, 2)}, {{1, 3, 4, 5, 8, 9}, Rational(1, 2)}, {{2, 3, 6, 7, 8, 9}, Rational(1, 2)}}};
}

LipschitzProfile random_profile(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(0, 8);
  std::vector<Rational> c;
  for (int i = 0; i < n; ++i) c.emplace_back(num(rng), 2);
  return LipschitzProfile(c);
}

}  // namespace

TEST_CASE("enumerate_independent_sets") {
  CHECK(sorted(enumerate_independent_sets(complete_graph(3), 100)) == Sets{{1}, {2}, {3}});
  CHECK(sorted(enumerate_independent_sets(empty_graph(2), 100)) == Sets{{1}, {1, 2}, {2}});
  CHECK(sorted(enumerate_independent_sets(path_graph(3), 100)) == Sets{{1}, {1, 3}, {2}, {3}});
  CHECK(sorted(enumerate_independent_sets(path_graph(3), 100, true)) == Sets{{1, 3}, {2}});
  CHECK_THROWS_AS(enumerate_independent_sets(empty_graph(12), 1000), ScaleError);
}

TEST_CASE("enumerate_induced_forests") {
  CHECK(enumerate_induced_forests(complete_graph(3), 100).size() == 6);
  CHECK(enumerate_induced_forests(path_graph(7), 1000).size() == 127);
  CHECK(enumerate_induced_forests(example_graph(), 1000).size() == 447);
  CHECK_THROWS_AS(enumerate_induced_forests(example_graph(), 400), ScaleError);
}

TEST_CASE("enumeration agrees with brute force on random graphs") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 9;
    auto g = oracle::random_graph(rng, n, 0.45);
    Sets forests, independents;
    for (auto s : oracle::all_nonempty(n)) {
      if (oracle::acyclic(g, s)) forests.push_back(oracle::members(s, n));
      if (oracle::independent(g, s)) independents.push_back(oracle::members(s, n));
    }
    CHECK(sorted(enumerate_induced_forests(g, 1 << 12)) == sorted(forests));
    CHECK(sorted(enumerate_independent_sets(g, 1 << 12)) == sorted(independents));
  }
}

TEST_CASE("validate_cover") {
  WeightedCover triangle{CoverKind::kForest, {{{1, 2}, Rational(1, 2)}, {{1, 3}, Rational(1, 2)}, {{2, 3}, Rational(1, 2)}}};
  CHECK(validate_cover(complete_graph(3), triangle).empty());

  triangle.kind = CoverKind::kIndependent;
  auto violations = validate_cover(complete_graph(3), triangle);
  REQUIRE(violations.size() == 3);
  CHECK(violations[0].type == CoverViolation::Type::kNotIndependent);
  CHECK(violations[0].index == 0);

  WeightedCover whole{CoverKind::kForest, {{{1, 2, 3, 4}, Rational(1)}}};
  CHECK(validate_cover(path_graph(4), whole).empty());
  CHECK(validate_cover(cycle_graph(4), whole).front().type == CoverViolation::Type::kNotForest);

  WeightedCover short_cover{CoverKind::kForest, {{{1}, Rational(1, 2)}, {{2}, Rational(1)}}};
  auto coverage = validate_cover(empty_graph(2), short_cover);
  REQUIRE(coverage.size() == 1);
  CHECK(coverage[0].type == CoverViolation::Type::kCoverage);
  CHECK(coverage[0].index == 1);

  WeightedCover empty_part{CoverKind::kForest, {{{}, Rational(1)}, {{1}, Rational(1)}}};
  CHECK(validate_cover(empty_graph(1), empty_part).front().type == CoverViolation::Type::kEmptyPart);

  CHECK(validate_cover(example_graph(), three_part_cover()).empty());
}

TEST_CASE("fractional chromatic number") {
  auto k3 = fractional_chromatic_number(complete_graph(3));
  CHECK(k3.objective_exact == Rational(3));
  CHECK(k3.optimality == Optimality::kExact);
  CHECK(validate_cover(complete_graph(3), k3.cover).empty());

  CHECK(fractional_chromatic_number(path_graph(6)).objective_exact == Rational(2));
  CHECK(fractional_chromatic_number(build_graph(5, {{1, 2}, {1, 3}, {1, 4}, {4, 5}})).objective_exact == Rational(2));
  // Frozen from an independent LP solve over the ten independent sets.
  auto c5 = fractional_chromatic_number(cycle_graph(5));
  CHECK(c5.objective_exact == Rational(5, 2));
  CHECK(validate_cover(cycle_graph(5), c5.cover).empty());
  CHECK(fractional_chromatic_number(empty_graph(4)).objective_exact == Rational(1));
  CHECK(fractional_chromatic_number(example_graph()).objective_exact == Rational(3));
}

TEST_CASE("fractional vertex arboricity") {
  CHECK(fractional_vertex_arboricity(path_graph(5)).objective_exact == Rational(1));
  CHECK(fractional_vertex_arboricity(empty_graph(3)).objective_exact == Rational(1));
  // Frozen from independent LP solves (6 and 10 induced forests).
  auto k3 = fractional_vertex_arboricity(complete_graph(3));
  CHECK(k3.objective_exact == Rational(3, 2));
  CHECK(validate_cover(complete_graph(3), k3.cover).empty());
  CHECK(fractional_vertex_arboricity(complete_graph(4)).objective_exact == Rational(2));
}

TEST_CASE("fractional numbers agree with basis enumeration on small random graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + trial % 4;
    auto g = oracle::random_graph(rng, n, 0.5);
    std::vector<oracle::Set> indep, forests;
    for (auto s : oracle::all_nonempty(n)) {
      if (oracle::independent(g, s)) indep.push_back(s);
      if (oracle::acyclic(g, s)) forests.push_back(s);
    }
    auto chi = oracle::covering_lp_by_bases(n, indep, std::vector<mpq_class>(indep.size(), 1));
    auto arb = oracle::covering_lp_by_bases(n, forests, std::vector<mpq_class>(forests.size(), 1));
    CHECK(fractional_chromatic_number(g).objective_exact == *chi);
    CHECK(fractional_vertex_arboricity(g).objective_exact == *arb);
  }
}

TEST_CASE("forest_part_cost") {
  auto ones = LipschitzProfile::uniform(9, 1);
  CHECK(forest_part_cost(example_graph(), std::vector<int>{1, 2, 4, 5, 6, 7}, ones) == 3.0);
  CHECK(forest_part_cost_squared(example_graph(), std::vector<int>{1, 2, 4, 5, 6, 7}, ones) == 9);

  LipschitzProfile c(std::vector<Rational>{Rational(7, 2), 1, 2});
  CHECK(forest_part_cost(complete_graph(3), std::vector<int>{1}, c) == 3.5);

  LipschitzProfile c123(std::vector<Rational>{1, 2, 3});
  CHECK(forest_part_cost_squared(path_graph(3), std::vector<int>{1, 2, 3}, c123) == 35);
  CHECK(forest_part_cost(path_graph(3), std::vector<int>{1, 2, 3}, c123) == doctest::Approx(std::sqrt(35.0)));

  CHECK_THROWS_AS(forest_part_cost(complete_graph(3), std::vector<int>{1, 2, 3}, c123), KindError);
}

TEST_CASE("optimize_D examples") {
  auto empty = optimize_D(empty_graph(3), LipschitzProfile::uniform(3, 1));
  CHECK(empty.value == doctest::Approx(3.0).epsilon(1e-12));
  REQUIRE(empty.cover.parts.size() == 1);
  CHECK(empty.cover.parts[0].vertices == std::vector<int>{1, 2, 3});

  auto k2 = optimize_D(complete_graph(2), LipschitzProfile::uniform(2, 1));
  CHECK(k2.value_exact == Rational(4));
  CHECK(k2.cover.parts.size() == 2);

  // Frozen from an independent LP solve over all 447 induced forests; the
  // optimum is the cover {V \ {3}, {3}} with value (1 + sqrt 11)^2.
  auto ex = optimize_D(example_graph(), LipschitzProfile::uniform(9, 1));
  CHECK(ex.optimality == Optimality::kExact);
  CHECK(ex.value == doctest::Approx(18.6332495807108).epsilon(1e-12));
  CHECK(ex.value == doctest::Approx(std::pow(1 + std::sqrt(11.0), 2)).epsilon(1e-12));
  CHECK(ex.value <= 81.0 / 4);
  CHECK(validate_cover(example_graph(), ex.cover).empty());

  auto witness = three_part_cover();
  CHECK(cover_objective_exact(example_graph(), witness, LipschitzProfile::uniform(9, 1)) == Rational(9, 2));
}

TEST_CASE("enumerated D is certified optimal by its duals") {
  auto g = example_graph();
  auto c = LipschitzProfile::uniform(9, 1);
  auto sol = optimize_D(g, c);
  double dual_total = 0;
  for (double y : sol.duals) dual_total += y;
  CHECK(dual_total == doctest::Approx(sol.objective).epsilon(1e-12));
  for (auto s : oracle::all_nonempty(9)) {
    if (!oracle::acyclic(g, s)) continue;
    auto part = oracle::members(s, 9);
    double lhs = 0;
    for (int v : part) lhs += sol.duals[v - 1];
    CHECK(lhs <= forest_part_cost(g, part, c) + 1e-9);
  }
}

TEST_CASE("cover solutions are valid, scale, and dominate as expected on random graphs") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 8;
    auto g = oracle::random_graph(rng, n, 0.4);
    auto c = random_profile(rng, n);
    auto d = optimize_D(g, c);
    CHECK(validate_cover(g, d.cover).empty());
    CHECK(cover_objective(g, d.cover, c) == doctest::Approx(d.objective).epsilon(1e-9));

    auto chi = fractional_chromatic_number(g);
    CHECK(validate_cover(g, chi.cover).empty());
    CHECK(d.value <= chi.objective * c.squared_norm().get_d() * (1 + 1e-9) + 1e-12);

    auto scaled = optimize_D(g, c.scaled(3));
    CHECK(scaled.value == doctest::Approx(9 * d.value).epsilon(1e-9));

    auto arb = fractional_vertex_arboricity(g);
    CHECK(validate_cover(g, arb.cover).empty());
    CHECK(*arb.objective_exact <= *chi.objective_exact);
  }
}

TEST_CASE("forest single-part cover reproduces the forest denominator bound") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 9;
    auto g = oracle::random_forest(rng, n, 0.7);
    auto c = random_profile(rng, n);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    auto whole = forest_part_cost_squared(g, all, c);
    CHECK(optimize_D(g, c).value <= whole.get_d() * (1 + 1e-12) + 1e-12);
  }
}

TEST_CASE("chi_f and a_f never decrease when an edge is added") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 5;
    auto g = oracle::random_graph(rng, n, 0.3);
    std::vector<std::pair<int, int>> missing;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (!g.adjacent(i, j)) missing.emplace_back(i, j);
    if (missing.empty()) continue;
    std::vector<std::pair<int, int>> edges;
    for (auto& e : g.edges()) edges.emplace_back(e.u, e.v);
    edges.push_back(missing[rng() % missing.size()]);
    auto h = build_graph(n, edges);
    CHECK(*fractional_chromatic_number(g).objective_exact <= *fractional_chromatic_number(h).objective_exact);
    CHECK(*fractional_vertex_arboricity(g).objective_exact <= *fractional_vertex_arboricity(h).objective_exact);
  }
}

TEST_CASE("column generation and greedy are upper bounds on the enumerated optimum") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + trial % 7;
    auto g = oracle::random_graph(rng, n, 0.35);
    auto c = random_profile(rng, n);
    auto exact = optimize_D(g, c);

    CoverOptions cg;
    cg.strategy = CoverStrategy::kColumnGeneration;
    auto generated = optimize_D(g, c, cg);
    CHECK(generated.optimality == Optimality::kUpperBound);
    CHECK(generated.method == CoverMethod::kColumnGeneration);
    CHECK(validate_cover(g, generated.cover).empty());
    CHECK(generated.objective >= exact.objective - 1e-9);
    // Pricing is exhaustive at this size, so the master reaches the optimum.
    CHECK(generated.objective == doctest::Approx(exact.objective).epsilon(1e-7));

    CoverOptions greedy;
    greedy.strategy = CoverStrategy::kGreedy;
    auto heuristic = optimize_D(g, c, greedy);
    CHECK(heuristic.method == CoverMethod::kHeuristic);
    CHECK(validate_cover(g, heuristic.cover).empty());
    CHECK(heuristic.objective >= exact.objective - 1e-9);

    auto chi_cg = fractional_chromatic_number(g, cg);
    CHECK(chi_cg.objective == doctest::Approx(fractional_chromatic_number(g).objective));
  }
}

TEST_CASE("column generation with local-search pricing on a larger graph") {
  std::mt19937_64 rng(43);
  auto g = oracle::random_graph(rng, 24, 0.2);
  auto c = LipschitzProfile::uniform(24, 1);
  CoverOptions opts;
  opts.strategy = CoverStrategy::kColumnGeneration;
  opts.pricing_budget = 2000;
  auto d = optimize_D(g, c, opts);
  CHECK(validate_cover(g, d.cover).empty());
  CHECK(d.value <= fractional_chromatic_number(g, opts).objective * 24 * (1 + 1e-9));
}

TEST_CASE("normalize_cover removes surplus without leaving the family") {
  WeightedCover surplus{CoverKind::kIndependent,
                        {{{1, 3}, Rational(1)}, {{1, 4}, Rational(1, 2)}, {{2, 4}, Rational(1)}}};
  auto fixed = normalize_cover(surplus, 4);
  CHECK(validate_cover(cycle_graph(4), fixed).empty());
}

TEST_CASE("zero coefficients are allowed") {
  LipschitzProfile c(std::vector<Rational>{0, 0, 1});
  auto d = optimize_D(complete_graph(3), c);
  CHECK(validate_cover(complete_graph(3), d.cover).empty());
  CHECK(d.value == doctest::Approx(1.0));
}

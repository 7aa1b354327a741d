#include <random>

#include "doctest.h"
#include "graphdep/errors.hpp"
#include "graphdep/lp.hpp"
#include "oracles.hpp"

using namespace graphdep;

namespace {

template <class Scalar>
void check_dual_certificate(int rows, const std::vector<VertexSet>& parts, const std::vector<Scalar>& costs,
                            const CoveringLpSolution<Scalar>& sol, double tol) {
  Scalar dual_objective = 0;
  for (const auto& y : sol.duals) {
    CHECK(y >= -tol);
    dual_objective += y;
  }
  for (std::size_t k = 0; k < parts.size(); ++k) {
    Scalar lhs = 0;
    for (int r = 0; r < rows; ++r)
      if ((parts[k] >> r) & 1U) lhs += sol.duals[r];
    CHECK(lhs <= costs[k] + tol);
  }
  if constexpr (std::is_same_v<Scalar, double>) {
    CHECK(dual_objective == doctest::Approx(sol.objective).epsilon(1e-9));
  } else {
    CHECK(dual_objective == sol.objective);
  }
}

}  // namespace

TEST_CASE("five-cycle independent-set LP has value 5/2") {
  // Independent sets of C5: 5 singletons and the 5 non-adjacent pairs.
  std::vector<VertexSet> parts;
  for (int v = 0; v < 5; ++v) parts.push_back(VertexSet{1} << v);
  for (int v = 0; v < 5; ++v) parts.push_back((VertexSet{1} << v) | (VertexSet{1} << ((v + 2) % 5)));
  std::vector<Rational> costs(parts.size(), Rational(1));
  auto sol = solve_covering_lp<Rational>(5, parts, costs);
  CHECK(sol.objective == Rational(5, 2));
  check_dual_certificate(5, parts, costs, sol, 0);

  auto exact = solve_covering_lp_exact(5, parts, costs);
  CHECK(exact.objective == Rational(5, 2));
}

TEST_CASE("rows without a singleton column are rejected") {
  std::vector<VertexSet> parts{0b11};
  std::vector<double> costs{1.0};
  CHECK_THROWS_AS(solve_covering_lp<double>(2, parts, costs), InputError);
}

TEST_CASE("random covering LPs match basis enumeration") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const int rows = 1 + trial % 4;
    const int extra = 1 + static_cast<int>(rng() % 5);
    std::vector<VertexSet> parts;
    for (int r = 0; r < rows; ++r) parts.push_back(VertexSet{1} << r);
    std::uniform_int_distribution<VertexSet> pick(1, (VertexSet{1} << rows) - 1);
    for (int k = 0; k < extra; ++k) parts.push_back(pick(rng));
    std::uniform_int_distribution<int> num(0, 12);
    std::vector<Rational> costs;
    std::vector<double> dcosts;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      costs.emplace_back(num(rng), 4);
      costs.back().canonicalize();
      dcosts.push_back(costs.back().get_d());
    }
    auto expected = oracle::covering_lp_by_bases(rows, parts, costs);
    REQUIRE(expected.has_value());

    auto exact = solve_covering_lp<Rational>(rows, parts, costs);
    CHECK(exact.objective == *expected);
    check_dual_certificate(rows, parts, costs, exact, 0);

    auto approx = solve_covering_lp<double>(rows, parts, dcosts);
    CHECK(approx.objective == doctest::Approx(expected->get_d()).epsilon(1e-12));
    check_dual_certificate(rows, parts, dcosts, approx, 1e-9);

    auto w = exact_basic_weights(rows, parts, exact.basis);
    REQUIRE(w.has_value());
    CHECK(*w == exact.weights);
  }
}

TEST_CASE("degenerate covering LP terminates") {
  // All subsets of a 6-set with unit cost: massively degenerate, optimum 1.
  std::vector<VertexSet> parts;
  for (VertexSet s = 1; s < 64; ++s) parts.push_back(s);
  std::vector<Rational> costs(parts.size(), Rational(1));
  auto sol = solve_covering_lp<Rational>(6, parts, costs);
  CHECK(sol.objective == 1);
}

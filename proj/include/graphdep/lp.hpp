#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "graphdep/rational.hpp"

namespace graphdep {

/// Bit v - 1 stands for vertex v; covers work on graphs of at most 64 vertices.
using VertexSet = std::uint64_t;

inline constexpr int kMaxCoverVertices = 64;

/// Solution of  min sum_k cost_k w_k  s.t.  sum_{k : v in S_k} w_k >= 1 for
/// every row v, w >= 0.
template <class Scalar>
struct CoveringLpSolution {
  std::vector<Scalar> weights;  // one per part column
  std::vector<Scalar> duals;    // one per row; a certificate of optimality
  Scalar objective{};
  /// Basic columns. Index k < parts.size() is part k; parts.size() + r is the
  /// surplus column of row r.
  std::vector<int> basis;
  int iterations = 0;
};

/// Revised primal simplex on the covering LP with an explicit basis inverse.
/// Every row must have its singleton among `parts`; the singleton columns form
/// the starting basis unless `warm_basis` is given. Dantzig pricing with a
/// permanent switch to Bland's rule after a long degenerate streak.
template <class Scalar>
CoveringLpSolution<Scalar> solve_covering_lp(int rows, std::span<const VertexSet> parts,
                                             std::span<const Scalar> costs,
                                             std::optional<std::vector<int>> warm_basis = std::nullopt);

/// Exact solve: floating-point simplex first, then an exact simplex warm
/// started from the floating-point basis.
CoveringLpSolution<Rational> solve_covering_lp_exact(int rows, std::span<const VertexSet> parts,
                                                     std::span<const Rational> costs);

/// Solves B w_B = 1 in exact arithmetic for the given basis and returns the
/// full weight vector over `parts` (zero off the basis). std::nullopt when the
/// basis matrix is singular.
std::optional<std::vector<Rational>> exact_basic_weights(int rows, std::span<const VertexSet> parts,
                                                         std::span<const int> basis);

extern template CoveringLpSolution<double> solve_covering_lp<double>(int, std::span<const VertexSet>,
                                                                     std::span<const double>,
                                                                     std::optional<std::vector<int>>);
extern template CoveringLpSolution<Rational> solve_covering_lp<Rational>(int, std::span<const VertexSet>,
                                                                         std::span<const Rational>,
                                                                         std::optional<std::vector<int>>);

}  // namespace graphdep

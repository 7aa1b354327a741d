#include "graphdep/lp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "graphdep/errors.hpp"

namespace graphdep {

namespace {

template <class Scalar>
struct Tolerances;

template <>
struct Tolerances<double> {
  static double reduced_cost() { return 1e-10; }
  static double pivot() { return 1e-11; }
  static bool is_zero(double x) { return std::abs(x) <= 1e-12; }
};

template <>
struct Tolerances<Rational> {
  static Rational reduced_cost() { return 0; }
  static Rational pivot() { return 0; }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
};


template <class Scalar>
std::vector<std::vector<Scalar>> identity(int m) {
  std::vector<std::vector<Scalar>> out(m, std::vector<Scalar>(m, Scalar(0)));
  for (int i = 0; i < m; ++i) out[i][i] = 1;
  return out;
}

template <class Scalar>
Scalar abs_value(const Scalar& x) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return std::abs(x);
  } else {
    return abs(x);
  }
}

/// Column j of the constraint matrix as a dense vector.
template <class Scalar>
std::vector<Scalar> dense_column(int rows, std::span<const VertexSet> parts, int j) {
  std::vector<Scalar> col(rows, Scalar(0));
  const int p = static_cast<int>(parts.size());
  if (j < p) {
    for (int r = 0; r < rows; ++r) {
      if ((parts[j] >> r) & 1U) col[r] = 1;
    }
  } else {
    col[j - p] = -1;
  }
  return col;
}

/// Inverse of the basis matrix by Gauss-Jordan with partial pivoting.
template <class Scalar>
std::optional<std::vector<std::vector<Scalar>>> invert_basis(int rows, std::span<const VertexSet> parts,
                                                             std::span<const int> basis) {
  const int m = rows;
  std::vector<std::vector<Scalar>> a(m, std::vector<Scalar>(2 * m, Scalar(0)));
  for (int c = 0; c < m; ++c) {
    auto col = dense_column<Scalar>(rows, parts, basis[c]);
    for (int r = 0; r < m; ++r) a[r][c] = col[r];
  }
  for (int r = 0; r < m; ++r) a[r][m + r] = 1;
  for (int c = 0; c < m; ++c) {
    int best = -1;
    for (int r = c; r < m; ++r) {
      if (Tolerances<Scalar>::is_zero(a[r][c])) continue;
      if (best < 0 || abs_value(a[r][c]) > abs_value(a[best][c])) best = r;
    }
    if (best < 0) return std::nullopt;
    std::swap(a[c], a[best]);
    const Scalar inv = Scalar(1) / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == c || Tolerances<Scalar>::is_zero(a[r][c])) continue;
      const Scalar f = a[r][c];
      for (int k = 0; k < 2 * m; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<Scalar>> inv(m, std::vector<Scalar>(m));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) inv[r][c] = a[r][m + c];
  return inv;
}

}  // namespace

template <class Scalar>
CoveringLpSolution<Scalar> solve_covering_lp(int rows, std::span<const VertexSet> parts,
                                             std::span<const Scalar> costs,
                                             std::optional<std::vector<int>> warm_basis) {
  using Tol = Tolerances<Scalar>;
  if (rows < 1 || rows > kMaxCoverVertices) throw InputError("covering LP needs 1..64 rows");
  if (parts.size() != costs.size()) throw InputError("covering LP: one cost per part required");
  const int m = rows;
  const int p = static_cast<int>(parts.size());
  const int total = p + m;

  std::vector<int> basis;
  std::vector<std::vector<Scalar>> binv;
  if (warm_basis && static_cast<int>(warm_basis->size()) == m) {
    basis = *warm_basis;
    if (auto inv = invert_basis<Scalar>(rows, parts, basis)) binv = std::move(*inv);
  }
  if (binv.empty()) {
    basis.assign(m, -1);
    for (int k = 0; k < p; ++k) {
      if (std::popcount(parts[k]) == 1) {
        const int r = std::countr_zero(parts[k]);
        if (r < m && basis[r] < 0) basis[r] = k;
      }
    }
    for (int r = 0; r < m; ++r) {
      if (basis[r] < 0) throw InputError("covering LP: row " + std::to_string(r + 1) + " has no singleton column");
    }
    binv = identity<Scalar>(m);
  }

  auto cost_of = [&](int j) -> Scalar { return j < p ? costs[j] : Scalar(0); };

  std::vector<Scalar> xb(m, Scalar(0));
  auto recompute_xb = [&] {
    for (int r = 0; r < m; ++r) {
      Scalar s = 0;
      for (int c = 0; c < m; ++c) s += binv[r][c];
      xb[r] = s;
    }
  };
  recompute_xb();
  for (int r = 0; r < m; ++r) {
    if (xb[r] < -Tol::pivot() * 100) {
      // Warm basis is not primal feasible; restart from singletons.
      return solve_covering_lp<Scalar>(rows, parts, costs, std::nullopt);
    }
  }

  std::vector<Scalar> y(m), dir(m);
  bool bland = false;
  int degenerate_streak = 0;
  int iterations = 0;
  const int iteration_limit = 50000 + 50 * total;

  while (true) {
    for (int c = 0; c < m; ++c) {
      Scalar s = 0;
      for (int r = 0; r < m; ++r) s += cost_of(basis[r]) * binv[r][c];
      y[c] = s;
    }

    int entering = -1;
    Scalar best = -Tol::reduced_cost();
    for (int j = 0; j < total; ++j) {
      Scalar d;
      if (j < p) {
        d = costs[j];
        for (VertexSet s = parts[j]; s != 0; s &= s - 1) d -= y[std::countr_zero(s)];
      } else {
        d = y[j - p];
      }
      if (d < best) {
        entering = j;
        if (bland) break;
        best = d;
      }
    }
    if (entering < 0) break;
    if (++iterations > iteration_limit) throw InternalError("covering LP: iteration limit reached");

    auto col = dense_column<Scalar>(rows, parts, entering);
    for (int r = 0; r < m; ++r) {
      Scalar s = 0;
      for (int c = 0; c < m; ++c) {
        if (!Tol::is_zero(col[c])) s += binv[r][c] * col[c];
      }
      dir[r] = s;
    }

    int leaving = -1;
    Scalar ratio = 0;
    for (int r = 0; r < m; ++r) {
      if (!(dir[r] > Tol::pivot())) continue;
      Scalar q = xb[r] / dir[r];
      if (leaving < 0 || q < ratio || (q == ratio && basis[r] < basis[leaving])) {
        leaving = r;
        ratio = q;
      }
    }
    if (leaving < 0) throw InternalError("covering LP reported unbounded; costs must be nonnegative");

    degenerate_streak = Tol::is_zero(ratio) ? degenerate_streak + 1 : 0;
    if (degenerate_streak > 50) bland = true;

    const Scalar piv = dir[leaving];
    for (int c = 0; c < m; ++c) binv[leaving][c] /= piv;
    xb[leaving] /= piv;
    for (int r = 0; r < m; ++r) {
      if (r == leaving || Tol::is_zero(dir[r])) continue;
      const Scalar f = dir[r];
      for (int c = 0; c < m; ++c) binv[r][c] -= f * binv[leaving][c];
      xb[r] -= f * xb[leaving];
    }
    basis[leaving] = entering;

    if constexpr (std::is_same_v<Scalar, double>) {
      if (iterations % 64 == 0) {
        if (auto inv = invert_basis<double>(rows, parts, basis)) {
          binv = std::move(*inv);
          recompute_xb();
        }
      }
    }
  }

  CoveringLpSolution<Scalar> out;
  out.weights.assign(p, Scalar(0));
  out.objective = 0;
  for (int r = 0; r < m; ++r) {
    if (basis[r] < p) {
      Scalar w = xb[r];
      if constexpr (std::is_same_v<Scalar, double>) w = std::max(w, 0.0);
      out.weights[basis[r]] = w;
      out.objective += w * costs[basis[r]];
    }
  }
  out.duals = y;
  out.basis = basis;
  out.iterations = iterations;
  return out;
}

template CoveringLpSolution<double> solve_covering_lp<double>(int, std::span<const VertexSet>,
                                                              std::span<const double>,
                                                              std::optional<std::vector<int>>);
template CoveringLpSolution<Rational> solve_covering_lp<Rational>(int, std::span<const VertexSet>,
                                                                  std::span<const Rational>,
                                                                  std::optional<std::vector<int>>);

CoveringLpSolution<Rational> solve_covering_lp_exact(int rows, std::span<const VertexSet> parts,
                                                     std::span<const Rational> costs) {
  std::vector<double> approx;
  approx.reserve(costs.size());
  for (const auto& c : costs) approx.push_back(c.get_d());
  auto warm = solve_covering_lp<double>(rows, parts, approx);
  return solve_covering_lp<Rational>(rows, parts, costs, warm.basis);
}

std::optional<std::vector<Rational>> exact_basic_weights(int rows, std::span<const VertexSet> parts,
                                                         std::span<const int> basis) {
  auto inv = invert_basis<Rational>(rows, parts, basis);
  if (!inv) return std::nullopt;
  const int p = static_cast<int>(parts.size());
  std::vector<Rational> w(p, Rational(0));
  for (int r = 0; r < rows; ++r) {
    if (basis[r] >= p) continue;
    Rational s = 0;
    for (int c = 0; c < rows; ++c) s += (*inv)[r][c];
    w[basis[r]] = s;
  }
  return w;
}

}  // namespace graphdep

#pragma once

// Brute-force reference computations used only by the tests. Nothing in here
// calls into the library's LP, enumeration or cover code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "graphdep/graph.hpp"

namespace oracle {

using Set = std::uint64_t;

inline bool contains(Set s, int v) { return (s >> (v - 1)) & 1U; }

inline std::vector<int> members(Set s, int n) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v)
    if (contains(s, v)) out.push_back(v);
  return out;
}

/// Acyclicity by depth-first search: a back edge to a non-parent is a cycle.
inline bool acyclic(const graphdep::Graph& g, Set s) {
  const int n = g.order();
  std::vector<int> state(n + 1, 0);
  std::function<bool(int, int)> dfs = [&](int v, int from) {
    state[v] = 1;
    for (int w : g.neighbors(v)) {
      if (!contains(s, w) || w == from) continue;
      if (state[w] != 0) return false;
      if (!dfs(w, v)) return false;
    }
    return true;
  };
  for (int v = 1; v <= n; ++v) {
    if (contains(s, v) && state[v] == 0 && !dfs(v, 0)) return false;
  }
  return true;
}

inline bool independent(const graphdep::Graph& g, Set s) {
  for (int v = 1; v <= g.order(); ++v) {
    if (!contains(s, v)) continue;
    for (int w : g.neighbors(v))
      if (contains(s, w)) return false;
  }
  return true;
}

inline std::vector<Set> all_nonempty(int n) {
  std::vector<Set> out;
  for (Set s = 1; s < (Set{1} << n); ++s) out.push_back(s);
  return out;
}

/// Minimum of cost.w over { A w >= 1, w >= 0 } by enumerating every basis of
/// the standard form [A | -I] and keeping the feasible basic solutions.
inline std::optional<mpq_class> covering_lp_by_bases(int rows, const std::vector<Set>& parts,
                                                     const std::vector<mpq_class>& costs) {
  const int p = static_cast<int>(parts.size());
  const int total = p + rows;
  auto entry = [&](int r, int j) -> mpq_class {
    if (j < p) return contains(parts[j], r + 1) ? 1 : 0;
    return j - p == r ? -1 : 0;
  };
  std::optional<mpq_class> best;
  std::vector<int> pick(rows);
  std::function<void(int, int)> choose = [&](int k, int start) {
    if (k == rows) {
      std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(rows + 1));
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < rows; ++c) a[r][c] = entry(r, pick[c]);
        a[r][rows] = 1;
      }
      for (int c = 0; c < rows; ++c) {
        int piv = -1;
        for (int r = c; r < rows; ++r)
          if (a[r][c] != 0) {
            piv = r;
            break;
          }
        if (piv < 0) return;
        std::swap(a[c], a[piv]);
        for (int r = 0; r < rows; ++r) {
          if (r == c || a[r][c] == 0) continue;
          mpq_class f = a[r][c] / a[c][c];
          for (int q = c; q <= rows; ++q) a[r][q] -= f * a[c][q];
        }
      }
      mpq_class objective = 0;
      for (int c = 0; c < rows; ++c) {
        mpq_class x = a[c][rows] / a[c][c];
        if (x < 0) return;
        if (pick[c] < p) objective += x * costs[pick[c]];
      }
      if (!best || objective < *best) best = objective;
      return;
    }
    for (int j = start; j <= total - (rows - k); ++j) {
      pick[k] = j;
      choose(k + 1, j + 1);
    }
  };
  choose(0, 0);
  return best;
}

inline graphdep::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return graphdep::build_graph(n, edges);
}

inline graphdep::Graph random_forest(std::mt19937_64& rng, int n, double attach) {
  std::bernoulli_distribution coin(attach);
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= n; ++v) {
    if (!coin(rng)) continue;
    std::uniform_int_distribution<int> pick(1, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  return graphdep::build_graph(n, edges);
}

}  // namespace oracle

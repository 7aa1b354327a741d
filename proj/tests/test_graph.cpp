#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "graphdep/errors.hpp"
#include "graphdep/graph.hpp"

using namespace graphdep;

namespace {

std::vector<Edge> edge_list(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> out;
  for (auto [u, v] : pairs) out.push_back({u, v});
  return out;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return build_graph(n, edges);
}

Graph random_tree(std::mt19937_64& rng, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 2; v <= n; ++v) {
    std::uniform_int_distribution<int> pick(1, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  return build_graph(n, edges);
}

}  // namespace

TEST_CASE("build_graph normalizes edges") {
  CHECK(build_graph(3, {{1, 2}, {2, 3}, {1, 3}}) == complete_graph(3));
  CHECK(build_graph(3, {}).edge_count() == 0);
  CHECK(build_graph(3, {{1, 2}, {2, 1}}).edges() == edge_list({{1, 2}}));
  CHECK(build_graph(3, {{3, 1}}).edges() == edge_list({{1, 3}}));
}

TEST_CASE("build_graph rejects bad pairs and names them") {
  CHECK_THROWS_WITH_AS(build_graph(3, {{2, 2}}), doctest::Contains("(2, 2)"), InputError);
  CHECK_THROWS_WITH_AS(build_graph(3, {{1, 4}}), doctest::Contains("(1, 4)"), InputError);
  CHECK_THROWS_AS(build_graph(3, {{0, 1}}), InputError);
}

TEST_CASE("classify") {
  auto empty = classify(empty_graph(3));
  CHECK(empty.is_forest);
  CHECK(empty.tree_count == 3);
  CHECK(empty.components.size() == 3);

  auto path = classify(path_graph(3));
  CHECK(path.is_forest);
  CHECK(path.tree_count == 1);

  CHECK_FALSE(classify(complete_graph(3)).is_forest);

  auto mixed = classify(build_graph(6, {{1, 4}, {4, 6}, {2, 3}}));
  CHECK(mixed.components == std::vector<std::vector<int>>{{1, 4, 6}, {2, 3}, {5}});
}

TEST_CASE("classify on random graphs: components partition and forest test agree with edge count") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 12;
    auto g = random_graph(rng, n, 0.25);
    auto cls = classify(g);
    std::vector<int> seen;
    for (auto& comp : cls.components) seen.insert(seen.end(), comp.begin(), comp.end());
    std::sort(seen.begin(), seen.end());
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    CHECK(seen == all);
    CHECK(cls.is_forest == (g.edge_count() == n - cls.tree_count));
  }
}

TEST_CASE("m_dependence_graph") {
  CHECK(m_dependence_graph(4, 1) == path_graph(4));
  CHECK(m_dependence_graph(4, 3) == complete_graph(4));
  CHECK(m_dependence_graph(5, 2).edges() ==
        edge_list({{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {3, 5}, {4, 5}}));
  CHECK_THROWS_AS(m_dependence_graph(4, 0), InputError);
  for (int n = 2; n <= 30; ++n) {
    auto cls = classify(m_dependence_graph(n, 1));
    CHECK(cls.is_forest);
    CHECK(cls.tree_count == 1);
    CHECK(m_dependence_graph(n, 1).edge_count() == n - 1);
  }
}

TEST_CASE("block_partition") {
  using Blocks = std::vector<std::vector<int>>;
  CHECK(block_partition(7, 3).blocks == Blocks{{1, 2, 3}, {4, 5, 6}, {7}});
  CHECK(block_partition(9, 3).blocks == Blocks{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK(block_partition(3, 5).blocks == Blocks{{1, 2, 3}});
  for (int n = 1; n <= 25; ++n) {
    for (int m = 1; m <= 8; ++m) {
      auto bp = block_partition(n, m);
      CHECK(static_cast<int>(bp.blocks.size()) == (n + m - 1) / m);
      int next = 1;
      for (auto& block : bp.blocks) {
        for (int k : block) CHECK(k == next++);
      }
      CHECK(next == n + 1);
      CHECK_NOTHROW(validate_block_partition(bp));
    }
  }
}

TEST_CASE("validate_block_partition rejects blocks that break path dependence") {
  BlockPartition uneven{6, 1, {{1, 2}, {3}, {4, 5, 6}}};
  CHECK_NOTHROW(validate_block_partition(uneven));
  BlockPartition bad{6, 2, {{1, 2}, {3}, {4, 5, 6}}};
  CHECK_THROWS_AS(validate_block_partition(bad), InputError);
  BlockPartition too_thin{6, 2, {{1, 2}, {3}, {4}, {5, 6}}};
  CHECK_THROWS_AS(validate_block_partition(too_thin), InputError);
  BlockPartition missing{4, 1, {{1, 2}, {4}}};
  CHECK_THROWS_AS(validate_block_partition(missing), InputError);
}

TEST_CASE("induced_subgraph") {
  std::vector<int> s12{1, 2};
  CHECK(induced_subgraph(complete_graph(3), s12).graph.edge_count() == 1);
  CHECK(induced_subgraph(cycle_graph(5), std::vector<int>{}).graph.order() == 0);
  auto sub = induced_subgraph(path_graph(3), std::vector<int>{1, 3});
  CHECK(sub.graph.order() == 2);
  CHECK(sub.graph.edge_count() == 0);
  CHECK(sub.labels == std::vector<int>{1, 3});
  CHECK_THROWS_AS(induced_subgraph(path_graph(3), std::vector<int>{4}), InputError);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = random_graph(rng, 8, 0.4);
    std::vector<int> all{1, 2, 3, 4, 5, 6, 7, 8};
    CHECK(induced_subgraph(g, all).graph == g);
  }
}

TEST_CASE("rooted_order examples") {
  auto ones = LipschitzProfile::uniform(3, 1);
  auto path = rooted_order(path_graph(3), std::vector<int>{1, 2, 3}, ones);
  CHECK(path.root() == 1);
  CHECK(path.fringe(3) == std::vector<int>{1, 2, 3});
  CHECK(path.labels == std::vector<int>{3, 2, 1});

  // Star with centre 1 and leaves 2, 3: c_1 = 5, c_2 = 1, c_3 = 2.
  auto star = build_graph(3, {{1, 2}, {1, 3}});
  auto c = LipschitzProfile(std::vector<Rational>{5, 1, 2});
  auto ordered = rooted_order(star, std::vector<int>{1, 2, 3}, c);
  CHECK(ordered.root() == 2);
  CHECK(ordered.labels == std::vector<int>{3, 1, 2});
  CHECK(ordered.parent == std::vector<int>{2, 3, 0});

  auto single = rooted_order(empty_graph(1), std::vector<int>{1}, LipschitzProfile::uniform(1, 1));
  CHECK(single.root() == 1);
  CHECK(single.parent == std::vector<int>{0});
  CHECK(single.s_set(1).empty());

  CHECK_THROWS_AS(rooted_order(complete_graph(3), std::vector<int>{1, 2, 3}, ones), KindError);
  CHECK_THROWS_AS(rooted_order(empty_graph(2), std::vector<int>{1, 2}, LipschitzProfile::uniform(2, 1)), KindError);
}

TEST_CASE("ordered trees satisfy the rooted, ordered and fringe invariants") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coef(0, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 11;
    auto tree = random_tree(rng, n);
    std::vector<Rational> cs;
    for (int i = 0; i < n; ++i) cs.emplace_back(coef(rng));
    LipschitzProfile c(cs);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 1);
    auto ord = rooted_order(tree, all, c);

    // Rooted: minimal coefficient, smallest label among ties.
    int expected_root = 1;
    for (int v = 2; v <= n; ++v)
      if (c.exact_c(v) < c.exact_c(expected_root)) expected_root = v;
    CHECK(ord.root() == expected_root);

    for (int pos = 1; pos <= n; ++pos) {
      const int p = ord.parent_of(pos);
      if (pos == n) {
        CHECK(p == 0);
        continue;
      }
      // Ordered: parents come later, and the parent edge exists.
      CHECK(p > pos);
      CHECK(tree.adjacent(ord.label(pos), ord.label(p)));

      const auto fringe = ord.fringe(pos);
      const auto s = ord.s_set(pos);
      CHECK(fringe.back() == pos);
      CHECK(fringe.front() >= 1);
      // N+(fringe) = fringe + {p}, and disjoint from S_i.
      std::set<int> closed(fringe.begin(), fringe.end());
      for (int q : fringe)
        for (int nb : tree.neighbors(ord.label(q))) closed.insert(ord.position_of(nb));
      std::set<int> expected(fringe.begin(), fringe.end());
      expected.insert(p);
      CHECK(closed == expected);
      for (int q : s) {
        CHECK(closed.count(q) == 0);
      }
    }
  }
}

TEST_CASE("ordered_forest concatenates the trees") {
  auto g = build_graph(5, {{1, 3}, {2, 4}, {4, 5}});
  auto c = LipschitzProfile(std::vector<Rational>{2, 3, 1, 1, 1});
  auto ord = ordered_forest(g, c);
  CHECK(ord.labels == std::vector<int>{1, 3, 2, 5, 4});
  CHECK(ord.parent == std::vector<int>{2, 0, 5, 5, 0});
  CHECK(ord.subtree_size == std::vector<int>{1, 2, 1, 1, 3});
  CHECK(ord.s_set(2) == std::vector<int>{3, 4, 5});
  CHECK_THROWS_AS(ordered_forest(complete_graph(3), LipschitzProfile::uniform(3, 1)), KindError);
}

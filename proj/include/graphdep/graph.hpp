#pragma once

#include <span>
#include <utility>
#include <vector>

#include "graphdep/profile.hpp"

namespace graphdep {

struct Edge {
  int u = 0;  // u < v
  int v = 0;
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

/// Undirected simple graph on the vertices 1..n.
class Graph {
 public:
  Graph() = default;

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int vertex) const { return adjacency_.at(vertex - 1); }
  bool adjacent(int u, int v) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  friend Graph build_graph(int n, std::span<const std::pair<int, int>> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Normalizes the pair list: duplicates and reversed pairs collapse to one
/// edge. Throws InputError on a self-loop or an endpoint outside [1, n].
Graph build_graph(int n, std::span<const std::pair<int, int>> edges);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// Disjoint union; the vertices of `second` are shifted by first.order().
Graph disjoint_union(const Graph& first, const Graph& second);

struct ForestClassification {
  bool is_forest = true;
  std::vector<std::vector<int>> components;  // sorted, ordered by smallest vertex
  int tree_count = 0;                        // meaningful when is_forest
};

ForestClassification classify(const Graph& graph);

struct InducedSubgraph {
  Graph graph;              // vertices 1..|S|
  std::vector<int> labels;  // labels[k] is the original label of vertex k + 1
};

InducedSubgraph induced_subgraph(const Graph& graph, std::span<const int> vertices);

/// Edge {i, j} whenever 1 <= |i - j| <= m.
Graph m_dependence_graph(int n, int m);

struct BlockPartition {
  int n = 0;
  int m = 0;
  std::vector<std::vector<int>> blocks;
};

/// Consecutive blocks of m indices; a shorter remainder block closes the
/// partition when m does not divide n. Exactly ceil(n/m) nonempty blocks.
BlockPartition block_partition(int n, int m);

/// Checks that `blocks` partitions [1, n] and that indices in non-neighbouring
/// blocks are more than m apart, so the blocks are path-dependent.
void validate_block_partition(const BlockPartition& partition);

/// A rooted, ordered labeling of one tree (or, from ordered_forest, of every
/// tree of a forest laid out one after another). Positions run 1..size();
/// every descendant of a position comes before it and each tree's root is
/// the last position of its tree.
struct OrderedTree {
  std::vector<int> labels;        // labels[pos - 1]: original vertex
  std::vector<int> parent;        // parent[pos - 1]: parent position, 0 for a root
  std::vector<int> subtree_size;  // subtree_size[pos - 1]: |fringe(pos)|

  int size() const { return static_cast<int>(labels.size()); }
  int root() const { return labels.back(); }
  int label(int pos) const { return labels.at(pos - 1); }
  int parent_of(int pos) const { return parent.at(pos - 1); }
  int position_of(int label) const;

  /// Positions of the subtree hanging from `pos`, i.e. [pos - size + 1, pos].
  std::vector<int> fringe(int pos) const;
  /// [pos + 1, size()] without the parent of `pos`.
  std::vector<int> s_set(int pos) const;
};

/// Root is a vertex of minimal c (smallest label on ties); positions follow a
/// post-order walk that visits children by ascending label.
/// Throws KindError when graph[tree_vertices] is not a tree.
OrderedTree rooted_order(const Graph& graph, std::span<const int> tree_vertices,
                         const LipschitzProfile& c);

/// rooted_order for every component of a forest, concatenated in the order of
/// classify(graph).components.
OrderedTree ordered_forest(const Graph& graph, const LipschitzProfile& c);

}  // namespace graphdep

#include "graphdep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "graphdep/errors.hpp"

namespace graphdep {

namespace {

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n) + 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

bool Graph::adjacent(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  const auto& nb = adjacency_[u - 1];
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 0) throw InputError("vertex count must be nonnegative");
  Graph g;
  g.n_ = n;
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw InputError("edge " + pair_text(u, v) + " has an endpoint outside [1, " + std::to_string(n) + "]");
    }
    if (u == v) throw InputError("edge " + pair_text(u, v) + " is a self-loop");
    g.edges_.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (const auto& e : g.edges_) {
    g.adjacency_[e.u - 1].push_back(e.v);
    g.adjacency_[e.v - 1].push_back(e.u);
  }
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
  return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  return build_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return build_graph(n, edges);
}

Graph empty_graph(int n) { return build_graph(n, std::span<const std::pair<int, int>>{}); }

Graph path_graph(int n) { return m_dependence_graph(n, 1); }

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  if (n >= 3) edges.emplace_back(n, 1);
  return build_graph(n, edges);
}

Graph disjoint_union(const Graph& first, const Graph& second) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : first.edges()) edges.emplace_back(e.u, e.v);
  const int shift = first.order();
  for (const auto& e : second.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return build_graph(first.order() + second.order(), edges);
}

ForestClassification classify(const Graph& graph) {
  const int n = graph.order();
  DisjointSets sets(n);
  bool acyclic = true;
  for (const auto& e : graph.edges()) {
    if (!sets.unite(e.u, e.v)) acyclic = false;
  }
  ForestClassification out;
  std::vector<int> slot(static_cast<std::size_t>(n) + 1, -1);
  for (int v = 1; v <= n; ++v) {
    const int r = sets.find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.components.size());
      out.components.emplace_back();
    }
    out.components[slot[r]].push_back(v);
  }
  out.is_forest = acyclic;
  out.tree_count = static_cast<int>(out.components.size());
  return out;
}

InducedSubgraph induced_subgraph(const Graph& graph, std::span<const int> vertices) {
  std::vector<int> labels(vertices.begin(), vertices.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<int> index(static_cast<std::size_t>(graph.order()) + 1, 0);
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const int v = labels[k];
    if (v < 1 || v > graph.order()) {
      throw InputError("vertex " + std::to_string(v) + " is outside [1, " + std::to_string(graph.order()) + "]");
    }
    index[v] = static_cast<int>(k) + 1;
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : graph.edges()) {
    if (index[e.u] != 0 && index[e.v] != 0) edges.emplace_back(index[e.u], index[e.v]);
  }
  return {build_graph(static_cast<int>(labels.size()), edges), std::move(labels)};
}

Graph m_dependence_graph(int n, int m) {
  if (n < 1) throw InputError("m-dependence graph needs n >= 1");
  if (m < 1) throw InputError("m-dependence graph needs m >= 1, got " + std::to_string(m));
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= std::min(n, i + m); ++j) edges.emplace_back(i, j);
  return build_graph(n, edges);
}

BlockPartition block_partition(int n, int m) {
  if (n < 1 || m < 1) throw InputError("block partition needs n >= 1 and m >= 1");
  BlockPartition out{n, m, {}};
  for (int start = 1; start <= n; start += m) {
    std::vector<int> block;
    for (int k = start; k <= std::min(n, start + m - 1); ++k) block.push_back(k);
    out.blocks.push_back(std::move(block));
  }
  return out;
}

void validate_block_partition(const BlockPartition& partition) {
  const int n = partition.n;
  if (n < 1 || partition.m < 1) throw InputError("block partition needs n >= 1 and m >= 1");
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t b = 0; b < partition.blocks.size(); ++b) {
    if (partition.blocks[b].empty()) throw InputError("block " + std::to_string(b + 1) + " is empty");
    for (int k : partition.blocks[b]) {
      if (k < 1 || k > n) throw InputError("block index " + std::to_string(k) + " outside [1, n]");
      if (owner[k] >= 0) throw InputError("index " + std::to_string(k) + " appears in two blocks");
      owner[k] = static_cast<int>(b);
    }
  }
  for (int k = 1; k <= n; ++k) {
    if (owner[k] < 0) throw InputError("index " + std::to_string(k) + " is in no block");
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= std::min(n, a + partition.m); ++b) {
      if (std::abs(owner[a] - owner[b]) > 1) {
        throw InputError("indices " + std::to_string(a) + " and " + std::to_string(b) +
                         " are within distance m but their blocks are not neighbours");
      }
    }
  }
}

int OrderedTree::position_of(int vertex) const {
  auto it = std::find(labels.begin(), labels.end(), vertex);
  if (it == labels.end()) throw InputError("vertex " + std::to_string(vertex) + " is not in the ordering");
  return static_cast<int>(it - labels.begin()) + 1;
}

std::vector<int> OrderedTree::fringe(int pos) const {
  std::vector<int> out;
  for (int q = pos - subtree_size.at(pos - 1) + 1; q <= pos; ++q) out.push_back(q);
  return out;
}

std::vector<int> OrderedTree::s_set(int pos) const {
  std::vector<int> out;
  const int p = parent.at(pos - 1);
  for (int q = pos + 1; q <= size(); ++q) {
    if (q != p) out.push_back(q);
  }
  return out;
}

namespace {

void append_tree(const Graph& graph, std::span<const int> tree_vertices, const LipschitzProfile& c,
                 OrderedTree& out) {
  if (tree_vertices.empty()) throw KindError("an empty vertex set is not a tree");
  auto sub = induced_subgraph(graph, tree_vertices);
  const auto cls = classify(sub.graph);
  if (!cls.is_forest || cls.tree_count != 1) {
    throw KindError("the induced subgraph on the given vertices is not a tree");
  }
  if (c.size() != graph.order()) throw InputError("Lipschitz profile length does not match the graph");

  const auto& labels = sub.labels;
  int root = 1;
  for (int k = 2; k <= sub.graph.order(); ++k) {
    if (c.exact_c(labels[k - 1]) < c.exact_c(labels[root - 1])) root = k;
  }

  // Iterative post-order from the root, children in ascending label order.
  // Induced labels are increasing, so ascending local index is ascending label.
  const int offset = out.size();
  const int m = sub.graph.order();
  std::vector<int> local_pos(static_cast<std::size_t>(m) + 1, 0);
  std::vector<int> local_parent(static_cast<std::size_t>(m) + 1, 0);
  struct Frame {
    int vertex;
    std::size_t next_child;
  };
  std::vector<Frame> stack{{root, 0}};
  int counter = 0;
  while (!stack.empty()) {
    auto& top = stack.back();
    const auto& nb = sub.graph.neighbors(top.vertex);
    if (top.next_child < nb.size()) {
      const int child = nb[top.next_child++];
      if (child == local_parent[top.vertex]) continue;
      local_parent[child] = top.vertex;
      stack.push_back({child, 0});
    } else {
      local_pos[top.vertex] = ++counter;
      stack.pop_back();
    }
  }

  out.labels.resize(static_cast<std::size_t>(offset + m));
  out.parent.resize(static_cast<std::size_t>(offset + m));
  out.subtree_size.resize(static_cast<std::size_t>(offset + m), 1);
  for (int v = 1; v <= m; ++v) {
    const int pos = local_pos[v];
    out.labels[offset + pos - 1] = labels[v - 1];
    out.parent[offset + pos - 1] = local_parent[v] == 0 ? 0 : offset + local_pos[local_parent[v]];
  }
  // Children precede parents, so one forward sweep accumulates subtree sizes.
  for (int pos = offset + 1; pos <= offset + m; ++pos) {
    const int p = out.parent[pos - 1];
    if (p != 0) out.subtree_size[p - 1] += out.subtree_size[pos - 1];
  }
}

}  // namespace

OrderedTree rooted_order(const Graph& graph, std::span<const int> tree_vertices, const LipschitzProfile& c) {
  OrderedTree out;
  append_tree(graph, tree_vertices, c, out);
  return out;
}

OrderedTree ordered_forest(const Graph& graph, const LipschitzProfile& c) {
  const auto cls = classify(graph);
  if (!cls.is_forest) throw KindError("graph is not a forest");
  OrderedTree out;
  for (const auto& component : cls.components) {
    append_tree(graph, component, c, out);
  }
  return out;
}

}  // namespace graphdep

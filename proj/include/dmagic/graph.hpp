#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dmagic {

/// Unordered pair stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..vertex_count-1.
///
/// The edge list is kept canonical: every pair normalized to u < v, sorted
/// lexicographically, duplicates removed. Loops and out-of-range endpoints are
/// rejected with UsageError.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  UndirectedGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  /// Index of {u, v} in the canonical edge list, if present.
  std::optional<std::size_t> edge_index(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_index(u, v).has_value(); }

  std::vector<int> degrees() const;
  /// Sorted neighbour lists.
  std::vector<std::vector<int>> adjacency() const;

  bool operator==(const UndirectedGraph&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Vertex (k, i), 1-based, of an outer/inner product lives at (k-1)*n + (i-1).
struct ProductIndexing {
  int outer_count = 0;
  int inner_count = 0;

  int vertex(int k, int i) const;
  /// Inverse of vertex(): 1-based (k, i).
  std::pair<int, int> coordinates(int vertex_id) const;
};

/// Arc directions over a graph's canonical edge list. Bit 0 on edge (u, v)
/// means the arc u->v, bit 1 means v->u.
class Orientation {
 public:
  Orientation() = default;
  /// All-zero orientation for `graph`.
  explicit Orientation(const UndirectedGraph& graph);
  Orientation(const UndirectedGraph& graph, std::vector<bool> directions);

  std::size_t size() const noexcept { return directions_.size(); }
  bool flipped(std::size_t edge_index) const { return directions_.at(edge_index); }
  void set(std::size_t edge_index, bool flipped) { directions_.at(edge_index) = flipped; }
  const std::vector<bool>& directions() const noexcept { return directions_; }

  /// Orient {tail, head} as tail->head. Throws UsageError if not an edge.
  void orient(const UndirectedGraph& graph, int tail, int head);

  /// (tail, head) of edge `edge_index`.
  std::pair<int, int> arc(const UndirectedGraph& graph, std::size_t edge_index) const;

  /// Every arc reversed.
  Orientation reversed() const;

  bool operator==(const Orientation&) const = default;

 private:
  std::vector<bool> directions_;
};

// Generators. Families with an obvious contract are plumbing for products.
UndirectedGraph empty_graph(int n);
UndirectedGraph path(int n);
UndirectedGraph cycle(int n);
UndirectedGraph complete(int n);
/// Parts are consecutive index blocks in the order given.
UndirectedGraph complete_multipartite(std::span<const int> sizes);
/// G o H, indexed by ProductIndexing(|V(G)|, |V(H)|).
UndirectedGraph lexicographic(const UndirectedGraph& g, const UndirectedGraph& h);
/// G [] H, indexed by ProductIndexing(|V(G)|, |V(H)|).
UndirectedGraph cartesian(const UndirectedGraph& g, const UndirectedGraph& h);
/// P_2 [] C_n.
UndirectedGraph prism(int n);

/// r if every vertex has degree r.
std::optional<int> regularity(const UndirectedGraph& g);

/// Short human-readable description, e.g. "graph(8 vertices, 12 edges)".
std::string describe(const UndirectedGraph& g);

}  // namespace dmagic

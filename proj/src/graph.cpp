#include "dmagic/graph.hpp"

#include <algorithm>
#include <numeric>

#include "dmagic/errors.hpp"

namespace dmagic {

UndirectedGraph::UndirectedGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count < 0) throw UsageError("vertex count must be non-negative");
  for (auto& e : edges_) {
    if (e.u == e.v) throw UsageError("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      throw UsageError("edge endpoint out of range: " + std::to_string(e.u) + " " +
                       std::to_string(e.v));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::optional<std::size_t> UndirectedGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<int> UndirectedGraph::degrees() const {
  std::vector<int> deg(vertex_count_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<int>> UndirectedGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return adj;
}

int ProductIndexing::vertex(int k, int i) const {
  if (k < 1 || k > outer_count || i < 1 || i > inner_count) {
    throw UsageError("product coordinates out of range");
  }
  return (k - 1) * inner_count + (i - 1);
}

std::pair<int, int> ProductIndexing::coordinates(int vertex_id) const {
  if (vertex_id < 0 || vertex_id >= outer_count * inner_count) {
    throw UsageError("vertex out of range for product indexing");
  }
  return {vertex_id / inner_count + 1, vertex_id % inner_count + 1};
}

Orientation::Orientation(const UndirectedGraph& graph) : directions_(graph.edge_count(), false) {}

Orientation::Orientation(const UndirectedGraph& graph, std::vector<bool> directions)
    : directions_(std::move(directions)) {
  if (directions_.size() != graph.edge_count()) {
    throw UsageError("orientation length " + std::to_string(directions_.size()) +
                     " does not match edge count " + std::to_string(graph.edge_count()));
  }
}

void Orientation::orient(const UndirectedGraph& graph, int tail, int head) {
  auto idx = graph.edge_index(tail, head);
  if (!idx) {
    throw UsageError("no edge between " + std::to_string(tail) + " and " + std::to_string(head));
  }
  directions_.at(*idx) = tail > head;
}

std::pair<int, int> Orientation::arc(const UndirectedGraph& graph, std::size_t edge_index) const {
  const Edge& e = graph.edge(edge_index);
  return directions_.at(edge_index) ? std::pair{e.v, e.u} : std::pair{e.u, e.v};
}

Orientation Orientation::reversed() const {
  Orientation out = *this;
  out.directions_.flip();
  return out;
}

UndirectedGraph empty_graph(int n) { return UndirectedGraph(n, {}); }

UndirectedGraph path(int n) {
  if (n < 1) throw UsageError("path needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph cycle(int n) {
  if (n < 3) throw UsageError("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph complete(int n) {
  if (n < 1) throw UsageError("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph complete_multipartite(std::span<const int> sizes) {
  if (sizes.empty()) throw UsageError("complete multipartite graph needs at least one part");
  std::vector<int> part_of;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    if (sizes[p] < 1) throw UsageError("part sizes must be at least 1");
    part_of.insert(part_of.end(), sizes[p], static_cast<int>(p));
  }
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) edges.push_back({i, j});
  return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph lexicographic(const UndirectedGraph& g, const UndirectedGraph& h) {
  const ProductIndexing idx{g.vertex_count(), h.vertex_count()};
  std::vector<Edge> edges;
  // g ~ g': every inner pair is joined.
  for (const auto& e : g.edges())
    for (int i = 1; i <= h.vertex_count(); ++i)
      for (int j = 1; j <= h.vertex_count(); ++j)
        edges.push_back({idx.vertex(e.u + 1, i), idx.vertex(e.v + 1, j)});
  // g = g' and h ~ h'.
  for (int k = 1; k <= g.vertex_count(); ++k)
    for (const auto& e : h.edges()) edges.push_back({idx.vertex(k, e.u + 1), idx.vertex(k, e.v + 1)});
  return UndirectedGraph(g.vertex_count() * h.vertex_count(), std::move(edges));
}

UndirectedGraph cartesian(const UndirectedGraph& g, const UndirectedGraph& h) {
  const ProductIndexing idx{g.vertex_count(), h.vertex_count()};
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    for (int i = 1; i <= h.vertex_count(); ++i) edges.push_back({idx.vertex(e.u + 1, i), idx.vertex(e.v + 1, i)});
  for (int k = 1; k <= g.vertex_count(); ++k)
    for (const auto& e : h.edges()) edges.push_back({idx.vertex(k, e.u + 1), idx.vertex(k, e.v + 1)});
  return UndirectedGraph(g.vertex_count() * h.vertex_count(), std::move(edges));
}

UndirectedGraph prism(int n) {
  if (n < 3) throw UsageError("prism needs n >= 3");
  return cartesian(path(2), cycle(n));
}

std::optional<int> regularity(const UndirectedGraph& g) {
  const auto deg = g.degrees();
  if (deg.empty()) return 0;
  if (std::adjacent_find(deg.begin(), deg.end(), std::not_equal_to<>()) != deg.end()) return std::nullopt;
  return deg.front();
}

std::string describe(const UndirectedGraph& g) {
  return "graph(" + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
         " edges)";
}

}  // namespace dmagic

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dwalk {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph stored as a dense symmetric 0/1 adjacency matrix.
///
/// Loops are rejected and parallel edges collapse, so the adjacency matrix is
/// always symmetric with a zero diagonal.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n, std::string label = {});

  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::string label = {});

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const;
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  std::size_t degree(Vertex v) const;
  std::vector<Vertex> neighbours(Vertex v) const;

  /// Edges as (i, j) with i < j, ordered lexicographically.
  std::vector<Edge> edges() const;

  const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  /// Adjacency equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<std::uint8_t> adj_;
  std::string label_;
};

/// All-pairs shortest-path lengths. Pairs in different components have no
/// distance; they are reported as std::nullopt rather than a large number.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::optional<std::size_t> at(Vertex i, Vertex j) const;
  bool reachable(Vertex i, Vertex j) const { return at(i, j).has_value(); }
  void set(Vertex i, Vertex j, std::size_t value);

  bool connected() const;
  /// Largest finite distance, or nullopt when the graph is disconnected or
  /// has no vertices.
  std::optional<std::size_t> diameter() const;

  /// m(d): the number of unordered pairs at distance exactly d, with the
  /// convention m(0) = n.
  std::size_t class_size(std::size_t d) const;

  /// Number of vertices at distance exactly d from v.
  std::size_t count_at(Vertex v, std::size_t d) const;

 private:
  static constexpr std::int32_t kUnreachable = -1;

  std::size_t n_ = 0;
  std::vector<std::int32_t> dist_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);
bool is_regular(const Graph& g);

/// G_d: same vertex set, edges between vertices at distance exactly d (d >= 1).
Graph distance_graph(const Graph& g, std::size_t d);
Graph distance_graph(const Graph& g, const DistanceMatrix& dist, std::size_t d);

struct LineGraph {
  Graph graph;
  /// edge_of[v] is the edge of the source graph that line-graph vertex v
  /// stands for.
  std::vector<Edge> edge_of;
};

LineGraph line_graph(const Graph& g);

/// Product graphs index the pair (u, v) as u * h.order() + v.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph tensor_product(const Graph& g, const Graph& h);

Graph delete_vertex(const Graph& g, Vertex i);
Graph delete_edge(const Graph& g, Edge e);

// graph6 interchange format.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

}  // namespace dwalk

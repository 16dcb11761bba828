#include "dwalk/graph.hpp"

#include <algorithm>
#include <deque>

#include "dwalk/error.hpp"

namespace dwalk {

Graph::Graph(std::size_t n, std::string label)
    : n_(n), adj_(n * n, 0), label_(std::move(label)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges,
                        std::string label) {
  Graph g(n, std::move(label));
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw Error(ErrorCode::NoSuchVertex,
                "vertex " + std::to_string(v) + " out of range for n=" +
                    std::to_string(n_));
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u * n_ + v] != 0;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw Error(ErrorCode::InvalidArgument,
                "loop at vertex " + std::to_string(u) + " in a simple graph");
  }
  if (adj_[u * n_ + v]) return;
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  ++m_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  if (u >= n_ || v >= n_ || !adj_[u * n_ + v]) {
    throw Error(ErrorCode::NoSuchEdge, "no edge (" + std::to_string(u) + "," +
                                           std::to_string(v) + ")");
  }
  adj_[u * n_ + v] = adj_[v * n_ + u] = 0;
  --m_;
}

std::size_t Graph::degree(Vertex v) const {
  check_vertex(v);
  const auto row = adj_.begin() + static_cast<std::ptrdiff_t>(v * n_);
  return static_cast<std::size_t>(
      std::count(row, row + static_cast<std::ptrdiff_t>(n_), 1));
}

std::vector<Vertex> Graph::neighbours(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (Vertex u = 0; u < n_; ++u)
    if (adj_[v * n_ + u]) out.push_back(u);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex j = i + 1; j < n_; ++j)
      if (adj_[i * n_ + j]) out.emplace_back(i, j);
  return out;
}

DistanceMatrix::DistanceMatrix(std::size_t n)
    : n_(n), dist_(n * n, kUnreachable) {}

std::optional<std::size_t> DistanceMatrix::at(Vertex i, Vertex j) const {
  if (i >= n_ || j >= n_) {
    throw Error(ErrorCode::NoSuchVertex, "distance query out of range");
  }
  const auto v = dist_[i * n_ + j];
  if (v == kUnreachable) return std::nullopt;
  return static_cast<std::size_t>(v);
}

void DistanceMatrix::set(Vertex i, Vertex j, std::size_t value) {
  dist_[i * n_ + j] = static_cast<std::int32_t>(value);
}

bool DistanceMatrix::connected() const {
  return std::none_of(dist_.begin(), dist_.end(),
                      [](std::int32_t v) { return v == kUnreachable; });
}

std::optional<std::size_t> DistanceMatrix::diameter() const {
  if (n_ == 0 || !connected()) return std::nullopt;
  return static_cast<std::size_t>(*std::max_element(dist_.begin(), dist_.end()));
}

std::size_t DistanceMatrix::class_size(std::size_t d) const {
  if (d == 0) return n_;
  std::size_t count = 0;
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex j = i + 1; j < n_; ++j)
      if (dist_[i * n_ + j] == static_cast<std::int32_t>(d)) ++count;
  return count;
}

std::size_t DistanceMatrix::count_at(Vertex v, std::size_t d) const {
  std::size_t count = 0;
  for (Vertex u = 0; u < n_; ++u)
    if (dist_[v * n_ + u] == static_cast<std::int32_t>(d)) ++count;
  return count;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const auto n = g.order();
  DistanceMatrix dist(n);
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbours(v);

  std::vector<std::size_t> level(n);
  std::vector<bool> seen(n);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(seen.begin(), seen.end(), false);
    seen[s] = true;
    level[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      dist.set(s, u, level[u]);
      for (const auto w : adj[u]) {
        if (seen[w]) continue;
        seen[w] = true;
        level[w] = level[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  return all_pairs_distances(g).connected();
}

bool is_regular(const Graph& g) {
  if (g.order() == 0) return true;
  const auto deg = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) != deg) return false;
  return true;
}

Graph distance_graph(const Graph& g, const DistanceMatrix& dist,
                     std::size_t d) {
  if (d == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "distance graph requires d >= 1 (A_0 is the identity)");
  }
  Graph out(g.order(), g.label().empty() ? std::string{}
                                         : g.label() + "_d" + std::to_string(d));
  for (Vertex i = 0; i < g.order(); ++i)
    for (Vertex j = i + 1; j < g.order(); ++j)
      if (dist.at(i, j) == d) out.add_edge(i, j);
  return out;
}

Graph distance_graph(const Graph& g, std::size_t d) {
  return distance_graph(g, all_pairs_distances(g), d);
}

LineGraph line_graph(const Graph& g) {
  LineGraph out;
  out.edge_of = g.edges();
  const auto m = out.edge_of.size();
  out.graph = Graph(m, g.label().empty() ? std::string{} : "L(" + g.label() + ")");
  for (std::size_t a = 0; a < m; ++a) {
    const auto [p, q] = out.edge_of[a];
    for (std::size_t b = a + 1; b < m; ++b) {
      const auto [r, s] = out.edge_of[b];
      if (p == r || p == s || q == r || q == s) out.graph.add_edge(a, b);
    }
  }
  return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const auto ng = g.order(), nh = h.order();
  Graph out(ng * nh);
  for (Vertex u = 0; u < ng; ++u)
    for (Vertex v = 0; v < nh; ++v)
      for (Vertex w = 0; w < nh; ++w)
        if (h.adjacent(v, w)) out.add_edge(u * nh + v, u * nh + w);
  for (Vertex v = 0; v < nh; ++v)
    for (Vertex u = 0; u < ng; ++u)
      for (Vertex w = 0; w < ng; ++w)
        if (g.adjacent(u, w)) out.add_edge(u * nh + v, w * nh + v);
  return out;
}

Graph tensor_product(const Graph& g, const Graph& h) {
  const auto ng = g.order(), nh = h.order();
  Graph out(ng * nh);
  for (const auto& [u, x] : g.edges())
    for (const auto& [v, y] : h.edges()) {
      out.add_edge(u * nh + v, x * nh + y);
      out.add_edge(u * nh + y, x * nh + v);
    }
  return out;
}

Graph delete_vertex(const Graph& g, Vertex i) {
  if (i >= g.order()) {
    throw Error(ErrorCode::NoSuchVertex,
                "cannot delete vertex " + std::to_string(i));
  }
  Graph out(g.order() - 1);
  const auto reindex = [i](Vertex v) { return v < i ? v : v - 1; };
  for (const auto& [u, v] : g.edges())
    if (u != i && v != i) out.add_edge(reindex(u), reindex(v));
  return out;
}

Graph delete_edge(const Graph& g, Edge e) {
  Graph out = g;
  out.remove_edge(e.first, e.second);
  return out;
}

}  // namespace dwalk

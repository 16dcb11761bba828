#pragma once

// Test-only helpers: corpus loading and brute-force references that do not
// share code paths with the library.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dwalk/graph.hpp"
#include "dwalk/linalg.hpp"

namespace dwalk::testing {

inline std::string data_path(const std::string& name) {
  return std::string(DWALK_TEST_DATA_DIR) + "/" + name;
}

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) lines.push_back(line);
  return lines;
}

/// Every connected graph on 1..7 vertices, up to isomorphism.
inline std::vector<Graph> corpus(std::size_t max_n = 7) {
  std::vector<Graph> out;
  for (const auto& line : read_lines(data_path("connected_le7.g6"))) {
    auto g = parse_graph6(line);
    if (g.order() > max_n) continue;
    g.set_label(line);
    out.push_back(std::move(g));
  }
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

/// Random connected graph: a random spanning tree plus random extra edges.
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
  auto g = random_graph(rng, n, p);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t t = 1; t < n; ++t) {
    std::uniform_int_distribution<std::size_t> pick(0, t - 1);
    g.add_edge(order[t], order[pick(rng)]);
  }
  return g;
}

/// det(xI - A) by Leibniz expansion over all permutations, with polynomial
/// entries; only meant for n <= 6.
inline std::vector<long long> brute_char_poly(const Graph& g) {
  const auto n = g.order();
  using Poly = std::vector<long long>;  // low to high
  const auto mul = [](const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  Poly total(n + 1, 0);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Poly term{sign};
    for (std::size_t i = 0; i < n && !term.empty(); ++i) {
      const auto j = perm[i];
      Poly entry = i == j ? Poly{0, 1} : Poly{g.adjacent(i, j) ? -1 : 0};
      term = mul(term, entry);
    }
    for (std::size_t i = 0; i < term.size(); ++i) total[i] += term[i];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Isomorphism by trying every vertex permutation; n <= 9.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const auto n = a.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = a.edges();
  do {
    bool ok = true;
    for (const auto& [u, v] : edges)
      if (!b.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// e^A in long double via scaling and squaring of a long Taylor series.
inline std::vector<long double> float_expm(const Graph& g) {
  const auto n = g.order();
  using M = std::vector<long double>;
  const auto mul = [n](const M& x, const M& y) {
    M r(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) r[i * n + j] += x[i * n + k] * y[k * n + j];
    return r;
  };
  constexpr int squarings = 6;
  M a(n * n, 0);
  for (const auto& [i, j] : g.edges()) a[i * n + j] = a[j * n + i] = 1.0L / (1 << squarings);
  M sum(n * n, 0), term(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) sum[i * n + i] = term[i * n + i] = 1;
  for (int k = 1; k < 40; ++k) {
    term = mul(term, a);
    for (auto& v : term) v /= k;
    for (std::size_t t = 0; t < n * n; ++t) sum[t] += term[t];
  }
  for (int s = 0; s < squarings; ++s) sum = mul(sum, sum);
  return sum;
}

}  // namespace dwalk::testing

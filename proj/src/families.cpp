#include "dwalk/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "dwalk/error.hpp"

namespace dwalk {
namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::size_t arity;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::Complete, "complete", 1},
    {Family::Cycle, "cycle", 1},
    {Family::Path, "path", 1},
    {Family::CompleteBipartite, "complete_bipartite", 2},
    {Family::Petersen, "petersen", 0},
    {Family::Hamming, "hamming", 2},
    {Family::Johnson, "johnson", 2},
    {Family::CartesianCycleSquare, "cartesian_cycle_square", 1},
    {Family::UnfoldedComplete, "unfolded_complete", 1},
};

// Keeps generated graphs within what dense exact arithmetic can handle.
constexpr long kMaxGeneratedOrder = 4096;

[[noreturn]] void invalid(const std::string& why) {
  throw Error(ErrorCode::InvalidFamilyParameters, why);
}

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies)
    if (fi.family == f) return fi;
  invalid("unknown family");
}

void require(bool ok, const FamilySpec& spec, std::string_view rule) {
  if (!ok) invalid(to_string(spec) + ": " + std::string(rule));
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// k-subsets of {0..n-1} as bitmasks in lexicographic order.
std::vector<std::uint64_t> subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint64_t> out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::uint64_t mask = 0;
    for (auto i : idx) mask |= std::uint64_t{1} << i;
    out.push_back(mask);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (auto i = pos; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

Graph kneser_graph(std::size_t n, std::size_t k) {
  const auto sets = subsets(n, k);
  Graph g(sets.size());
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b)
      if ((sets[a] & sets[b]) == 0) g.add_edge(a, b);
  return g;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  const auto it = std::find_if(std::begin(kFamilies), std::end(kFamilies),
                               [&](const FamilyInfo& fi) { return fi.name == name; });
  if (it == std::end(kFamilies)) invalid("unknown family '" + std::string(name) + "'");

  FamilySpec spec{it->family, {}};
  if (colon != std::string_view::npos) {
    auto rest = text.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      const auto token = rest.substr(0, comma);
      long value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        invalid("bad integer parameter '" + std::string(token) + "' in '" + std::string(text) + "'");
      spec.params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  if (spec.params.size() != it->arity) {
    invalid("family '" + std::string(name) + "' takes " + std::to_string(it->arity) +
            " parameter(s), got " + std::to_string(spec.params.size()));
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out(info(spec.family).name);
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    out += (i == 0 ? ':' : ',');
    out += std::to_string(spec.params[i]);
  }
  return out;
}

Graph complete_graph(std::size_t n) {
  Graph g(n, "complete:" + std::to_string(n));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph cycle_graph(std::size_t m) {
  Graph g(m, "cycle:" + std::to_string(m));
  for (Vertex i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
  return g;
}

Graph path_graph(std::size_t m) {
  Graph g(m, "path:" + std::to_string(m));
  for (Vertex i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_bipartite_graph(std::size_t p, std::size_t q) {
  Graph g(p + q, "complete_bipartite:" + std::to_string(p) + "," + std::to_string(q));
  for (Vertex i = 0; i < p; ++i)
    for (Vertex j = 0; j < q; ++j) g.add_edge(i, p + j);
  return g;
}

Graph petersen_graph() {
  auto g = kneser_graph(5, 2);
  g.set_label("petersen");
  return g;
}

Graph hamming_graph(std::size_t d, std::size_t q) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < d; ++i) size *= q;
  Graph g(size, "hamming:" + std::to_string(d) + "," + std::to_string(q));
  // Word w has digit t equal to (w / q^t) % q; neighbours differ in one digit.
  for (std::size_t w = 0; w < size; ++w) {
    std::size_t place = 1;
    for (std::size_t t = 0; t < d; ++t, place *= q) {
      const auto digit = (w / place) % q;
      for (std::size_t other = digit + 1; other < q; ++other)
        g.add_edge(w, w + (other - digit) * place);
    }
  }
  return g;
}

Graph johnson_graph(std::size_t n, std::size_t k) {
  const auto sets = subsets(n, k);
  Graph g(sets.size(), "johnson:" + std::to_string(n) + "," + std::to_string(k));
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b)
      if (static_cast<std::size_t>(__builtin_popcountll(sets[a] & sets[b])) == k - 1)
        g.add_edge(a, b);
  return g;
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  require(p.size() == info(spec.family).arity, spec, "wrong parameter count");
  const auto order_ok = [](long v) { return v <= kMaxGeneratedOrder; };

  Graph g;
  switch (spec.family) {
    case Family::Complete:
      require(p[0] >= 1 && order_ok(p[0]), spec, "requires 1 <= N <= 4096");
      g = complete_graph(static_cast<std::size_t>(p[0]));
      break;
    case Family::Cycle:
      require(p[0] >= 3 && order_ok(p[0]), spec, "requires 3 <= m <= 4096");
      g = cycle_graph(static_cast<std::size_t>(p[0]));
      break;
    case Family::Path:
      require(p[0] >= 1 && order_ok(p[0]), spec, "requires 1 <= m <= 4096");
      g = path_graph(static_cast<std::size_t>(p[0]));
      break;
    case Family::CompleteBipartite:
      require(p[0] >= 1 && p[1] >= 1 && order_ok(p[0] + p[1]), spec,
              "requires p, q >= 1 and p + q <= 4096");
      g = complete_bipartite_graph(static_cast<std::size_t>(p[0]),
                                   static_cast<std::size_t>(p[1]));
      break;
    case Family::Petersen:
      g = petersen_graph();
      break;
    case Family::Hamming: {
      require(p[0] >= 1 && p[1] >= 2, spec, "requires d >= 1 and q >= 2");
      long size = 1;
      for (long i = 0; i < p[0] && size <= kMaxGeneratedOrder; ++i) size *= p[1];
      require(order_ok(size), spec, "requires q^d <= 4096");
      g = hamming_graph(static_cast<std::size_t>(p[0]), static_cast<std::size_t>(p[1]));
      break;
    }
    case Family::Johnson:
      require(p[1] >= 1 && p[0] > p[1] && p[0] <= 62, spec, "requires 62 >= n > k >= 1");
      require(binomial(static_cast<std::size_t>(p[0]), static_cast<std::size_t>(p[1])) <=
                  static_cast<std::size_t>(kMaxGeneratedOrder),
              spec, "requires C(n,k) <= 4096");
      g = johnson_graph(static_cast<std::size_t>(p[0]), static_cast<std::size_t>(p[1]));
      break;
    case Family::CartesianCycleSquare:
      require(p[0] >= 3 && p[0] * p[0] <= kMaxGeneratedOrder, spec,
              "requires 3 <= m and m^2 <= 4096");
      g = cartesian_product(cycle_graph(static_cast<std::size_t>(p[0])),
                            cycle_graph(static_cast<std::size_t>(p[0])));
      break;
    case Family::UnfoldedComplete:
      require(p[0] >= 2 && 2 * p[0] <= kMaxGeneratedOrder, spec,
              "requires 2 <= N <= 2048");
      g = tensor_product(complete_graph(2), complete_graph(static_cast<std::size_t>(p[0])));
      break;
  }
  g.set_label(to_string(spec));
  return g;
}

}  // namespace dwalk

#include "dwalk/walk_regularity.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dwalk {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Regular: return "REGULAR";
    case Verdict::NotRegular: return "NOT_REGULAR";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

const char* to_string(Criterion c) noexcept {
  switch (c) {
    case Criterion::Window: return "window";
    case Criterion::Schur: return "schur";
    case Criterion::Exponential: return "exp";
  }
  return "?";
}

namespace {

struct Scan {
  std::optional<Integer> common;
  std::optional<Witness> witness;
};

// Compares the support entries of `m` against the first support pair.
Scan scan_support(const IntMatrix& m, const DistanceClass& cls, std::size_t k) {
  const auto [i0, j0] = cls.pairs.front();
  const Integer& ref = m(i0, j0);
  for (const auto& [i, j] : cls.pairs) {
    if (m(i, j) != ref) return {std::nullopt, Witness{i0, j0, i, j, k, ref, m(i, j)}};
  }
  return {ref, std::nullopt};
}

PowerStream stream_to(const Graph& g, std::size_t k) {
  PowerStream s(adjacency_matrix(g));
  while (s.exponent() < k) s.advance();
  return s;
}

const char* kZeroNormalisationNote =
    "d=0: f is tr(A^k)/n; dividing by 2m(0)=2n instead gives half the common "
    "diagonal value";

}  // namespace

DistanceClass distance_class(const Graph& g, const DistanceMatrix& dist, std::size_t d) {
  const auto n = g.order();
  if (n == 0) throw Error(ErrorCode::EmptyDistanceClass, "graph has no vertices");
  if (!dist.connected()) throw Error(ErrorCode::Disconnected, "graph is disconnected");
  const auto diameter = *dist.diameter();
  if (d > diameter) {
    throw Error(ErrorCode::DistanceOutOfRange,
                "d=" + std::to_string(d) + " exceeds diameter " + std::to_string(diameter));
  }

  DistanceClass cls{d, IntMatrix(n, n), {}, 0};
  for (Vertex i = 0; i < n; ++i) {
    if (d == 0) {
      cls.pairs.emplace_back(i, i);
      cls.indicator(i, i) = 1;
      continue;
    }
    for (Vertex j = 0; j < n; ++j) {
      if (dist.at(i, j) != d) continue;
      cls.indicator(i, j) = 1;
      if (i < j) cls.pairs.emplace_back(i, j);
    }
  }
  if (cls.pairs.empty()) {
    throw Error(ErrorCode::EmptyDistanceClass, "m(" + std::to_string(d) + ") = 0");
  }
  cls.weight = d == 0 ? n : 2 * cls.pairs.size();
  return cls;
}

// ---------------------------------------------------------------- oracle

std::vector<std::vector<Integer>> walk_count_oracle_table(const Graph& g, Vertex i,
                                                          std::size_t k_max) {
  const auto n = g.order();
  if (n > kOracleMaxOrder || k_max > kOracleMaxLength) {
    throw Error(ErrorCode::OracleTooLarge,
                "oracle limited to n <= 12 and k <= 10 (got n=" + std::to_string(n) +
                    ", k=" + std::to_string(k_max) + ")");
  }
  if (i >= n) throw Error(ErrorCode::NoSuchVertex, "oracle start vertex out of range");

  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.neighbours(v);

  // Every node of the walk tree at depth t is one walk of length t.
  std::vector<std::vector<std::uint64_t>> counts(k_max + 1, std::vector<std::uint64_t>(n, 0));
  std::function<void(Vertex, std::size_t)> walk = [&](Vertex v, std::size_t depth) {
    ++counts[depth][v];
    if (depth == k_max) return;
    for (const auto w : adj[v]) walk(w, depth + 1);
  };
  walk(i, 0);

  std::vector<std::vector<Integer>> out(k_max + 1, std::vector<Integer>(n));
  for (std::size_t k = 0; k <= k_max; ++k)
    for (Vertex j = 0; j < n; ++j) out[k][j] = static_cast<unsigned long>(counts[k][j]);
  return out;
}

Integer walk_count_oracle(const Graph& g, Vertex i, Vertex j, std::size_t k) {
  if (j >= g.order()) throw Error(ErrorCode::NoSuchVertex, "oracle end vertex out of range");
  return walk_count_oracle_table(g, i, k)[k][j];
}

// ---------------------------------------------------------------- criteria

DWalkReport check_window_range(const Graph& g, std::size_t d, std::size_t k_high) {
  const auto dist = all_pairs_distances(g);
  const auto cls = distance_class(g, dist, d);

  DWalkReport report;
  report.d = d;
  report.criterion = Criterion::Window;
  report.k_low = d;
  report.k_high = k_high;
  if (d == 0) report.notes.emplace_back(kZeroNormalisationNote);

  auto powers = stream_to(g, d);
  for (std::size_t k = d; k <= k_high; ++k, powers.advance()) {
    auto scan = scan_support(powers.current(), cls, k);
    if (!scan.common) {
      report.verdict = Verdict::NotRegular;
      report.witness = std::move(scan.witness);
      return report;
    }
    report.f_values.emplace(k, *scan.common);
  }

  // The common value must agree with tr(A_d A^k) / weight.
  powers = stream_to(g, d);
  for (const auto& [k, f] : report.f_values) {
    while (powers.exponent() < k) powers.advance();
    const Integer t = trace(mat_mul(cls.indicator, powers.current()));
    if (t != f * static_cast<unsigned long>(cls.weight)) {
      throw std::logic_error("trace formula disagrees with common walk count at k=" +
                             std::to_string(k));
    }
  }
  report.verdict = Verdict::Regular;
  return report;
}

DWalkReport check_window(const Graph& g, std::size_t d) {
  const auto n = g.order();
  return check_window_range(g, d, n == 0 ? d : n + d - 1);
}

Rational f_trace(const Graph& g, std::size_t d, std::size_t k) {
  const auto cls = distance_class(g, all_pairs_distances(g), d);
  const auto powers = stream_to(g, k);
  Rational out(trace(mat_mul(cls.indicator, powers.current())),
               Integer(static_cast<unsigned long>(cls.weight)));
  out.canonicalize();
  return out;
}

DWalkReport check_schur(const Graph& g, std::size_t d) {
  const auto n = g.order();
  const auto dist = all_pairs_distances(g);
  const auto cls = distance_class(g, dist, d);

  DWalkReport report;
  report.d = d;
  report.criterion = Criterion::Schur;
  report.k_low = 1;
  report.k_high = n + d - 1;
  if (d == 0) report.notes.emplace_back(kZeroNormalisationNote);

  PowerStream powers(adjacency_matrix(g));
  for (std::size_t k = 1; k <= report.k_high; ++k) {
    powers.advance();
    const auto masked = schur_product(powers.current(), cls.indicator);
    Rational c(sum_entries(masked), Integer(static_cast<unsigned long>(cls.weight)));
    c.canonicalize();
    auto scan = scan_support(masked, cls, k);
    if (!scan.common) {
      report.verdict = Verdict::NotRegular;
      report.witness = std::move(scan.witness);
      return report;
    }
    // A uniform support forces c(k) to be that integer.
    if (c != Rational(*scan.common)) {
      throw std::logic_error("Schur scalar disagrees with sum formula at k=" +
                             std::to_string(k));
    }
    report.f_values.emplace(k, *scan.common);
  }
  report.verdict = Verdict::Regular;
  return report;
}

KroneckerProbe check_kronecker(const Graph& g, std::size_t d) {
  const auto n = g.order();
  if (n > kKroneckerMaxOrder) {
    throw Error(ErrorCode::GraphTooLargeForKron,
                "Kronecker probe limited to n <= " + std::to_string(kKroneckerMaxOrder));
  }
  const auto cls = distance_class(g, all_pairs_distances(g), d);
  const Integer m_d = static_cast<unsigned long>(d == 0 ? n : cls.pairs.size());
  const auto support_square = kronecker_product(cls.indicator, cls.indicator);

  KroneckerProbe probe;
  probe.d = d;
  probe.all_hold = true;
  PowerStream powers(adjacency_matrix(g));
  for (std::size_t k = 1; k + 1 <= n; ++k) {
    powers.advance();
    const auto lhs = kronecker_product(powers.current(), cls.indicator);
    Rational c(sum_entries(lhs), 2 * static_cast<unsigned long>(n) * m_d);
    c.canonicalize();
    bool holds = true;
    for (std::size_t idx = 0; idx < lhs.data().size() && holds; ++idx) {
      // lhs == c * rhs, cross-multiplied to stay in integers.
      holds = lhs.data()[idx] * c.get_den() == c.get_num() * support_square.data()[idx];
    }
    probe.steps.push_back({k, c, holds});
    probe.all_hold = probe.all_hold && holds;
  }
  probe.schur_verdict = check_schur(g, d).verdict;
  probe.agrees_with_schur = probe.all_hold == (probe.schur_verdict == Verdict::Regular);
  return probe;
}

std::size_t default_truncation(const Graph& g) {
  std::size_t r = 0;
  for (Vertex v = 0; v < g.order(); ++v) r = std::max(r, g.degree(v));
  return std::max<std::size_t>(30, 2 * r);
}

DWalkReport check_exponential(const Graph& g, std::size_t d, std::size_t order) {
  const auto cls = distance_class(g, all_pairs_distances(g), d);
  const auto a = adjacency_matrix(g);
  const auto series = truncated_exponential(a, order);

  DWalkReport report;
  report.d = d;
  report.criterion = Criterion::Exponential;
  report.k_low = 0;
  report.k_high = order;
  report.truncation = order;
  report.tail_bound = series.tail_bound;

  auto lo = cls.pairs.front(), hi = cls.pairs.front();
  for (const auto& p : cls.pairs) {
    if (series.partial_sum(p.first, p.second) < series.partial_sum(lo.first, lo.second)) lo = p;
    if (series.partial_sum(p.first, p.second) > series.partial_sum(hi.first, hi.second)) hi = p;
  }
  const Rational spread = series.partial_sum(hi.first, hi.second) -
                          series.partial_sum(lo.first, lo.second);

  if (spread > 2 * series.tail_bound) {
    report.verdict = Verdict::NotRegular;
    // Differing partial sums imply differing walk counts at some k <= order.
    PowerStream powers(a);
    for (std::size_t k = 0; k <= order; ++k, powers.advance()) {
      const auto& m = powers.current();
      if (m(lo.first, lo.second) != m(hi.first, hi.second)) {
        report.witness = Witness{lo.first, lo.second, hi.first, hi.second, k,
                                 m(lo.first, lo.second), m(hi.first, hi.second)};
        break;
      }
    }
    report.notes.push_back("support spread " + spread.get_str() + " exceeds 2*tail");
    return report;
  }

  if (spread == 0) {
    auto window = check_window(g, d);
    if (window.verdict == Verdict::Regular) {
      report.verdict = Verdict::Regular;
      report.scalar = series.partial_sum(lo.first, lo.second);
      report.f_values = std::move(window.f_values);
      report.notes.emplace_back("c = scalar +/- tail_bound; equality certified by window check");
      return report;
    }
    report.notes.emplace_back("truncated support entries coincide but window check disagrees");
  } else {
    report.notes.emplace_back("support spread within 2*tail; raise the truncation order");
  }
  report.verdict = Verdict::Inconclusive;
  return report;
}

DWalkReport check_exponential_auto(const Graph& g, std::size_t d, std::size_t order) {
  constexpr std::size_t kMaxOrder = 120;
  auto k = order == 0 ? default_truncation(g) : order;
  while (true) {
    auto report = check_exponential(g, d, k);
    if (report.verdict != Verdict::Inconclusive || k >= kMaxOrder) return report;
    k = std::min(2 * k, kMaxOrder);
  }
}

// ---------------------------------------------------------------- algebra

PowerDecomposition decompose_power(const Graph& g, std::size_t d, std::size_t k) {
  const auto cls = distance_class(g, all_pairs_distances(g), d);
  auto power = stream_to(g, k).current();
  const auto scan = scan_support(power, cls, k);
  if (!scan.common) return {std::nullopt, std::move(power)};
  for (const auto& [i, j] : cls.pairs) {
    power(i, j) = 0;
    power(j, i) = 0;
  }
  return {scan.common, std::move(power)};
}

WalkFunction walk_function(const Graph& g, std::size_t d) {
  auto report = check_window(g, d);
  if (report.verdict != Verdict::Regular) {
    throw Error(ErrorCode::NotWalkRegular,
                "graph is not " + std::to_string(d) + "-walk regular");
  }
  WalkFunction wf{d, std::move(report.f_values), char_poly(adjacency_matrix(g))};
  for (std::size_t k = 0; k < d; ++k) wf.values.emplace(k, 0);
  return wf;
}

Integer extend_f_recurrence(const WalkFunction& wf, const IntPolynomial& p, std::size_t k) {
  if (const auto it = wf.values.find(k); it != wf.values.end()) return it->second;
  if (!p.is_monic()) throw Error(ErrorCode::NonMonicModulus, "recurrence needs a monic polynomial");
  const auto n = static_cast<std::size_t>(p.degree());
  if (n == 0) return 0;  // p = 1 annihilates the sequence
  if (wf.values.empty()) throw Error(ErrorCode::InsufficientHistory, "no stored values");
  const auto top = wf.values.rbegin()->first;
  if (k < top || top + 1 < n) {
    throw Error(ErrorCode::InsufficientHistory,
                "cannot reach k=" + std::to_string(k) + " from stored values");
  }

  std::vector<Integer> window;  // f(top-n+1) .. f(top)
  for (auto idx = top + 1 - n; idx <= top; ++idx) {
    const auto it = wf.values.find(idx);
    if (it == wf.values.end()) {
      throw Error(ErrorCode::InsufficientHistory,
                  "missing f(" + std::to_string(idx) + ")");
    }
    window.push_back(it->second);
  }
  for (auto index = top + 1; index <= k; ++index) {
    Integer next = 0;
    for (std::size_t t = 0; t < n; ++t) next -= p.coeff(t) * window[t];
    window.erase(window.begin());
    window.push_back(next);
  }
  return window.back();
}

// ---------------------------------------------------------------- complete graphs

Integer odd_walks_complete(std::size_t n_complete, std::size_t j) {
  if (n_complete < 2) throw Error(ErrorCode::InvalidArgument, "odd_walks_complete needs N >= 2");
  Integer numerator;
  mpz_ui_pow_ui(numerator.get_mpz_t(), n_complete - 1, 2 * j + 1);
  numerator += 1;
  if (!mpz_divisible_ui_p(numerator.get_mpz_t(), n_complete)) {
    throw std::logic_error("N does not divide (N-1)^(2j+1) + 1");
  }
  return numerator / static_cast<unsigned long>(n_complete);
}

bool is_unfolded_complete(const Graph& g, std::size_t n_complete, std::size_t j_max) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is disconnected");
  if (j_max == 0) j_max = 2 * g.order();
  const auto edges = g.edges();
  PowerStream powers(adjacency_matrix(g));
  for (std::size_t j = 1; j <= j_max; ++j) {
    while (powers.exponent() < 2 * j + 1) powers.advance();
    const auto expected = odd_walks_complete(n_complete, j);
    for (const auto& [p, q] : edges)
      if (powers.current()(p, q) != expected) return false;
  }
  return true;
}

// ---------------------------------------------------------------- consequences

ScalingCheck check_charpoly_scaling(const Graph& g, std::size_t d, std::size_t k) {
  if (check_window(g, d).verdict != Verdict::Regular) {
    throw Error(ErrorCode::NotWalkRegular,
                "graph is not " + std::to_string(d) + "-walk regular");
  }
  const auto n = g.order();
  const auto cls = distance_class(g, all_pairs_distances(g), d);
  const auto masked = schur_product(stream_to(g, k).current(), cls.indicator);
  const auto [i0, j0] = cls.pairs.front();

  ScalingCheck out;
  out.k = k;
  out.c = masked(i0, j0);
  out.distance_poly = char_poly(cls.indicator);
  out.schur_poly = char_poly(masked);

  out.holds = true;
  out.printed_law_holds = true;
  for (std::size_t i = 0; i <= n; ++i) {
    Integer scale_low, scale_high;
    mpz_pow_ui(scale_low.get_mpz_t(), out.c.get_mpz_t(), n - i);
    mpz_pow_ui(scale_high.get_mpz_t(), out.c.get_mpz_t(), i);
    const auto a_i = out.distance_poly.coeff(i);
    const auto b_i = out.schur_poly.coeff(i);
    if (b_i != a_i * scale_low) out.holds = false;
    if (i >= 1 && b_i != a_i * scale_high) out.printed_law_holds = false;
  }
  return out;
}

Prop5Result check_prop5(const Graph& g, std::size_t d) {
  if (check_window(g, d).verdict != Verdict::Regular) {
    throw Error(ErrorCode::NotWalkRegular,
                "graph is not " + std::to_string(d) + "-walk regular");
  }
  Prop5Result out;
  out.g_regular = is_regular(g);
  out.gd_regular = d == 0 ? true : is_regular(distance_graph(g, d));
  out.zero_walk_regular = check_window(g, 0).verdict == Verdict::Regular;
  out.consistent = d == 0 ? out.g_regular : out.zero_walk_regular == out.gd_regular;
  return out;
}

bool godsil_mckay_check(const Graph& g) {
  std::optional<IntPolynomial> first;
  for (Vertex i = 0; i < g.order(); ++i) {
    auto p = char_poly(adjacency_matrix(delete_vertex(g, i)));
    if (!first) {
      first = std::move(p);
    } else if (p != *first) {
      return false;
    }
  }
  return true;
}

Prop6Result check_prop6(const Graph& g) {
  if (!is_regular(g)) throw Error(ErrorCode::NotRegularGraph, "graph is not regular");
  Prop6Result out;
  out.one_walk_regular = check_window(g, 1).verdict == Verdict::Regular;
  out.line_zero_walk_regular = godsil_mckay_check(line_graph(g).graph);

  out.edge_deleted_polys_equal = true;
  std::optional<IntPolynomial> first;
  for (const auto& e : g.edges()) {
    auto p = char_poly(adjacency_matrix(line_graph(delete_edge(g, e)).graph));
    if (!first) {
      first = std::move(p);
    } else if (p != *first) {
      out.edge_deleted_polys_equal = false;
      break;
    }
  }
  out.consistent = out.one_walk_regular == out.line_zero_walk_regular &&
                   out.line_zero_walk_regular == out.edge_deleted_polys_equal;
  return out;
}

Classification classify(const Graph& g) {
  const auto dist = all_pairs_distances(g);
  if (g.order() == 0 || !dist.connected()) {
    throw Error(ErrorCode::Disconnected, "classify needs a connected graph");
  }
  Classification out;
  out.distance_regular = true;
  bool prefix = true;
  for (std::size_t d = 0; d <= *dist.diameter(); ++d) {
    out.reports.push_back(check_window(g, d));
    const bool regular = out.reports.back().verdict == Verdict::Regular;
    out.distance_regular = out.distance_regular && regular;
    prefix = prefix && regular;
    if (prefix) out.regular_up_to = d;
  }
  return out;
}

}  // namespace dwalk

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit status on
// any failure. Diagnostic detail follows each line, indented.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dwalk/error.hpp"
#include "dwalk/families.hpp"
#include "dwalk/graph.hpp"
#include "dwalk/linalg.hpp"
#include "dwalk/walk_regularity.hpp"
#include "support.hpp"

using namespace dwalk;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
  double time_limit_s = 0;  // 0 means no limit

  void fail(const std::string& why) {
    if (pass || details.size() < 12) details.push_back("failure: " + why);
    pass = false;
  }
  void note(const std::string& text) { details.push_back(text); }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (out.time_limit_s > 0 && secs >= out.time_limit_s) {
    std::ostringstream why;
    why << "took " << secs << " s, limit " << out.time_limit_s << " s";
    out.fail(why.str());
  }
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.3f s", secs);
  std::cout << (out.pass ? "PASS" : "FAIL") << "  " << id << ". " << title << "  (" << timing << ")\n";
  for (const auto& d : out.details) std::cout << "      " << d << '\n';
  std::cout.flush();
  if (!out.pass) ++failures;
}

std::string id_of(const Graph& g) { return g.label().empty() ? write_graph6(g) : g.label(); }

std::string where(const Graph& g, std::size_t d, std::size_t k = 0) {
  return id_of(g) + " d=" + std::to_string(d) + (k ? " k=" + std::to_string(k) : "");
}

std::size_t diameter_of(const Graph& g) { return all_pairs_distances(g).diameter().value(); }

std::string percent(std::size_t num, std::size_t den) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%zu/%zu (%.1f%%)", num, den, den ? 100.0 * num / den : 0.0);
  return buf;
}

}  // namespace

int main() {
  const auto corpus = testing::corpus(7);
  std::cout << "corpus: " << corpus.size() << " connected graphs on at most 7 vertices\n";

  criterion(1, "complete graphs: odd walk counts between adjacent vertices", [](Outcome& out) {
    out.time_limit_s = 1.0;
    std::size_t checked = 0;
    for (std::size_t N = 2; N <= 10; ++N) {
      PowerStream powers(adjacency_matrix(complete_graph(N)));
      for (std::size_t k = 1; k <= 13; ++k) {
        powers.advance();
        if (k % 2 == 0 || k < 3) continue;
        Integer expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), N - 1, k);
        expected = (expected + 1) / Integer(static_cast<unsigned long>(N));
        for (std::size_t p = 0; p < N; ++p)
          for (std::size_t q = 0; q < N; ++q) {
            if (p == q) continue;
            ++checked;
            if (powers.current()(p, q) != expected)
              out.fail("K_" + std::to_string(N) + " k=" + std::to_string(k) + " entry " +
                       powers.current()(p, q).get_str() + " != " + expected.get_str());
          }
      }
    }
    out.note(std::to_string(checked) + " entries checked for N in 2..10, j in 1..6");
  });

  criterion(2, "short window [d, n+d-1] gives the same verdict as [d, n+d+20]", [&](Outcome& out) {
    out.time_limit_s = 120.0;
    std::size_t instances = 0, regular = 0;
    for (const auto& g : corpus) {
      for (std::size_t d = 0; d <= diameter_of(g); ++d) {
        const auto short_run = check_window(g, d);
        const auto long_run = check_window_range(g, d, g.order() + d + 20);
        ++instances;
        if (short_run.verdict == Verdict::Regular) ++regular;
        if (short_run.verdict != long_run.verdict) out.fail(where(g, d));
      }
    }
    out.note(std::to_string(instances) + " (graph, d) instances, " + std::to_string(regular) + " REGULAR");
  });

  criterion(3, "window and Schur-product criteria agree, with f(k) = c(k)", [&](Outcome& out) {
    std::size_t instances = 0, values = 0;
    for (const auto& g : corpus) {
      for (std::size_t d = 0; d <= diameter_of(g); ++d) {
        const auto w = check_window(g, d);
        const auto s = check_schur(g, d);
        ++instances;
        if (w.verdict != s.verdict) {
          out.fail(where(g, d) + " window " + to_string(w.verdict) + " schur " + to_string(s.verdict));
          continue;
        }
        if (w.verdict != Verdict::Regular) continue;
        for (std::size_t k = 1; k < d; ++k) {
          if (s.f_values.at(k) != 0) out.fail(where(g, d, k) + " c(k) nonzero below d");
        }
        for (const auto& [k, f] : w.f_values) {
          if (k < s.k_low || k > s.k_high) continue;
          ++values;
          const auto it = s.f_values.find(k);
          if (it == s.f_values.end() || it->second != f) out.fail(where(g, d, k));
        }
      }
    }
    out.note(std::to_string(instances) + " instances, " + std::to_string(values) + " shared values compared");
  });

  criterion(4, "trace formula reproduces the common walk count", [&](Outcome& out) {
    std::size_t checked = 0;
    for (const auto& g : corpus) {
      for (std::size_t d = 0; d <= diameter_of(g); ++d) {
        const auto w = check_window(g, d);
        if (w.verdict != Verdict::Regular) continue;
        for (const auto& [k, f] : w.f_values) {
          const auto t = f_trace(g, d, k);
          ++checked;
          if (t.get_den() != 1 || t < 0) out.fail(where(g, d, k) + " trace value " + t.get_str());
          if (t != Rational(f)) out.fail(where(g, d, k) + " " + t.get_str() + " != " + f.get_str());
        }
      }
    }
    out.note(std::to_string(checked) + " REGULAR (graph, d, k) instances");
  });

  criterion(5, "exponential criterion separates within K <= 60 and never misfires", [&](Outcome& out) {
    constexpr std::size_t kMaxK = 60;
    std::size_t not_regular = 0, regular_runs = 0, worst_k = 0;
    std::map<std::size_t, std::size_t> first_k;
    for (const auto& g : corpus) {
      const auto R = static_cast<std::size_t>(max_row_sum(adjacency_matrix(g)).get_ui());
      const std::size_t k_min = R >= 2 ? R - 1 : 1;
      for (std::size_t d = 0; d <= diameter_of(g); ++d) {
        const auto w = check_window(g, d);
        if (w.verdict == Verdict::NotRegular) {
          ++not_regular;
          std::optional<std::size_t> hit;
          for (std::size_t K = k_min; K <= kMaxK && !hit; ++K)
            if (check_exponential(g, d, K).verdict == Verdict::NotRegular) hit = K;
          if (!hit) {
            out.fail(where(g, d) + " never NOT_REGULAR up to K=60");
            continue;
          }
          ++first_k[*hit];
          worst_k = std::max(worst_k, *hit);
        } else {
          for (std::size_t K = k_min; K <= kMaxK; ++K) {
            ++regular_runs;
            const auto e = check_exponential(g, d, K);
            if (e.verdict == Verdict::NotRegular) out.fail(where(g, d) + " REGULAR reported NOT_REGULAR at K=" + std::to_string(K));
          }
        }
      }
    }
    std::ostringstream hist;
    for (const auto& [k, c] : first_k) hist << " K=" << k << ":" << c;
    out.note(std::to_string(not_regular) + " NOT_REGULAR instances; largest K needed " + std::to_string(worst_k));
    out.note("first separating K:" + hist.str());
    out.note(std::to_string(regular_runs) + " exponential runs on REGULAR instances");
  });

  criterion(6, "matrix powers match brute-force walk enumeration", [&](Outcome& out) {
    constexpr std::size_t kMax = 8;
    std::vector<Graph> sample;
    for (std::size_t i = 0; i < corpus.size(); i += 6) sample.push_back(corpus[i]);
    std::mt19937_64 rng(20240601);
    for (int t = 0; t < 100; ++t) {
      std::uniform_real_distribution<double> density(0.1, 0.6);
      auto g = testing::random_connected_graph(rng, 8, density(rng));
      g.set_label("random8#" + std::to_string(t) + ":" + write_graph6(g));
      sample.push_back(std::move(g));
    }
    std::size_t entries = 0;
    for (const auto& g : sample) {
      const auto n = g.order();
      std::vector<IntMatrix> powers{IntMatrix::identity(n)};
      PowerStream stream(adjacency_matrix(g));
      for (std::size_t k = 1; k <= kMax; ++k) {
        stream.advance();
        powers.push_back(stream.current());
      }
      for (std::size_t i = 0; i < n; ++i) {
        const auto table = walk_count_oracle_table(g, i, kMax);
        for (std::size_t k = 0; k <= kMax; ++k)
          for (std::size_t j = 0; j < n; ++j) {
            ++entries;
            if (table[k][j] != powers[k](i, j)) out.fail(id_of(g) + " k=" + std::to_string(k));
          }
      }
    }
    if (sample.size() < 200) out.fail("sample too small");
    out.note(std::to_string(sample.size()) + " graphs (n <= 8), " + std::to_string(entries) +
             " entries for k in 0..8");
  });

  criterion(7, "Petersen graph and C5 x C5 examples", [](Outcome& out) {
    out.time_limit_s = 10.0;
    const auto petersen = generate(parse_family_spec("petersen"));
    for (std::size_t d = 0; d <= 2; ++d) {
      const auto r = check_window(petersen, d);
      out.note("petersen d=" + std::to_string(d) + " " + to_string(r.verdict));
      if (r.verdict != Verdict::Regular) out.fail("petersen d=" + std::to_string(d));
    }
    const auto torus = generate(parse_family_spec("cartesian_cycle_square:5"));
    const auto r1 = check_window(torus, 1);
    out.note("C5xC5 d=1 " + std::string(to_string(r1.verdict)));
    if (r1.verdict != Verdict::Regular) out.fail("C5xC5 d=1");
    bool separated = false;
    for (std::size_t d = 2; d <= diameter_of(torus); ++d) {
      const auto r = check_window(torus, d);
      std::string line = "C5xC5 d=" + std::to_string(d) + " " + to_string(r.verdict);
      if (r.verdict == Verdict::NotRegular) {
        if (!r.witness) {
          out.fail("no witness at d=" + std::to_string(d));
          continue;
        }
        const auto& w = *r.witness;
        line += " witness k=" + std::to_string(w.k) + " (" + std::to_string(w.i) + "," + std::to_string(w.j) +
                ")=" + w.count_ij.get_str() + " vs (" + std::to_string(w.i2) + "," + std::to_string(w.j2) +
                ")=" + w.count_i2j2.get_str();
        separated = true;
      }
      out.note(line);
    }
    if (!separated) out.fail("C5xC5 regular for every d >= 2");
  });

  criterion(8, "vertex-deleted characteristic polynomials vs 0-walk regularity", [&](Outcome& out) {
    std::size_t positives = 0;
    for (const auto& g : corpus) {
      const bool gm = godsil_mckay_check(g);
      const bool w = check_window(g, 0).verdict == Verdict::Regular;
      positives += w;
      if (gm != w) out.fail(id_of(g));
    }
    out.note(std::to_string(corpus.size()) + " graphs, " + std::to_string(positives) + " walk-regular");
  });

  criterion(9, "regular graphs: 1-walk regularity, line graph, edge-deleted polynomials", [&](Outcome& out) {
    std::size_t regular = 0, all_true = 0;
    for (const auto& g : corpus) {
      if (!is_regular(g) || g.edge_count() == 0) continue;
      ++regular;
      const auto r = check_prop6(g);
      if (!(r.one_walk_regular == r.line_zero_walk_regular &&
            r.line_zero_walk_regular == r.edge_deleted_polys_equal))
        out.fail(id_of(g));
      all_true += r.one_walk_regular && r.line_zero_walk_regular && r.edge_deleted_polys_equal;
    }
    out.note(std::to_string(regular) + " regular graphs with edges, " + std::to_string(all_true) +
             " with all three true");
  });

  criterion(10, "characteristic polynomial scaling b_i = a_i c^(n-i)", [&](Outcome& out) {
    std::size_t instances = 0, checks = 0, printed = 0;
    for (const auto& g : corpus) {
      for (std::size_t d = 0; d <= diameter_of(g); ++d) {
        const auto w = check_window(g, d);
        if (w.verdict != Verdict::Regular) continue;
        ++instances;
        for (std::size_t k = w.k_low; k <= w.k_high; ++k) {
          const auto s = check_charpoly_scaling(g, d, k);
          ++checks;
          printed += s.printed_law_holds;
          if (!s.holds) out.fail(where(g, d, k));
        }
      }
    }
    out.note(std::to_string(instances) + " REGULAR instances, " + std::to_string(checks) + " (instance, k) checks");
    out.note("exponent-i variant b_i = a_i c^i holds in " + percent(printed, checks));
  });

  criterion(11, "Kronecker-form probe agreement table (graphs on at most 6 vertices)", [&](Outcome& out) {
    std::map<std::pair<bool, std::string>, std::size_t> table;
    std::size_t instances = 0, agree = 0;
    for (const auto& g : corpus) {
      if (g.order() > 6) continue;
      for (std::size_t d = 0; d <= diameter_of(g); ++d) {
        const auto p = check_kronecker(g, d);
        ++instances;
        agree += p.agrees_with_schur;
        ++table[{p.all_hold, to_string(p.schur_verdict)}];
      }
    }
    out.note("identity holds | Schur verdict | count");
    for (const auto& [key, count] : table)
      out.note(std::string(key.first ? "yes" : "no ") + "            | " + key.second + " | " + std::to_string(count));
    out.note("agreement " + percent(agree, instances));
  });

  criterion(12, "graph6 round trip on 10000 random graphs", [](Outcome& out) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> order(0, 60);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int t = 0; t < 10000; ++t) {
      const auto g = testing::random_graph(rng, order(rng), density(rng));
      const auto text = write_graph6(g);
      const auto back = parse_graph6(text);
      if (!(back == g) || write_graph6(back) != text) out.fail("graph " + std::to_string(t) + " " + text);
    }
    out.note("10000 graphs with n in 0..60");
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}

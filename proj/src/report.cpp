#include "dwalk/report.hpp"

#include <chrono>
#include <sstream>

#include "dwalk/error.hpp"
#include "json.hpp"

namespace dwalk {
namespace {

using nlohmann::json;

constexpr std::pair<const char*, std::uint32_t> kCheckNames[] = {
    {"window", kCheckWindow}, {"schur", kCheckSchur}, {"kron", kCheckKron},
    {"exp", kCheckExp},       {"prop4", kCheckProp4}, {"prop5", kCheckProp5},
    {"prop6", kCheckProp6},   {"gm", kCheckGodsilMcKay}, {"unfolded", kCheckUnfolded},
};

// Budget for the oracle's walk-tree enumeration per graph.
constexpr double kOracleBudget = 2e7;

json to_json(const Witness& w) {
  return {{"i", w.i}, {"j", w.j}, {"i2", w.i2}, {"j2", w.j2}, {"k", w.k},
          {"count_ij", w.count_ij.get_str()}, {"count_i2j2", w.count_i2j2.get_str()}};
}

json to_json(const DWalkReport& r) {
  json f = json::object();
  for (const auto& [k, v] : r.f_values) f[std::to_string(k)] = v.get_str();
  json out = {{"d", r.d},
              {"criterion", to_string(r.criterion)},
              {"verdict", to_string(r.verdict)},
              {"window", {r.k_low, r.k_high}},
              {"f_values", std::move(f)},
              {"witness", r.witness ? to_json(*r.witness) : json(nullptr)},
              {"notes", r.notes}};
  if (r.scalar) out["scalar"] = r.scalar->get_str();
  if (r.tail_bound) out["tail_bound"] = r.tail_bound->get_str();
  if (r.truncation) out["truncation"] = *r.truncation;
  return out;
}

class Builder {
 public:
  explicit Builder(const AnalysisOptions& options) : options_(options) {}

  json errors = json::array();
  bool inconsistent = false;

  template <typename Fn>
  void guarded(const char* check, std::optional<std::size_t> d, Fn&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      errors.push_back({{"check", check},
                        {"d", d ? json(*d) : json(nullptr)},
                        {"code", to_string(e.code())},
                        {"message", e.what()}});
    }
  }

  bool wants(std::uint32_t bit) const { return (options_.checks & bit) != 0; }

 private:
  const AnalysisOptions& options_;
};

bool same_values_on_shared_range(const DWalkReport& a, const DWalkReport& b) {
  for (const auto& [k, v] : a.f_values) {
    const auto it = b.f_values.find(k);
    if (it != b.f_values.end() && it->second != v) return false;
  }
  return true;
}

json oracle_section(const Graph& g, bool& agrees) {
  const auto n = g.order();
  std::size_t max_deg = 0;
  for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
  std::size_t k_max = kOracleMaxLength;
  if (max_deg > 1) {
    double walks = static_cast<double>(n);
    std::size_t k = 0;
    while (k < kOracleMaxLength && walks * static_cast<double>(max_deg) <= kOracleBudget) {
      walks *= static_cast<double>(max_deg);
      ++k;
    }
    k_max = k;
  }
  const auto powers = power_stream(adjacency_matrix(g), k_max);
  agrees = true;
  for (Vertex i = 0; i < n && agrees; ++i) {
    const auto table = walk_count_oracle_table(g, i, k_max);
    for (std::size_t k = 0; k <= k_max && agrees; ++k)
      for (Vertex j = 0; j < n; ++j)
        if (table[k][j] != powers[k](i, j)) agrees = false;
  }
  return {{"k_max", k_max}, {"agrees", agrees}};
}

}  // namespace

std::uint32_t parse_checks(const std::string& list) {
  if (list == "all") return kCheckAll;
  std::uint32_t out = 0;
  std::stringstream in(list);
  std::string token;
  while (std::getline(in, token, ',')) {
    bool found = false;
    for (const auto& [name, bit] : kCheckNames) {
      if (token == name) {
        out |= bit;
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::InvalidArgument, "unknown check '" + token + "'");
  }
  if (out == 0) throw Error(ErrorCode::InvalidArgument, "no checks selected");
  return out;
}

GraphReport analyze(const Graph& g, const AnalysisOptions& options, const std::string& graph_id) {
  const auto start = std::chrono::steady_clock::now();
  const auto dist = all_pairs_distances(g);
  const auto diameter = dist.diameter();
  const bool connected = g.order() > 0 && dist.connected();

  Builder b(options);
  json doc = {{"graph_id", graph_id},
              {"label", g.label()},
              {"graph6", write_graph6(g)},
              {"n", g.order()},
              {"m", g.edge_count()},
              {"connected", connected},
              {"diameter", diameter ? json(*diameter) : json(nullptr)}};
  json reports = json::array();
  json agreement = json::object();
  const auto agree = [&](const char* key, bool ok) {
    agreement[key] = agreement.contains(key) ? agreement[key].get<bool>() && ok : ok;
    if (!ok) b.inconsistent = true;
  };

  std::vector<std::size_t> ds;
  if (options.d_list) {
    ds = *options.d_list;
  } else if (diameter) {
    for (std::size_t d = 0; d <= *diameter; ++d) ds.push_back(d);
  }

  const bool needs_window = b.wants(kCheckWindow | kCheckSchur | kCheckExp | kCheckProp4 |
                                    kCheckProp5 | kCheckKron);
  json kron = json::array(), prop4 = json::array(), prop5 = json::array();

  if (!connected && needs_window) {
    b.guarded("window", std::nullopt, [&] { distance_class(g, dist, 0); });
  }

  for (const auto d : ds) {
    if (!connected || !needs_window) break;
    std::optional<DWalkReport> window;
    b.guarded("window", d, [&] { window = check_window(g, d); });
    if (!window) continue;
    reports.push_back(to_json(*window));
    const bool regular = window->verdict == Verdict::Regular;

    if (b.wants(kCheckSchur)) {
      b.guarded("schur", d, [&] {
        const auto schur = check_schur(g, d);
        reports.push_back(to_json(schur));
        agree("schur", schur.verdict == window->verdict &&
                           same_values_on_shared_range(*window, schur));
      });
    }
    if (b.wants(kCheckExp)) {
      b.guarded("exp", d, [&] {
        const auto exp = check_exponential_auto(g, d, options.exp_truncation);
        reports.push_back(to_json(exp));
        const bool contradiction =
            (exp.verdict == Verdict::NotRegular && regular) ||
            (exp.verdict == Verdict::Regular && !regular);
        agree("exp", !contradiction);
      });
    }
    if (b.wants(kCheckKron)) {
      b.guarded("kron", d, [&] {
        const auto probe = check_kronecker(g, d);
        json steps = json::array();
        for (const auto& s : probe.steps)
          steps.push_back({{"k", s.k}, {"c", s.c.get_str()}, {"identity_holds", s.identity_holds}});
        kron.push_back({{"d", d},
                        {"steps", std::move(steps)},
                        {"all_hold", probe.all_hold},
                        {"schur_verdict", to_string(probe.schur_verdict)},
                        {"agrees_with_schur", probe.agrees_with_schur}});
      });
    }
    if (b.wants(kCheckProp4) && regular) {
      b.guarded("prop4", d, [&] {
        std::size_t checked = 0, printed_passes = 0;
        bool holds = true;
        for (std::size_t k = window->k_low; k <= window->k_high; ++k) {
          const auto s = check_charpoly_scaling(g, d, k);
          ++checked;
          holds = holds && s.holds;
          if (s.printed_law_holds) ++printed_passes;
        }
        prop4.push_back({{"d", d}, {"k_checked", checked}, {"holds", holds},
                         {"printed_law_passes", printed_passes}});
        agree("prop4", holds);
      });
    }
    if (b.wants(kCheckProp5) && regular) {
      b.guarded("prop5", d, [&] {
        const auto r = check_prop5(g, d);
        prop5.push_back({{"d", d}, {"g_regular", r.g_regular}, {"gd_regular", r.gd_regular},
                         {"zero_walk_regular", r.zero_walk_regular}, {"consistent", r.consistent}});
      });
    }
  }

  doc["reports"] = std::move(reports);
  if (b.wants(kCheckKron)) doc["kronecker"] = std::move(kron);
  if (b.wants(kCheckProp4)) doc["prop4"] = std::move(prop4);
  if (b.wants(kCheckProp5)) doc["prop5"] = std::move(prop5);

  if (b.wants(kCheckGodsilMcKay)) {
    const bool value = godsil_mckay_check(g);
    json gm = {{"value", value}};
    if (connected) {
      b.guarded("gm", 0, [&] {
        const bool window0 = check_window(g, 0).verdict == Verdict::Regular;
        gm["window_d0_regular"] = window0;
        agree("godsil_mckay", value == window0);
      });
    }
    doc["godsil_mckay"] = std::move(gm);
  }

  if (b.wants(kCheckProp6)) {
    doc["prop6"] = nullptr;
    if (g.edge_count() > 0 && is_regular(g)) {
      b.guarded("prop6", std::nullopt, [&] {
        const auto r = check_prop6(g);
        doc["prop6"] = {{"one_walk_regular", r.one_walk_regular},
                        {"line_zero_walk_regular", r.line_zero_walk_regular},
                        {"edge_deleted_polys_equal", r.edge_deleted_polys_equal},
                        {"consistent", r.consistent}};
        agree("prop6", r.consistent);
      });
    }
  }

  if (b.wants(kCheckUnfolded)) {
    json sizes = json::array();
    b.guarded("unfolded", std::nullopt, [&] {
      if (g.edge_count() == 0) return;
      for (std::size_t size = 2; size <= std::max<std::size_t>(2, g.order()); ++size)
        if (is_unfolded_complete(g, size)) sizes.push_back(size);
    });
    doc["unfolded_complete_sizes"] = std::move(sizes);
  }

  if (options.oracle_validate) {
    b.guarded("oracle", std::nullopt, [&] {
      if (g.order() > kOracleMaxOrder) {
        throw Error(ErrorCode::OracleTooLarge, "graph exceeds oracle cap n <= 12");
      }
      bool agrees = true;
      doc["oracle"] = oracle_section(g, agrees);
      agree("oracle", agrees);
    });
  }

  doc["agreement"] = std::move(agreement);
  doc["errors"] = std::move(b.errors);
  doc["inconsistent"] = b.inconsistent;
  doc["timing_ms"] = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start).count();
  return {doc.dump(), b.inconsistent};
}

}  // namespace dwalk

// dwalk: command-line front end over the C interface of libdwalk.
//
//   dwalk [run]  [--input FILE | --family SPEC] [--checks LIST] [--d LIST|all]
//                [--format text|json|tsv] [--exp-K INT] [--oracle-validate]
//                [--max-n INT]
//   dwalk census [same options]
//
// Exit status: 0 when every graph was analysed, 1 when some input could not
// be read or parsed (or was skipped by --max-n), 2 when checkers that must
// agree disagreed on some graph.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dwalk/dwalk.h"
#include "json.hpp"

namespace {

using nlohmann::json;

struct Config {
  std::string input;
  std::string family;
  std::string checks = "window";
  std::string d_list = "all";
  std::string format = "text";
  std::size_t exp_k = 0;
  bool oracle_validate = false;
  std::size_t max_n = 200;
};

struct GraphDeleter {
  void operator()(dwr_graph_struct* g) const { dwr_graph_destroy(g); }
};
struct ReportDeleter {
  void operator()(dwr_report_struct* r) const { dwr_report_destroy(r); }
};
using GraphHandle = std::unique_ptr<dwr_graph_struct, GraphDeleter>;
using ReportHandle = std::unique_ptr<dwr_report_struct, ReportDeleter>;

std::string report_json(dwr_report_t report) {
  std::size_t len = 0;
  dwr_report_json(report, nullptr, &len);
  std::string buf(len, '\0');
  if (dwr_report_json(report, buf.data(), &len) != DWR_OK) return "{}";
  buf.resize(len - 1);
  return buf;
}

std::size_t graph_order(dwr_graph_t g) {
  std::size_t n = 0;
  dwr_graph_order(g, &n);
  return n;
}

// One input item: either a parsed graph or the reason it could not be read.
struct Item {
  std::string id;
  GraphHandle graph;
  std::optional<json> error;
};

class Source {
 public:
  explicit Source(const Config& cfg) : cfg_(cfg) {
    if (!cfg.family.empty()) return;
    if (!cfg.input.empty()) {
      file_.open(cfg.input);
      if (!file_) throw std::runtime_error("cannot read input file '" + cfg.input + "'");
      in_ = &file_;
    } else {
      in_ = &std::cin;
    }
  }

  std::optional<Item> next() {
    if (!cfg_.family.empty()) {
      if (family_done_) return std::nullopt;
      family_done_ = true;
      return make(cfg_.family, [&](dwr_graph_t* g) {
        return dwr_graph_from_family(g, cfg_.family.c_str());
      });
    }
    std::string line;
    while (std::getline(*in_, line)) {
      ++line_no_;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty() || line == ">>graph6<<") continue;
      return make(std::to_string(line_no_), [&](dwr_graph_t* g) {
        return dwr_graph_from_graph6(g, line.c_str());
      });
    }
    return std::nullopt;
  }

 private:
  template <typename Fn>
  Item make(std::string id, Fn&& build) {
    Item item{std::move(id), nullptr, std::nullopt};
    dwr_graph_t raw = nullptr;
    const int rc = build(&raw);
    if (rc != DWR_OK) {
      item.error = json{{"code", dwr_error_description(rc)}, {"message", dwr_last_error_message()}};
      return item;
    }
    item.graph.reset(raw);
    if (graph_order(raw) > cfg_.max_n) {
      item.error = json{{"code", "Skipped"},
                        {"message", "n=" + std::to_string(graph_order(raw)) +
                                        " exceeds --max-n " + std::to_string(cfg_.max_n)}};
      item.graph.reset();
    }
    return item;
  }

  const Config& cfg_;
  std::ifstream file_;
  std::istream* in_ = nullptr;
  std::size_t line_no_ = 0;
  bool family_done_ = false;
};

std::vector<std::size_t> parse_d_list(const std::string& text) {
  std::vector<std::size_t> out;
  if (text == "all") return out;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    const long v = std::stol(token, &pos);
    if (pos != token.size() || v < 0) throw CLI::ValidationError("--d", "bad distance '" + token + "'");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw CLI::ValidationError("--d", "empty list");
  return out;
}

std::string brief_values(const json& f_values, std::size_t limit = 6) {
  std::map<long, std::string> ordered;
  for (const auto& [k, v] : f_values.items()) ordered[std::stol(k)] = v.get<std::string>();
  std::string out;
  std::size_t shown = 0;
  for (const auto& [k, v] : ordered) {
    if (shown == limit) {
      out += ", ...";
      break;
    }
    out += (shown++ ? ", " : "") + ("f(" + std::to_string(k) + ")=" + v);
  }
  return out;
}

std::string witness_text(const json& w) {
  return "k=" + std::to_string(w["k"].get<std::size_t>()) + ": (" +
         std::to_string(w["i"].get<std::size_t>()) + "," +
         std::to_string(w["j"].get<std::size_t>()) + ")=" + w["count_ij"].get<std::string>() +
         " vs (" + std::to_string(w["i2"].get<std::size_t>()) + "," +
         std::to_string(w["j2"].get<std::size_t>()) + ")=" + w["count_i2j2"].get<std::string>();
}

void print_text(const json& doc) {
  std::cout << "graph " << doc["graph_id"].get<std::string>();
  const auto label = doc["label"].get<std::string>();
  if (!label.empty() && label != doc["graph_id"].get<std::string>()) std::cout << "  " << doc["label"].get<std::string>();
  std::cout << "  graph6=" << doc["graph6"].get<std::string>() << "  n=" << doc["n"]
            << " m=" << doc["m"] << " diameter="
            << (doc["diameter"].is_null() ? std::string("-") : doc["diameter"].dump()) << '\n';
  for (const auto& r : doc["reports"]) {
    std::ostringstream line;
    line << "  d=" << r["d"] << "  " << std::left << std::setw(7) << r["criterion"].get<std::string>()
         << std::setw(13) << r["verdict"].get<std::string>() << "[" << r["window"][0] << ","
         << r["window"][1] << "]  ";
    if (!r["witness"].is_null()) {
      line << witness_text(r["witness"]);
    } else if (r.contains("scalar")) {
      line << "c=" << r["scalar"].get<std::string>() << " +/- " << r["tail_bound"].get<std::string>()
           << " (K=" << r["truncation"] << ")";
    } else {
      line << brief_values(r["f_values"]);
    }
    std::cout << line.str() << '\n';
  }
  for (const char* key : {"kronecker", "prop4", "prop5", "prop6", "godsil_mckay",
                          "unfolded_complete_sizes", "oracle"}) {
    if (doc.contains(key)) std::cout << "  " << key << ": " << doc[key].dump() << '\n';
  }
  for (const auto& e : doc["errors"]) {
    std::cout << "  error[" << e["check"].get<std::string>() << "]: " << e["code"].get<std::string>()
              << " " << e["message"].get<std::string>() << '\n';
  }
  if (doc["inconsistent"].get<bool>())
    std::cout << "  INCONSISTENT: " << doc["agreement"].dump() << '\n';
}

void print_tsv_header() {
  std::cout << "graph_id\tgraph6\tn\tm\td\tcriterion\tverdict\tk_low\tk_high\twitness_k\n";
}

void print_tsv(const json& doc) {
  for (const auto& r : doc["reports"]) {
    std::cout << doc["graph_id"].get<std::string>() << '\t' << doc["graph6"].get<std::string>() << '\t'
              << doc["n"] << '\t' << doc["m"] << '\t' << r["d"] << '\t'
              << r["criterion"].get<std::string>() << '\t' << r["verdict"].get<std::string>() << '\t'
              << r["window"][0] << '\t' << r["window"][1] << '\t'
              << (r["witness"].is_null() ? std::string("-") : r["witness"]["k"].dump()) << '\n';
  }
}

struct Analysis {
  std::optional<json> doc;
  std::optional<json> error;
  bool inconsistent = false;
};

Analysis analyse(Item& item, const dwr_options& opts) {
  Analysis out;
  if (item.error) {
    out.error = json{{"graph_id", item.id}, {"error", *item.error}};
    return out;
  }
  dwr_report_t raw = nullptr;
  const int rc = dwr_analyze(&raw, item.graph.get(), &opts, item.id.c_str());
  if (rc != DWR_OK) {
    out.error = json{{"graph_id", item.id},
                     {"error", {{"code", dwr_error_description(rc)}, {"message", dwr_last_error_message()}}}};
    return out;
  }
  ReportHandle report(raw);
  int inconsistent = 0;
  dwr_report_inconsistent(raw, &inconsistent);
  out.inconsistent = inconsistent != 0;
  out.doc = json::parse(report_json(raw));
  return out;
}

int run(const Config& cfg, const dwr_options& opts) {
  Source source(cfg);
  bool malformed = false, inconsistent = false;
  if (cfg.format == "tsv") print_tsv_header();
  while (auto item = source.next()) {
    const auto result = analyse(*item, opts);
    if (result.error) {
      malformed = true;
      if (cfg.format == "json") {
        std::cout << result.error->dump() << '\n';
      } else {
        std::cerr << "graph " << item->id << ": " << (*result.error)["error"]["code"].get<std::string>()
                  << " " << (*result.error)["error"]["message"].get<std::string>() << '\n';
      }
      continue;
    }
    inconsistent = inconsistent || result.inconsistent;
    if (cfg.format == "json") {
      std::cout << result.doc->dump() << '\n';
    } else if (cfg.format == "tsv") {
      print_tsv(*result.doc);
    } else {
      print_text(*result.doc);
    }
  }
  return inconsistent ? 2 : malformed ? 1 : 0;
}

std::string regular_set(const json& doc) {
  std::string out;
  for (const auto& r : doc["reports"]) {
    if (r["criterion"] != "window" || r["verdict"] != "REGULAR") continue;
    out += (out.empty() ? "" : ",") + r["d"].dump();
  }
  return out.empty() ? "-" : out;
}

int census(const Config& cfg, dwr_options opts) {
  opts.checks |= DWR_CHECK_WINDOW;
  Source source(cfg);
  bool malformed = false, inconsistent = false;
  std::map<std::string, std::size_t> patterns;
  json graphs = json::array();
  std::size_t errors = 0;

  if (cfg.format == "tsv") std::cout << "graph_id\tgraph6\tn\tm\tdiameter\tregular_d\n";
  if (cfg.format == "text") {
    std::cout << std::left << std::setw(8) << "graph" << std::setw(14) << "graph6" << std::setw(5)
              << "n" << std::setw(5) << "m" << std::setw(6) << "diam" << "regular d\n";
  }
  while (auto item = source.next()) {
    const auto result = analyse(*item, opts);
    if (result.error) {
      malformed = true;
      ++errors;
      std::cerr << "line " << item->id << ": " << (*result.error)["error"]["code"].get<std::string>()
                << " " << (*result.error)["error"]["message"].get<std::string>() << '\n';
      continue;
    }
    inconsistent = inconsistent || result.inconsistent;
    const auto& doc = *result.doc;
    const auto pattern = regular_set(doc);
    ++patterns[pattern];
    const auto diameter = doc["diameter"].is_null() ? std::string("-") : doc["diameter"].dump();
    if (cfg.format == "json") {
      graphs.push_back({{"graph_id", doc["graph_id"]}, {"graph6", doc["graph6"]}, {"n", doc["n"]},
                        {"m", doc["m"]}, {"diameter", doc["diameter"]}, {"regular_d", pattern},
                        {"inconsistent", doc["inconsistent"]}});
    } else if (cfg.format == "tsv") {
      std::cout << doc["graph_id"].get<std::string>() << '\t' << doc["graph6"].get<std::string>() << '\t'
                << doc["n"] << '\t' << doc["m"] << '\t' << diameter << '\t' << pattern << '\n';
    } else {
      std::cout << std::left << std::setw(8) << doc["graph_id"].get<std::string>() << std::setw(14)
                << doc["graph6"].get<std::string>() << std::setw(5) << doc["n"].dump() << std::setw(5)
                << doc["m"].dump() << std::setw(6) << diameter << pattern << '\n';
    }
  }

  std::size_t total = 0;
  for (const auto& [p, c] : patterns) total += c;
  if (cfg.format == "json") {
    std::cout << json{{"graphs", graphs}, {"patterns", patterns}, {"total", total}, {"errors", errors}}.dump()
              << '\n';
  } else if (cfg.format == "tsv") {
    std::cout << "#pattern\tcount\n";
    for (const auto& [p, c] : patterns) std::cout << '#' << p << '\t' << c << '\n';
  } else {
    std::cout << "\npattern (regular d)    count\n";
    for (const auto& [p, c] : patterns) std::cout << std::left << std::setw(23) << p << c << '\n';
    std::cout << "total " << total << ", errors " << errors << '\n';
  }
  return inconsistent ? 2 : malformed ? 1 : 0;
}

void add_common(CLI::App& app, Config& cfg) {
  auto* input = app.add_option("--input", cfg.input, "graph6 file, one graph per line");
  auto* family = app.add_option("--family", cfg.family, "family spec such as cycle:5 or hamming:3,2");
  input->excludes(family);
  app.add_option("--checks", cfg.checks,
                 "comma list of window,schur,kron,exp,prop4,prop5,prop6,gm,unfolded or all");
  app.add_option("--d", cfg.d_list, "comma list of distance classes, or all");
  app.add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json", "tsv"}));
  app.add_option("--exp-K", cfg.exp_k, "truncation order for the exponential check (0 = default)");
  app.add_flag("--oracle-validate", cfg.oracle_validate,
               "cross-check matrix powers against walk enumeration");
  app.add_option("--max-n", cfg.max_n, "skip graphs with more vertices");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"d-walk regularity checker"};
  app.set_version_flag("--version", std::string(dwr_version_string()));
  Config cfg;
  add_common(app, cfg);
  auto* run_cmd = app.add_subcommand("run", "analyse every input graph (default)");
  auto* census_cmd = app.add_subcommand("census", "summarise regularity patterns over a corpus");
  Config run_cfg, census_cfg;
  add_common(*run_cmd, run_cfg);
  add_common(*census_cmd, census_cfg);
  app.require_subcommand(0, 1);
  CLI11_PARSE(app, argc, argv);

  const Config& active = run_cmd->parsed() ? run_cfg : census_cmd->parsed() ? census_cfg : cfg;
  dwr_options opts{};
  std::vector<std::size_t> ds;
  try {
    if (dwr_parse_checks(active.checks.c_str(), &opts.checks) != DWR_OK) {
      std::cerr << "dwalk: " << dwr_last_error_message() << '\n';
      return 1;
    }
    ds = parse_d_list(active.d_list);
    opts.d_list = ds.data();
    opts.d_count = ds.size();
    opts.exp_truncation = active.exp_k;
    opts.oracle_validate = active.oracle_validate ? 1 : 0;
    return census_cmd->parsed() ? census(active, opts) : run(active, opts);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "dwalk: " << e.what() << '\n';
    return 1;
  }
}

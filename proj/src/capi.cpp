#include <cstring>
#include <exception>
#include <string>

#include "dwalk/dwalk.h"
#include "dwalk/error.hpp"
#include "dwalk/families.hpp"
#include "dwalk/graph.hpp"
#include "dwalk/report.hpp"
#include "dwalk/walk_regularity.hpp"

struct dwr_graph_struct {
  static constexpr std::uint32_t kMagic = 0x47524150;
  std::uint32_t magic = kMagic;
  dwalk::Graph graph;
};

struct dwr_report_struct {
  static constexpr std::uint32_t kMagic = 0x52455054;
  std::uint32_t magic = kMagic;
  dwalk::GraphReport report;
};

namespace {

thread_local std::string last_error;

int map_code(dwalk::ErrorCode code) {
  using dwalk::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return DWR_ERROR_INVALID_ARGUMENT;
    case ErrorCode::MalformedGraph6: return DWR_ERROR_MALFORMED_GRAPH6;
    case ErrorCode::GraphTooLarge: return DWR_ERROR_GRAPH_TOO_LARGE;
    case ErrorCode::InvalidFamilyParameters: return DWR_ERROR_INVALID_FAMILY;
    case ErrorCode::NoSuchVertex: return DWR_ERROR_NO_SUCH_VERTEX;
    case ErrorCode::NoSuchEdge: return DWR_ERROR_NO_SUCH_EDGE;
    case ErrorCode::DimensionMismatch: return DWR_ERROR_DIMENSION_MISMATCH;
    case ErrorCode::NonMonicModulus: return DWR_ERROR_NON_MONIC_MODULUS;
    case ErrorCode::TruncationTooShort: return DWR_ERROR_TRUNCATION_TOO_SHORT;
    case ErrorCode::Disconnected: return DWR_ERROR_DISCONNECTED;
    case ErrorCode::EmptyDistanceClass: return DWR_ERROR_EMPTY_DISTANCE_CLASS;
    case ErrorCode::DistanceOutOfRange: return DWR_ERROR_DISTANCE_OUT_OF_RANGE;
    case ErrorCode::GraphTooLargeForKron: return DWR_ERROR_GRAPH_TOO_LARGE_FOR_KRON;
    case ErrorCode::InsufficientHistory: return DWR_ERROR_INSUFFICIENT_HISTORY;
    case ErrorCode::NotWalkRegular: return DWR_ERROR_NOT_WALK_REGULAR;
    case ErrorCode::NotRegularGraph: return DWR_ERROR_NOT_REGULAR_GRAPH;
    case ErrorCode::OracleTooLarge: return DWR_ERROR_ORACLE_TOO_LARGE;
  }
  return DWR_ERROR_INTERNAL;
}

int fail(int code, std::string message) {
  last_error = std::move(message);
  return code;
}

template <typename Fn>
int guard(Fn&& fn) noexcept {
  try {
    last_error.clear();
    return fn();
  } catch (const dwalk::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(DWR_ERROR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(DWR_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(DWR_ERROR_INTERNAL, "unknown exception");
  }
}

int write_text(const std::string& text, char* out, size_t* out_len) {
  if (out_len == nullptr) return fail(DWR_ERROR_NULL_POINTER, "out_len is NULL");
  const auto capacity = *out_len;
  *out_len = text.size() + 1;
  if (capacity < text.size() + 1 || out == nullptr) {
    return fail(DWR_ERROR_INSUFFICIENT_BUFFER, "output buffer too small");
  }
  std::memcpy(out, text.c_str(), text.size() + 1);
  return DWR_OK;
}

template <typename Handle>
bool valid(const Handle* h) {
  return h != nullptr && h->magic == Handle::kMagic;
}

int bad_handle() { return fail(DWR_ERROR_NULL_POINTER, "invalid or NULL handle"); }

int new_graph(dwr_graph_t* graph, dwalk::Graph g) {
  auto* h = new dwr_graph_struct;
  h->graph = std::move(g);
  *graph = h;
  return DWR_OK;
}

}  // namespace

extern "C" {

const char* dwr_error_description(int code) {
  switch (code) {
    case DWR_OK: return "OK";
    case DWR_ERROR_INVALID_ARGUMENT: return "Invalid argument";
    case DWR_ERROR_NULL_POINTER: return "Null pointer or invalid handle";
    case DWR_ERROR_INSUFFICIENT_BUFFER: return "Insufficient buffer space";
    case DWR_ERROR_MALFORMED_GRAPH6: return "Malformed graph6 input";
    case DWR_ERROR_GRAPH_TOO_LARGE: return "Graph too large for graph6";
    case DWR_ERROR_INVALID_FAMILY: return "Invalid family parameters";
    case DWR_ERROR_NO_SUCH_VERTEX: return "No such vertex";
    case DWR_ERROR_NO_SUCH_EDGE: return "No such edge";
    case DWR_ERROR_DIMENSION_MISMATCH: return "Dimension mismatch";
    case DWR_ERROR_NON_MONIC_MODULUS: return "Non-monic modulus";
    case DWR_ERROR_TRUNCATION_TOO_SHORT: return "Truncation order too short";
    case DWR_ERROR_DISCONNECTED: return "Graph is disconnected";
    case DWR_ERROR_EMPTY_DISTANCE_CLASS: return "Empty distance class";
    case DWR_ERROR_DISTANCE_OUT_OF_RANGE: return "Distance out of range";
    case DWR_ERROR_GRAPH_TOO_LARGE_FOR_KRON: return "Graph too large for Kronecker probe";
    case DWR_ERROR_INSUFFICIENT_HISTORY: return "Insufficient recurrence history";
    case DWR_ERROR_NOT_WALK_REGULAR: return "Graph is not d-walk regular";
    case DWR_ERROR_NOT_REGULAR_GRAPH: return "Graph is not regular";
    case DWR_ERROR_ORACLE_TOO_LARGE: return "Input exceeds oracle limits";
    case DWR_ERROR_INTERNAL: return "Internal error";
    default: return "Unknown error";
  }
}

const char* dwr_last_error_message(void) { return last_error.c_str(); }

const char* dwr_version_string(void) { return "dwalk 1.0.0"; }

int dwr_parse_checks(const char* list, uint32_t* checks) {
  if (list == nullptr || checks == nullptr) return fail(DWR_ERROR_NULL_POINTER, "NULL argument");
  return guard([&]() -> int {
    *checks = dwalk::parse_checks(list);
    return DWR_OK;
  });
}

int dwr_graph_from_graph6(dwr_graph_t* graph, const char* text) {
  if (graph == nullptr || text == nullptr) return fail(DWR_ERROR_NULL_POINTER, "NULL argument");
  return guard([&]() -> int { return new_graph(graph, dwalk::parse_graph6(text)); });
}

int dwr_graph_from_family(dwr_graph_t* graph, const char* spec) {
  if (graph == nullptr || spec == nullptr) return fail(DWR_ERROR_NULL_POINTER, "NULL argument");
  return guard([&]() -> int {
    return new_graph(graph, dwalk::generate(dwalk::parse_family_spec(spec)));
  });
}

int dwr_graph_from_edges(dwr_graph_t* graph, size_t n, const size_t* endpoints,
                         size_t edge_count) {
  if (graph == nullptr || (endpoints == nullptr && edge_count > 0))
    return fail(DWR_ERROR_NULL_POINTER, "NULL argument");
  return guard([&]() -> int {
    dwalk::Graph g(n);
    for (size_t e = 0; e < edge_count; ++e) g.add_edge(endpoints[2 * e], endpoints[2 * e + 1]);
    return new_graph(graph, std::move(g));
  });
}

int dwr_graph_destroy(dwr_graph_t graph) {
  if (graph == nullptr) return DWR_OK;
  if (!valid(graph)) return bad_handle();
  graph->magic = 0;
  delete graph;
  return DWR_OK;
}

int dwr_graph_order(const dwr_graph_t graph, size_t* n) {
  if (!valid(graph) || n == nullptr) return bad_handle();
  *n = graph->graph.order();
  return DWR_OK;
}

int dwr_graph_edge_count(const dwr_graph_t graph, size_t* m) {
  if (!valid(graph) || m == nullptr) return bad_handle();
  *m = graph->graph.edge_count();
  return DWR_OK;
}

int dwr_graph_adjacent(const dwr_graph_t graph, size_t u, size_t v, int* adjacent) {
  if (!valid(graph) || adjacent == nullptr) return bad_handle();
  return guard([&]() -> int {
    *adjacent = graph->graph.adjacent(u, v) ? 1 : 0;
    return DWR_OK;
  });
}

int dwr_graph_diameter(const dwr_graph_t graph, size_t* diameter) {
  if (!valid(graph) || diameter == nullptr) return bad_handle();
  return guard([&]() -> int {
    const auto d = dwalk::all_pairs_distances(graph->graph).diameter();
    if (!d) return fail(DWR_ERROR_DISCONNECTED, "graph is disconnected or empty");
    *diameter = *d;
    return DWR_OK;
  });
}

int dwr_graph_to_graph6(const dwr_graph_t graph, char* out, size_t* out_len) {
  if (!valid(graph)) return bad_handle();
  return guard([&]() -> int { return write_text(dwalk::write_graph6(graph->graph), out, out_len); });
}

int dwr_graph_label(const dwr_graph_t graph, char* out, size_t* out_len) {
  if (!valid(graph)) return bad_handle();
  return guard([&]() -> int { return write_text(graph->graph.label(), out, out_len); });
}

int dwr_check_window(const dwr_graph_t graph, size_t d, int* verdict) {
  if (!valid(graph) || verdict == nullptr) return bad_handle();
  return guard([&]() -> int {
    switch (dwalk::check_window(graph->graph, d).verdict) {
      case dwalk::Verdict::Regular: *verdict = DWR_VERDICT_REGULAR; break;
      case dwalk::Verdict::NotRegular: *verdict = DWR_VERDICT_NOT_REGULAR; break;
      case dwalk::Verdict::Inconclusive: *verdict = DWR_VERDICT_INCONCLUSIVE; break;
    }
    return DWR_OK;
  });
}

int dwr_godsil_mckay(const dwr_graph_t graph, int* walk_regular) {
  if (!valid(graph) || walk_regular == nullptr) return bad_handle();
  return guard([&]() -> int {
    *walk_regular = dwalk::godsil_mckay_check(graph->graph) ? 1 : 0;
    return DWR_OK;
  });
}

int dwr_walk_count_oracle(const dwr_graph_t graph, size_t i, size_t j, size_t k, char* out,
                          size_t* out_len) {
  if (!valid(graph)) return bad_handle();
  return guard([&]() -> int {
    return write_text(dwalk::walk_count_oracle(graph->graph, i, j, k).get_str(), out, out_len);
  });
}

int dwr_analyze(dwr_report_t* report, const dwr_graph_t graph, const dwr_options* options,
                const char* graph_id) {
  if (report == nullptr || !valid(graph)) return bad_handle();
  const dwr_options defaults{DWR_CHECK_WINDOW, nullptr, 0, 0, 0};
  if (options == nullptr) options = &defaults;
  if (options->d_count > 0 && options->d_list == nullptr)
    return fail(DWR_ERROR_NULL_POINTER, "d_list is NULL");
  return guard([&]() -> int {
    dwalk::AnalysisOptions opts;
    opts.checks = options->checks;
    if ((opts.checks & DWR_CHECK_ALL) == 0 || (opts.checks & ~DWR_CHECK_ALL) != 0) {
      return fail(DWR_ERROR_INVALID_ARGUMENT, "invalid check selection");
    }
    if (options->d_count > 0)
      opts.d_list.emplace(options->d_list, options->d_list + options->d_count);
    opts.exp_truncation = options->exp_truncation;
    opts.oracle_validate = options->oracle_validate != 0;
    auto* h = new dwr_report_struct;
    h->report = dwalk::analyze(graph->graph, opts, graph_id ? graph_id : "");
    *report = h;
    return DWR_OK;
  });
}

int dwr_report_destroy(dwr_report_t report) {
  if (report == nullptr) return DWR_OK;
  if (!valid(report)) return bad_handle();
  report->magic = 0;
  delete report;
  return DWR_OK;
}

int dwr_report_json(const dwr_report_t report, char* out, size_t* out_len) {
  if (!valid(report)) return bad_handle();
  return write_text(report->report.json, out, out_len);
}

int dwr_report_inconsistent(const dwr_report_t report, int* inconsistent) {
  if (!valid(report) || inconsistent == nullptr) return bad_handle();
  *inconsistent = report->report.inconsistent ? 1 : 0;
  return DWR_OK;
}

}  // extern "C"

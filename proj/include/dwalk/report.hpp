#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dwalk/graph.hpp"
#include "dwalk/walk_regularity.hpp"

namespace dwalk {

enum Check : std::uint32_t {
  kCheckWindow = 1U << 0,
  kCheckSchur = 1U << 1,
  kCheckKron = 1U << 2,
  kCheckExp = 1U << 3,
  kCheckProp4 = 1U << 4,
  kCheckProp5 = 1U << 5,
  kCheckProp6 = 1U << 6,
  kCheckGodsilMcKay = 1U << 7,
  kCheckUnfolded = 1U << 8,
  kCheckAll = (1U << 9) - 1,
};

/// Parses "window,schur,..." or "all". Throws InvalidArgument.
std::uint32_t parse_checks(const std::string& list);

struct AnalysisOptions {
  std::uint32_t checks = kCheckWindow;
  /// nullopt analyses every d from 0 to the diameter.
  std::optional<std::vector<std::size_t>> d_list;
  /// 0 picks the default truncation order.
  std::size_t exp_truncation = 0;
  bool oracle_validate = false;
};

struct GraphReport {
  /// Serialized ReportDocument (single-line JSON).
  std::string json;
  /// Two checkers that should agree did not, or the oracle disagreed with
  /// the matrix powers.
  bool inconsistent = false;
};

GraphReport analyze(const Graph& g, const AnalysisOptions& options, const std::string& graph_id);

}  // namespace dwalk

#pragma once

#include <stdexcept>
#include <string>

namespace dwalk {

enum class ErrorCode {
  InvalidArgument = 1,
  MalformedGraph6,
  GraphTooLarge,
  InvalidFamilyParameters,
  NoSuchVertex,
  NoSuchEdge,
  DimensionMismatch,
  NonMonicModulus,
  TruncationTooShort,
  Disconnected,
  EmptyDistanceClass,
  DistanceOutOfRange,
  GraphTooLargeForKron,
  InsufficientHistory,
  NotWalkRegular,
  NotRegularGraph,
  OracleTooLarge,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dwalk

#include "dwalk/error.hpp"

namespace dwalk {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MalformedGraph6: return "MalformedGraph6";
    case ErrorCode::GraphTooLarge: return "GraphTooLarge";
    case ErrorCode::InvalidFamilyParameters: return "InvalidFamilyParameters";
    case ErrorCode::NoSuchVertex: return "NoSuchVertex";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonMonicModulus: return "NonMonicModulus";
    case ErrorCode::TruncationTooShort: return "TruncationTooShort";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::EmptyDistanceClass: return "EmptyDistanceClass";
    case ErrorCode::DistanceOutOfRange: return "DistanceOutOfRange";
    case ErrorCode::GraphTooLargeForKron: return "GraphTooLargeForKron";
    case ErrorCode::InsufficientHistory: return "InsufficientHistory";
    case ErrorCode::NotWalkRegular: return "NotWalkRegular";
    case ErrorCode::NotRegularGraph: return "NotRegularGraph";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
  }
  return "Unknown";
}

}  // namespace dwalk

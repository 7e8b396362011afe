#include "saga/error.hpp"

namespace saga {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FileNotFound: return "FileNotFound";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::UnparseableLine: return "UnparseableLine";
    case ErrorCode::SelfMessage: return "SelfMessage";
    case ErrorCode::NegativeBytes: return "NegativeBytes";
    case ErrorCode::InvalidWindow: return "InvalidWindow";
    case ErrorCode::DuplicateService: return "DuplicateService";
    case ErrorCode::MissingId: return "MissingId";
    case ErrorCode::SameService: return "SameService";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::KNonPositive: return "KNonPositive";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NodeCountMismatch: return "NodeCountMismatch";
    case ErrorCode::ServiceSetMismatch: return "ServiceSetMismatch";
    case ErrorCode::UnassignedService: return "UnassignedService";
    case ErrorCode::InvalidPlacement: return "InvalidPlacement";
    case ErrorCode::InvalidLatencyModel: return "InvalidLatencyModel";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

int exit_code(ErrorCode code) {
  // 1 is reserved for unexpected failures, 2 for usage errors.
  return 3 + static_cast<int>(code);
}

}  // namespace saga

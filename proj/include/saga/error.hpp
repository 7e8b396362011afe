#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace saga {

// Every failure the engine can report. The CLI maps each code to its own
// exit status, so append new codes at the end.
enum class ErrorCode {
  FileNotFound,
  SchemaViolation,
  UnparseableLine,
  SelfMessage,
  NegativeBytes,
  InvalidWindow,
  DuplicateService,
  MissingId,
  SameService,
  InvalidWeights,
  UnknownVertex,
  InvalidPartition,
  TooFewVertices,
  KTooLarge,
  KNonPositive,
  TooLarge,
  NodeCountMismatch,
  ServiceSetMismatch,
  UnassignedService,
  InvalidPlacement,
  InvalidLatencyModel,
  InvalidConfig,
};

std::string_view to_string(ErrorCode code);

// Process exit status used by the CLI for a given error.
int exit_code(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace saga

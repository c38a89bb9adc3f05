//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SYNTHROUTE_ERROR_H_
#define SYNTHROUTE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace synthroute {

enum class ErrorCode {
  // chem
  kEmptyInput,
  kUnmatchedRing,
  kUnbalancedParen,
  kUnknownAtomSymbol,
  kInvalidSmiles,
  kLengthMismatch,
  kInvalidArgument,
  // route tree
  kInvalidRecord,
  kParentNotFound,
  kReactantMismatch,
  kNodeNotFound,
  kCannotRemoveRoot,
  kRootHasNoProduct,
  kComparisonFull,
  // ranking
  kInvalidWeights,
  // projection
  kEmptyText,
  kProviderUnavailable,
  kTooFewPoints,
  kBadPerplexity,
  kCanceled,
  // corpus
  kFullTextUnavailable,
  kExtractionFailed,
  kPaperNotFound,
  // extraction
  kMalformedAfterRetries,
  kEmptyContext,
  kEmptyHistory,
  kManualEditRequired,
  // eval
  kUnparseableMolecule,
  // service
  kWorkspaceNotFound,
  kJobNotFound,
  kSearchPending,
  kUnsupportedSchema,
  kIoError,
  kBadRequest,
};

std::string_view to_string(ErrorCode code);

class Error: public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) { }

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const { return to_string(code_); }

private:
  ErrorCode code_;
};

}  // namespace synthroute

#endif  // SYNTHROUTE_ERROR_H_

//
// synthroute - Copyright 2026 The synthroute Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "synthroute/error.h"

namespace synthroute {

std::string_view to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::kEmptyInput:
    return "EmptyInput";
  case ErrorCode::kUnmatchedRing:
    return "UnmatchedRing";
  case ErrorCode::kUnbalancedParen:
    return "UnbalancedParen";
  case ErrorCode::kUnknownAtomSymbol:
    return "UnknownAtomSymbol";
  case ErrorCode::kInvalidSmiles:
    return "InvalidSmiles";
  case ErrorCode::kLengthMismatch:
    return "LengthMismatch";
  case ErrorCode::kInvalidArgument:
    return "InvalidArgument";
  case ErrorCode::kInvalidRecord:
    return "InvalidRecord";
  case ErrorCode::kParentNotFound:
    return "ParentNotFound";
  case ErrorCode::kReactantMismatch:
    return "ReactantMismatch";
  case ErrorCode::kNodeNotFound:
    return "NodeNotFound";
  case ErrorCode::kCannotRemoveRoot:
    return "CannotRemoveRoot";
  case ErrorCode::kRootHasNoProduct:
    return "RootHasNoProduct";
  case ErrorCode::kComparisonFull:
    return "ComparisonFull";
  case ErrorCode::kInvalidWeights:
    return "InvalidWeights";
  case ErrorCode::kEmptyText:
    return "EmptyText";
  case ErrorCode::kProviderUnavailable:
    return "ProviderUnavailable";
  case ErrorCode::kTooFewPoints:
    return "TooFewPoints";
  case ErrorCode::kBadPerplexity:
    return "BadPerplexity";
  case ErrorCode::kCanceled:
    return "Canceled";
  case ErrorCode::kFullTextUnavailable:
    return "FullTextUnavailable";
  case ErrorCode::kExtractionFailed:
    return "ExtractionFailed";
  case ErrorCode::kPaperNotFound:
    return "PaperNotFound";
  case ErrorCode::kMalformedAfterRetries:
    return "MalformedAfterRetries";
  case ErrorCode::kEmptyContext:
    return "EmptyContext";
  case ErrorCode::kEmptyHistory:
    return "EmptyHistory";
  case ErrorCode::kManualEditRequired:
    return "ManualEditRequired";
  case ErrorCode::kUnparseableMolecule:
    return "UnparseableMolecule";
  case ErrorCode::kWorkspaceNotFound:
    return "WorkspaceNotFound";
  case ErrorCode::kJobNotFound:
    return "JobNotFound";
  case ErrorCode::kSearchPending:
    return "SearchPending";
  case ErrorCode::kUnsupportedSchema:
    return "UnsupportedSchema";
  case ErrorCode::kIoError:
    return "IoError";
  case ErrorCode::kBadRequest:
    return "BadRequest";
  }
  return "Unknown";
}

}  // namespace synthroute

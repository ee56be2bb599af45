// Copyright 2026 The ArabKit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arabkit/error.h"

namespace arabkit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLeadingDiacritic: return "LeadingDiacritic";
    case ErrorCode::kNonArabicLetter: return "NonArabicLetter";
    case ErrorCode::kDuplicateMark: return "DuplicateMark";
    case ErrorCode::kEmptySeparatorSet: return "EmptySeparatorSet";
    case ErrorCode::kInvalidThreshold: return "InvalidThreshold";
    case ErrorCode::kMalformedRow: return "MalformedRow";
    case ErrorCode::kDuplicateExactRow: return "DuplicateExactRow";
    case ErrorCode::kEmptyDictionary: return "EmptyDictionary";
    case ErrorCode::kUnknownTag: return "UnknownTag";
    case ErrorCode::kTaggerFailure: return "TaggerFailure";
    case ErrorCode::kVerifierFailure: return "VerifierFailure";
    case ErrorCode::kEmptyCandidates: return "EmptyCandidates";
    case ErrorCode::kMisalignedCorpus: return "MisalignedCorpus";
    case ErrorCode::kUnknownLanguageCode: return "UnknownLanguageCode";
    case ErrorCode::kSeedNotInGraph: return "SeedNotInGraph";
    case ErrorCode::kDuplicateSeed: return "DuplicateSeed";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kZeroVector: return "ZeroVector";
    case ErrorCode::kEmptySentence: return "EmptySentence";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDegenerateConstantInput: return "DegenerateConstantInput";
    case ErrorCode::kResourceNotFound: return "ResourceNotFound";
    case ErrorCode::kBadArchive: return "BadArchive";
    case ErrorCode::kPathEscape: return "PathEscape";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace arabkit

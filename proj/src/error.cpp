// Copyright 2026 The gramtopic Authors.
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

#include "gramtopic/error.hpp"

namespace gramtopic {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFileNotFound: return "FileNotFound";
    case ErrorCode::kDirectoryNotFound: return "DirectoryNotFound";
    case ErrorCode::kDecodeFailure: return "DecodeFailure";
    case ErrorCode::kEmptyDocument: return "EmptyDocument";
    case ErrorCode::kConverterNotConfigured: return "ConverterNotConfigured";
    case ErrorCode::kConverterFailed: return "ConverterFailed";
    case ErrorCode::kInvalidN: return "InvalidN";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kMalformedEntry: return "MalformedEntry";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kEmptyGold: return "EmptyGold";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace gramtopic

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

#ifndef GRAMTOPIC_INGEST_HPP_
#define GRAMTOPIC_INGEST_HPP_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gramtopic/error.hpp"

namespace gramtopic {

// One source file as an ordered sequence of page texts. Immutable once
// loaded; `pages` is never empty.
struct Document {
  std::string id;
  std::filesystem::path source_path;
  std::vector<std::string> pages;
  std::uint64_t byte_size = 0;

  std::size_t page_count() const { return pages.size(); }
  friend bool operator==(const Document&, const Document&) = default;
};

struct IngestConfig {
  std::string page_delimiter = "\f";
  // Shell command template with "{in}" and "{out}" placeholders, e.g.
  // "pdftotext {in} {out}". Empty when no converter is configured.
  std::string converter_command;
  std::chrono::milliseconds converter_timeout{60'000};
  // Where converted text files are written; the system temp dir when empty.
  std::filesystem::path converter_output_dir;
  std::vector<std::string> text_extensions{".txt"};
  // Extensions routed through the converter, when one is configured.
  std::vector<std::string> convert_extensions{".pdf"};

  void validate() const;
};

// ConverterFailed, with the child's exit status and combined stdout/stderr.
class ConverterError : public Error {
 public:
  ConverterError(const std::string& message, int exit_status, std::string diagnostics)
      : Error(ErrorCode::kConverterFailed,
              message + (diagnostics.empty() ? "" : "\n" + diagnostics)),
        exit_status_(exit_status),
        diagnostics_(std::move(diagnostics)) {}

  // -1 when the command could not be run to completion (spawn failure, timeout).
  int exit_status() const noexcept { return exit_status_; }
  const std::string& diagnostics() const noexcept { return diagnostics_; }

 private:
  int exit_status_;
  std::string diagnostics_;
};

// Splits `text` on `delimiter`, dropping segments that are empty or contain
// only whitespace.
std::vector<std::string> split_pages(std::string_view text, std::string_view delimiter);

// Loads a UTF-8 text file (invalid bytes become U+FFFD). A file that looks
// binary (NUL within its first 4096 bytes) is routed through the converter
// when one is configured, otherwise DecodeFailure is thrown.
Document load_document(const std::filesystem::path& path, const IngestConfig& cfg);

// Runs the converter command on `path` and returns the produced text path.
std::filesystem::path convert_external(const std::filesystem::path& path, const IngestConfig& cfg);

struct SkippedFile {
  std::filesystem::path path;
  std::string reason;
};

struct CorpusLoad {
  std::vector<Document> documents;
  std::vector<SkippedFile> skipped;
};

// Loads every recognized file in `dir` (non-recursive) in lexicographic path
// order. Files that fail to load are reported in `skipped`, never thrown.
CorpusLoad load_corpus(const std::filesystem::path& dir, const IngestConfig& cfg);

}  // namespace gramtopic

#endif  // GRAMTOPIC_INGEST_HPP_

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

#ifndef GRAMTOPIC_CLI_HPP_
#define GRAMTOPIC_CLI_HPP_

#include <filesystem>
#include <map>
#include <ostream>
#include <span>
#include <string>

#include "gramtopic/bench.hpp"
#include "gramtopic/evaluation.hpp"
#include "gramtopic/ingest.hpp"
#include "gramtopic/ngram.hpp"

namespace gramtopic::cli {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr const char* kConfigEnv = "GRAMTOPIC_CONFIG";

enum ExitCode : int { kOk = 0, kUsage = 1, kRuntime = 2 };

// Settings merged from defaults <- config file <- flags. Keys of the config
// file are the long flag names without dashes ("top-k = 5").
struct CliConfig {
  ExtractionConfig extraction;
  IngestConfig ingest;
  std::string ngrams = "2,3";
  std::string pa_fraction = "1/2";
  std::string blacklist_path;
  std::string whitelist_path;
  std::string out_path;
  std::string report_path;
  std::string format = "json";
  std::string match = "exact";
  std::string gold_path;
  int jobs = 0;
  int repeats = 1;
  int converter_timeout_ms = 60'000;
  GroupCutoffs cutoffs;
};

// Applies a flat key-value config file. Throws InvalidConfig for unknown
// keys or unparsable values.
void apply_config_file(const std::filesystem::path& path, CliConfig& cfg);

// Entry point behind the gramtopic binary. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace gramtopic::cli

#endif  // GRAMTOPIC_CLI_HPP_

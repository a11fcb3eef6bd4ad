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

#include "gramtopic/ingest.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "gramtopic/textprep.hpp"
#include "utf8.hpp"

namespace gramtopic {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kBinarySniffBytes = 4096;

std::string read_bytes(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kFileNotFound, path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFileNotFound, path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

bool looks_binary(std::string_view bytes) {
  return bytes.substr(0, kBinarySniffBytes).find('\0') != std::string_view::npos;
}

bool is_blank(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!is_space_char(utf8::decode_next(text, pos))) return false;
  }
  return true;
}

bool has_extension(const fs::path& path, const std::vector<std::string>& extensions) {
  const std::string ext = path.extension().string();
  return std::any_of(extensions.begin(), extensions.end(), [&](const std::string& e) {
    return e.size() == ext.size() &&
           std::equal(e.begin(), e.end(), ext.begin(), [](char a, char b) {
             return std::tolower(static_cast<unsigned char>(a)) ==
                    std::tolower(static_cast<unsigned char>(b));
           });
  });
}

std::string shell_quote(const std::string& text) {
  std::string out = "'";
  for (char c : text) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out.push_back(c);
    }
  }
  out.push_back('\'');
  return out;
}

std::string substitute(std::string command, std::string_view placeholder, const std::string& value) {
  std::size_t pos = 0;
  while ((pos = command.find(placeholder, pos)) != std::string::npos) {
    command.replace(pos, placeholder.size(), value);
    pos += value.size();
  }
  return command;
}

struct ChildResult {
  int exit_status = -1;
  bool timed_out = false;
  std::string output;
};

ChildResult run_shell(const std::string& command, std::chrono::milliseconds timeout) {
  int fds[2];
  if (pipe(fds) != 0) {
    throw ConverterError("cannot create pipe", -1, std::strerror(errno));
  }
  const pid_t pid = fork();
  if (pid < 0) {
    close(fds[0]);
    close(fds[1]);
    throw ConverterError("cannot fork converter", -1, std::strerror(errno));
  }
  if (pid == 0) {
    setpgid(0, 0);
    dup2(fds[1], STDOUT_FILENO);
    dup2(fds[1], STDERR_FILENO);
    close(fds[0]);
    close(fds[1]);
    execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }
  close(fds[1]);

  ChildResult result;
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  char buf[4096];
  for (;;) {
    const auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    if (remaining.count() <= 0) {
      result.timed_out = true;
      break;
    }
    pollfd pfd{fds[0], POLLIN, 0};
    const int ready = poll(&pfd, 1, static_cast<int>(remaining.count()));
    if (ready < 0 && errno == EINTR) continue;
    if (ready <= 0) {
      result.timed_out = ready == 0;
      break;
    }
    const ssize_t n = read(fds[0], buf, sizeof buf);
    if (n <= 0) break;
    result.output.append(buf, static_cast<std::size_t>(n));
  }
  close(fds[0]);
  if (result.timed_out) kill(-pid, SIGKILL);

  int status = 0;
  while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (!result.timed_out && WIFEXITED(status)) result.exit_status = WEXITSTATUS(status);
  return result;
}

fs::path converted_path(const fs::path& input, const IngestConfig& cfg) {
  fs::path dir = cfg.converter_output_dir;
  if (dir.empty()) dir = fs::temp_directory_path() / "gramtopic-convert";
  fs::create_directories(dir);
  const std::size_t key = std::hash<std::string>{}(fs::absolute(input).lexically_normal().string());
  std::ostringstream name;
  name << input.stem().string() << '.' << std::hex << key << ".txt";
  return dir / name.str();
}

Document document_from_text(const fs::path& source, std::string_view bytes, const IngestConfig& cfg) {
  Document doc;
  doc.id = source.stem().string();
  doc.source_path = source;
  doc.byte_size = bytes.size();
  doc.pages = split_pages(utf8::sanitize(bytes), cfg.page_delimiter);
  if (doc.pages.empty()) {
    throw Error(ErrorCode::kEmptyDocument, source.string() + " has no non-empty page");
  }
  return doc;
}

}  // namespace

void IngestConfig::validate() const {
  if (page_delimiter.empty()) throw Error(ErrorCode::kInvalidConfig, "page_delimiter is empty");
  if (converter_timeout.count() <= 0) {
    throw Error(ErrorCode::kInvalidConfig, "converter_timeout must be positive");
  }
}

std::vector<std::string> split_pages(std::string_view text, std::string_view delimiter) {
  std::vector<std::string> pages;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(delimiter, start);
    const std::string_view segment =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (!is_blank(segment)) pages.emplace_back(segment);
    if (end == std::string_view::npos) break;
    start = end + delimiter.size();
  }
  return pages;
}

fs::path convert_external(const fs::path& path, const IngestConfig& cfg) {
  if (cfg.converter_command.empty()) {
    throw Error(ErrorCode::kConverterNotConfigured, "no converter command for " + path.string());
  }
  std::error_code ec;
  if (!fs::exists(path, ec)) throw Error(ErrorCode::kFileNotFound, path.string());

  const fs::path out = converted_path(path, cfg);
  fs::remove(out, ec);
  std::string command = substitute(cfg.converter_command, "{in}", shell_quote(path.string()));
  command = substitute(command, "{out}", shell_quote(out.string()));

  const ChildResult child = run_shell(command, cfg.converter_timeout);
  if (child.timed_out) {
    throw ConverterError("converter timed out after " +
                             std::to_string(cfg.converter_timeout.count()) + " ms: " + command,
                         -1, child.output);
  }
  if (child.exit_status != 0) {
    throw ConverterError("converter exited with status " + std::to_string(child.exit_status) +
                             ": " + command,
                         child.exit_status, child.output);
  }
  if (!fs::is_regular_file(out, ec)) {
    throw ConverterError("converter produced no output file " + out.string(), 0, child.output);
  }
  return out;
}

Document load_document(const fs::path& path, const IngestConfig& cfg) {
  cfg.validate();
  const std::string bytes = read_bytes(path);
  const bool convert = !cfg.converter_command.empty() &&
                       (has_extension(path, cfg.convert_extensions) || looks_binary(bytes));
  if (convert) {
    const fs::path text_path = convert_external(path, cfg);
    return document_from_text(path, read_bytes(text_path), cfg);
  }
  if (looks_binary(bytes)) {
    throw Error(ErrorCode::kDecodeFailure,
                path.string() + " looks binary and no converter is configured");
  }
  return document_from_text(path, bytes, cfg);
}

CorpusLoad load_corpus(const fs::path& dir, const IngestConfig& cfg) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(ErrorCode::kDirectoryNotFound, dir.string());

  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const fs::path& p = entry.path();
    if (has_extension(p, cfg.text_extensions) ||
        (!cfg.converter_command.empty() && has_extension(p, cfg.convert_extensions))) {
      files.push_back(p);
    }
  }
  std::sort(files.begin(), files.end());

  CorpusLoad corpus;
  for (const auto& file : files) {
    try {
      corpus.documents.push_back(load_document(file, cfg));
    } catch (const std::exception& e) {
      std::cerr << "gramtopic: skipping " << file.string() << ": " << e.what() << '\n';
      corpus.skipped.push_back({file, e.what()});
    }
  }
  return corpus;
}

}  // namespace gramtopic

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

// Compares the OpenMP kernels against their serial reference paths on
// synthetic documents and checks that both produce identical output.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "fixtures.hpp"
#include "gramtopic/filtering.hpp"
#include "gramtopic/ngram.hpp"
#include "gramtopic/textprep.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <typename Fn>
double best_of_ms(int iterations, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < iterations; ++i) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP n-gram kernels"};
  std::size_t pages = 40;
  std::size_t page_bytes = 16'384;
  std::size_t docs = 16;
  int iterations = 5;
  app.add_option("--pages", pages, "Pages per document");
  app.add_option("--page-bytes", page_bytes, "Bytes of text per page");
  app.add_option("--docs", docs, "Documents for the whitelist trainer");
  app.add_option("--iterations", iterations, "Runs per kernel (best time kept)");
  CLI11_PARSE(app, argc, argv);

  using namespace gramtopic;
  const ExtractionConfig cfg;
  const Blacklist blacklist = Blacklist::english_default();

  const Document doc = testing::synthetic_document("bench", pages, page_bytes, 7);
  std::vector<TokenizedPage> tokenized;
  for (const auto& page : doc.pages) tokenized.push_back(tokenize(page));

  std::vector<Document> corpus;
  for (std::size_t d = 0; d < docs; ++d) {
    corpus.push_back(testing::synthetic_document("doc" + std::to_string(d), pages / 4 + 1,
                                                 page_bytes, static_cast<std::uint32_t>(d + 1)));
  }

  const bool counts_match = count_ngrams(tokenized, cfg) == count_ngrams_serial(tokenized, cfg);
  const bool reports_match = train_whitelist(corpus, cfg, blacklist) ==
                             train_whitelist_serial(corpus, cfg, blacklist);

  const double count_serial =
      best_of_ms(iterations, [&] { (void)count_ngrams_serial(tokenized, cfg); });
  const double count_parallel =
      best_of_ms(iterations, [&] { (void)count_ngrams(tokenized, cfg); });
  const double train_serial =
      best_of_ms(iterations, [&] { (void)train_whitelist_serial(corpus, cfg, blacklist); });
  const double train_parallel =
      best_of_ms(iterations, [&] { (void)train_whitelist(corpus, cfg, blacklist); });

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d  pages: %zu  page_bytes: %zu  docs: %zu\n", threads, pages,
              page_bytes, docs);
  std::printf("%-16s %12s %12s %9s %s\n", "kernel", "serial_ms", "openmp_ms", "speedup", "match");
  std::printf("%-16s %12.3f %12.3f %9.2f %s\n", "count_ngrams", count_serial, count_parallel,
              count_serial / count_parallel, counts_match ? "yes" : "NO");
  std::printf("%-16s %12.3f %12.3f %9.2f %s\n", "train_whitelist", train_serial, train_parallel,
              train_serial / train_parallel, reports_match ? "yes" : "NO");
  return counts_match && reports_match ? 0 : 1;
}

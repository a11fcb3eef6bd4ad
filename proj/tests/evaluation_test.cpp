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

#include <algorithm>
#include <iterator>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "gramtopic/error.hpp"
#include "gramtopic/evaluation.hpp"

using namespace gramtopic;
using testing::TempDir;

namespace {

TopicResult result_with(const std::string& id, const std::vector<std::string>& phrases) {
  TopicResult r;
  r.document_id = id;
  std::uint64_t count = 100;
  for (const auto& p : phrases) r.topics.push_back({p, count--});
  return r;
}

// Banding oracle via integer ceilings rather than cross-multiplication:
// High iff tp >= ceil(2r/3), Medium iff tp >= ceil(r/3).
RelevanceLevel level_oracle(std::int64_t tp, std::int64_t retrieved) {
  if (tp >= (2 * retrieved + 2) / 3) return RelevanceLevel::kHigh;
  if (tp >= (retrieved + 2) / 3) return RelevanceLevel::kMedium;
  return RelevanceLevel::kLow;
}

PrecisionScore score_of(std::int64_t tp, std::int64_t retrieved) {
  PrecisionScore s;
  s.true_positives = static_cast<std::uint64_t>(tp);
  s.retrieved = static_cast<std::uint64_t>(retrieved);
  s.rate = Fraction::reduced(tp, retrieved);
  s.level = relevance_level(s.rate);
  return s;
}

}  // namespace

TEST_CASE("precision examples") {
  const std::set<std::string> gold = {"roadway departure", "active safety", "vehicle stability"};
  const auto p = precision(result_with("d", {"roadway departure", "active safety", "esc system"}), gold);
  CHECK(p.true_positives == 2);
  CHECK(p.retrieved == 3);
  CHECK(p.rate == Fraction{2, 3});
  CHECK(format_percent(p.rate) == "66.7%");
  CHECK(p.level == RelevanceLevel::kHigh);

  CHECK(precision(result_with("d", {"a b", "c d"}), {"a b", "c d"}).rate == Fraction{1, 1});

  const auto low = precision(result_with("d", {"a b", "c d", "e f", "g h"}), {"a b", "x y"});
  CHECK(low.rate == Fraction{1, 4});
  CHECK(low.level == RelevanceLevel::kLow);

  const auto none = precision(result_with("d", {}), {"a b"});
  CHECK(none.empty_retrieval);
  CHECK(none.rate == Fraction{0, 1});
}

TEST_CASE("gold phrases are normalized before matching") {
  const auto p = precision(result_with("d", {"active safety"}), {"Active Safety."});
  CHECK(p.true_positives == 1);
}

TEST_CASE("subsequence matching is opt-in") {
  const std::set<std::string> gold = {"global chassis control"};
  const auto r = result_with("d", {"chassis control", "global control", "control chassis"});
  CHECK(precision(r, gold).true_positives == 0);
  CHECK(precision(r, gold, MatchPolicy::kSubsequence).true_positives == 2);
  CHECK(recall(r, gold, MatchPolicy::kSubsequence) == Fraction{1, 1});
}

TEST_CASE("recall examples") {
  const std::set<std::string> gold = {"a b", "c d", "e f", "g h"};
  CHECK(recall(result_with("d", {"a b", "c d", "e f", "g h", "x"}), gold) == Fraction{1, 1});
  CHECK(recall(result_with("d", {"q r"}), gold) == Fraction{0, 1});
  CHECK(recall(result_with("d", {"a b", "c d", "e f"}), gold) == Fraction{3, 4});
  try {
    (void)recall(result_with("d", {"a b"}), {});
    FAIL("expected EmptyGold");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEmptyGold);
  }
}

TEST_CASE("relevance bands at exact thirds") {
  CHECK(relevance_level({2, 3}) == RelevanceLevel::kHigh);
  CHECK(relevance_level({1, 2}) == RelevanceLevel::kMedium);
  CHECK(relevance_level({0, 1}) == RelevanceLevel::kLow);
  CHECK(relevance_level({1, 3}) == RelevanceLevel::kMedium);
  CHECK(relevance_level({333, 1000}) == RelevanceLevel::kLow);
  CHECK(relevance_level({667, 1000}) == RelevanceLevel::kHigh);
  CHECK(relevance_level({666, 1000}) == RelevanceLevel::kMedium);
  CHECK_THROWS_AS(relevance_level({5, 4}), Error);
  CHECK_THROWS_AS(relevance_level({-1, 4}), Error);
}

TEST_CASE("banding agrees with the ceiling oracle for every ratio up to 1000") {
  RelevanceLevel previous = RelevanceLevel::kLow;
  for (std::int64_t retrieved = 1; retrieved <= 1000; ++retrieved) {
    previous = RelevanceLevel::kLow;
    for (std::int64_t tp = 0; tp <= retrieved; ++tp) {
      const RelevanceLevel got = relevance_level({tp, retrieved});
      REQUIRE(got == level_oracle(tp, retrieved));
      // Monotone: Low -> Medium -> High as tp grows (enum order is reversed).
      REQUIRE(static_cast<int>(got) <= static_cast<int>(previous));
      previous = got;
    }
  }
}

TEST_CASE("precision and recall agree with a set-intersection oracle") {
  std::mt19937 rng(77);
  const std::vector<std::string> pool = {"a b", "b c", "c d", "d e", "e f", "f g", "g h", "h i"};
  std::bernoulli_distribution coin(0.4);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::string> autos;
    std::set<std::string> gold;
    for (const auto& p : pool) {
      if (coin(rng)) autos.push_back(p);
      if (coin(rng)) gold.insert(p);
    }
    if (gold.empty()) gold.insert(pool[static_cast<std::size_t>(trial) % pool.size()]);
    const auto r = result_with("d", autos);
    std::set<std::string> retrieved(autos.begin(), autos.end());
    std::vector<std::string> both;
    std::set_intersection(retrieved.begin(), retrieved.end(), gold.begin(), gold.end(),
                          std::back_inserter(both));

    const auto p = precision(r, gold);
    CHECK(p.true_positives == both.size());
    CHECK(p.retrieved == autos.size());
    CHECK(p.true_positives <= p.retrieved);
    CHECK(p.true_positives <= gold.size());
    if (!autos.empty()) {
      CHECK(p.rate == Fraction{static_cast<std::int64_t>(both.size()),
                               static_cast<std::int64_t>(autos.size())});
    }
    CHECK(recall(r, gold) == Fraction{static_cast<std::int64_t>(both.size()),
                                      static_cast<std::int64_t>(gold.size())});
  }
}

TEST_CASE("aggregate groups by rate and level") {
  // Reference distribution: (tp/retrieved, files).
  const std::vector<std::tuple<int, int, int>> rows = {
      {3, 3, 28}, {3, 4, 3}, {2, 3, 19}, {1, 2, 22}, {1, 3, 14}, {1, 4, 4}, {0, 3, 10}};
  std::vector<PrecisionScore> scores;
  for (const auto& [tp, ret, files] : rows) {
    for (int i = 0; i < files; ++i) scores.push_back(score_of(tp, ret));
  }
  const CorpusReport report = aggregate(scores);
  CHECK(report.files == 100);
  REQUIRE(report.per_type.size() == 7);
  CHECK(report.per_type[0].rate == Fraction{1, 1});
  CHECK(report.per_type[0].files == 28);
  CHECK(report.per_type[6].rate == Fraction{0, 1});
  CHECK(report.per_type[6].files == 10);
  CHECK(report.level(RelevanceLevel::kHigh).files == 50);
  CHECK(report.level(RelevanceLevel::kMedium).files == 36);
  CHECK(report.level(RelevanceLevel::kLow).files == 14);
  CHECK(format_percent(report.level(RelevanceLevel::kHigh).share) == "50.0%");
  CHECK(format_percent(report.level(RelevanceLevel::kMedium).share) == "36.0%");
  CHECK(format_percent(report.level(RelevanceLevel::kLow).share) == "14.0%");

  const auto single = aggregate(std::vector<PrecisionScore>{score_of(1, 2)});
  CHECK(single.level(RelevanceLevel::kMedium).share == Fraction{1, 1});

  const auto same = aggregate(std::vector<PrecisionScore>(5, score_of(2, 4)));
  CHECK(same.per_type.size() == 1);
  CHECK(same.per_type[0].rate == Fraction{1, 2});

  CHECK_THROWS_AS(aggregate(std::vector<PrecisionScore>{}), Error);
}

TEST_CASE("aggregate counts always sum to the number of scores") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<PrecisionScore> scores;
    const int n = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) {
      const std::int64_t ret = 1 + static_cast<std::int64_t>(rng() % 6);
      scores.push_back(score_of(static_cast<std::int64_t>(rng() % static_cast<unsigned>(ret + 1)), ret));
    }
    const auto report = aggregate(scores);
    std::uint64_t by_type = 0;
    for (const auto& b : report.per_type) by_type += b.files;
    std::uint64_t by_level = 0;
    std::int64_t tenths = 0;
    for (const auto& l : report.per_level) {
      by_level += l.files;
      const std::string pct = format_percent(l.share);
      tenths += std::stoll(pct.substr(0, pct.find('.'))) * 10 + (pct[pct.find('.') + 1] - '0');
    }
    CHECK(by_type == static_cast<std::uint64_t>(n));
    CHECK(by_level == static_cast<std::uint64_t>(n));
    CHECK(std::abs(tenths - 1000) <= 1);
    CHECK(report.mean_rate >= 0.0);
    CHECK(report.mean_rate <= 1.0);
  }
}

TEST_CASE("gold CSV loading") {
  TempDir dir;
  const auto gold = load_gold(dir.write("gold.csv",
                                        "# id,phrase\n"
                                        "paper1,Active Safety\n"
                                        "paper1, threat assessment \n"
                                        "paper2,global chassis control, predictive\n"));
  CHECK(gold.at("paper1") == std::set<std::string>{"active safety", "threat assessment"});
  CHECK(gold.at("paper2") == std::set<std::string>{"global chassis control predictive"});
  CHECK_THROWS_AS(load_gold(dir.write("bad.csv", "no comma here\n")), Error);
  CHECK_THROWS_AS(load_gold(dir.write("bad2.csv", "id,...\n")), Error);
  CHECK_THROWS_AS(load_gold(dir.path() / "none.csv"), Error);
}

TEST_CASE("evaluate reports unscored and missing documents") {
  const std::vector<TopicResult> results = {result_with("a", {"x y", "z w"}),
                                            result_with("b", {"p q"})};
  const GoldTopics gold = {{"a", {"x y"}}, {"c", {"m n"}}};
  const auto report = evaluate(results, gold);
  REQUIRE(report.scores.size() == 1);
  CHECK(report.scores[0].rate == Fraction{1, 2});
  CHECK(report.unscored == std::vector<std::string>{"b"});
  CHECK(report.missing_results == std::vector<std::string>{"c"});
  CHECK_THROWS_AS(evaluate(results, GoldTopics{{"zzz", {"q"}}}), Error);

  const auto j = to_json(report);
  CHECK(j["corpus"]["per_level"]["Medium"]["percent"] == "100.0%");
  CHECK(j["documents"][0]["precision"] == "1/2");

  const std::string table = render_table(report.corpus);
  CHECK(table.rfind("PT\tPR\tNoF\tPL\n1\t50.0%\t1\tMedium\n", 0) == 0);
}

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "tjoin/grammar.hpp"
#include "tjoin/oracle.hpp"
#include "tjoin/unit_synth.hpp"

using namespace tjoin;
using tjoin::testing::u32;

namespace {

bool oracle_has(const std::vector<OracleEntry>& entries, const char* printed) {
  for (const auto& e : entries)
    if (print_transformation(e.transformation) == printed) return true;
  return false;
}

}  // namespace

TEST_CASE("one-unit enumeration finds all covering singletons") {
  PairList pairs = testing::make_pairs({{"ab", "b"}});
  OracleBudget budget;
  budget.max_units = 1;
  auto entries = enumerate_all_transformations(pairs, budget);
  CHECK(oracle_has(entries, "<Substr(1,2)>"));
  CHECK(oracle_has(entries, "<Literal('b')>"));
  CHECK(oracle_has(entries, "<Split('a',2)>"));
  for (const auto& e : entries) REQUIRE(e.covered == std::vector<int32_t>{0});
}

TEST_CASE("identity pair enumeration") {
  PairList pairs = testing::make_pairs({{"a", "a"}});
  OracleBudget budget;
  auto entries = enumerate_all_transformations(pairs, budget);
  CHECK(oracle_has(entries, "<Substr(0,1)>"));
  CHECK(oracle_has(entries, "<Literal('a')>"));
}

TEST_CASE("empty input enumerates nothing") {
  CHECK(enumerate_all_transformations({}, OracleBudget{}).empty());
}

TEST_CASE("budget guards reject oversized instances") {
  OracleBudget budget;
  PairList big = testing::make_pairs({{"0123456789abcdef", "x"}});
  CHECK_THROWS_AS(enumerate_all_transformations(big, budget), BudgetExceeded);
  PairList many;
  for (int i = 0; i < 8; ++i) many.push_back(CandidatePair{i, i, u32("ab"), u32("b")});
  CHECK_THROWS_AS(enumerate_all_transformations(many, budget), BudgetExceeded);
}

TEST_CASE("exact cover of disjoint and nested sets") {
  PairList pairs = testing::make_pairs({{"s", "t"}, {"s", "t"}, {"s", "t"}});
  auto entry = [](const char* printed, std::vector<int32_t> covered) {
    return OracleEntry{parse_transformation(printed), std::move(covered)};
  };

  std::vector<OracleEntry> disjoint;
  disjoint.push_back(entry("<Literal('a')>", {0}));
  disjoint.push_back(entry("<Literal('b')>", {1}));
  disjoint.push_back(entry("<Literal('c')>", {2}));
  CHECK(exact_min_cover(pairs, disjoint).size() == 3);

  std::vector<OracleEntry> nested;
  nested.push_back(entry("<Literal('a')>", {0, 1}));
  nested.push_back(entry("<Literal('b')>", {0, 1, 2}));
  nested.push_back(entry("<Literal('c')>", {2}));
  auto cover = exact_min_cover(pairs, nested);
  REQUIRE(cover.size() == 1);
  CHECK(cover[0] == 1);
}

TEST_CASE("exact cover is never larger than greedy") {
  std::mt19937_64 rng(311);
  for (int round = 0; round < 12; ++round) {
    PairList pairs;
    for (int i = 0; i < 5; ++i) {
      pairs.push_back(CandidatePair{i, i, testing::random_text(rng, 2, 8, U"ab,c"),
                                    testing::random_text(rng, 1, 5, U"ab,c")});
    }
    canonicalize(pairs);
    OracleBudget budget;
    budget.max_units = 2;
    auto entries = enumerate_all_transformations(pairs, budget);
    if (entries.empty()) continue;
    auto exact = exact_min_cover(pairs, entries);

    std::vector<CoverageRecord> records(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) {
      records[i].transformation = &entries[i].transformation;
      records[i].covered = entries[i].covered;
    }
    auto greedy = greedy_min_cover(records, pairs.size());
    REQUIRE(exact.size() <= greedy.size());
  }
}

TEST_CASE("split-split-substr without delimiters equals Substr") {
  const std::u32string src = u32("abcdefgh");
  auto oracle = split_split_substr_oracle(U'#', U'%', 1, 1, 2, 5, src);
  auto substr = apply_unit(Unit(Substr{2, 5}), src);
  REQUIRE(oracle.ok());
  REQUIRE(substr.ok());
  CHECK(oracle.text == substr.text);
}

TEST_CASE("split-split-substr between delimiters equals a TwoCharSplitSubstr") {
  // Sigma* c1 Sigma* c2 Sigma*, selecting between the delimiters
  const std::u32string src = u32("aaa-bbbb_cc");
  auto oracle = split_split_substr_oracle(U'-', U'_', 2, 1, 1, 3, src);
  REQUIRE(oracle.ok());
  CHECK(oracle.text == u32("bb"));
  auto two = apply_unit(Unit(TwoCharSplitSubstr{U'-', U'_', 2, 1, 3}), src);
  REQUIRE(two.ok());
  CHECK(two.text == oracle.text);
}

TEST_CASE("production units subsume random split-split-substr instances") {
  std::mt19937_64 rng(419);
  const std::u32string alphabet = u32("ab-_c");
  int defined = 0;
  for (int round = 0; round < 800; ++round) {
    std::u32string src = testing::random_text(rng, 4, 12, alphabet);
    std::uniform_int_distribution<int32_t> idx(1, 2);
    std::uniform_int_distribution<int32_t> pos(0, 2);
    const char32_t c1 = U'-', c2 = U'_';
    const int32_t s = pos(rng);
    const int32_t e = s + 1 + pos(rng);
    auto want = split_split_substr_oracle(c1, c2, idx(rng), idx(rng), s, e, src);
    if (!want.ok()) continue;
    ++defined;

    bool reproduced = false;
    const auto chars = [&] {
      std::vector<char32_t> cs;
      std::unordered_set<char32_t> seen;
      for (char32_t c : src)
        if (seen.insert(c).second) cs.push_back(c);
      return cs;
    }();
    const int32_t n = static_cast<int32_t>(src.size());
    for (int32_t a = 0; a <= n && !reproduced; ++a)
      for (int32_t b = a + 1; b <= n && !reproduced; ++b) {
        auto r = apply_unit(Unit(Substr{a, b}), src);
        reproduced = r.ok() && r.text == want.text;
      }
    for (size_t ci = 0; ci < chars.size() && !reproduced; ++ci)
      for (int32_t i = 1; i <= n + 1 && !reproduced; ++i)
        for (int32_t a = 0; a < n && !reproduced; ++a)
          for (int32_t b = a + 1; b <= n && !reproduced; ++b) {
            auto r = apply_unit(Unit(SplitSubstr{chars[ci], i, a, b}), src);
            reproduced = r.ok() && r.text == want.text;
          }
    for (size_t ci = 0; ci < chars.size() && !reproduced; ++ci)
      for (size_t cj = ci + 1; cj < chars.size() && !reproduced; ++cj)
        for (int32_t i = 1; i <= n + 1 && !reproduced; ++i)
          for (int32_t a = 0; a < n && !reproduced; ++a)
            for (int32_t b = a + 1; b <= n && !reproduced; ++b) {
              auto r = apply_unit(Unit(TwoCharSplitSubstr{chars[ci], chars[cj], i, a, b}), src);
              reproduced = r.ok() && r.text == want.text;
            }
    REQUIRE(reproduced);
  }
  REQUIRE(defined > 50);  // the fuzz actually exercised defined outputs
}

TEST_CASE("pipeline best coverage equals oracle best coverage at desk scale") {
  std::mt19937_64 rng(431);
  for (int round = 0; round < 5; ++round) {
    // joinable mini-instance: one hidden rule generates each target
    std::u32string alpha = u32("abcdefghij0123456789");
    std::vector<Unit> units = {Unit(Substr{1, 5}), Unit(Literal{u32("-")}), Unit(Substr{6, 8})};
    Transformation hidden(units);
    PairList pairs;
    for (int i = 0; i < 4; ++i) {
      std::u32string src = testing::random_text(rng, 8, 10, alpha);
      auto out = apply_transformation(hidden, src);
      REQUIRE(out.ok());
      pairs.push_back(CandidatePair{i, i, src, out.text});
    }
    canonicalize(pairs);

    OracleBudget budget;
    auto entries = enumerate_all_transformations(pairs, budget);
    size_t oracle_best = 0;
    for (const auto& e : entries) oracle_best = std::max(oracle_best, e.covered.size());

    CandidatePool pool = generate_candidates(pairs, GenerateOptions{});
    NonCoveringCache cache;
    auto records = evaluate_coverage(pool, pairs, cache);
    size_t pipeline_best = 0;
    for (const auto& r : records) pipeline_best = std::max(pipeline_best, r.covered.size());

    REQUIRE(pipeline_best == oracle_best);
  }
}

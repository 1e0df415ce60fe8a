// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Run via ctest (test name "acceptance") or directly from the build tree.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "tjoin/grammar.hpp"
#include "tjoin/oracle.hpp"
#include "tjoin/pipeline.hpp"

using namespace tjoin;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << criterion << ": " << detail << "\n";
  if (!pass) ++failures;
}

double now_seconds(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::u32string random_text(std::mt19937_64& rng, size_t min_len, size_t max_len,
                           std::u32string_view alphabet) {
  std::uniform_int_distribution<size_t> len(min_len, max_len);
  std::uniform_int_distribution<size_t> ch(0, alphabet.size() - 1);
  std::u32string out(len(rng), U' ');
  for (auto& c : out) c = alphabet[ch(rng)];
  return out;
}

struct SynthRun {
  DiscoverOutcome golden;   // discovery on golden pairs
  DiscoverOutcome matched;  // discovery on n-gram matched pairs
  JoinMetrics match_quality;
  JoinMetrics join_metrics;
  double golden_seconds = 0.0;
};

SynthRun run_synth_seed(uint64_t seed, int32_t rows) {
  SynthParams params;
  params.rows = rows;
  params.seed = seed;
  SynthBenchmark bench = generate_benchmark(params);

  RunConfig cfg;
  cfg.workers = 0;

  SynthRun run;
  const auto t0 = std::chrono::steady_clock::now();
  run.golden = run_discover(cfg, bench.source, bench.target, golden_pair_list(bench));
  run.golden_seconds = now_seconds(t0);

  // row matching quality against the identity alignment
  PairList matched = find_candidate_pairs(bench.source, bench.target, cfg.n0, cfg.n_max);
  JoinResult as_result;
  for (const auto& p : matched) as_result.pairs.push_back(JoinedPair{p.source_id, p.target_id, {}});
  run.match_quality = evaluate_join(as_result, bench.golden_pairs);

  // end-to-end: n-gram matching, discovery at 5% support, then the join
  RunConfig end_to_end = cfg;
  end_to_end.min_support = 0.05;
  run.matched = run_discover(end_to_end, bench.source, bench.target, std::nullopt);
  if (!run.matched.cover.empty()) {
    JoinOutcome join =
        run_join(cfg, bench.source, bench.target, run.matched.cover, bench.golden_pairs);
    run.join_metrics = *join.result.metrics;
  }
  return run;
}

std::string fmt(double v, int digits = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

}  // namespace

int main() {
  std::vector<SynthRun> runs;
  for (uint64_t seed = 1; seed <= 10; ++seed) runs.push_back(run_synth_seed(seed, 50));

  // 1. synthetic coverage under golden matching
  {
    bool cover_ok = true, size_ok = true, top_ok = true, time_ok = true;
    double worst_time = 0.0;
    for (const auto& run : runs) {
      cover_ok &= run.golden.report["cover_coverage"].get<double>() == 1.0;
      size_ok &= run.golden.report["cover_size"].get<size_t>() <= 4;
      const double top = run.golden.report["top"][0]["coverage"].get<double>();
      top_ok &= top >= 0.25 && top <= 0.55;
      worst_time = std::max(worst_time, run.golden_seconds);
      time_ok &= run.golden_seconds < 60.0;
    }
    report(1, cover_ok && size_ok && top_ok && time_ok,
           "Synth-50 x10 seeds, golden matching: coverage 1.0 (" + std::string(cover_ok ? "yes" : "no") +
               "), cover size <= 4 (" + (size_ok ? "yes" : "no") + "), top coverage in [0.25,0.55] (" +
               (top_ok ? "yes" : "no") + "), worst time " + fmt(worst_time, 2) + "s < 60s");
  }

  // 2. row matching quality
  {
    double precision = 0.0, recall = 0.0;
    for (const auto& run : runs) {
      precision += run.match_quality.precision;
      recall += run.match_quality.recall;
    }
    precision /= runs.size();
    recall /= runs.size();
    report(2, precision >= 0.95 && recall >= 0.80,
           "row matching on Synth-50: precision " + fmt(precision) + " >= 0.95, recall " +
               fmt(recall) + " >= 0.80");
  }

  // 3. end-to-end join
  {
    double f1 = 0.0;
    for (const auto& run : runs) f1 += run.join_metrics.f1;
    f1 /= runs.size();
    report(3, f1 >= 0.93, "end-to-end join on Synth-50 at 5% support: mean F1 " + fmt(f1) + " >= 0.93");
  }

  // 4. pruning metrics
  {
    double dup = 0.0, hit = 0.0;
    for (const auto& run : runs) {
      dup += run.matched.report["generation"]["duplicate_fraction"].get<double>();
      hit += run.matched.report["coverage_eval"]["cache_hit_ratio"].get<double>();
    }
    dup /= runs.size();
    hit /= runs.size();
    report(4, dup >= 0.40 && hit >= 0.85,
           "pruning on Synth-50: duplicate fraction " + fmt(dup) + " >= 0.40, cache hit ratio " +
               fmt(hit) + " >= 0.85");
  }

  // 5. pruning soundness: cached evaluation equals the pruning-free reference
  {
    std::mt19937_64 rng(505);
    bool ok = true;
    for (int round = 0; round < 50 && ok; ++round) {
      PairList pairs;
      const int n = 2 + static_cast<int>(rng() % 4);
      for (int i = 0; i < n; ++i) {
        pairs.push_back(CandidatePair{i, i, random_text(rng, 2, 12, U"abc,. -01"),
                                      random_text(rng, 1, 8, U"abc,. -01")});
      }
      canonicalize(pairs);
      CandidatePool pool = generate_candidates(pairs, GenerateOptions{});
      NonCoveringCache cache;
      auto records = evaluate_coverage(pool, pairs, cache);
      for (size_t ti = 0; ti < pool.size() && ok; ++ti) {
        std::vector<int32_t> reference;
        for (size_t pi = 0; pi < pairs.size(); ++pi)
          if (covers(pool.items()[ti], pairs[pi])) reference.push_back(static_cast<int32_t>(pi));
        ok = records[ti].covered == reference;
      }
    }
    report(5, ok, "cache-pruned coverage identical to pruning-free reference on 50 instances");
  }

  // 6. oracle equivalence at desk scale
  {
    std::mt19937_64 rng(606);
    bool best_ok = true, bound_ok = true;
    for (int round = 0; round < 20; ++round) {
      const std::u32string alpha = U"abcdefghij0123456789";
      std::uniform_int_distribution<int> rows(2, 5);
      std::uniform_int_distribution<int> pick(0, 2);
      std::vector<Unit> units;
      switch (pick(rng)) {
        case 0:
          units = {Unit(Substr{1, 5}), Unit(Literal{U"-"}), Unit(Substr{6, 8})};
          break;
        case 1:
          units = {Unit(Literal{U"#"}), Unit(Substr{0, 4})};
          break;
        default:
          units = {Unit(Substr{2, 6}), Unit(Literal{U"~"})};
          break;
      }
      Transformation hidden(units);
      PairList pairs;
      const int n = rows(rng);
      for (int i = 0; i < n; ++i) {
        std::u32string src = random_text(rng, 8, 10, alpha);
        auto out = apply_transformation(hidden, src);
        pairs.push_back(CandidatePair{i, i, src, out.text});
      }
      canonicalize(pairs);

      auto entries = enumerate_all_transformations(pairs, OracleBudget{});
      size_t oracle_best = 0;
      for (const auto& e : entries) oracle_best = std::max(oracle_best, e.covered.size());

      CandidatePool pool = generate_candidates(pairs, GenerateOptions{});
      NonCoveringCache cache;
      auto records = evaluate_coverage(pool, pairs, cache);
      size_t pipeline_best = 0;
      for (const auto& r : records) pipeline_best = std::max(pipeline_best, r.covered.size());
      best_ok &= pipeline_best == oracle_best;

      auto exact = exact_min_cover(pairs, entries);
      auto greedy = greedy_min_cover(records, pairs.size());
      const double bound =
          (1.0 + std::log(std::max<double>(1.0, static_cast<double>(oracle_best)))) *
          static_cast<double>(std::max<size_t>(exact.size(), 1));
      bound_ok &= static_cast<double>(greedy.size()) <= bound + 1e-9;
    }
    report(6, best_ok && bound_ok,
           std::string("pipeline best coverage equals oracle best on 20 instances (") +
               (best_ok ? "yes" : "no") + "), greedy within (1+ln n) of exact (" +
               (bound_ok ? "yes" : "no") + ")");
  }

  // 7. production units subsume SplitSplitSubstr
  {
    std::mt19937_64 rng(707);
    int defined = 0, reproduced_count = 0, tried = 0;
    const std::u32string alphabet = U"ab-_c0";
    while (defined < 1000 && tried < 20000) {
      ++tried;
      std::u32string src = random_text(rng, 1, 12, alphabet);
      std::uniform_int_distribution<int32_t> idx(1, 4);
      std::uniform_int_distribution<int32_t> pos(0, 6);
      const int32_t s = pos(rng);
      const int32_t e = s + 1 + pos(rng) % 4;
      auto want = split_split_substr_oracle(U'-', U'_', idx(rng), idx(rng), s, e, src);
      if (!want.ok()) continue;
      ++defined;

      bool reproduced = false;
      std::vector<char32_t> chars;
      {
        std::unordered_set<char32_t> seen;
        for (char32_t c : src)
          if (seen.insert(c).second) chars.push_back(c);
      }
      const int32_t n = static_cast<int32_t>(src.size());
      for (int32_t a = 0; a <= n && !reproduced; ++a)
        for (int32_t b = a + 1; b <= n && !reproduced; ++b)
          reproduced = src.substr(a, b - a) == want.text;
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
                auto r =
                    apply_unit(Unit(TwoCharSplitSubstr{chars[ci], chars[cj], i, a, b}), src);
                reproduced = r.ok() && r.text == want.text;
              }
      if (reproduced) ++reproduced_count;
    }
    report(7, defined == 1000 && reproduced_count == defined,
           "SplitSplitSubstr: " + std::to_string(reproduced_count) + "/" + std::to_string(defined) +
               " defined outputs reproduced by production units");
  }

  // 8. sampling formula analytically and by simulation
  {
    const double analytic = detection_probability(0.05, 100);
    const bool exact_ok = std::abs(analytic - 0.9629) <= 0.0001;
    std::mt19937_64 rng(808);
    std::bernoulli_distribution covered(0.05);
    const int trials = 100000;
    int hits = 0;
    for (int t = 0; t < trials; ++t) {
      int seen = 0;
      for (int i = 0; i < 100 && seen < 2; ++i)
        if (covered(rng)) ++seen;
      if (seen >= 2) ++hits;
    }
    const double simulated = static_cast<double>(hits) / trials;
    const bool sim_ok = std::abs(simulated - analytic) <= 0.01;
    report(8, exact_ok && sim_ok,
           "detection_probability(0.05,100) = " + fmt(analytic, 4) +
               " (0.9629 +- 0.0001), Monte-Carlo " + fmt(simulated, 4) + " within 0.01");
  }

  // 9. grammar round-trip on 10^4 random transformations
  {
    std::mt19937_64 rng(909);
    std::uniform_int_distribution<int> kind(0, 4);
    std::uniform_int_distribution<int32_t> small(0, 40);
    std::uniform_int_distribution<uint32_t> scalar_dist(1, 0x10FFF);
    auto scalar = [&] {
      uint32_t c = scalar_dist(rng);
      if (c >= 0xD800 && c <= 0xDFFF) c = U'x';
      return static_cast<char32_t>(c);
    };
    bool ok = true;
    for (int i = 0; i < 10000 && ok; ++i) {
      std::vector<Unit> units;
      const int count = 1 + static_cast<int>(rng() % 5);
      for (int uidx = 0; uidx < count; ++uidx) {
        switch (kind(rng)) {
          case 0: {
            int32_t s = small(rng);
            units.push_back(Unit(Substr{s, s + 1 + small(rng)}));
            break;
          }
          case 1:
            units.push_back(Unit(Split{scalar(), 1 + small(rng)}));
            break;
          case 2: {
            int32_t s = small(rng);
            units.push_back(Unit(SplitSubstr{scalar(), 1 + small(rng), s, s + 1 + small(rng)}));
            break;
          }
          case 3: {
            char32_t c1 = scalar(), c2 = scalar();
            if (c1 == c2) c2 = c1 == U'a' ? U'b' : U'a';
            int32_t s = small(rng);
            units.push_back(
                Unit(TwoCharSplitSubstr{c1, c2, 1 + small(rng), s, s + 1 + small(rng)}));
            break;
          }
          default: {
            std::u32string text(1 + rng() % 8, U' ');
            for (auto& c : text) c = scalar();
            units.push_back(Unit(Literal{std::move(text)}));
            break;
          }
        }
      }
      Transformation t(std::move(units));
      ok = parse_transformation(print_transformation(t)) == t;
    }
    report(9, ok, "parse(print(t)) identity on 10000 random transformations");
  }

  // 10. scalability trend; real-dataset reproduction is optional
  {
    const auto t0 = std::chrono::steady_clock::now();
    SynthRun small = run_synth_seed(1, 50);
    (void)small;
    double small_seconds = 1e9;
    for (int i = 0; i < 3; ++i) {
      SynthParams params;
      params.rows = 50;
      params.seed = 1;
      SynthBenchmark bench = generate_benchmark(params);
      RunConfig cfg;
      const auto ts = std::chrono::steady_clock::now();
      run_discover(cfg, bench.source, bench.target, std::nullopt);
      small_seconds = std::min(small_seconds, now_seconds(ts));
    }
    SynthParams params;
    params.rows = 500;
    params.seed = 1;
    SynthBenchmark bench = generate_benchmark(params);
    RunConfig cfg;
    const auto tl = std::chrono::steady_clock::now();
    run_discover(cfg, bench.source, bench.target, std::nullopt);
    const double large_seconds = now_seconds(tl);
    (void)t0;
    const double ratio = large_seconds / std::max(small_seconds, 1e-9);
    report(10, ratio <= 25.0,
           "Synth-500 runtime " + fmt(large_seconds, 2) + "s <= 25x Synth-50 " +
               fmt(small_seconds, 2) + "s (ratio " + fmt(ratio, 1) +
               "); real-dataset tables optional, skipped (external files not bundled)");
  }

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : std::to_string(failures) + " CRITERIA FAILED")
            << "\n";
  return failures == 0 ? 0 : 1;
}

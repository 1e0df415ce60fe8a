#pragma once

#include <unordered_map>
#include <chrono>

#include "config.hpp"
#include "grammar.hpp"
#include "join.hpp"
#include "row_match.hpp"
#include "synthgen.hpp"

namespace tjoin {

// Orchestration behind the CLI subcommands. Reports are ordered JSON so field
// order is stable; everything except the timings section is deterministic for
// fixed inputs, config and seed, regardless of worker count.

namespace detail {

class StageClock {
 public:
  void start(const char* stage) {
    flush();
    stage_ = stage;
    t0_ = std::chrono::steady_clock::now();
  }
  nlohmann::ordered_json finish() {
    flush();
    return std::move(timings_);
  }

 private:
  void flush() {
    if (!stage_) return;
    const auto dt = std::chrono::steady_clock::now() - t0_;
    timings_[stage_] = std::chrono::duration<double, std::milli>(dt).count();
    stage_ = nullptr;
  }
  nlohmann::ordered_json timings_;
  const char* stage_ = nullptr;
  std::chrono::steady_clock::time_point t0_;
};

inline nlohmann::ordered_json record_json(const CoverageRecord& rec) {
  nlohmann::ordered_json j;
  j["transformation"] = print_transformation(*rec.transformation);
  j["units"] = rec.transformation->size();
  j["covered_pairs"] = rec.covered.size();
  j["coverage"] = rec.coverage_fraction;
  return j;
}

}  // namespace detail

struct DiscoverOutcome {
  nlohmann::ordered_json report;
  std::vector<Transformation> cover;  // greedy covering set, in pick order
  PairList pairs;                     // the pairs discovery actually ran on
};

/// The full discovery pipeline: row matching (or golden pairs), optional
/// sampling, candidate generation, coverage with pruning, support filter,
/// top-k and greedy cover.
inline DiscoverOutcome run_discover(const RunConfig& cfg, const ColumnTable& source,
                                    const ColumnTable& target,
                                    const std::optional<PairList>& golden_pairs) {
  cfg.validate();
  const int workers = resolve_workers(cfg.workers);
  detail::StageClock clock;
  nlohmann::ordered_json report;
  report["command"] = "discover";
  report["config"] = cfg.to_json();

  clock.start("row_matching");
  PairList pairs;
  if (golden_pairs) {
    pairs = *golden_pairs;
    canonicalize(pairs);
  } else {
    pairs = find_candidate_pairs(source, target, cfg.n0, cfg.n_max);
  }
  report["pairs"] = {
      {"source_rows", source.size()},
      {"target_rows", target.size()},
      {"matched", pairs.size()},
      {"from_golden", golden_pairs.has_value()},
  };

  clock.start("sampling");
  if (cfg.sample_size > 0 && static_cast<size_t>(cfg.sample_size) < pairs.size())
    pairs = sample_pairs(pairs, cfg.sample_size, cfg.seed);
  report["pairs"]["used"] = pairs.size();

  clock.start("generation");
  GenerateOptions gen;
  gen.skeleton.max_placeholders = cfg.max_placeholders;
  gen.skeleton.skeleton_cap = cfg.skeleton_cap;
  gen.skeleton.min_placeholder_len = cfg.min_placeholder_len;
  gen.enabled = cfg.units;
  gen.workers = workers;
  CandidatePool pool = generate_candidates(pairs, gen);
  report["generation"] = {
      {"generated", pool.generated()},
      {"duplicates", pool.duplicate_count()},
      {"duplicate_fraction",
       pool.generated() == 0
           ? 0.0
           : static_cast<double>(pool.duplicate_count()) / static_cast<double>(pool.generated())},
      {"pool", pool.size()},
  };

  clock.start("coverage");
  NonCoveringCache cache;
  std::vector<CoverageRecord> records = evaluate_coverage(pool, pairs, cache, workers);
  report["coverage_eval"] = {
      {"attempted", cache.attempted()},
      {"skipped", cache.skipped()},
      {"cache_hit_ratio", cache.hit_ratio()},
  };

  clock.start("compile");
  const size_t before_filter = records.size();
  records = filter_by_support(std::move(records), cfg.min_support);
  report["support_filter"] = {
      {"min_support", cfg.min_support},
      {"dropped", before_filter - records.size()},
      {"kept", records.size()},
  };

  auto best = top_k(records, static_cast<size_t>(cfg.top_k));
  nlohmann::ordered_json top = nlohmann::ordered_json::array();
  for (const auto& rec : best) top.push_back(detail::record_json(rec));
  report["top"] = std::move(top);

  auto picks = greedy_min_cover(records, pairs.size());
  nlohmann::ordered_json cover = nlohmann::ordered_json::array();
  std::vector<char> covered(pairs.size(), 0);
  DiscoverOutcome out;
  for (const auto& pick : picks) {
    nlohmann::ordered_json j = detail::record_json(pick.record);
    j["marginal_pairs"] = pick.marginal.size();
    cover.push_back(std::move(j));
    for (int32_t p : pick.marginal) covered[p] = 1;
    out.cover.push_back(*pick.record.transformation);
  }
  size_t covered_total = 0;
  for (char c : covered) covered_total += c;
  report["cover"] = std::move(cover);
  report["cover_size"] = picks.size();
  report["cover_coverage"] =
      pairs.empty() ? 0.0 : static_cast<double>(covered_total) / static_cast<double>(pairs.size());

  report["timings_ms"] = clock.finish();
  out.report = std::move(report);
  out.pairs = std::move(pairs);
  return out;
}

struct JoinOutcome {
  nlohmann::ordered_json report;
  JoinResult result;
};

inline JoinOutcome run_join(const RunConfig& cfg, const ColumnTable& source,
                            const ColumnTable& target, const std::vector<Transformation>& ts,
                            const std::optional<std::vector<std::pair<int32_t, int32_t>>>& golden) {
  cfg.validate();
  detail::StageClock clock;
  nlohmann::ordered_json report;
  report["command"] = "join";
  report["config"] = cfg.to_json();
  report["transformations"] = ts.size();

  clock.start("join");
  JoinOutcome out;
  out.result = transform_join(source, target, ts, resolve_workers(cfg.workers));
  report["joined_pairs"] = out.result.pairs.size();

  if (golden) {
    clock.start("evaluate");
    JoinMetrics m = evaluate_join(out.result, *golden);
    out.result.metrics = m;
    report["metrics"] = {
        {"precision", m.precision},
        {"recall", m.recall},
        {"f1", m.f1},
        {"golden_pairs", golden->size()},
        {"empty_result_convention", out.result.pairs.empty()},
    };
  }
  report["timings_ms"] = clock.finish();
  out.report = std::move(report);
  return out;
}

// --- file-level helpers shared by the CLI and tests ---

inline std::string default_column(const std::string& path) {
  const CsvTable csv = parse_csv(read_file(path));
  if (csv.header.size() >= 2) return csv.header[1];
  if (csv.header.size() == 1) return csv.header[0];
  throw std::runtime_error(path + ": no columns");
}

inline std::vector<std::pair<int32_t, int32_t>> load_golden_pairs(const std::string& path) {
  const CsvTable csv = parse_csv(read_file(path));
  if (csv.header.size() < 2)
    throw std::runtime_error(path + ": golden pairs need source_id,target_id columns");
  std::vector<std::pair<int32_t, int32_t>> out;
  out.reserve(csv.records.size());
  for (size_t i = 0; i < csv.records.size(); ++i) {
    try {
      out.emplace_back(std::stoi(csv.records[i][0]), std::stoi(csv.records[i][1]));
    } catch (const std::exception&) {
      throw CsvError(i + 2, "golden pair ids must be integers");
    }
  }
  return out;
}

inline PairList golden_to_pairs(const std::vector<std::pair<int32_t, int32_t>>& golden,
                                const ColumnTable& source, const ColumnTable& target) {
  std::unordered_map<int32_t, const Row*> src_by_id, tgt_by_id;
  for (const Row& r : source.rows()) src_by_id.emplace(r.id, &r);
  for (const Row& r : target.rows()) tgt_by_id.emplace(r.id, &r);
  PairList out;
  out.reserve(golden.size());
  for (auto [s, t] : golden) {
    auto si = src_by_id.find(s);
    auto ti = tgt_by_id.find(t);
    if (si == src_by_id.end() || ti == tgt_by_id.end())
      throw std::runtime_error("golden pair (" + std::to_string(s) + "," + std::to_string(t) +
                               ") references a missing row");
    out.push_back(CandidatePair{s, t, si->second->text, ti->second->text});
  }
  canonicalize(out);
  return out;
}

inline std::vector<Transformation> load_transformations(const std::string& path) {
  const std::string data = read_file(path);
  std::vector<Transformation> out;
  size_t line_no = 1;
  size_t start = 0;
  while (start <= data.size()) {
    size_t end = data.find('\n', start);
    if (end == std::string::npos) end = data.size();
    std::string_view line(data.data() + start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(parse_transformation(line));
      } catch (const ParseError& e) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) + ":" +
                                 std::to_string(e.position + 1) + ": " + e.what());
      }
    }
    if (end == data.size()) break;
    start = end + 1;
    ++line_no;
  }
  return out;
}

inline void write_transformations(const std::string& path, const std::vector<Transformation>& ts) {
  std::string data;
  for (const Transformation& t : ts) {
    data += print_transformation(t);
    data += '\n';
  }
  write_file(path, data);
}

inline void write_synth_benchmark(const SynthBenchmark& bench, const std::string& dir) {
  auto table_csv = [](const ColumnTable& col) {
    std::string out = "id,value\n";
    for (const Row& r : col.rows())
      out += format_csv_row({std::to_string(r.id), encode_utf8(r.text)});
    return out;
  };
  write_file(dir + "/source.csv", table_csv(bench.source));
  write_file(dir + "/target.csv", table_csv(bench.target));
  std::string pairs = "source_id,target_id\n";
  for (auto [s, t] : bench.golden_pairs)
    pairs += format_csv_row({std::to_string(s), std::to_string(t)});
  write_file(dir + "/golden_pairs.csv", pairs);
  write_transformations(dir + "/golden_transformations.txt", bench.golden_transformations);
}

}  // namespace tjoin

#pragma once

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <optional>

#include "coverage.hpp"

namespace tjoin {

struct JoinedPair {
  int32_t source_id = 0;
  int32_t target_id = 0;
  std::vector<Transformation> witnesses;
};

struct JoinMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct JoinResult {
  std::vector<JoinedPair> pairs;
  std::optional<JoinMetrics> metrics;
};

/// Applies every transformation to every source row and equi-joins the
/// transformed values against the target column. Rows a transformation fails
/// on are skipped; duplicate (source,target) pairs merge their witnesses.
inline JoinResult transform_join(const ColumnTable& src, const ColumnTable& tgt,
                                 const std::vector<Transformation>& ts, int workers = 1) {
  if (ts.empty()) throw std::invalid_argument("transform_join requires a nonempty transformation list");

  std::unordered_map<std::u32string, std::vector<int32_t>> by_value;
  for (const Row& r : tgt.rows()) by_value[r.text].push_back(r.id);

  // per source row: (target id, witness index), gathered in row order
  std::vector<std::vector<std::pair<int32_t, size_t>>> hits(src.size());
  const auto& rows = src.rows();
  parallel_for(rows.size(), workers, [&](size_t i) {
    for (size_t w = 0; w < ts.size(); ++w) {
      ApplyOutcome r = apply_transformation(ts[w], rows[i].text);
      if (!r.ok()) continue;
      auto it = by_value.find(r.text);
      if (it == by_value.end()) continue;
      for (int32_t tid : it->second) hits[i].emplace_back(tid, w);
    }
  });

  JoinResult result;
  std::unordered_map<int64_t, size_t> index;  // (source_id, target_id) -> pairs slot
  for (size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [tid, w] : hits[i]) {
      const int64_t key = (static_cast<int64_t>(rows[i].id) << 32) | static_cast<uint32_t>(tid);
      auto [it, fresh] = index.try_emplace(key, result.pairs.size());
      if (fresh) result.pairs.push_back(JoinedPair{rows[i].id, tid, {}});
      auto& witnesses = result.pairs[it->second].witnesses;
      if (std::find(witnesses.begin(), witnesses.end(), ts[w]) == witnesses.end())
        witnesses.push_back(ts[w]);
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end(), [](const JoinedPair& a, const JoinedPair& b) {
    if (a.source_id != b.source_id) return a.source_id < b.source_id;
    return a.target_id < b.target_id;
  });
  return result;
}

/// Precision/recall/F1 against golden pairs. An empty join result scores
/// precision 1 and recall 0 by convention.
inline JoinMetrics evaluate_join(const JoinResult& result,
                                 const std::vector<std::pair<int32_t, int32_t>>& golden) {
  if (golden.empty()) throw std::invalid_argument("evaluate_join requires nonempty golden pairs");
  std::unordered_set<int64_t> gold;
  for (auto [s, t] : golden) gold.insert((static_cast<int64_t>(s) << 32) | static_cast<uint32_t>(t));

  size_t correct = 0;
  for (const JoinedPair& p : result.pairs) {
    if (gold.count((static_cast<int64_t>(p.source_id) << 32) | static_cast<uint32_t>(p.target_id)))
      ++correct;
  }
  JoinMetrics m;
  m.precision = result.pairs.empty() ? 1.0
                                     : static_cast<double>(correct) /
                                           static_cast<double>(result.pairs.size());
  m.recall = static_cast<double>(correct) / static_cast<double>(gold.size());
  m.f1 = (m.precision + m.recall) == 0.0
             ? 0.0
             : 2.0 * m.precision * m.recall / (m.precision + m.recall);
  return m;
}

}  // namespace tjoin

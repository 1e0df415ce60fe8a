#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "transformation.hpp"

namespace tjoin {

struct Row {
  int32_t id = 0;
  std::u32string text;
};

/// One ingested table column: rows with stable ids plus the mean scalar length.
class ColumnTable {
 public:
  ColumnTable() = default;
  explicit ColumnTable(std::vector<Row> rows) : rows_(std::move(rows)) { recompute(); }

  static ColumnTable from_texts(std::vector<std::u32string> texts) {
    std::vector<Row> rows;
    rows.reserve(texts.size());
    for (size_t i = 0; i < texts.size(); ++i)
      rows.push_back(Row{static_cast<int32_t>(i), std::move(texts[i])});
    return ColumnTable(std::move(rows));
  }

  const std::vector<Row>& rows() const { return rows_; }
  size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  double avg_len() const { return avg_len_; }

 private:
  void recompute() {
    double total = 0;
    for (const Row& r : rows_) total += static_cast<double>(r.text.size());
    avg_len_ = rows_.empty() ? 0.0 : total / static_cast<double>(rows_.size());
  }

  std::vector<Row> rows_;
  double avg_len_ = 0.0;
};

/// A (source row, target row) pair hypothesized joinable. Many-to-many pairs
/// are permitted; a pair list is kept sorted by ids and free of duplicates.
struct CandidatePair {
  int32_t source_id = 0;
  int32_t target_id = 0;
  std::u32string source;
  std::u32string target;

  bool operator==(const CandidatePair& o) const {
    return source_id == o.source_id && target_id == o.target_id;
  }
  bool operator<(const CandidatePair& o) const {
    if (source_id != o.source_id) return source_id < o.source_id;
    return target_id < o.target_id;
  }
};

using PairList = std::vector<CandidatePair>;

inline void canonicalize(PairList& pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

inline bool covers(const Transformation& t, const CandidatePair& pair) {
  return covers(t, pair.source, pair.target);
}

}  // namespace tjoin

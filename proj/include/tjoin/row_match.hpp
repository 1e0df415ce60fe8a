#pragma once

#include <unordered_set>

#include "ngram.hpp"

namespace tjoin {

/// Tags the column with the longer rows on average as the source (the more
/// informative side); ties keep the first argument as source.
inline std::pair<const ColumnTable*, const ColumnTable*> designate_source(const ColumnTable& a,
                                                                          const ColumnTable& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("designate_source: empty column");
  if (b.avg_len() > a.avg_len()) return {&b, &a};
  return {&a, &b};
}

/// For every n in [n0, n_max] and every source row, picks the representative
/// n-gram (largest rscore, ties to the lexicographically smallest gram) and
/// pairs the row with every target row containing it. Rows shorter than n, and
/// rows whose grams all score 0, contribute nothing at that n.
inline PairList find_candidate_pairs(const ColumnTable& src, const ColumnTable& tgt, int32_t n0,
                                     int32_t n_max) {
  const NGramIndex src_idx = build_index(src, n0, n_max);
  const NGramIndex tgt_idx = build_index(tgt, n0, n_max);

  std::unordered_map<int32_t, const Row*> tgt_by_id;
  for (const Row& r : tgt.rows()) tgt_by_id.emplace(r.id, &r);

  PairList out;
  std::unordered_set<std::u32string> seen;
  for (int32_t n = n0; n <= n_max; ++n) {
    for (const Row& r : src.rows()) {
      if (r.text.size() < static_cast<size_t>(n)) continue;
      seen.clear();
      double best_score = 0.0;
      std::u32string best;
      for (size_t i = 0; i + n <= r.text.size(); ++i) {
        std::u32string gram = r.text.substr(i, n);
        if (!seen.insert(gram).second) continue;
        double score = rscore(gram, src_idx, tgt_idx);
        if (score <= 0.0) continue;
        if (score > best_score || (score == best_score && gram < best)) {
          best_score = score;
          best = std::move(gram);
        }
      }
      if (best_score <= 0.0) continue;
      for (int32_t tid : *tgt_idx.find(best)) {
        out.push_back(CandidatePair{r.id, tid, r.text, tgt_by_id.at(tid)->text});
      }
    }
  }
  canonicalize(out);
  return out;
}

}  // namespace tjoin

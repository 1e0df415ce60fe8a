#pragma once

#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "column.hpp"

namespace tjoin {

/// Inverted index over the character n-grams of one column, for all lengths in
/// [n0, n_max]. Postings hold the ids of the rows containing the gram.
struct NGramIndex {
  int32_t n0 = 4;
  int32_t n_max = 20;
  std::unordered_map<std::u32string, std::vector<int32_t>> postings;

  const std::vector<int32_t>* find(const std::u32string& gram) const {
    auto it = postings.find(gram);
    return it == postings.end() ? nullptr : &it->second;
  }
};

inline NGramIndex build_index(const ColumnTable& col, int32_t n0, int32_t n_max) {
  if (n0 < 1 || n0 > n_max) throw std::invalid_argument("build_index requires 1 <= n0 <= n_max");
  NGramIndex idx;
  idx.n0 = n0;
  idx.n_max = n_max;
  for (const Row& r : col.rows()) {
    const std::u32string& s = r.text;
    for (int32_t n = n0; n <= n_max && static_cast<size_t>(n) <= s.size(); ++n) {
      for (size_t i = 0; i + n <= s.size(); ++i) {
        auto& posting = idx.postings[s.substr(i, n)];
        if (posting.empty() || posting.back() != r.id) posting.push_back(r.id);
      }
    }
  }
  return idx;
}

/// Inverse row frequency: 1 / (number of rows containing the gram).
inline double irf(const std::u32string& gram, const NGramIndex& idx) {
  const auto* posting = idx.find(gram);
  if (!posting) throw std::out_of_range("irf: gram not present in index");
  return 1.0 / static_cast<double>(posting->size());
}

/// Representativeness of a gram shared by both columns; 0 when the gram is
/// absent from either side, since such a gram cannot witness joinability.
inline double rscore(const std::u32string& gram, const NGramIndex& src, const NGramIndex& tgt) {
  const auto* ps = src.find(gram);
  const auto* pt = tgt.find(gram);
  if (!ps || !pt) return 0.0;
  return 1.0 / (static_cast<double>(ps->size()) * static_cast<double>(pt->size()));
}

}  // namespace tjoin

#pragma once

#include <algorithm>
#include <unordered_set>

#include "column.hpp"

namespace tjoin {

struct Span {
  int32_t start = 0;
  int32_t end = 0;  // half-open
  bool operator==(const Span&) const = default;
  int32_t length() const { return end - start; }
};

/// A block of target text copied from the source: one target occurrence plus
/// every source span where the same text occurs.
struct PlaceholderMatch {
  Span target;
  std::vector<Span> source_spans;
  std::u32string text;

  bool operator==(const PlaceholderMatch& o) const { return target == o.target; }
};

inline std::vector<Span> occurrences_of(const std::u32string& text, const std::u32string& in) {
  std::vector<Span> spans;
  if (text.empty()) return spans;
  size_t pos = in.find(text);
  while (pos != std::u32string::npos) {
    spans.push_back(Span{static_cast<int32_t>(pos), static_cast<int32_t>(pos + text.size())});
    pos = in.find(text, pos + 1);
  }
  return spans;
}

/// All target occurrences of common substrings that cannot be extended by one
/// character on either side while remaining a substring of the source, with
/// every source occurrence recorded. Occurrences shorter than min_len are
/// dropped. Quadratic in the row length, which is fine at table-cell sizes.
inline std::vector<PlaceholderMatch> maximal_placeholders(const std::u32string& src,
                                                          const std::u32string& tgt,
                                                          int32_t min_len = 1) {
  const size_t ts = tgt.size(), ss = src.size();
  std::vector<PlaceholderMatch> out;
  if (ts == 0 || ss == 0 || min_len < 1) return out;

  // longest[i] = length of the longest prefix of tgt[i..] occurring in src
  std::vector<int32_t> longest(ts, 0);
  std::vector<int32_t> cur(ss + 1, 0), next(ss + 1, 0);
  for (size_t i = ts; i-- > 0;) {
    int32_t best = 0;
    for (size_t k = 0; k < ss; ++k) {
      cur[k] = (tgt[i] == src[k]) ? next[k + 1] + 1 : 0;
      best = std::max(best, cur[k]);
    }
    cur[ss] = 0;
    longest[i] = best;
    std::swap(cur, next);
  }

  for (size_t i = 0; i < ts; ++i) {
    const int32_t len = longest[i];
    if (len < min_len) continue;
    // left-extendable occurrences are absorbed by the one starting earlier
    if (i > 0 && longest[i - 1] >= len + 1) continue;
    PlaceholderMatch m;
    m.target = Span{static_cast<int32_t>(i), static_cast<int32_t>(i) + len};
    m.text = tgt.substr(i, len);
    m.source_spans = occurrences_of(m.text, src);
    out.push_back(std::move(m));
  }
  return out;
}

inline const std::unordered_set<char32_t>& default_separators() {
  static const std::unordered_set<char32_t> set = [] {
    std::unordered_set<char32_t> s;
    for (char32_t c = 1; c < 0x80; ++c)
      if (is_default_separator(c)) s.insert(c);
    return s;
  }();
  return set;
}

/// Union of the given placeholders and every sub-placeholder obtained by
/// splitting their texts at separator characters, with recomputed spans.
/// Mitigates the case where a common separator falls inside a maximal
/// placeholder and hides a better split-based transformation.
inline std::vector<PlaceholderMatch> token_split_placeholders(
    const std::vector<PlaceholderMatch>& ps, const std::u32string& src,
    const std::unordered_set<char32_t>& separators = default_separators()) {
  std::vector<PlaceholderMatch> out;
  std::unordered_set<int64_t> seen;  // (start << 32) | end
  auto add = [&](PlaceholderMatch m) {
    int64_t key = (static_cast<int64_t>(m.target.start) << 32) | static_cast<uint32_t>(m.target.end);
    if (seen.insert(key).second) out.push_back(std::move(m));
  };
  for (const PlaceholderMatch& p : ps) add(p);
  for (const PlaceholderMatch& p : ps) {
    size_t piece_start = 0;
    for (size_t i = 0; i <= p.text.size(); ++i) {
      const bool at_sep = i < p.text.size() && separators.count(p.text[i]) > 0;
      if (i == p.text.size() || at_sep) {
        if (i > piece_start && !(piece_start == 0 && i == p.text.size())) {
          PlaceholderMatch m;
          m.text = p.text.substr(piece_start, i - piece_start);
          m.target = Span{p.target.start + static_cast<int32_t>(piece_start),
                          p.target.start + static_cast<int32_t>(i)};
          m.source_spans = occurrences_of(m.text, src);
          add(std::move(m));
        }
        piece_start = i + 1;
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const PlaceholderMatch& a, const PlaceholderMatch& b) {
    if (a.target.start != b.target.start) return a.target.start < b.target.start;
    return a.target.end < b.target.end;
  });
  return out;
}

}  // namespace tjoin

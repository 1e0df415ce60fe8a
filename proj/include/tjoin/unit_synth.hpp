#pragma once

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include "parallel.hpp"
#include "skeletons.hpp"

namespace tjoin {

/// Candidate units for one placeholder; each unit maps the pair's source to
/// exactly the placeholder text.
struct CandidateUnitSet {
  PlaceholderMatch placeholder;
  std::vector<Unit> units;
};

namespace detail {

inline void push_unique(std::vector<Unit>& units, Unit u) {
  for (const Unit& have : units)
    if (have == u) return;
  units.push_back(std::move(u));
}

// Segment coordinates of [start,end) under a split of src at is_delim; valid
// only when no delimiter falls inside the span.
template <typename Pred>
void segment_coords(const std::u32string& src, Pred is_delim, int32_t start, int32_t end,
                    int32_t& index, int32_t& off_start, int32_t& off_end) {
  int32_t idx = 1;
  int32_t seg_start = 0;
  for (int32_t i = 0; i < start; ++i) {
    if (is_delim(src[i])) {
      ++idx;
      seg_start = i + 1;
    }
  }
  index = idx;
  off_start = start - seg_start;
  off_end = off_start + (end - start);
}

}  // namespace detail

/// Instantiates the candidate units of a placeholder from each of its source
/// spans: the exact Substr, boundary-adjacent Splits, one SplitSubstr per
/// source character absent from the text, TwoCharSplitSubstr pairs when
/// enabled, and the Literal fallback for constants that match by chance.
inline CandidateUnitSet candidate_units(const PlaceholderMatch& ph, const std::u32string& src,
                                        const UnitKindSet& enabled) {
  CandidateUnitSet set;
  set.placeholder = ph;
  const std::u32string& txt = ph.text;
  std::unordered_set<char32_t> in_txt(txt.begin(), txt.end());

  std::vector<char32_t> distinct_src;
  {
    std::unordered_set<char32_t> seen;
    for (char32_t c : src)
      if (seen.insert(c).second) distinct_src.push_back(c);
  }

  for (const Span& span : ph.source_spans) {
    if (enabled.substr) detail::push_unique(set.units, Unit(Substr{span.start, span.end}));

    if (enabled.split) {
      char32_t adjacent[2];
      size_t n_adj = 0;
      if (span.start > 0) adjacent[n_adj++] = src[span.start - 1];
      if (static_cast<size_t>(span.end) < src.size()) adjacent[n_adj++] = src[span.end];
      for (size_t a = 0; a < n_adj; ++a) {
        const char32_t c = adjacent[a];
        if (in_txt.count(c)) continue;
        int32_t index, s, e;
        detail::segment_coords(src, [c](char32_t x) { return x == c; }, span.start, span.end,
                               index, s, e);
        // the containing segment must equal the text exactly
        size_t a0, b0;
        nth_segment(src, [c](char32_t x) { return x == c; }, index, a0, b0);
        if (src.compare(a0, b0 - a0, txt) == 0)
          detail::push_unique(set.units, Unit(Split{c, index}));
      }
    }

    if (enabled.split_substr) {
      for (char32_t c : distinct_src) {
        if (in_txt.count(c)) continue;
        int32_t index, s, e;
        detail::segment_coords(src, [c](char32_t x) { return x == c; }, span.start, span.end,
                               index, s, e);
        detail::push_unique(set.units, Unit(SplitSubstr{c, index, s, e}));
      }
    }

    if (enabled.two_char_split_substr) {
      for (size_t i = 0; i < distinct_src.size(); ++i) {
        const char32_t c1 = distinct_src[i];
        if (in_txt.count(c1)) continue;
        for (size_t j = i + 1; j < distinct_src.size(); ++j) {
          const char32_t c2 = distinct_src[j];
          if (in_txt.count(c2)) continue;
          int32_t index, s, e;
          detail::segment_coords(
              src, [c1, c2](char32_t x) { return x == c1 || x == c2; }, span.start, span.end,
              index, s, e);
          detail::push_unique(set.units, Unit(TwoCharSplitSubstr{c1, c2, index, s, e}));
        }
      }
    }
  }

  if (enabled.literal && !txt.empty()) detail::push_unique(set.units, Unit(Literal{txt}));
  return set;
}

/// Every selection of one candidate unit per placeholder block, literal blocks
/// mapped to Literal units, concatenated in block order.
inline std::vector<Transformation> transformations_from_skeleton(const Skeleton& sk,
                                                                 const std::u32string& src,
                                                                 const UnitKindSet& enabled) {
  std::vector<Transformation> out;
  if (sk.blocks.empty()) return out;

  std::vector<std::vector<Unit>> slots;
  slots.reserve(sk.blocks.size());
  for (const SkeletonBlock& b : sk.blocks) {
    if (const auto* p = std::get_if<PlaceholderMatch>(&b)) {
      std::vector<Unit> units = candidate_units(*p, src, enabled).units;
      if (units.empty()) return out;  // nothing can produce this block
      slots.push_back(std::move(units));
    } else {
      slots.push_back({Unit(Literal{std::get<LiteralBlock>(b).text})});
    }
  }

  std::vector<size_t> pick(slots.size(), 0);
  for (;;) {
    std::vector<Unit> units;
    units.reserve(slots.size());
    for (size_t i = 0; i < slots.size(); ++i) units.push_back(slots[i][pick[i]]);
    out.emplace_back(std::move(units));
    size_t i = slots.size();
    while (i-- > 0) {
      if (++pick[i] < slots[i].size()) break;
      pick[i] = 0;
      if (i == 0) return out;
    }
  }
}

/// Deduplicated candidate transformations plus the number of generation-time
/// duplicates discarded; content is independent of pair order.
class CandidatePool {
 public:
  bool insert(Transformation t) {
    auto [it, fresh] = buckets_.try_emplace(t.hash());
    for (uint32_t idx : it->second) {
      if (items_[idx] == t) {
        ++duplicate_count_;
        return false;
      }
    }
    it->second.push_back(static_cast<uint32_t>(items_.size()));
    items_.push_back(std::move(t));
    return true;
  }

  bool contains(const Transformation& t) const {
    auto it = buckets_.find(t.hash());
    if (it == buckets_.end()) return false;
    for (uint32_t idx : it->second)
      if (items_[idx] == t) return true;
    return false;
  }

  const std::vector<Transformation>& items() const { return items_; }
  size_t size() const { return items_.size(); }
  uint64_t duplicate_count() const { return duplicate_count_; }
  uint64_t generated() const { return duplicate_count_ + items_.size(); }

 private:
  std::vector<Transformation> items_;
  std::unordered_map<uint64_t, std::vector<uint32_t>> buckets_;
  uint64_t duplicate_count_ = 0;
};

struct GenerateOptions {
  SkeletonOptions skeleton;
  UnitKindSet enabled;
  int workers = 1;
};

/// Runs skeleton enumeration and unit instantiation for every pair and pools
/// the results. Generation is parallel across pairs; the merge happens in pair
/// order so the pool content and counters are deterministic.
inline CandidatePool generate_candidates(const PairList& pairs, const GenerateOptions& opt) {
  std::vector<std::vector<Transformation>> per_pair(pairs.size());
  parallel_for(pairs.size(), opt.workers, [&](size_t i) {
    const CandidatePair& pair = pairs[i];
    std::vector<Transformation> acc;
    for (const Skeleton& sk : enumerate_skeletons(pair, opt.skeleton)) {
      auto ts = transformations_from_skeleton(sk, pair.source, opt.enabled);
      acc.insert(acc.end(), std::make_move_iterator(ts.begin()), std::make_move_iterator(ts.end()));
    }
    per_pair[i] = std::move(acc);
  });

  CandidatePool pool;
  for (auto& batch : per_pair) {
    for (Transformation& t : batch) pool.insert(std::move(t));
    batch.clear();
    batch.shrink_to_fit();
  }
  return pool;
}

}  // namespace tjoin

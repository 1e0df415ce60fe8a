#pragma once

#include <algorithm>
#include <unordered_set>
#include <map>
#include <variant>

#include "placeholders.hpp"

namespace tjoin {

struct LiteralBlock {
  std::u32string text;
  bool operator==(const LiteralBlock&) const = default;
};

using SkeletonBlock = std::variant<PlaceholderMatch, LiteralBlock>;

/// A segmentation of one target row into placeholder and literal blocks whose
/// concatenation reproduces the row exactly.
struct Skeleton {
  std::vector<SkeletonBlock> blocks;
  int32_t placeholder_count = 0;

  std::u32string reconstruct() const {
    std::u32string out;
    for (const auto& b : blocks) {
      if (const auto* p = std::get_if<PlaceholderMatch>(&b)) out += p->text;
      else out += std::get<LiteralBlock>(b).text;
    }
    return out;
  }
};

struct SkeletonOptions {
  int32_t max_placeholders = 3;
  int32_t skeleton_cap = 256;
  int32_t min_placeholder_len = 1;
};

namespace detail {

// Canonical form used for ordering and dedup within one target row.
inline std::u32string skeleton_key(const Skeleton& sk) {
  std::u32string key;
  for (const auto& b : sk.blocks) {
    if (const auto* p = std::get_if<PlaceholderMatch>(&b)) {
      key += U"P(";
      key += decode_utf8(std::to_string(p->target.start));
      key += U',';
      key += decode_utf8(std::to_string(p->target.end));
      key += U')';
    } else {
      key += U"L(";
      key += std::get<LiteralBlock>(b).text;
      key += U')';
    }
  }
  return key;
}

struct SkeletonSearch {
  explicit SkeletonSearch(const std::u32string& target) : tgt(target) {}

  const std::u32string& tgt;
  // at position q: the maximal placeholder starting there (if any) followed by
  // token-split sub-placeholders starting there
  std::map<int32_t, std::vector<const PlaceholderMatch*>> options;
  std::vector<int32_t> sites_at_or_after;  // for pruning
  size_t level_guard = 1u << 20;

  std::vector<Skeleton> level;
  std::vector<const PlaceholderMatch*> chosen;

  void emit(int32_t placed) {
    Skeleton sk;
    sk.placeholder_count = placed;
    int32_t pos = 0;
    auto flush_literal = [&](int32_t upto) {
      if (upto > pos) {
        sk.blocks.push_back(
            LiteralBlock{tgt.substr(static_cast<size_t>(pos), static_cast<size_t>(upto - pos))});
      }
    };
    for (const PlaceholderMatch* p : chosen) {
      flush_literal(p->target.start);
      sk.blocks.push_back(*p);
      pos = p->target.end;
    }
    flush_literal(static_cast<int32_t>(tgt.size()));
    level.push_back(std::move(sk));
  }

  void search(int32_t pos, int32_t placed, int32_t want) {
    if (level.size() > level_guard) return;
    if (pos >= static_cast<int32_t>(tgt.size())) {
      if (placed == want) emit(placed);
      return;
    }
    if (placed + sites_at_or_after[pos] < want) return;
    auto it = options.lower_bound(pos);
    if (placed == want || it == options.end()) {
      if (placed == want) emit(placed);  // rest of the row is one literal run
      return;
    }
    // skip ahead: everything before the next site is forced literal text
    const int32_t site = it->first;
    if (site > pos) {
      search(site, placed, want);
      return;
    }
    for (const PlaceholderMatch* p : it->second) {
      chosen.push_back(p);
      search(p->target.end, placed + 1, want);
      chosen.pop_back();
    }
    // or treat this position as literal and move past it
    search(pos + 1, placed, want);
  }
};

}  // namespace detail

/// Enumerates segmentations of the target by a left-to-right search; at each
/// position the options are the longest maximal placeholder starting there,
/// any token-split sub-placeholder starting there, or one literal character
/// (merged into maximal literal runs). The all-literal skeleton is always
/// present. Results are deduplicated and truncated to skeleton_cap, keeping
/// skeletons with fewer placeholders first (canonical order within a level).
inline std::vector<Skeleton> enumerate_skeletons(
    const CandidatePair& pair, const SkeletonOptions& opt,
    const std::unordered_set<char32_t>& separators = default_separators()) {
  if (opt.max_placeholders < 1 || opt.skeleton_cap < 1)
    throw std::invalid_argument("enumerate_skeletons: max_placeholders and cap must be >= 1");

  std::vector<Skeleton> out;
  if (pair.target.empty()) return out;

  const auto maximal = maximal_placeholders(pair.source, pair.target, opt.min_placeholder_len);
  const auto with_subs = token_split_placeholders(maximal, pair.source, separators);

  detail::SkeletonSearch search(pair.target);
  std::unordered_set<int64_t> have;  // spans already offered
  auto span_key = [](Span s) {
    return (static_cast<int64_t>(s.start) << 32) | static_cast<uint32_t>(s.end);
  };
  for (const PlaceholderMatch& p : maximal) {
    search.options[p.target.start].push_back(&p);
    have.insert(span_key(p.target));
  }
  for (const PlaceholderMatch& p : with_subs) {
    if (have.insert(span_key(p.target)).second) search.options[p.target.start].push_back(&p);
  }

  search.sites_at_or_after.assign(pair.target.size() + 1, 0);
  for (int32_t pos = static_cast<int32_t>(pair.target.size()); pos-- > 0;) {
    search.sites_at_or_after[pos] =
        search.sites_at_or_after[pos + 1] + (search.options.count(pos) ? 1 : 0);
  }

  for (int32_t want = 0; want <= opt.max_placeholders; ++want) {
    search.level.clear();
    search.search(0, 0, want);
    std::sort(search.level.begin(), search.level.end(), [](const Skeleton& a, const Skeleton& b) {
      return detail::skeleton_key(a) < detail::skeleton_key(b);
    });
    search.level.erase(std::unique(search.level.begin(), search.level.end(),
                                   [](const Skeleton& a, const Skeleton& b) {
                                     return detail::skeleton_key(a) == detail::skeleton_key(b);
                                   }),
                       search.level.end());
    for (Skeleton& sk : search.level) {
      if (out.size() >= static_cast<size_t>(opt.skeleton_cap)) return out;
      out.push_back(std::move(sk));
    }
  }
  return out;
}

inline std::vector<Skeleton> enumerate_skeletons(const CandidatePair& pair, int32_t max_placeholders,
                                                 int32_t skeleton_cap) {
  SkeletonOptions opt;
  opt.max_placeholders = max_placeholders;
  opt.skeleton_cap = skeleton_cap;
  return enumerate_skeletons(pair, opt);
}

}  // namespace tjoin

#pragma once

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "column.hpp"

namespace tjoin {

// Brute-force ground truth for tiny instances. Nothing here is used by the
// discovery pipeline; tests compare against it.

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleBudget {
  int32_t max_units = 3;
  int32_t max_literal_len = 12;
  UnitKindSet enabled{};  // defaults match the production defaults
  int32_t max_rows = 6;
  int32_t max_row_len = 12;
};

struct OracleEntry {
  Transformation transformation;
  std::vector<int32_t> covered;  // indices into the input pair list
};

namespace detail {

inline std::vector<char32_t> distinct_chars(const std::u32string& s) {
  std::vector<char32_t> out;
  std::unordered_set<char32_t> seen;
  for (char32_t c : s)
    if (seen.insert(c).second) out.push_back(c);
  return out;
}

// Every unit over the enabled kinds whose output on src is exactly `block`.
inline std::vector<Unit> units_producing(const std::u32string& block, const std::u32string& src,
                                         const OracleBudget& budget) {
  std::vector<Unit> out;
  const auto matches = [&](const Unit& u) {
    ApplyOutcome r = apply_unit(u, src);
    return r.ok() && r.text == block;
  };
  const auto consider = [&](Unit u) {
    if (matches(u)) out.push_back(std::move(u));
  };

  if (budget.enabled.literal && !block.empty() &&
      block.size() <= static_cast<size_t>(budget.max_literal_len))
    out.push_back(Unit(Literal{block}));

  if (!block.empty() && budget.enabled.substr) {
    size_t at = src.find(block);
    while (at != std::u32string::npos) {
      out.push_back(Unit(Substr{static_cast<int32_t>(at), static_cast<int32_t>(at + block.size())}));
      at = src.find(block, at + 1);
    }
  }

  const auto chars = distinct_chars(src);
  if (budget.enabled.split) {
    for (char32_t c : chars) {
      const auto segs = split_on(src, c);
      for (size_t i = 0; i < segs.size(); ++i)
        if (segs[i] == block) out.push_back(Unit(Split{c, static_cast<int32_t>(i + 1)}));
    }
  }
  if (budget.enabled.split_substr && !block.empty()) {
    for (char32_t c : chars) {
      const auto segs = split_on(src, c);
      for (size_t i = 0; i < segs.size(); ++i) {
        size_t at = segs[i].find(block);
        while (at != std::u32string::npos) {
          consider(Unit(SplitSubstr{c, static_cast<int32_t>(i + 1), static_cast<int32_t>(at),
                                    static_cast<int32_t>(at + block.size())}));
          at = segs[i].find(block, at + 1);
        }
      }
    }
  }
  if (budget.enabled.two_char_split_substr && !block.empty()) {
    for (size_t a = 0; a < chars.size(); ++a) {
      for (size_t b = a + 1; b < chars.size(); ++b) {
        const char32_t c1 = chars[a], c2 = chars[b];
        const auto segs =
            split_segments(src, [c1, c2](char32_t x) { return x == c1 || x == c2; });
        for (size_t i = 0; i < segs.size(); ++i) {
          size_t at = segs[i].find(block);
          while (at != std::u32string::npos) {
            consider(Unit(TwoCharSplitSubstr{c1, c2, static_cast<int32_t>(i + 1),
                                             static_cast<int32_t>(at),
                                             static_cast<int32_t>(at + block.size())}));
            at = segs[i].find(block, at + 1);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace detail

/// Enumerates every transformation of at most max_units units (literal texts
/// drawn from target substrings) that covers at least one pair, each with its
/// exact coverage. Works by segmenting each target and inverting units per
/// block, so completeness follows from the fact that a covering sequence's
/// unit outputs concatenate to the target.
inline std::vector<OracleEntry> enumerate_all_transformations(const PairList& pairs,
                                                              const OracleBudget& budget) {
  if (pairs.size() > static_cast<size_t>(budget.max_rows))
    throw BudgetExceeded("oracle: too many pairs");
  for (const auto& p : pairs) {
    if (p.source.size() > static_cast<size_t>(budget.max_row_len) ||
        p.target.size() > static_cast<size_t>(budget.max_row_len))
      throw BudgetExceeded("oracle: row too long");
  }
  if (budget.max_units < 1) throw BudgetExceeded("oracle: max_units must be >= 1");

  std::vector<OracleEntry> entries;
  std::unordered_map<uint64_t, std::vector<size_t>> seen;

  auto add = [&](Transformation t) {
    auto& bucket = seen[t.hash()];
    for (size_t idx : bucket)
      if (entries[idx].transformation == t) return;
    bucket.push_back(entries.size());
    OracleEntry e{std::move(t), {}};
    for (size_t pi = 0; pi < pairs.size(); ++pi)
      if (covers(e.transformation, pairs[pi])) e.covered.push_back(static_cast<int32_t>(pi));
    entries.push_back(std::move(e));
    if (entries.size() > 2'000'000) throw BudgetExceeded("oracle: enumeration too large");
  };

  for (const CandidatePair& pair : pairs) {
    const std::u32string& tgt = pair.target;
    if (tgt.empty()) continue;
    const size_t n = tgt.size();

    // memoized unit inversion per target span
    std::map<std::pair<size_t, size_t>, std::vector<Unit>> inv;
    auto units_for = [&](size_t a, size_t b) -> const std::vector<Unit>& {
      auto it = inv.find({a, b});
      if (it == inv.end())
        it = inv.emplace(std::pair{a, b},
                         detail::units_producing(tgt.substr(a, b - a), pair.source, budget))
                 .first;
      return it->second;
    };

    // all segmentations into at most max_units nonempty blocks
    std::vector<std::pair<size_t, size_t>> blocks;
    std::vector<Unit> prefix;
    auto rec = [&](auto&& self, size_t from) -> void {
      if (from == n) {
        add(Transformation(prefix));
        return;
      }
      if (blocks.size() == static_cast<size_t>(budget.max_units)) return;
      for (size_t to = from + 1; to <= n; ++to) {
        const auto& units = units_for(from, to);
        if (units.empty()) continue;
        blocks.emplace_back(from, to);
        for (const Unit& u : units) {
          prefix.push_back(u);
          self(self, to);
          prefix.pop_back();
        }
        blocks.pop_back();
      }
    };
    rec(rec, 0);
  }
  return entries;
}

/// Minimum-cardinality subset covering every coverable pair, by exhaustive
/// search after dominance reduction. Returns indices into `entries`.
inline std::vector<size_t> exact_min_cover(const PairList& pairs,
                                           const std::vector<OracleEntry>& entries) {
  std::vector<char> coverable(pairs.size(), 0);
  for (const auto& e : entries)
    for (int32_t p : e.covered) coverable[p] = 1;

  // drop entries whose covered set is contained in another's
  std::vector<size_t> keep;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].covered.empty()) continue;
    bool dominated = false;
    for (size_t j = 0; j < entries.size() && !dominated; ++j) {
      if (i == j) continue;
      const auto &a = entries[i].covered, &b = entries[j].covered;
      if (a.size() > b.size()) continue;
      if (a.size() == b.size() && i < j) continue;
      dominated = std::includes(b.begin(), b.end(), a.begin(), a.end());
    }
    if (!dominated) keep.push_back(i);
  }
  if (keep.size() > 20) throw BudgetExceeded("exact_min_cover: too many candidate sets");

  size_t want = 0;
  for (char c : coverable) want += c;
  if (want == 0) return {};

  for (size_t size = 1; size <= keep.size(); ++size) {
    std::vector<size_t> pick;
    std::vector<size_t> found;
    auto rec = [&](auto&& self, size_t from) -> bool {
      if (pick.size() == size) {
        std::vector<char> got(pairs.size(), 0);
        size_t total = 0;
        for (size_t idx : pick)
          for (int32_t p : entries[idx].covered)
            if (!got[p]) {
              got[p] = 1;
              ++total;
            }
        if (total != want) return false;
        found = pick;
        return true;
      }
      for (size_t i = from; i < keep.size(); ++i) {
        pick.push_back(keep[i]);
        if (self(self, i + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (rec(rec, 0)) return found;
  }
  return {};
}

/// The held-out composite unit: split by c1, take segment i1, split that by
/// c2, take segment i2, then substring [s,e). Test support for showing the
/// production units subsume it.
inline ApplyOutcome split_split_substr_oracle(char32_t c1, char32_t c2, int32_t i1, int32_t i2,
                                              int32_t s, int32_t e, const std::u32string& src) {
  if (i1 < 1 || i2 < 1 || s < 0 || s >= e) return ApplyOutcome::failure(ApplyError::index_out_of_range);
  size_t a = 0, b = 0;
  if (!nth_segment(src, [c1](char32_t x) { return x == c1; }, i1, a, b))
    return ApplyOutcome::failure(ApplyError::segment_index_out_of_range);
  const std::u32string first = src.substr(a, b - a);
  if (!nth_segment(first, [c2](char32_t x) { return x == c2; }, i2, a, b))
    return ApplyOutcome::failure(ApplyError::segment_index_out_of_range);
  const std::u32string second = first.substr(a, b - a);
  if (static_cast<size_t>(e) > second.size())
    return ApplyOutcome::failure(ApplyError::index_out_of_range);
  return ApplyOutcome::success(second.substr(s, e - s));
}

}  // namespace tjoin

#pragma once

#include <algorithm>
#include <unordered_set>
#include <cmath>
#include <random>

#include "unit_synth.hpp"

namespace tjoin {

/// Exact coverage of one transformation over the candidate pairs. Pair ids are
/// indices into the pair list handed to evaluate_coverage. The transformation
/// pointer refers into the pool and shares its lifetime.
struct CoverageRecord {
  const Transformation* transformation = nullptr;
  uint32_t pool_index = 0;
  std::vector<int32_t> covered;
  double coverage_fraction = 0.0;

  size_t covered_count() const { return covered.size(); }
};

/// Per-pair sets of unit digests proven unable to occur in any transformation
/// covering that pair, plus the counters behind the cache hit ratio.
class NonCoveringCache {
 public:
  void reset(size_t n_pairs) {
    sets_.assign(n_pairs, {});
    attempted_ = skipped_ = 0;
  }

  size_t pair_count() const { return sets_.size(); }

  bool is_non_covering(size_t pair, uint64_t unit_hash) const {
    return sets_[pair].count(unit_hash) > 0;
  }
  void insert(size_t pair, uint64_t unit_hash) { sets_[pair].insert(unit_hash); }

  uint64_t attempted() const { return attempted_; }
  uint64_t skipped() const { return skipped_; }
  void add_counts(uint64_t attempted, uint64_t skipped) {
    attempted_ += attempted;
    skipped_ += skipped;
  }

  double hit_ratio() const {
    const uint64_t total = attempted_ + skipped_;
    return total == 0 ? 0.0 : static_cast<double>(skipped_) / static_cast<double>(total);
  }

 private:
  std::vector<std::unordered_set<uint64_t>> sets_;
  uint64_t attempted_ = 0;
  uint64_t skipped_ = 0;
};

/// Exact coverage for every pooled transformation, with two prunings that do
/// not change the result: a transformation is skipped outright when one of its
/// units is cached non-covering for the pair, and an application is abandoned
/// as soon as the accumulated output stops being a prefix of the target. Units
/// whose output is not even a substring of the target enter the cache.
///
/// Work is split across pairs; each pair walks the pool in order with its own
/// cache set, so results and counters do not depend on the worker count.
inline std::vector<CoverageRecord> evaluate_coverage(const CandidatePool& pool,
                                                     const PairList& pairs,
                                                     NonCoveringCache& cache, int workers = 1) {
  cache.reset(pairs.size());
  const auto& items = pool.items();

  std::vector<std::vector<uint32_t>> covering(pairs.size());
  std::vector<std::pair<uint64_t, uint64_t>> counts(pairs.size(), {0, 0});

  parallel_for(pairs.size(), workers, [&](size_t pi) {
    const CandidatePair& pair = pairs[pi];
    const std::u32string& tgt = pair.target;
    uint64_t attempted = 0, skipped = 0;
    std::u32string acc;

    for (uint32_t ti = 0; ti < items.size(); ++ti) {
      const Transformation& t = items[ti];
      bool skip = false;
      for (const Unit& u : t.units()) {
        if (cache.is_non_covering(pi, u.hash())) {
          skip = true;
          break;
        }
      }
      if (skip) {
        ++skipped;
        continue;
      }
      ++attempted;

      acc.clear();
      bool covered = true;
      for (const Unit& u : t.units()) {
        ApplyOutcome r = apply_unit(u, pair.source);
        if (!r.ok() || tgt.find(r.text) == std::u32string::npos) {
          cache.insert(pi, u.hash());
          covered = false;
          break;
        }
        acc += r.text;
        if (acc.size() > tgt.size() || tgt.compare(0, acc.size(), acc) != 0) {
          covered = false;  // output diverged; the unit itself stays uncached
          break;
        }
      }
      if (covered && acc.size() == tgt.size()) covering[pi].push_back(ti);
    }
    counts[pi] = {attempted, skipped};
  });

  for (const auto& [attempted, skipped] : counts) cache.add_counts(attempted, skipped);

  std::vector<CoverageRecord> records(items.size());
  for (size_t ti = 0; ti < items.size(); ++ti) {
    records[ti].transformation = &items[ti];
    records[ti].pool_index = static_cast<uint32_t>(ti);
  }
  for (size_t pi = 0; pi < pairs.size(); ++pi) {
    for (uint32_t ti : covering[pi]) records[ti].covered.push_back(static_cast<int32_t>(pi));
  }
  const double n = pairs.empty() ? 1.0 : static_cast<double>(pairs.size());
  for (auto& rec : records)
    rec.coverage_fraction = static_cast<double>(rec.covered.size()) / n;
  return records;
}

inline bool better_record(const CoverageRecord& a, const CoverageRecord& b) {
  if (a.covered.size() != b.covered.size()) return a.covered.size() > b.covered.size();
  return compare_rank(*a.transformation, *b.transformation) < 0;
}

/// First k records by coverage, ties broken by the canonical ranking.
inline std::vector<CoverageRecord> top_k(std::vector<CoverageRecord> records, size_t k) {
  if (k < 1) throw std::invalid_argument("top_k requires k >= 1");
  std::sort(records.begin(), records.end(), better_record);
  if (records.size() > k) records.resize(k);
  return records;
}

inline std::vector<CoverageRecord> filter_by_support(std::vector<CoverageRecord> records,
                                                     double min_support) {
  if (min_support < 0.0 || min_support > 1.0)
    throw std::invalid_argument("filter_by_support requires 0 <= min_support <= 1");
  std::erase_if(records,
                [min_support](const CoverageRecord& r) { return r.coverage_fraction < min_support; });
  return records;
}

struct GreedyPick {
  CoverageRecord record;
  std::vector<int32_t> marginal;  // pairs newly covered by this pick
};

/// Classic greedy set cover: repeatedly takes the record covering the most
/// still-uncovered pairs until nothing new can be covered. H(n)-approximate.
inline std::vector<GreedyPick> greedy_min_cover(const std::vector<CoverageRecord>& records,
                                                size_t n_pairs) {
  std::vector<GreedyPick> picks;
  std::vector<char> covered(n_pairs, 0);

  for (;;) {
    size_t best_gain = 0;
    const CoverageRecord* best = nullptr;
    std::vector<int32_t> best_marginal;
    for (const CoverageRecord& rec : records) {
      size_t gain = 0;
      for (int32_t p : rec.covered)
        if (!covered[p]) ++gain;
      if (gain == 0) continue;
      bool take = false;
      if (gain > best_gain) {
        take = true;
      } else if (gain == best_gain && best) {
        take = compare_rank(*rec.transformation, *best->transformation) < 0;
      }
      if (take) {
        best_gain = gain;
        best = &rec;
        best_marginal.clear();
        for (int32_t p : rec.covered)
          if (!covered[p]) best_marginal.push_back(p);
      }
    }
    if (!best) break;
    for (int32_t p : best_marginal) covered[p] = 1;
    picks.push_back(GreedyPick{*best, std::move(best_marginal)});
  }
  return picks;
}

/// Uniform random subset without replacement; deterministic for a seed.
inline PairList sample_pairs(const PairList& pairs, size_t size, uint64_t seed) {
  if (size < 1 || size > pairs.size())
    throw std::invalid_argument("sample_pairs requires 1 <= size <= |pairs|");
  std::vector<size_t> idx(pairs.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::mt19937_64 rng(seed);
  for (size_t i = 0; i < size; ++i) {
    std::uniform_int_distribution<size_t> pick(i, idx.size() - 1);
    std::swap(idx[i], idx[pick(rng)]);
  }
  idx.resize(size);
  std::sort(idx.begin(), idx.end());
  PairList out;
  out.reserve(size);
  for (size_t i : idx) out.push_back(pairs[i]);
  return out;
}

/// Probability that a random sample of size s holds at least two rows covered
/// by a transformation of coverage q: 1 - (1-q)^s - s q (1-q)^(s-1).
inline double detection_probability(double q, int64_t s) {
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("detection_probability requires 0 <= q <= 1");
  if (s < 2) throw std::invalid_argument("detection_probability requires s >= 2");
  const double p0 = std::pow(1.0 - q, static_cast<double>(s));
  const double p1 = static_cast<double>(s) * q * std::pow(1.0 - q, static_cast<double>(s - 1));
  return 1.0 - p0 - p1;
}

}  // namespace tjoin

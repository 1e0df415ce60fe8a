#pragma once

#include <random>

#include "column.hpp"

namespace tjoin {

/// Controls for the synthetic benchmark generator.
struct SynthParams {
  int32_t rows = 50;
  int32_t len_lo = 20;  // the L-variant uses [40,70]
  int32_t len_hi = 35;
  int32_t placeholders = 2;       // placeholder units per transformation
  int32_t literal_len_lo = 1;
  int32_t literal_len_hi = 5;
  int32_t transformations = 3;    // covering set size per table
  uint64_t seed = 1;
};

struct SynthBenchmark {
  ColumnTable source;
  ColumnTable target;
  std::vector<std::pair<int32_t, int32_t>> golden_pairs;  // identity alignment
  std::vector<Transformation> golden_transformations;
  std::vector<int32_t> assignment;  // row -> golden transformation index
};

namespace detail {

// Source rows are alphanumeric over a small per-table alphabet with one
// separator character at two fixed positions, and the prefix token mirrored
// into the tail. The fixed structure is what lets one transformation apply to
// every row: segment boundaries and span offsets are row-independent.
struct SynthLayout {
  std::u32string alphabet;
  char32_t sep = U',';
  int32_t p1 = 0;  // separator positions, constant across rows
  int32_t p2 = 0;
  int32_t mirror_len = 0;
};

constexpr int32_t kSynthAlphabetSize = 5;
constexpr std::u32string_view kSynthSeparators = U",;|/:";
constexpr std::u32string_view kSynthLiteralPool = U" .#%@&*+=_~-";

inline SynthLayout make_layout(const SynthParams& p, std::mt19937_64& rng) {
  SynthLayout layout;
  std::u32string full = U"abcdefghijklmnopqrstuvwxyz0123456789";
  for (int32_t i = 0; i < kSynthAlphabetSize; ++i) {
    std::uniform_int_distribution<size_t> pick(i, full.size() - 1);
    std::swap(full[i], full[pick(rng)]);
  }
  layout.alphabet = full.substr(0, kSynthAlphabetSize);
  layout.sep = kSynthSeparators[std::uniform_int_distribution<size_t>(
      0, kSynthSeparators.size() - 1)(rng)];
  layout.p1 = p.len_lo * 3 / 10;
  const int32_t seg2 = p.len_lo * 3 / 10;
  layout.p2 = layout.p1 + 1 + seg2;
  layout.mirror_len = layout.p1;
  return layout;
}

inline std::u32string make_source_row(const SynthParams& p, const SynthLayout& lay,
                                      std::mt19937_64& rng) {
  std::uniform_int_distribution<int32_t> len_dist(p.len_lo, p.len_hi);
  std::uniform_int_distribution<size_t> ch(0, lay.alphabet.size() - 1);
  const int32_t len = len_dist(rng);
  std::u32string row(len, U' ');
  for (auto& c : row) c = lay.alphabet[ch(rng)];
  row[lay.p1] = lay.sep;
  row[lay.p2] = lay.sep;
  for (int32_t i = 0; i < lay.mirror_len && lay.p2 + 1 + i < len; ++i)
    row[lay.p2 + 1 + i] = row[i];
  return row;
}

inline Unit draw_placeholder_unit(const SynthParams& p, const SynthLayout& lay,
                                  std::mt19937_64& rng) {
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    return Unit(Split{lay.sep, std::uniform_int_distribution<int32_t>(1, 3)(rng)});
  }
  const int32_t start = std::uniform_int_distribution<int32_t>(0, p.len_lo - 5)(rng);
  const int32_t max_len = std::min<int32_t>(9, p.len_lo - start);
  const int32_t len = std::uniform_int_distribution<int32_t>(4, max_len)(rng);
  return Unit(Substr{start, start + len});
}

inline Unit draw_literal_unit(const SynthParams& p, const SynthLayout& lay, std::mt19937_64& rng) {
  std::u32string pool;
  for (char32_t c : kSynthLiteralPool)
    if (c != lay.sep) pool.push_back(c);
  const int32_t len =
      std::uniform_int_distribution<int32_t>(p.literal_len_lo, p.literal_len_hi)(rng);
  std::u32string text(len, U' ');
  std::uniform_int_distribution<size_t> ch(0, pool.size() - 1);
  for (auto& c : text) c = pool[ch(rng)];
  return Unit(Literal{std::move(text)});
}

// p placeholder units interleaved with l in {1,2} literal blocks; every gap
// between placeholders holds a literal so blocks stay cleanly separated.
inline Transformation draw_transformation(const SynthParams& p, const SynthLayout& lay,
                                          std::mt19937_64& rng) {
  const int32_t gaps = std::max(0, p.placeholders - 1);
  int32_t literals = std::uniform_int_distribution<int32_t>(1, 2)(rng);
  literals = std::max(literals, gaps);

  std::vector<Unit> units;
  int32_t extra = literals - gaps;  // literals beyond the forced gap fills
  bool lead = extra > 0 && std::uniform_int_distribution<int>(0, 1)(rng) == 0;
  if (lead) {
    units.push_back(draw_literal_unit(p, lay, rng));
    --extra;
  }
  for (int32_t i = 0; i < p.placeholders; ++i) {
    if (i > 0) units.push_back(draw_literal_unit(p, lay, rng));
    units.push_back(draw_placeholder_unit(p, lay, rng));
  }
  while (extra-- > 0) units.push_back(draw_literal_unit(p, lay, rng));
  return Transformation(std::move(units));
}

}  // namespace detail

/// Generates a joinable table pair: random structured source rows, a fixed set
/// of transformations valid on every row, and targets produced by applying a
/// uniformly chosen transformation per row. Golden pairs are the identity
/// alignment. Deterministic for a given seed. Drawn transformation sets are
/// rejected and redrawn until all members apply to every row and no two
/// members agree on any row.
inline SynthBenchmark generate_benchmark(const SynthParams& params) {
  if (params.rows < 1 || params.len_lo < 16 || params.len_hi < params.len_lo ||
      params.placeholders < 1 || params.transformations < 1)
    throw std::invalid_argument("generate_benchmark: invalid parameters");

  std::mt19937_64 rng(params.seed);
  const detail::SynthLayout layout = detail::make_layout(params, rng);

  std::vector<std::u32string> sources;
  sources.reserve(params.rows);
  for (int32_t i = 0; i < params.rows; ++i)
    sources.push_back(detail::make_source_row(params, layout, rng));

  std::vector<Transformation> golden;
  for (int attempt = 0; attempt < 1000 && golden.empty(); ++attempt) {
    std::vector<Transformation> draw;
    for (int32_t i = 0; i < params.transformations; ++i)
      draw.push_back(detail::draw_transformation(params, layout, rng));

    bool ok = true;
    for (size_t i = 0; ok && i < draw.size(); ++i)
      for (size_t j = i + 1; ok && j < draw.size(); ++j)
        if (draw[i] == draw[j]) ok = false;
    for (const auto& src : sources) {
      if (!ok) break;
      std::vector<std::u32string> outs;
      for (const auto& t : draw) {
        ApplyOutcome r = apply_transformation(t, src);
        if (!r.ok()) {
          ok = false;
          break;
        }
        outs.push_back(std::move(r.text));
      }
      for (size_t i = 0; ok && i < outs.size(); ++i)
        for (size_t j = i + 1; ok && j < outs.size(); ++j)
          if (outs[i] == outs[j]) ok = false;
    }
    if (ok) golden = std::move(draw);
  }
  if (golden.empty())
    throw std::runtime_error("generate_benchmark: could not draw a valid transformation set");

  SynthBenchmark bench;
  std::uniform_int_distribution<size_t> pick(0, golden.size() - 1);
  std::vector<std::u32string> targets;
  targets.reserve(sources.size());
  bench.assignment.reserve(sources.size());
  for (const auto& src : sources) {
    const size_t k = pick(rng);
    bench.assignment.push_back(static_cast<int32_t>(k));
    ApplyOutcome r = apply_transformation(golden[k], src);
    targets.push_back(std::move(r.text));
  }

  bench.source = ColumnTable::from_texts(std::move(sources));
  bench.target = ColumnTable::from_texts(std::move(targets));
  for (int32_t i = 0; i < params.rows; ++i) bench.golden_pairs.emplace_back(i, i);
  bench.golden_transformations = std::move(golden);
  return bench;
}

/// Golden pairs as a CandidatePair list over the generated tables.
inline PairList golden_pair_list(const SynthBenchmark& bench) {
  PairList pairs;
  pairs.reserve(bench.golden_pairs.size());
  for (auto [s, t] : bench.golden_pairs) {
    pairs.push_back(CandidatePair{s, t, bench.source.rows()[s].text, bench.target.rows()[t].text});
  }
  canonicalize(pairs);
  return pairs;
}

}  // namespace tjoin

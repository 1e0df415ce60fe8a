#pragma once

#include <random>

#include "tjoin/coverage.hpp"

// Shared test utilities: random generators and a pruning-free reference
// evaluator kept independent of the pipeline under test.

namespace tjoin::testing {

inline std::u32string u32(const char* utf8) { return decode_utf8(utf8); }

inline std::u32string random_text(std::mt19937_64& rng, size_t min_len, size_t max_len,
                                  std::u32string_view alphabet) {
  std::uniform_int_distribution<size_t> len_dist(min_len, max_len);
  std::uniform_int_distribution<size_t> ch(0, alphabet.size() - 1);
  std::u32string out(len_dist(rng), U' ');
  for (auto& c : out) c = alphabet[ch(rng)];
  return out;
}

inline Unit random_unit(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<int32_t> small(0, 30);
  std::uniform_int_distribution<uint32_t> ch(1, 0x2FFF);
  auto scalar = [&] {
    uint32_t c = ch(rng);
    if (c >= 0xD800 && c <= 0xDFFF) c = 0x40;
    return static_cast<char32_t>(c);
  };
  switch (kind(rng)) {
    case 0: {
      int32_t s = small(rng);
      return Unit(Substr{s, s + 1 + small(rng)});
    }
    case 1:
      return Unit(Split{scalar(), 1 + small(rng)});
    case 2: {
      int32_t s = small(rng);
      return Unit(SplitSubstr{scalar(), 1 + small(rng), s, s + 1 + small(rng)});
    }
    case 3: {
      char32_t c1 = scalar();
      char32_t c2 = scalar();
      if (c1 == c2) c2 = c1 == U'a' ? U'b' : U'a';
      int32_t s = small(rng);
      return Unit(TwoCharSplitSubstr{c1, c2, 1 + small(rng), s, s + 1 + small(rng)});
    }
    default: {
      std::u32string text(1 + small(rng) % 6, U' ');
      for (auto& c : text) c = scalar();
      return Unit(Literal{std::move(text)});
    }
  }
}

inline Transformation random_transformation(std::mt19937_64& rng, size_t max_units = 5) {
  std::uniform_int_distribution<size_t> n(1, max_units);
  std::vector<Unit> units;
  const size_t count = n(rng);
  for (size_t i = 0; i < count; ++i) units.push_back(random_unit(rng));
  return Transformation(std::move(units));
}

/// Coverage computed the obvious way: apply everything to everything.
inline std::vector<std::vector<int32_t>> reference_coverage(const CandidatePool& pool,
                                                            const PairList& pairs) {
  std::vector<std::vector<int32_t>> covered(pool.size());
  for (size_t ti = 0; ti < pool.size(); ++ti) {
    for (size_t pi = 0; pi < pairs.size(); ++pi) {
      if (covers(pool.items()[ti], pairs[pi])) covered[ti].push_back(static_cast<int32_t>(pi));
    }
  }
  return covered;
}

inline PairList make_pairs(const std::vector<std::pair<const char*, const char*>>& rows) {
  PairList out;
  for (size_t i = 0; i < rows.size(); ++i) {
    out.push_back(CandidatePair{static_cast<int32_t>(i), static_cast<int32_t>(i),
                                u32(rows[i].first), u32(rows[i].second)});
  }
  return out;
}

}  // namespace tjoin::testing

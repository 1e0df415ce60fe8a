#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tjoin {

// All row text is handled as sequences of Unicode scalar values; positions and
// lengths in the whole library count scalars, never bytes.

struct EncodingError : std::runtime_error {
  size_t byte_offset;
  explicit EncodingError(size_t off)
      : std::runtime_error("invalid UTF-8 at byte " + std::to_string(off)), byte_offset(off) {}
};

inline std::u32string decode_utf8(std::string_view in) {
  std::u32string out;
  out.reserve(in.size());
  size_t i = 0;
  while (i < in.size()) {
    const auto b0 = static_cast<unsigned char>(in[i]);
    uint32_t cp = 0;
    size_t n = 0;
    if (b0 < 0x80) {
      cp = b0;
      n = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      n = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      n = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      n = 4;
    } else {
      throw EncodingError(i);
    }
    if (i + n > in.size()) throw EncodingError(i);
    for (size_t k = 1; k < n; ++k) {
      const auto b = static_cast<unsigned char>(in[i + k]);
      if ((b & 0xC0) != 0x80) throw EncodingError(i + k);
      cp = (cp << 6) | (b & 0x3F);
    }
    // reject overlong forms, surrogates and out-of-range values
    static constexpr uint32_t min_for_len[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (n > 1 && cp < min_for_len[n]) throw EncodingError(i);
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) throw EncodingError(i);
    out.push_back(static_cast<char32_t>(cp));
    i += n;
  }
  return out;
}

inline void append_utf8(std::string& out, char32_t c) {
  const uint32_t cp = static_cast<uint32_t>(c);
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::string encode_utf8(std::u32string_view in) {
  std::string out;
  out.reserve(in.size());
  for (char32_t c : in) append_utf8(out, c);
  return out;
}

// Simple case folding over the scripts this tool is expected to meet:
// ASCII, Latin-1, Greek and basic Cyrillic. Anything else is left as is.
inline char32_t fold_scalar(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;  // Latin-1 À..Þ
  if (c == 0x178) return 0xFF;                             // Ÿ
  if (c == 0x130) return U'i';                             // İ
  if (c >= 0x391 && c <= 0x3A9 && c != 0x3A2) return c + 32;  // Greek Α..Ω
  if (c == 0x3C2) return 0x3C3;                               // final sigma
  if (c >= 0x410 && c <= 0x42F) return c + 32;  // Cyrillic А..Я
  if (c >= 0x400 && c <= 0x40F) return c + 80;  // Cyrillic Ѐ..Џ
  return c;
}

inline std::u32string fold_lower(std::u32string_view in) {
  std::u32string out(in);
  for (auto& c : out) c = fold_scalar(c);
  return out;
}

inline bool is_ascii_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' || c == U'\v';
}

inline bool is_ascii_punct(char32_t c) {
  return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) || (c >= 0x5B && c <= 0x60) ||
         (c >= 0x7B && c <= 0x7E);
}

// Common token separators: whitespace plus ASCII punctuation.
inline bool is_default_separator(char32_t c) { return is_ascii_space(c) || is_ascii_punct(c); }

// Splits keeping empty segments: "a,,b" on ',' has three segments. A string
// without the delimiter is a single segment equal to the whole input.
template <typename Pred>
std::vector<std::u32string> split_segments(const std::u32string& s, Pred is_delim) {
  std::vector<std::u32string> segs;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (is_delim(s[i])) {
      segs.emplace_back(s, start, i - start);
      start = i + 1;
    }
  }
  segs.emplace_back(s, start, s.size() - start);
  return segs;
}

inline std::vector<std::u32string> split_on(const std::u32string& s, char32_t c) {
  return split_segments(s, [c](char32_t x) { return x == c; });
}

// Bounds of the 1-based i-th segment without materializing the split.
// Returns false when fewer than i segments exist.
template <typename Pred>
bool nth_segment(const std::u32string& s, Pred is_delim, int32_t index, size_t& seg_start,
                 size_t& seg_end) {
  int32_t seen = 1;
  size_t start = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (is_delim(s[i])) {
      if (seen == index) {
        seg_start = start;
        seg_end = i;
        return true;
      }
      ++seen;
      start = i + 1;
    }
  }
  if (seen == index) {
    seg_start = start;
    seg_end = s.size();
    return true;
  }
  return false;
}

struct Fnv1a {
  uint64_t state = 1469598103934665603ull;
  void byte(uint8_t b) {
    state ^= b;
    state *= 1099511628211ull;
  }
  void u32(uint32_t v) {
    byte(static_cast<uint8_t>(v));
    byte(static_cast<uint8_t>(v >> 8));
    byte(static_cast<uint8_t>(v >> 16));
    byte(static_cast<uint8_t>(v >> 24));
  }
  void u64(uint64_t v) {
    u32(static_cast<uint32_t>(v));
    u32(static_cast<uint32_t>(v >> 32));
  }
  void text(std::u32string_view s) {
    u32(static_cast<uint32_t>(s.size()));
    for (char32_t c : s) u32(static_cast<uint32_t>(c));
  }
};

}  // namespace tjoin

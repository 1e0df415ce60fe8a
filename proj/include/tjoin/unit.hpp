#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "text.hpp"

namespace tjoin {

/// Outcome of applying a unit or a transformation. A failure records why and
/// which unit in the sequence failed (0 for a single unit).
enum class ApplyError : uint8_t { none, index_out_of_range, segment_index_out_of_range };

struct ApplyOutcome {
  std::u32string text;
  ApplyError error = ApplyError::none;
  int32_t failed_unit = -1;

  bool ok() const { return error == ApplyError::none; }

  static ApplyOutcome success(std::u32string t) { return {std::move(t), ApplyError::none, -1}; }
  static ApplyOutcome failure(ApplyError e, int32_t at = 0) { return {{}, e, at}; }
};

// Substring parameters are 0-based half-open [start,end); segment indices are
// 1-based. All positions count Unicode scalars.

struct Substr {
  int32_t start = 0;
  int32_t end = 0;
  bool operator==(const Substr&) const = default;
};

struct Split {
  char32_t delim = 0;
  int32_t index = 1;
  bool operator==(const Split&) const = default;
};

struct SplitSubstr {
  char32_t delim = 0;
  int32_t index = 1;
  int32_t start = 0;
  int32_t end = 0;
  bool operator==(const SplitSubstr&) const = default;
};

struct TwoCharSplitSubstr {
  char32_t delim1 = 0;
  char32_t delim2 = 0;
  int32_t index = 1;
  int32_t start = 0;
  int32_t end = 0;
  bool operator==(const TwoCharSplitSubstr&) const = default;
};

struct Literal {
  std::u32string text;
  bool operator==(const Literal&) const = default;
};

enum class UnitKind : uint8_t { substr, split, split_substr, two_char_split_substr, literal };

inline const char* kind_name(UnitKind k) {
  switch (k) {
    case UnitKind::substr: return "substr";
    case UnitKind::split: return "split";
    case UnitKind::split_substr: return "splitsubstr";
    case UnitKind::two_char_split_substr: return "twocharsplitsubstr";
    case UnitKind::literal: return "literal";
  }
  return "?";
}

/// Which unit kinds participate in candidate generation. TwoCharSplitSubstr is
/// off by default; it rarely pays for its cost on typical data.
struct UnitKindSet {
  bool substr = true;
  bool split = true;
  bool split_substr = true;
  bool two_char_split_substr = false;
  bool literal = true;

  bool enabled(UnitKind k) const {
    switch (k) {
      case UnitKind::substr: return substr;
      case UnitKind::split: return split;
      case UnitKind::split_substr: return split_substr;
      case UnitKind::two_char_split_substr: return two_char_split_substr;
      case UnitKind::literal: return literal;
    }
    return false;
  }
  static UnitKindSet all() { return {true, true, true, true, true}; }
  bool operator==(const UnitKindSet&) const = default;
};

/// One parameterized transformation unit. Immutable after construction;
/// parameters are validated and a structural digest is cached.
class Unit {
 public:
  using Variant = std::variant<Substr, Split, SplitSubstr, TwoCharSplitSubstr, Literal>;

  Unit(Substr u) : v_(check(u)) { rehash(); }
  Unit(Split u) : v_(check(u)) { rehash(); }
  Unit(SplitSubstr u) : v_(check(u)) { rehash(); }
  Unit(TwoCharSplitSubstr u) : v_(check(u)) { rehash(); }
  Unit(Literal u) : v_(check(std::move(u))) { rehash(); }

  const Variant& value() const { return v_; }
  UnitKind kind() const { return static_cast<UnitKind>(v_.index()); }
  uint64_t hash() const { return hash_; }

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&v_);
  }

  bool operator==(const Unit& o) const { return hash_ == o.hash_ && v_ == o.v_; }
  bool operator!=(const Unit& o) const { return !(*this == o); }

 private:
  static Substr check(Substr u) {
    if (u.start < 0 || u.start >= u.end) throw std::invalid_argument("Substr requires 0 <= s < e");
    return u;
  }
  static Split check(Split u) {
    if (u.index < 1) throw std::invalid_argument("Split requires i >= 1");
    return u;
  }
  static SplitSubstr check(SplitSubstr u) {
    if (u.index < 1) throw std::invalid_argument("SplitSubstr requires i >= 1");
    if (u.start < 0 || u.start >= u.end)
      throw std::invalid_argument("SplitSubstr requires 0 <= s < e");
    return u;
  }
  static TwoCharSplitSubstr check(TwoCharSplitSubstr u) {
    if (u.delim1 == u.delim2)
      throw std::invalid_argument("TwoCharSplitSubstr requires distinct delimiters");
    if (u.index < 1) throw std::invalid_argument("TwoCharSplitSubstr requires i >= 1");
    if (u.start < 0 || u.start >= u.end)
      throw std::invalid_argument("TwoCharSplitSubstr requires 0 <= s < e");
    return u;
  }
  static Literal check(Literal u) {
    if (u.text.empty()) throw std::invalid_argument("Literal requires nonempty text");
    return u;
  }

  void rehash() {
    Fnv1a h;
    h.byte(static_cast<uint8_t>(v_.index()));
    std::visit(
        [&h](const auto& u) {
          using T = std::decay_t<decltype(u)>;
          if constexpr (std::is_same_v<T, Substr>) {
            h.u32(u.start);
            h.u32(u.end);
          } else if constexpr (std::is_same_v<T, Split>) {
            h.u32(u.delim);
            h.u32(u.index);
          } else if constexpr (std::is_same_v<T, SplitSubstr>) {
            h.u32(u.delim);
            h.u32(u.index);
            h.u32(u.start);
            h.u32(u.end);
          } else if constexpr (std::is_same_v<T, TwoCharSplitSubstr>) {
            h.u32(u.delim1);
            h.u32(u.delim2);
            h.u32(u.index);
            h.u32(u.start);
            h.u32(u.end);
          } else {
            h.text(u.text);
          }
        },
        v_);
    hash_ = h.state;
  }

  Variant v_;
  uint64_t hash_ = 0;
};

namespace detail {

inline ApplyOutcome substr_of(const std::u32string& s, int32_t start, int32_t end) {
  if (static_cast<size_t>(end) > s.size()) return ApplyOutcome::failure(ApplyError::index_out_of_range);
  return ApplyOutcome::success(s.substr(start, end - start));
}

template <typename Pred>
ApplyOutcome split_then_substr(const std::u32string& s, Pred is_delim, int32_t index,
                               bool take_substr, int32_t start, int32_t end) {
  size_t a = 0, b = 0;
  if (!nth_segment(s, is_delim, index, a, b))
    return ApplyOutcome::failure(ApplyError::segment_index_out_of_range);
  std::u32string seg = s.substr(a, b - a);
  if (!take_substr) return ApplyOutcome::success(std::move(seg));
  return substr_of(seg, start, end);
}

}  // namespace detail

/// Applies one unit to the source text. Splitting preserves empty segments,
/// and splitting on an absent delimiter yields a single segment equal to the
/// whole input.
inline ApplyOutcome apply_unit(const Unit& u, const std::u32string& src) {
  return std::visit(
      [&src](const auto& v) -> ApplyOutcome {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Substr>) {
          return detail::substr_of(src, v.start, v.end);
        } else if constexpr (std::is_same_v<T, Split>) {
          const char32_t d = v.delim;
          return detail::split_then_substr(src, [d](char32_t c) { return c == d; }, v.index, false,
                                           0, 0);
        } else if constexpr (std::is_same_v<T, SplitSubstr>) {
          const char32_t d = v.delim;
          return detail::split_then_substr(src, [d](char32_t c) { return c == d; }, v.index, true,
                                           v.start, v.end);
        } else if constexpr (std::is_same_v<T, TwoCharSplitSubstr>) {
          const char32_t d1 = v.delim1, d2 = v.delim2;
          return detail::split_then_substr(
              src, [d1, d2](char32_t c) { return c == d1 || c == d2; }, v.index, true, v.start,
              v.end);
        } else {
          return ApplyOutcome::success(v.text);
        }
      },
      u.value());
}

/// Total order over units: kind rank first (copying kinds before Literal),
/// then parameters. Used for deterministic ranking wherever ties appear.
inline int compare_units(const Unit& a, const Unit& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  auto cmp = [](auto x, auto y) { return x < y ? -1 : (x > y ? 1 : 0); };
  switch (a.kind()) {
    case UnitKind::substr: {
      const auto &x = *a.get_if<Substr>(), &y = *b.get_if<Substr>();
      if (int c = cmp(x.start, y.start)) return c;
      return cmp(x.end, y.end);
    }
    case UnitKind::split: {
      const auto &x = *a.get_if<Split>(), &y = *b.get_if<Split>();
      if (int c = cmp(x.delim, y.delim)) return c;
      return cmp(x.index, y.index);
    }
    case UnitKind::split_substr: {
      const auto &x = *a.get_if<SplitSubstr>(), &y = *b.get_if<SplitSubstr>();
      if (int c = cmp(x.delim, y.delim)) return c;
      if (int c = cmp(x.index, y.index)) return c;
      if (int c = cmp(x.start, y.start)) return c;
      return cmp(x.end, y.end);
    }
    case UnitKind::two_char_split_substr: {
      const auto &x = *a.get_if<TwoCharSplitSubstr>(), &y = *b.get_if<TwoCharSplitSubstr>();
      if (int c = cmp(x.delim1, y.delim1)) return c;
      if (int c = cmp(x.delim2, y.delim2)) return c;
      if (int c = cmp(x.index, y.index)) return c;
      if (int c = cmp(x.start, y.start)) return c;
      return cmp(x.end, y.end);
    }
    case UnitKind::literal: {
      const auto &x = *a.get_if<Literal>(), &y = *b.get_if<Literal>();
      return x.text < y.text ? -1 : (x.text > y.text ? 1 : 0);
    }
  }
  return 0;
}

}  // namespace tjoin

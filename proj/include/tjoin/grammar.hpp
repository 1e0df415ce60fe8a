#pragma once

#include <string>
#include <string_view>

#include "transformation.hpp"

namespace tjoin {

// Textual form of transformations, e.g. <SplitSubstr(' ',2,0,1), Literal(' '), Split(',',1)>.
// parse(print(t)) is the identity; printing is canonical (", " between units,
// no spaces inside a unit). Escapes inside quotes: \' \\ \n \t \u{HEX}.

struct ParseError : std::runtime_error {
  size_t position;  // scalar offset into the input
  std::string expected;
  ParseError(size_t pos, std::string what_expected)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": expected " +
                           what_expected),
        position(pos),
        expected(std::move(what_expected)) {}
};

namespace detail {

inline void print_escaped(std::string& out, char32_t c) {
  switch (c) {
    case U'\'': out += "\\'"; return;
    case U'\\': out += "\\\\"; return;
    case U'\n': out += "\\n"; return;
    case U'\t': out += "\\t"; return;
    default: break;
  }
  if (c < 0x20) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "\\u{%x}", static_cast<unsigned>(c));
    out += buf;
    return;
  }
  append_utf8(out, c);
}

inline void print_quoted(std::string& out, std::u32string_view text) {
  out += '\'';
  for (char32_t c : text) print_escaped(out, c);
  out += '\'';
}

class Parser {
 public:
  explicit Parser(std::u32string text) : in_(std::move(text)) {}

  Transformation transformation() {
    expect(U'<', "'<'");
    std::vector<Unit> units;
    units.push_back(unit());
    while (peek() == U',') {
      ++pos_;
      expect(U' ', "' '");
      units.push_back(unit());
    }
    expect(U'>', "'>'");
    if (pos_ != in_.size()) throw ParseError(pos_, "end of input");
    return Transformation(std::move(units));
  }

 private:
  char32_t peek() const { return pos_ < in_.size() ? in_[pos_] : 0; }

  void expect(char32_t c, const char* what) {
    if (pos_ >= in_.size() || in_[pos_] != c) throw ParseError(pos_, what);
    ++pos_;
  }

  bool try_keyword(std::u32string_view kw) {
    if (in_.compare(pos_, kw.size(), kw) == 0) {
      pos_ += kw.size();
      return true;
    }
    return false;
  }

  int32_t integer() {
    if (pos_ >= in_.size() || in_[pos_] < U'0' || in_[pos_] > U'9')
      throw ParseError(pos_, "integer");
    int64_t v = 0;
    while (pos_ < in_.size() && in_[pos_] >= U'0' && in_[pos_] <= U'9') {
      v = v * 10 + (in_[pos_] - U'0');
      if (v > 0x7FFFFFFF) throw ParseError(pos_, "integer in range");
      ++pos_;
    }
    return static_cast<int32_t>(v);
  }

  char32_t escaped_scalar() {
    if (pos_ >= in_.size()) throw ParseError(pos_, "character");
    char32_t c = in_[pos_];
    if (c != U'\\') {
      if (c == U'\'') throw ParseError(pos_, "character");
      ++pos_;
      return c;
    }
    ++pos_;
    if (pos_ >= in_.size()) throw ParseError(pos_, "escape");
    char32_t e = in_[pos_++];
    switch (e) {
      case U'\'': return U'\'';
      case U'\\': return U'\\';
      case U'n': return U'\n';
      case U't': return U'\t';
      case U'u': {
        expect(U'{', "'{'");
        uint32_t v = 0;
        size_t digits = 0;
        while (pos_ < in_.size() && in_[pos_] != U'}') {
          char32_t h = in_[pos_];
          uint32_t d;
          if (h >= U'0' && h <= U'9') d = h - U'0';
          else if (h >= U'a' && h <= U'f') d = 10 + (h - U'a');
          else if (h >= U'A' && h <= U'F') d = 10 + (h - U'A');
          else throw ParseError(pos_, "hex digit");
          v = v * 16 + d;
          if (v > 0x10FFFF) throw ParseError(pos_, "scalar value in range");
          ++digits;
          ++pos_;
        }
        if (digits == 0) throw ParseError(pos_, "hex digit");
        expect(U'}', "'}'");
        if (v >= 0xD800 && v <= 0xDFFF) throw ParseError(pos_, "non-surrogate scalar");
        return static_cast<char32_t>(v);
      }
      default: throw ParseError(pos_ - 1, "escape among ' \\\\ n t u{...}");
    }
  }

  char32_t quoted_char() {
    expect(U'\'', "'''");
    char32_t c = escaped_scalar();
    expect(U'\'', "'''");
    return c;
  }

  std::u32string quoted_text() {
    expect(U'\'', "'''");
    std::u32string out;
    while (pos_ < in_.size() && in_[pos_] != U'\'') out.push_back(escaped_scalar());
    expect(U'\'', "'''");
    return out;
  }

  void comma() { expect(U',', "','"); }

  Unit unit() {
    if (try_keyword(U"SplitSubstr(")) {
      char32_t c = quoted_char();
      comma();
      int32_t i = integer();
      comma();
      int32_t s = integer();
      comma();
      int32_t e = integer();
      expect(U')', "')'");
      return make(SplitSubstr{c, i, s, e});
    }
    if (try_keyword(U"Substr(")) {
      int32_t s = integer();
      comma();
      int32_t e = integer();
      expect(U')', "')'");
      return make(Substr{s, e});
    }
    if (try_keyword(U"Split(")) {
      char32_t c = quoted_char();
      comma();
      int32_t i = integer();
      expect(U')', "')'");
      return make(Split{c, i});
    }
    if (try_keyword(U"TwoCharSplitSubstr(")) {
      char32_t c1 = quoted_char();
      comma();
      char32_t c2 = quoted_char();
      comma();
      int32_t i = integer();
      comma();
      int32_t s = integer();
      comma();
      int32_t e = integer();
      expect(U')', "')'");
      return make(TwoCharSplitSubstr{c1, c2, i, s, e});
    }
    if (try_keyword(U"Literal(")) {
      std::u32string text = quoted_text();
      expect(U')', "')'");
      return make(Literal{std::move(text)});
    }
    throw ParseError(pos_, "unit name");
  }

  template <typename T>
  Unit make(T&& v) {
    try {
      return Unit(std::forward<T>(v));
    } catch (const std::invalid_argument& ex) {
      throw ParseError(pos_, std::string("valid parameters (") + ex.what() + ")");
    }
  }

  std::u32string in_;
  size_t pos_ = 0;
};

}  // namespace detail

inline std::string print_unit(const Unit& u) {
  std::string out;
  std::visit(
      [&out](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Substr>) {
          out += "Substr(" + std::to_string(v.start) + "," + std::to_string(v.end) + ")";
        } else if constexpr (std::is_same_v<T, Split>) {
          out += "Split(";
          detail::print_quoted(out, std::u32string_view(&v.delim, 1));
          out += "," + std::to_string(v.index) + ")";
        } else if constexpr (std::is_same_v<T, SplitSubstr>) {
          out += "SplitSubstr(";
          detail::print_quoted(out, std::u32string_view(&v.delim, 1));
          out += "," + std::to_string(v.index) + "," + std::to_string(v.start) + "," +
                 std::to_string(v.end) + ")";
        } else if constexpr (std::is_same_v<T, TwoCharSplitSubstr>) {
          out += "TwoCharSplitSubstr(";
          detail::print_quoted(out, std::u32string_view(&v.delim1, 1));
          out += ",";
          detail::print_quoted(out, std::u32string_view(&v.delim2, 1));
          out += "," + std::to_string(v.index) + "," + std::to_string(v.start) + "," +
                 std::to_string(v.end) + ")";
        } else {
          out += "Literal(";
          detail::print_quoted(out, v.text);
          out += ")";
        }
      },
      u.value());
  return out;
}

inline std::string print_transformation(const Transformation& t) {
  std::string out = "<";
  for (size_t i = 0; i < t.units().size(); ++i) {
    if (i) out += ", ";
    out += print_unit(t.units()[i]);
  }
  out += ">";
  return out;
}

inline Transformation parse_transformation(std::string_view utf8) {
  return detail::Parser(decode_utf8(utf8)).transformation();
}

}  // namespace tjoin

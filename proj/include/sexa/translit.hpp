#pragma once

// Modern transliteration of sexagesimal numbers: "10,12;45", "0;0,5,37,30".
//
//   number := digits | digits ';' digits | ';' digits
//   digits := digit (',' digit)*
//   digit  := 0 | [1-9][0-9]?      (value < 60)
//
// Blanks around tokens are ignored. A string without a semicolon does not
// say whether it is an integer or a floating value, so conversion always
// takes an explicit Mode.

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sexa/core.hpp"

namespace sexa {

enum class Mode { floating, absolute };

struct Transliteration {
  std::vector<Digit> digits;
  /// Number of digits written before the semicolon, if there is one.
  std::optional<std::size_t> semicolon_index;
  std::string raw;

  std::size_t integer_digits() const { return semicolon_index.value_or(digits.size()); }
};

namespace detail {

inline bool is_blank(char c) { return c == ' ' || c == '\t'; }
inline bool is_decimal(char c) { return c >= '0' && c <= '9'; }

}  // namespace detail

inline Transliteration parse(std::string_view text) {
  Transliteration out;
  out.raw = std::string(text);

  std::size_t i = 0;
  std::size_t first_digit_pos = 0;
  bool expect_digit = true;

  auto skip_blanks = [&] {
    while (i < text.size() && detail::is_blank(text[i])) ++i;
  };

  skip_blanks();
  if (i == text.size()) throw SyntaxError("empty number", i);

  for (;;) {
    skip_blanks();
    if (i == text.size()) {
      if (expect_digit) throw SyntaxError("empty component", i);
      break;
    }
    char c = text[i];
    if (expect_digit) {
      if (detail::is_decimal(c)) {
        std::size_t start = i;
        while (i < text.size() && detail::is_decimal(text[i])) ++i;
        std::string_view run = text.substr(start, i - start);
        if (run.size() > 1 && run[0] == '0') throw SyntaxError("leading zero in digit", start);
        if (run.size() > 2) throw RangeError("digit " + std::string(run) + " is not below 60", start);
        unsigned value = 0;
        for (char d : run) value = value * 10 + static_cast<unsigned>(d - '0');
        if (value >= kBase) throw RangeError("digit " + std::string(run) + " is not below 60", start);
        if (out.digits.empty()) first_digit_pos = start;
        out.digits.emplace_back(value);
        expect_digit = false;
      } else if (c == ';' && out.digits.empty() && !out.semicolon_index) {
        out.semicolon_index = 0;
        ++i;
      } else if (c == ';' && out.semicolon_index) {
        throw SyntaxError("second semicolon", i);
      } else if (c == ',' || c == ';') {
        throw SyntaxError("empty component", i);
      } else {
        throw SyntaxError(std::string("unexpected character '") + c + "'", i);
      }
    } else {
      if (c == ',') {
        expect_digit = true;
        ++i;
      } else if (c == ';') {
        if (out.semicolon_index) throw SyntaxError("second semicolon", i);
        out.semicolon_index = out.digits.size();
        expect_digit = true;
        ++i;
      } else if (detail::is_decimal(c)) {
        throw SyntaxError("missing separator", i);
      } else {
        throw SyntaxError(std::string("unexpected character '") + c + "'", i);
      }
    }
  }

  if (out.integer_digits() > 1 && out.digits.front().value() == 0) {
    throw SyntaxError("leading zero place", first_digit_pos);
  }
  return out;
}

/// The value read with the semicolon as the units boundary; no semicolon
/// means an integer.
inline SexNumber to_absolute(const Transliteration& t) {
  auto places = static_cast<std::int64_t>(t.integer_digits()) -
                static_cast<std::int64_t>(t.digits.size());
  return normalize(from_digits(t.digits), places);
}

/// The value with place ignored. All-zero digit strings are rejected.
inline FloatingSex to_floating(const Transliteration& t) {
  BigInt m = from_digits(t.digits);
  if (m == 0) throw DomainError("\"" + t.raw + "\" is zero, which has no floating form");
  return FloatingSex::from_mantissa(std::move(m));
}

inline std::variant<FloatingSex, SexNumber> to_number(const Transliteration& t, Mode mode) {
  if (mode == Mode::floating) return to_floating(t);
  return to_absolute(t);
}

namespace detail {

inline void append_digits(std::string& out, const std::vector<Digit>& digits, std::size_t from,
                          std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    if (i != from) out += ',';
    out += std::to_string(digits[i].value());
  }
}

inline void append_zeros(std::string& out, std::int64_t count) {
  if (count > kMaxAlignPlaces) throw OverflowError("too many places to write out");
  for (std::int64_t i = 0; i < count; ++i) out += ",0";
}

}  // namespace detail

/// Floating style: the mantissa digits only.
inline std::string format(const FloatingSex& x) {
  std::string out;
  auto digits = to_digits(x.mantissa());
  detail::append_digits(out, digits, 0, digits.size());
  return out;
}

/// Anchored style, as the tables print it: "10,12;45", "0;0,45", "1,0,0".
inline std::string format(const SexNumber& x) {
  if (x.is_zero()) return "0";
  auto digits = to_digits(x.mantissa());
  std::string out;
  std::int64_t e = x.exponent();
  if (e >= 0) {
    detail::append_digits(out, digits, 0, digits.size());
    detail::append_zeros(out, e);
    return out;
  }
  std::uint64_t fraction = static_cast<std::uint64_t>(-(e + 1)) + 1;
  if (digits.size() > fraction) {
    std::size_t split = digits.size() - fraction;
    detail::append_digits(out, digits, 0, split);
    out += ';';
    detail::append_digits(out, digits, split, digits.size());
    return out;
  }
  // Every place between the semicolon and the leading digit is written as 0.
  std::uint64_t padding = fraction - digits.size();
  if (padding > static_cast<std::uint64_t>(kMaxAlignPlaces)) {
    throw OverflowError("too many places to write out");
  }
  out = "0;";
  for (std::uint64_t i = 0; i < padding; ++i) out += "0,";
  detail::append_digits(out, digits, 0, digits.size());
  return out;
}

inline std::string format(const SexNumber& x, Mode style) {
  return style == Mode::absolute ? format(x) : format(to_floating(x));
}

}  // namespace sexa

#pragma once

// Exact sexagesimal values.
//
// A SexNumber is the rational mantissa * 60^exponent, kept canonical: the
// mantissa is never divisible by 60, and zero is always (0, 0). A FloatingSex
// is the same thing with the exponent thrown away, which is how the tablets
// write numbers: "15" may mean 15, 0;15 or 15,0 depending on context.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sexa/errors.hpp"

namespace sexa {

inline constexpr unsigned kBase = 60;

/// Largest number of base-60 places add() will shift one operand to line
/// it up with the other. Sums that would need more throw OverflowError.
inline constexpr std::int64_t kMaxAlignPlaces = 1 << 16;

class Digit {
 public:
  constexpr Digit() = default;
  constexpr explicit Digit(unsigned value) : value_(static_cast<std::uint8_t>(value)) {
    if (value >= kBase) throw DomainError("digit out of range: " + std::to_string(value));
  }

  constexpr unsigned value() const noexcept { return value_; }

  friend constexpr bool operator==(Digit, Digit) = default;

 private:
  std::uint8_t value_ = 0;
};

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("exponent overflow");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("exponent overflow");
  return out;
}

inline BigInt pow60(std::uint64_t places) {
  return boost::multiprecision::pow(BigInt(kBase), static_cast<unsigned>(places));
}

// Divides out every factor of 60 and returns how many there were.
inline std::int64_t strip60(BigInt& m) {
  std::int64_t stripped = 0;
  if (m == 0) return 0;
  BigInt q, r;
  for (;;) {
    boost::multiprecision::divide_qr(m, BigInt(kBase), q, r);
    if (r != 0) break;
    m.swap(q);
    ++stripped;
  }
  return stripped;
}

inline std::int64_t digit_count(BigInt m) {
  std::int64_t n = 1;
  while (m >= kBase) {
    m /= kBase;
    ++n;
  }
  return n;
}

inline void require_non_negative(const BigInt& m) {
  if (m < 0) throw DomainError("negative mantissa " + m.str() + " is outside the domain");
}

}  // namespace detail

/// Base-60 digits of m, most significant first. Zero is the single digit 0.
inline std::vector<Digit> to_digits(BigInt m) {
  detail::require_non_negative(m);
  std::vector<Digit> out;
  BigInt q, r;
  do {
    boost::multiprecision::divide_qr(m, BigInt(kBase), q, r);
    out.emplace_back(r.convert_to<unsigned>());
    m.swap(q);
  } while (m != 0);
  return {out.rbegin(), out.rend()};
}

inline BigInt from_digits(std::span<const Digit> digits) {
  BigInt m = 0;
  for (Digit d : digits) m = m * kBase + d.value();
  return m;
}

class SexNumber;
SexNumber normalize(BigInt mantissa, std::int64_t exponent);

class SexNumber {
 public:
  /// Zero.
  SexNumber() = default;

  /// The integer n, normalized.
  static SexNumber integer(BigInt n) { return normalize(std::move(n), 0); }

  const BigInt& mantissa() const noexcept { return mantissa_; }
  std::int64_t exponent() const noexcept { return exponent_; }
  bool is_zero() const noexcept { return mantissa_ == 0; }

  friend bool operator==(const SexNumber&, const SexNumber&) = default;

 private:
  friend SexNumber normalize(BigInt mantissa, std::int64_t exponent);

  SexNumber(BigInt mantissa, std::int64_t exponent)
      : mantissa_(std::move(mantissa)), exponent_(exponent) {}

  BigInt mantissa_ = 0;
  std::int64_t exponent_ = 0;
};

/// The canonical SexNumber equal to mantissa * 60^exponent.
inline SexNumber normalize(BigInt mantissa, std::int64_t exponent) {
  detail::require_non_negative(mantissa);
  if (mantissa == 0) return SexNumber{};
  std::int64_t stripped = detail::strip60(mantissa);
  return SexNumber(std::move(mantissa), detail::checked_add(exponent, stripped));
}

inline SexNumber add(const SexNumber& a, const SexNumber& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const SexNumber& lo = a.exponent() <= b.exponent() ? a : b;
  const SexNumber& hi = a.exponent() <= b.exponent() ? b : a;
  std::int64_t shift = detail::checked_sub(hi.exponent(), lo.exponent());
  if (shift > kMaxAlignPlaces) {
    throw OverflowError("exact sum needs " + std::to_string(shift) + " places");
  }
  return normalize(lo.mantissa() + hi.mantissa() * detail::pow60(shift), lo.exponent());
}

/// "Carry the multiplicand multiplier times." The value does not depend on
/// the order; the parameter order follows the scribal phrasing.
inline SexNumber multiply(const SexNumber& multiplicand, const SexNumber& multiplier) {
  if (multiplicand.is_zero() || multiplier.is_zero()) return SexNumber{};
  return normalize(multiplicand.mantissa() * multiplier.mantissa(),
                   detail::checked_add(multiplicand.exponent(), multiplier.exponent()));
}

inline SexNumber doubled(const SexNumber& a) {
  return normalize(a.mantissa() * 2, a.exponent());
}

/// a * 0;30. Always exact since 2 divides 60.
inline SexNumber halved(const SexNumber& a) {
  if (a.is_zero()) return a;
  return normalize(a.mantissa() * 30, detail::checked_sub(a.exponent(), 1));
}

inline std::strong_ordering compare(const SexNumber& a, const SexNumber& b) {
  if (a.is_zero() || b.is_zero()) return !a.is_zero() <=> !b.is_zero();
  // Position just above the leading digit; a larger one means a larger value.
  std::int64_t top_a = detail::checked_add(detail::digit_count(a.mantissa()), a.exponent());
  std::int64_t top_b = detail::checked_add(detail::digit_count(b.mantissa()), b.exponent());
  if (top_a != top_b) return top_a <=> top_b;
  // Same leading position, so the exponent gap is bounded by the digit counts.
  std::int64_t lo = std::min(a.exponent(), b.exponent());
  BigInt ma = a.mantissa() * detail::pow60(a.exponent() - lo);
  BigInt mb = b.mantissa() * detail::pow60(b.exponent() - lo);
  int c = ma.compare(mb);
  return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

inline std::strong_ordering operator<=>(const SexNumber& a, const SexNumber& b) {
  return compare(a, b);
}

inline SexNumber operator+(const SexNumber& a, const SexNumber& b) { return add(a, b); }
inline SexNumber operator*(const SexNumber& a, const SexNumber& b) { return multiply(a, b); }

/// A nonzero value up to powers of 60. Equality is mantissa equality.
class FloatingSex {
 public:
  /// Strips factors of 60; rejects zero and negatives.
  static FloatingSex from_mantissa(BigInt m) {
    detail::require_non_negative(m);
    if (m == 0) throw DomainError("zero has no floating form");
    detail::strip60(m);
    return FloatingSex(std::move(m));
  }

  const BigInt& mantissa() const noexcept { return mantissa_; }

  friend bool operator==(const FloatingSex&, const FloatingSex&) = default;

 private:
  explicit FloatingSex(BigInt m) : mantissa_(std::move(m)) {}

  BigInt mantissa_;
};

inline FloatingSex operator*(const FloatingSex& a, const FloatingSex& b) {
  return FloatingSex::from_mantissa(a.mantissa() * b.mantissa());
}

inline FloatingSex to_floating(const SexNumber& a) {
  if (a.is_zero()) throw DomainError("zero has no floating form");
  return FloatingSex::from_mantissa(a.mantissa());
}

/// The SexNumber f * 60^exponent.
inline SexNumber anchor(const FloatingSex& f, std::int64_t exponent) {
  return normalize(f.mantissa(), exponent);
}

}  // namespace sexa

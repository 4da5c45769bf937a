#pragma once

// Regular (60-smooth) numbers, their reciprocals, and exact division.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "sexa/core.hpp"

namespace sexa {

/// n = 2^twos * 3^threes * 5^fives * residue, with residue coprime to 30.
struct Factorization235 {
  std::uint64_t twos = 0;
  std::uint64_t threes = 0;
  std::uint64_t fives = 0;
  BigInt residue = 1;

  bool regular() const { return residue == 1; }

  friend bool operator==(const Factorization235&, const Factorization235&) = default;
};

namespace detail {

inline std::uint64_t strip_factor(BigInt& n, unsigned p) {
  std::uint64_t count = 0;
  BigInt q, r;
  for (;;) {
    boost::multiprecision::divide_qr(n, BigInt(p), q, r);
    if (r != 0) return count;
    n.swap(q);
    ++count;
  }
}

}  // namespace detail

inline Factorization235 factor235(BigInt n) {
  if (n <= 0) throw DomainError("factor235 needs a positive integer, got " + n.str());
  Factorization235 f;
  f.twos = detail::strip_factor(n, 2);
  f.threes = detail::strip_factor(n, 3);
  f.fives = detail::strip_factor(n, 5);
  f.residue = std::move(n);
  return f;
}

inline bool is_regular(const FloatingSex& x) { return factor235(x.mantissa()).regular(); }

/// Smallest k with n | 60^k, for regular n.
inline std::uint64_t reciprocal_places(const Factorization235& f) {
  return std::max({(f.twos + 1) / 2, f.threes, f.fives});
}

/// igi of x: the floating number whose product with x is a power of 60.
inline FloatingSex reciprocal(const FloatingSex& x) {
  Factorization235 f = factor235(x.mantissa());
  if (!f.regular()) throw IrregularError(x.mantissa(), f.residue);
  return FloatingSex::from_mantissa(detail::pow60(reciprocal_places(f)) / x.mantissa());
}

/// The exact value 1/a.
inline SexNumber reciprocal(const SexNumber& a) {
  if (a.is_zero()) throw DomainError("zero has no reciprocal");
  Factorization235 f = factor235(a.mantissa());
  if (!f.regular()) throw IrregularError(a.mantissa(), f.residue);
  std::uint64_t k = reciprocal_places(f);
  // 1 / (m * 60^e) = (60^k / m) * 60^(-k - e)
  return normalize(detail::pow60(k) / a.mantissa(),
                   detail::checked_sub(-static_cast<std::int64_t>(k), a.exponent()));
}

/// x with multiply(x, a) == b. A regular divisor goes through its
/// reciprocal; otherwise the exact fraction b/a is reduced and accepted when
/// what is left of the denominator is regular.
inline SexNumber solve_linear(const SexNumber& a, const SexNumber& b) {
  if (a.is_zero()) throw DomainError("cannot divide by zero");
  if (factor235(a.mantissa()).regular()) return multiply(b, reciprocal(a));
  if (b.is_zero()) return b;

  BigInt g = boost::multiprecision::gcd(b.mantissa(), a.mantissa());
  BigInt num = b.mantissa() / g;
  BigInt den = a.mantissa() / g;
  std::int64_t exponent = detail::checked_sub(b.exponent(), a.exponent());

  Factorization235 f = factor235(den);
  if (!f.regular()) throw NoFiniteSolution(f.residue);
  std::uint64_t k = reciprocal_places(f);
  return normalize(num * (detail::pow60(k) / den),
                   detail::checked_sub(exponent, static_cast<std::int64_t>(k)));
}

/// A regular value with its reciprocal.
struct ReciprocalPair {
  FloatingSex value;
  FloatingSex igi;

  friend bool operator==(const ReciprocalPair&, const ReciprocalPair&) = default;
};

inline ReciprocalPair reciprocal_pair(const FloatingSex& value) { return {value, reciprocal(value)}; }

/// Prime factors of n by trial division, ascending with multiplicity. Stops
/// once the divisor passes `bound`; the unfactored cofactor is then appended
/// as is. Used to explain irregularity in diagnostics.
inline std::vector<BigInt> small_prime_factors(BigInt n, std::uint64_t bound = 1'000'000) {
  std::vector<BigInt> out;
  if (n <= 1) return out;
  for (std::uint64_t p = 2; p <= bound && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      out.emplace_back(p);
      n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace sexa

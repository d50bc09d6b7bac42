#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer from_int128(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  Integer r = (hi << 64) + lo;
  return negative ? Integer(-r) : r;
}

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
inline Integer binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Sign (-1)^k as an int.
constexpr int alternating_sign(long k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace toric

// Exact rational scalars. GMP's mpq_class keeps values in lowest terms with
// positive denominator, which is exactly the canonical form every equality
// test in this library relies on.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hochlef {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) {
  return q.get_str();  // "p" or "p/q", canonical
}

// Accepts "p", "p/q", optional leading +/-.
inline Rational rat_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline Rational rat_pow(const Rational& base, long exp) {
  if (exp < 0) {
    if (is_zero(base)) throw std::domain_error("0^negative");
    return rat_pow(Rational(1) / base, -exp);
  }
  Rational acc = 1;
  Rational b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

// Falling factorial e(e-1)...(e-k+1); exact, valid for negative e as well.
inline mpz_class falling_factorial(long e, long k) {
  mpz_class acc = 1;
  for (long t = 0; t < k; ++t) acc *= mpz_class(e - t);
  return acc;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// FNV-1a over the canonical decimal form; stable across runs, used only for
// report fingerprints.
inline std::uint64_t stable_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace hochlef

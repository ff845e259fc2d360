#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace fitkernel {

using BigInt = mpz_class;
using Rational = mpq_class;

// Discrete valuation value; std::nullopt encodes +infinity (valuation of 0).
using Valuation = std::optional<long>;

Valuation p_valuation(const BigInt& n, unsigned long p);
Valuation p_valuation(const Rational& q, unsigned long p);

// True when the denominator of q is prime to p.
bool is_p_integral(const Rational& q, unsigned long p);

bool is_prime(unsigned long n);
BigInt ipow(unsigned long base, unsigned long exp);

// p^k for any integer k, as a rational.
Rational prime_power(unsigned long p, long k);

// n with every factor p removed; n must be nonzero.
BigInt p_free_part(const BigInt& n, unsigned long p);

// Canonical representative of q modulo p^k Z_(p): either 0 or t * p^(k-j)
// with 0 < t < p^j. Used to reduce entries above HNF pivots.
Rational reduce_mod_prime_power(const Rational& q, unsigned long p, long k);

// Parses "a", "-a" or "a/b". Throws SchemaError on malformed input or b == 0.
Rational parse_rational(std::string_view text);

// Canonical text form: "a" for integers, "a/b" otherwise.
std::string format_rational(const Rational& q);

// n / d in lowest terms; d must be nonzero.
inline Rational make_rational(const BigInt& n, const BigInt& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Valuation min_valuation(Valuation a, Valuation b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

inline Valuation add_valuation(Valuation a, Valuation b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

}  // namespace fitkernel

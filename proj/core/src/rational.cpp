#include "fitkernel/rational.hpp"

#include <cctype>

#include "fitkernel/error.hpp"

namespace fitkernel {

Valuation p_valuation(const BigInt& n, unsigned long p) {
  if (sgn(n) == 0) return std::nullopt;
  BigInt m = abs(n);
  long v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    ++v;
  }
  return v;
}

Valuation p_valuation(const Rational& q, unsigned long p) {
  if (sgn(q) == 0) return std::nullopt;
  return *p_valuation(BigInt(q.get_num()), p) - *p_valuation(BigInt(q.get_den()), p);
}

bool is_p_integral(const Rational& q, unsigned long p) {
  return !mpz_divisible_ui_p(q.get_den_mpz_t(), p);
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

BigInt ipow(unsigned long base, unsigned long exp) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

Rational prime_power(unsigned long p, long k) {
  if (k >= 0) return Rational(ipow(p, static_cast<unsigned long>(k)));
  Rational r(BigInt(1), ipow(p, static_cast<unsigned long>(-k)));
  return r;
}

BigInt p_free_part(const BigInt& n, unsigned long p) {
  BigInt m = n;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p)) mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
  return m;
}

Rational reduce_mod_prime_power(const Rational& q, unsigned long p, long k) {
  if (sgn(q) == 0) return q;
  // s = q / p^k; only the part of s with p in the denominator survives.
  Rational s = q / prime_power(p, k);
  const long j = *p_valuation(BigInt(s.get_den()), p);
  if (j == 0) return Rational(0);
  const BigInt pj = ipow(p, static_cast<unsigned long>(j));
  BigInt d = BigInt(s.get_den()) / pj;  // prime to p
  BigInt dinv;
  mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pj.get_mpz_t());
  BigInt t = BigInt(s.get_num()) * dinv;
  mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pj.get_mpz_t());
  Rational rep(t, pj);
  rep.canonicalize();
  return rep * prime_power(p, k);
}

Rational parse_rational(std::string_view text) {
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw SchemaError("malformed rational: \"" + std::string(text) + "\"");
  if (num.front() == '+') num.remove_prefix(1);
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (sgn(d) == 0) throw SchemaError("zero denominator: \"" + std::string(text) + "\"");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace fitkernel

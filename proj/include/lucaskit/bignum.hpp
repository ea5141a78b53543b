#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace lucaskit {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Smallest prime strictly greater than n.
inline BigInt next_prime_above(const BigInt& n) {
  BigInt r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// Canonical representative of v in [0, m), also for negative v.
inline std::uint64_t big_mod_u64(const BigInt& v, std::uint64_t m) {
  return mpz_fdiv_ui(v.get_mpz_t(), m);
}

/// a ≡ b (mod m)?
inline bool congruent(const BigInt& a, const BigInt& b, const BigInt& m) {
  return mpz_congruent_p(a.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t()) != 0;
}

}  // namespace lucaskit

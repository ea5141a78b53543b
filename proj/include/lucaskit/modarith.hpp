#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

#include "lucaskit/bignum.hpp"

namespace lucaskit::modarith {

/// Thrown when a value used as a modulus fails the primality check.
struct not_prime_error : std::invalid_argument {
  explicit not_prime_error(std::uint64_t n);
};

/// Deterministic Miller-Rabin over the fixed witness set that is exact for
/// the whole 64-bit range.
bool is_prime(std::uint64_t n) noexcept;

/// A modulus that has passed the primality check at construction.
class PrimeModulus {
 public:
  explicit PrimeModulus(std::uint64_t p);
  std::uint64_t value() const noexcept { return p_; }
  bool odd() const noexcept { return p_ != 2; }

  friend bool operator==(PrimeModulus a, PrimeModulus b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(PrimeModulus a, PrimeModulus b) noexcept { return a.p_ != b.p_; }

 private:
  std::uint64_t p_;
};

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept;

/// Canonical representative in [0, p) together with its (prime) modulus.
class Residue {
 public:
  Residue(std::uint64_t v, PrimeModulus m) : v_(v % m.value()), m_(m) {}

  static Residue from_signed(std::int64_t v, PrimeModulus m);
  static Residue from_big(const BigInt& v, PrimeModulus m) {
    return Residue(big_mod_u64(v, m.value()), m);
  }

  std::uint64_t value() const noexcept { return v_; }
  PrimeModulus modulus() const noexcept { return m_; }

  Residue operator+(Residue o) const;
  Residue operator-(Residue o) const;
  Residue operator*(Residue o) const;
  Residue operator-() const { return Residue(v_ == 0 ? 0 : m_.value() - v_, m_); }
  Residue pow(std::uint64_t e) const { return Residue(pow_mod(v_, e, m_.value()), m_); }

  /// Multiplicative inverse by Fermat (the modulus is prime by construction).
  Residue inverse() const;

  friend bool operator==(Residue a, Residue b) noexcept {
    return a.m_ == b.m_ && a.v_ == b.v_;
  }
  friend bool operator!=(Residue a, Residue b) noexcept { return !(a == b); }

 private:
  std::uint64_t v_;
  PrimeModulus m_;
};

inline Residue mod_inverse(Residue a) { return a.inverse(); }

/// i! mod p and (i!)^-1 mod p for all 0 <= i < p. Immutable once built;
/// safe to share across threads.
class FactorialTable {
 public:
  explicit FactorialTable(PrimeModulus p);

  PrimeModulus modulus() const noexcept { return p_; }
  std::uint64_t fact(std::uint64_t i) const { return fact_[i]; }
  std::uint64_t inv_fact(std::uint64_t i) const { return inv_fact_[i]; }

  /// Inverse of a (1 <= a < p) in O(1) from the factorial tables.
  std::uint64_t inv(std::uint64_t a) const;

  /// Process-wide cache, one table per prime. Lookup/insert is lock-protected.
  static std::shared_ptr<const FactorialTable> shared(PrimeModulus p);

  /// Cap on primes accepted for table construction. Defaults to 2^26 and can
  /// be overridden by the LUCASKIT_MAX_PRIME environment variable.
  static std::uint64_t max_prime();
  static void set_max_prime(std::uint64_t cap);

 private:
  PrimeModulus p_;
  std::vector<std::uint64_t> fact_;
  std::vector<std::uint64_t> inv_fact_;
};

/// Exact binomial coefficient, multiplicative formula with incremental
/// division. Convention: C(a,0) = 1 for every integer a; C(a,b) = 0 when
/// b < 0 or b > a >= 0; a negative top with b != 0 is a domain error.
BigInt binom_exact(const BigInt& top, const BigInt& bottom);
BigInt binom_exact(std::int64_t top, std::int64_t bottom);

/// C(m,k) mod p from the factorial table; requires k <= m < p (zero residue
/// when k > m).
Residue binom_mod_table(std::uint64_t m, std::uint64_t k, const FactorialTable& table);

/// n >= 2 is prime iff C(n-1,i) is congruent to (-1)^i mod n for every
/// 0 <= i <= n-1. Exact and intentionally slow; n is capped at 10^4.
bool leibniz_prime_test(std::uint64_t n);

/// F_n mod p by fast doubling, with F_1 = F_2 = 1.
Residue fib_mod(std::uint64_t n, PrimeModulus p);

}  // namespace lucaskit::modarith

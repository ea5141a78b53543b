#include "lucaskit/modarith.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <string>

namespace lucaskit::modarith {

not_prime_error::not_prime_error(std::uint64_t n)
    : std::invalid_argument("not a prime modulus: " + std::to_string(n)) {}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % m);
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + m - b % m) % m);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
  std::uint64_t r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact for all n < 3.3 * 10^24, so for all 64-bit n.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw not_prime_error(p);
}

Residue Residue::from_signed(std::int64_t v, PrimeModulus m) {
  const std::uint64_t p = m.value();
  __int128 r = static_cast<__int128>(v) % static_cast<__int128>(p);
  if (r < 0) r += p;
  return Residue(static_cast<std::uint64_t>(r), m);
}

namespace {
void require_same_modulus(PrimeModulus a, PrimeModulus b) {
  if (a != b) throw std::invalid_argument("residue arithmetic across different moduli");
}
}  // namespace

Residue Residue::operator+(Residue o) const {
  require_same_modulus(m_, o.m_);
  return Residue(add_mod(v_, o.v_, m_.value()), m_);
}

Residue Residue::operator-(Residue o) const {
  require_same_modulus(m_, o.m_);
  return Residue(sub_mod(v_, o.v_, m_.value()), m_);
}

Residue Residue::operator*(Residue o) const {
  require_same_modulus(m_, o.m_);
  return Residue(mul_mod(v_, o.v_, m_.value()), m_);
}

Residue Residue::inverse() const {
  if (v_ == 0) throw std::domain_error("mod_inverse of zero");
  return Residue(pow_mod(v_, m_.value() - 2, m_.value()), m_);
}

FactorialTable::FactorialTable(PrimeModulus p) : p_(p) {
  const std::uint64_t n = p.value();
  if (n > max_prime()) {
    throw std::invalid_argument("factorial table prime exceeds cap " +
                                std::to_string(max_prime()) +
                                " (override with LUCASKIT_MAX_PRIME)");
  }
  fact_.resize(n);
  inv_fact_.resize(n);
  fact_[0] = 1 % n;
  for (std::uint64_t i = 1; i < n; ++i) fact_[i] = mul_mod(fact_[i - 1], i, n);
  inv_fact_[n - 1] = pow_mod(fact_[n - 1], n - 2, n);
  for (std::uint64_t i = n - 1; i > 0; --i) inv_fact_[i - 1] = mul_mod(inv_fact_[i], i, n);
}

std::uint64_t FactorialTable::inv(std::uint64_t a) const {
  if (a == 0 || a >= p_.value()) throw std::domain_error("inverse argument out of (0, p)");
  return mul_mod(inv_fact_[a], fact_[a - 1], p_.value());
}

namespace {

std::uint64_t env_max_prime() {
  if (const char* s = std::getenv("LUCASKIT_MAX_PRIME")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s && v >= 2) return v;
  }
  return 1ull << 26;
}

std::uint64_t& max_prime_slot() {
  static std::uint64_t cap = env_max_prime();
  return cap;
}

std::mutex table_cache_mutex;
std::map<std::uint64_t, std::shared_ptr<const FactorialTable>>& table_cache() {
  static std::map<std::uint64_t, std::shared_ptr<const FactorialTable>> cache;
  return cache;
}

}  // namespace

std::uint64_t FactorialTable::max_prime() { return max_prime_slot(); }

void FactorialTable::set_max_prime(std::uint64_t cap) { max_prime_slot() = cap; }

std::shared_ptr<const FactorialTable> FactorialTable::shared(PrimeModulus p) {
  {
    std::lock_guard<std::mutex> lock(table_cache_mutex);
    auto it = table_cache().find(p.value());
    if (it != table_cache().end()) return it->second;
  }
  auto table = std::make_shared<const FactorialTable>(p);
  std::lock_guard<std::mutex> lock(table_cache_mutex);
  auto [it, inserted] = table_cache().emplace(p.value(), std::move(table));
  return it->second;
}

BigInt binom_exact(const BigInt& top, const BigInt& bottom) {
  if (sgn(bottom) == 0) return 1;  // C(a,0) = 1 for every integer a
  if (sgn(bottom) < 0) return 0;
  if (sgn(top) < 0) throw std::domain_error("binom_exact: negative top with nonzero bottom");
  if (bottom > top) return 0;
  BigInt k = bottom;
  if (top - bottom < k) k = top - bottom;
  if (!k.fits_ulong_p()) throw std::invalid_argument("binom_exact: bottom index out of range");
  const unsigned long r = k.get_ui();
  BigInt acc = 1;
  for (unsigned long i = 1; i <= r; ++i) {
    acc *= top - (r - i);
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), i);  // exact at every step
  }
  return acc;
}

BigInt binom_exact(std::int64_t top, std::int64_t bottom) {
  return binom_exact(BigInt(top), BigInt(bottom));
}

Residue binom_mod_table(std::uint64_t m, std::uint64_t k, const FactorialTable& table) {
  const std::uint64_t p = table.modulus().value();
  if (m >= p) {
    throw std::invalid_argument("binom_mod_table: top must be < p; use a Lucas decomposition");
  }
  if (k > m) return Residue(0, table.modulus());
  const std::uint64_t v =
      mul_mod(table.fact(m), mul_mod(table.inv_fact(k), table.inv_fact(m - k), p), p);
  return Residue(v, table.modulus());
}

bool leibniz_prime_test(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("leibniz_prime_test: n must be >= 2");
  if (n > 10000) throw std::invalid_argument("leibniz_prime_test: n capped at 10^4");
  BigInt c = 1;  // C(n-1, i), exact
  for (std::uint64_t i = 0; i < n; ++i) {
    const std::uint64_t want = (i % 2 == 0) ? 1 % n : n - 1;
    if (mpz_fdiv_ui(c.get_mpz_t(), n) != want) return false;
    c *= n - 1 - i;
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), i + 1);
  }
  return true;
}

Residue fib_mod(std::uint64_t n, PrimeModulus p) {
  const std::uint64_t m = p.value();
  // fast doubling: F(2t) = F(t)(2F(t+1) - F(t)), F(2t+1) = F(t)^2 + F(t+1)^2
  std::uint64_t a = 0;      // F(t)
  std::uint64_t b = 1 % m;  // F(t+1)
  for (int bit = 63; bit >= 0; --bit) {
    const std::uint64_t c = mul_mod(a, sub_mod(add_mod(b, b, m), a, m), m);
    const std::uint64_t d = add_mod(mul_mod(a, a, m), mul_mod(b, b, m), m);
    if ((n >> bit) & 1) {
      a = d;
      b = add_mod(c, d, m);
    } else {
      a = c;
      b = d;
    }
  }
  return Residue(a, p);
}

}  // namespace lucaskit::modarith

#include <doctest.h>

#include <random>

#include "lucaskit/lucas.hpp"
#include "test_helpers.hpp"

using namespace lucaskit;
using namespace lucaskit::lucas;
using modarith::binom_exact;
using modarith::PrimeModulus;
using symmetry::SignedBinom;

TEST_CASE("digits") {
  const PrimeModulus p251(251);
  CHECK(digits(15683463, p251).digits == std::vector<std::uint64_t>{230, 235, 248});
  CHECK(digits(10824637, p251).digits == std::vector<std::uint64_t>{11, 205, 171});
  CHECK(digits(0, p251).digits == std::vector<std::uint64_t>{0});
  CHECK(digits(10, PrimeModulus(2)).digits == std::vector<std::uint64_t>{0, 1, 0, 1});
  CHECK(digits(250, p251).digits == std::vector<std::uint64_t>{250});
}

TEST_CASE("digit round trip on random inputs") {
  std::mt19937_64 rng(42);
  const std::vector<std::uint64_t> ps = {2, 3, 251, 1000003};
  for (int i = 0; i < 100000; ++i) {
    const std::uint64_t m = rng();
    const PrimeModulus p(ps[i % ps.size()]);
    const auto e = digits(m, p);
    CHECK(e.reconstruct() == m);
    if (m != 0) CHECK(e.digits.back() != 0);  // no trailing zero digit
  }
}

TEST_CASE("lucas_mod") {
  const PrimeModulus p251(251);
  CHECK(lucas_mod(15683463, 10824637, p251).value() == 111);
  CHECK(lucas_mod(5, 3, PrimeModulus(2)).value() == 0);  // digit pair (0,1)
  CHECK(lucas_mod(3, 7, p251).value() == 0);             // k > m
  // single digit falls back to the table
  const auto table = modarith::FactorialTable::shared(p251);
  for (std::uint64_t m = 0; m < 251; m += 17)
    for (std::uint64_t k = 0; k <= m; k += 5)
      CHECK(lucas_mod(m, k, p251) == modarith::binom_mod_table(m, k, *table));
}

TEST_CASE("lucas_mod equals the exact binomial mod p at desk scale") {
  // acceptance runs m <= 300 over all p <= 97; keep a faster slice here
  const auto rows = testing::pascal(120);
  for (std::uint64_t p : testing::primes_upto(31)) {
    const PrimeModulus pm(p);
    for (std::uint64_t m = 0; m <= 120; ++m)
      for (std::uint64_t k = 0; k <= m; ++k)
        CHECK(lucas_mod(m, k, pm).value() == big_mod_u64(rows[m][k], p));
  }
}

TEST_CASE("zero exactly when a digit pair fails") {
  const auto rows = testing::pascal(300);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    const PrimeModulus pm(p);
    for (std::uint64_t m = 0; m <= 300; ++m) {
      for (std::uint64_t k = 0; k <= m; ++k) {
        bool digit_fail = false;
        std::uint64_t mm = m, kk = k;
        while (mm != 0 || kk != 0) {
          if (kk % p > mm % p) digit_fail = true;
          mm /= p;
          kk /= p;
        }
        const bool is_zero = lucas_mod(m, k, pm).value() == 0;
        CHECK(is_zero == digit_fail);
        CHECK(is_zero == (big_mod_u64(rows[m][k], p) == 0));
      }
    }
  }
}

TEST_CASE("reduced_factor") {
  const PrimeModulus p251(251);
  CHECK(reduced_factor(248, 171, p251) == SignedBinom{-1, 79, 2, false});
  CHECK(reduced_factor(230, 11, p251) == SignedBinom{-1, 31, 11, false});
  CHECK(reduced_factor(235, 205, p251) == SignedBinom{+1, 45, 15, false});
  CHECK(reduced_factor(3, 5, p251).zero);
  CHECK_THROWS_AS(reduced_factor(251, 0, p251), std::invalid_argument);
  CHECK_THROWS_AS(reduced_factor(0, 251, p251), std::invalid_argument);
}

TEST_CASE("extended_lucas_mod golden factorization") {
  const PrimeModulus p251(251);
  const auto table = modarith::FactorialTable::shared(p251);
  const auto f = extended_lucas_mod(15683463, 10824637, p251);
  REQUIRE(f.factors.size() == 3);  // little-endian
  CHECK(f.factors[0] == SignedBinom{-1, 31, 11, false});
  CHECK(f.factors[1] == SignedBinom{+1, 45, 15, false});
  CHECK(f.factors[2] == SignedBinom{-1, 79, 2, false});
  CHECK(f.factors[0].value_mod(*table).value() == 25);
  CHECK(f.factors[1].value_mod(*table).value() == 27);
  CHECK(f.factors[2].value_mod(*table).value() == 182);
  CHECK(f.value.value() == 111);
  CHECK(182 * 27 * 25 % 251 == 111);  // 122850
}

TEST_CASE("extended_lucas_mod edge forms") {
  const PrimeModulus p37(37);
  const auto one_digit = extended_lucas_mod(33, 20, p37);
  REQUIRE(one_digit.factors.size() == 1);
  CHECK(one_digit.factors[0] == SignedBinom{-1, 16, 3, false});
  CHECK(one_digit.value.value() == 32);

  const auto k0 = extended_lucas_mod(15683463, 0, PrimeModulus(251));
  CHECK(k0.value.value() == 1);
  for (const auto& factor : k0.factors) {
    CHECK(factor.sign == +1);
    CHECK(factor.bottom == 0);
  }

  const auto kgtm = extended_lucas_mod(3, 700, PrimeModulus(251));
  CHECK(kgtm.value.value() == 0);
}

TEST_CASE("extended equals classic on seeded random inputs") {
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 101ull, 251ull}) {
    const PrimeModulus pm(p);
    const auto table = modarith::FactorialTable::shared(pm);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t m = rng() & ((1ull << 40) - 1);
      const std::uint64_t k = (m == 0) ? 0 : rng() % (m + 1);
      CHECK(extended_lucas_mod(m, k, *table).value == lucas_mod(m, k, *table));
    }
  }
}

TEST_CASE("factor locality: tops below p, bottoms in the region-A band") {
  for (std::uint64_t p : {3ull, 101ull, 251ull}) {
    const PrimeModulus pm(p);
    std::mt19937_64 rng(7 * p);
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t m = rng() & ((1ull << 30) - 1);
      const std::uint64_t k = (m == 0) ? 0 : rng() % (m + 1);
      for (const auto& factor : extended_lucas_mod(m, k, pm).factors) {
        if (factor.zero) continue;
        CHECK(factor.top < p);
        CHECK(3 * factor.bottom <= p - 1);
      }
    }
  }
}

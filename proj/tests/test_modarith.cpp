#include <doctest.h>

#include <atomic>
#include <thread>
#include <vector>

#include "lucaskit/modarith.hpp"
#include "test_helpers.hpp"

using namespace lucaskit;
using namespace lucaskit::modarith;

TEST_CASE("binom_exact basic values and conventions") {
  CHECK(binom_exact(4, 2) == 6);
  CHECK(binom_exact(45, 15) == BigInt("344867425584"));
  CHECK(binom_exact(31, 11) == 84672315);
  CHECK(binom_exact(-1, 0) == 1);   // C(a,0) = 1 for every integer a
  CHECK(binom_exact(-7, 0) == 1);
  CHECK(binom_exact(5, -2) == 0);
  CHECK(binom_exact(-1, -1) == 0);  // bottom < 0 wins over the negative-top error
  CHECK(binom_exact(3, 5) == 0);
  CHECK_THROWS_AS(binom_exact(-3, 2), std::domain_error);
}

TEST_CASE("binom_exact agrees with the addition-only Pascal oracle") {
  const auto rows = testing::pascal(60);
  for (std::size_t m = 0; m <= 60; ++m)
    for (std::size_t k = 0; k <= m; ++k)
      CHECK(binom_exact(BigInt(m), BigInt(k)) == rows[m][k]);
}

TEST_CASE("cancellation identity C(n,k)C(k,s) = C(n,s)C(n-s,k-s)") {
  for (std::int64_t n = 0; n <= 30; ++n)
    for (std::int64_t k = 0; k <= n; ++k)
      for (std::int64_t s = 0; s <= k; ++s)
        CHECK(binom_exact(n, k) * binom_exact(k, s) ==
              binom_exact(n, s) * binom_exact(n - s, k - s));
}

TEST_CASE("is_prime") {
  CHECK(is_prime(251));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(15683463));  // 3 · 5227821
  CHECK(15683463 % 3 == 0);
  // cross-check against trial division
  const auto trial = [](std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (std::uint64_t n = 0; n <= 5000; ++n) CHECK(is_prime(n) == trial(n));
  CHECK(is_prime(18446744073709551557ull));  // largest 64-bit prime
  CHECK_FALSE(is_prime(18446744073709551615ull));
}

TEST_CASE("PrimeModulus validates") {
  CHECK(PrimeModulus(2).value() == 2);
  CHECK(PrimeModulus(251).odd());
  CHECK_THROWS_AS(PrimeModulus(15), not_prime_error);
  CHECK_THROWS_AS(PrimeModulus(0), not_prime_error);
}

TEST_CASE("mod_inverse") {
  const PrimeModulus p7(7), p5(5);
  CHECK(mod_inverse(Residue(1, p7)).value() == 1);
  CHECK(mod_inverse(Residue(2, p5)).value() == 3);  // 2·3 = 6 ≡ 1
  CHECK(mod_inverse(Residue(4, p7)).value() == 2);  // 4·2 = 8 ≡ 1
  CHECK_THROWS_AS(mod_inverse(Residue(0, p7)), std::domain_error);
  // exhaustive-search oracle for small primes
  for (std::uint64_t p : {5ull, 7ull}) {
    for (std::uint64_t a = 1; a < p; ++a) {
      std::uint64_t brute = 0;
      for (std::uint64_t b = 1; b < p; ++b)
        if (a * b % p == 1) brute = b;
      CHECK(mod_inverse(Residue(a, PrimeModulus(p))).value() == brute);
    }
  }
}

TEST_CASE("inverse law for every prime up to 97") {
  for (std::uint64_t p : testing::primes_upto(97)) {
    const PrimeModulus pm(p);
    for (std::uint64_t a = 1; a < p; ++a) {
      CHECK((Residue(a, pm) * Residue(a, pm).inverse()).value() == 1 % p);
    }
  }
}

TEST_CASE("factorial table invariants and O(1) inverses") {
  const PrimeModulus pm(97);
  const FactorialTable table(pm);
  CHECK(table.fact(0) == 1);
  for (std::uint64_t i = 1; i < 97; ++i) {
    CHECK(table.fact(i) == i * table.fact(i - 1) % 97);
    CHECK(table.fact(i) * table.inv_fact(i) % 97 == 1);
    CHECK(table.inv(i) == Residue(i, pm).inverse().value());
  }
}

TEST_CASE("factorial table cache and prime cap") {
  const PrimeModulus pm(101);
  CHECK(FactorialTable::shared(pm).get() == FactorialTable::shared(pm).get());
  const auto saved = FactorialTable::max_prime();
  FactorialTable::set_max_prime(100);
  CHECK_THROWS_AS(FactorialTable(PrimeModulus(251)), std::invalid_argument);
  FactorialTable::set_max_prime(saved);
  CHECK_NOTHROW(FactorialTable(PrimeModulus(251)));
}

TEST_CASE("binom_mod_table") {
  const PrimeModulus p251(251);
  const auto table = FactorialTable::shared(p251);
  CHECK(binom_mod_table(79, 2, *table).value() == 69);  // C(79,2) = 3081 = 12·251 + 69
  CHECK(binom_exact(79, 2) == 3081);
  CHECK(binom_mod_table(45, 15, *table).value() == 27);
  CHECK(binom_mod_table(200, 0, *table).value() == 1);
  CHECK(binom_mod_table(3, 7, *table).value() == 0);
  CHECK_THROWS_AS(binom_mod_table(251, 3, *table), std::invalid_argument);
}

TEST_CASE("binom_mod_table agrees with the exact oracle for all primes up to 97") {
  const auto rows = testing::pascal(96);
  for (std::uint64_t p : testing::primes_upto(97)) {
    const auto table = FactorialTable::shared(PrimeModulus(p));
    for (std::uint64_t m = 0; m < p; ++m)
      for (std::uint64_t k = 0; k <= m; ++k)
        CHECK(binom_mod_table(m, k, *table).value() == big_mod_u64(rows[m][k], p));
  }
}

TEST_CASE("leibniz primality criterion") {
  CHECK(leibniz_prime_test(2));
  CHECK(leibniz_prime_test(7));
  CHECK_FALSE(leibniz_prime_test(9));
  CHECK(big_mod_u64(binom_exact(8, 3), 9) == 2);  // the witness for n = 9
  CHECK_THROWS_AS(leibniz_prime_test(1), std::invalid_argument);
  CHECK_THROWS_AS(leibniz_prime_test(10001), std::invalid_argument);
  for (std::uint64_t n = 2; n <= 500; ++n) CHECK(leibniz_prime_test(n) == is_prime(n));
}

TEST_CASE("fib_mod") {
  const PrimeModulus p1009(1009);
  CHECK(fib_mod(10, p1009).value() == 55);
  CHECK(fib_mod(1, p1009).value() == 1);
  CHECK(fib_mod(2, p1009).value() == 1);
  CHECK(fib_mod(0, p1009).value() == 0);
  CHECK(fib_mod(7, PrimeModulus(7)).value() == 6);  // F_7 = 13
  // iterative oracle
  const PrimeModulus pm(10007);
  std::uint64_t a = 0, b = 1;
  for (std::uint64_t n = 1; n <= 90; ++n) {
    const std::uint64_t next = (a + b) % 10007;
    a = b;
    b = next;
    CHECK(fib_mod(n, pm).value() == a);
  }
}

TEST_CASE("Fibonacci sum identity F_n = sum C(n-1-j, j) mod 10007 for n <= 30") {
  const PrimeModulus pm(10007);
  for (std::int64_t n = 1; n <= 30; ++n) {
    BigInt sum = 0;
    for (std::int64_t j = 0; j <= (n - 1) / 2; ++j) sum += binom_exact(n - 1 - j, j);
    CHECK(fib_mod(n, pm).value() == big_mod_u64(sum, 10007));
  }
}

TEST_CASE("residue arithmetic") {
  const PrimeModulus p7(7);
  CHECK((Residue(5, p7) + Residue(4, p7)).value() == 2);
  CHECK((Residue(2, p7) - Residue(5, p7)).value() == 4);
  CHECK((Residue(3, p7) * Residue(5, p7)).value() == 1);
  CHECK((-Residue(0, p7)).value() == 0);
  CHECK((-Residue(2, p7)).value() == 5);
  CHECK(Residue::from_signed(-3081, PrimeModulus(251)).value() == 182);
  CHECK(Residue::from_big(BigInt("-84672315"), PrimeModulus(251)).value() == 25);
  CHECK_THROWS_AS(Residue(1, p7) + Residue(1, PrimeModulus(5)), std::invalid_argument);
}

TEST_CASE("factorial table cache is safe under concurrent lookup/insert") {
  std::atomic<bool> ok{true};
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t) {
    workers.emplace_back([&ok] {
      for (std::uint64_t p : {10007ull, 10009ull, 10037ull, 10039ull, 10061ull}) {
        const auto table = FactorialTable::shared(PrimeModulus(p));
        if (binom_mod_table(100, 50, *table).value() != big_mod_u64(binom_exact(100, 50), p))
          ok = false;
      }
    });
  }
  for (auto& w : workers) w.join();
  CHECK(ok);
}

TEST_CASE("mul_mod and pow_mod near the 64-bit edge") {
  const std::uint64_t p = 18446744073709551557ull;
  CHECK(mul_mod(p - 1, p - 1, p) == 1);
  CHECK(pow_mod(2, p - 1, p) == 1);  // Fermat
}

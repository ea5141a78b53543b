#pragma once

#include <cstdint>
#include <vector>

#include "lucaskit/bignum.hpp"

namespace lucaskit::testing {

/// Independent binomial oracle: Pascal's rule only, no multiplication or
/// division, exact big integers. pascal(max)[m][k] = C(m,k).
inline std::vector<std::vector<BigInt>> pascal(std::size_t max_row) {
  std::vector<std::vector<BigInt>> rows(max_row + 1);
  for (std::size_t m = 0; m <= max_row; ++m) {
    rows[m].resize(m + 1);
    rows[m][0] = 1;
    rows[m][m] = 1;
    for (std::size_t k = 1; k < m; ++k) rows[m][k] = rows[m - 1][k - 1] + rows[m - 1][k];
  }
  return rows;
}

/// Primes up to limit, by sieve.
inline std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
  std::vector<bool> sieve(limit + 1, true);
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (!sieve[n]) continue;
    out.push_back(n);
    for (std::uint64_t q = n * n; q <= limit; q += n) sieve[q] = false;
  }
  return out;
}

}  // namespace lucaskit::testing

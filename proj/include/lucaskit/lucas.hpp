#pragma once

#include <cstdint>
#include <vector>

#include "lucaskit/modarith.hpp"
#include "lucaskit/symmetry.hpp"

namespace lucaskit::lucas {

using modarith::FactorialTable;
using modarith::PrimeModulus;
using modarith::Residue;

/// Little-endian base-p digits. No trailing zero digit except for 0 itself.
struct DigitExpansion {
  PrimeModulus base;
  std::vector<std::uint64_t> digits;

  std::uint64_t reconstruct() const;
};

DigitExpansion digits(std::uint64_t m, PrimeModulus p);

/// Classic digit decomposition: the product of C(m_i, k_i) mod p over the
/// base-p digit pairs. Zero as soon as some k_i > m_i (so also when k > m).
Residue lucas_mod(std::uint64_t m, std::uint64_t k, PrimeModulus p);
Residue lucas_mod(std::uint64_t m, std::uint64_t k, const FactorialTable& table);

/// The sign-adjusted digit factor of the extended decomposition: the
/// canonical reduction of C(m_i, k_i), or exact zero when k_i > m_i.
/// Both arguments must be digits (< p).
symmetry::SignedBinom reduced_factor(std::uint64_t mi, std::uint64_t ki, PrimeModulus p);

/// Extended decomposition: one reduced factor per digit position
/// (little-endian) and their product mod p. Every non-zero factor has
/// top < p and bottom <= (p-1)/3, so no factor ever needs a binomial with
/// top >= p.
struct LucasFactorization {
  std::vector<symmetry::SignedBinom> factors;
  Residue value;
};

LucasFactorization extended_lucas_mod(std::uint64_t m, std::uint64_t k, PrimeModulus p);
LucasFactorization extended_lucas_mod(std::uint64_t m, std::uint64_t k,
                                      const FactorialTable& table);

}  // namespace lucaskit::lucas

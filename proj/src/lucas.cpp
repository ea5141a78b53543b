#include "lucaskit/lucas.hpp"

#include <stdexcept>

namespace lucaskit::lucas {

std::uint64_t DigitExpansion::reconstruct() const {
  std::uint64_t acc = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) acc = acc * base.value() + *it;
  return acc;
}

DigitExpansion digits(std::uint64_t m, PrimeModulus p) {
  DigitExpansion e{p, {}};
  do {
    e.digits.push_back(m % p.value());
    m /= p.value();
  } while (m != 0);
  return e;
}

Residue lucas_mod(std::uint64_t m, std::uint64_t k, const FactorialTable& table) {
  const std::uint64_t p = table.modulus().value();
  if (k > m) return Residue(0, table.modulus());
  std::uint64_t acc = 1 % p;
  while (m != 0 || k != 0) {
    const std::uint64_t mi = m % p;
    const std::uint64_t ki = k % p;
    if (ki > mi) return Residue(0, table.modulus());
    acc = modarith::mul_mod(acc, modarith::binom_mod_table(mi, ki, table).value(), p);
    m /= p;
    k /= p;
  }
  return Residue(acc, table.modulus());
}

Residue lucas_mod(std::uint64_t m, std::uint64_t k, PrimeModulus p) {
  return lucas_mod(m, k, *FactorialTable::shared(p));
}

symmetry::SignedBinom reduced_factor(std::uint64_t mi, std::uint64_t ki, PrimeModulus p) {
  if (mi >= p.value() || ki >= p.value()) {
    throw std::invalid_argument("reduced_factor: arguments must be base-p digits");
  }
  if (ki > mi) return symmetry::SignedBinom::zero_value();
  return symmetry::reduce_canonical(mi, ki, p);
}

LucasFactorization extended_lucas_mod(std::uint64_t m, std::uint64_t k,
                                      const FactorialTable& table) {
  const PrimeModulus pm = table.modulus();
  const std::uint64_t p = pm.value();
  LucasFactorization f{{}, Residue(1, pm)};
  do {
    f.factors.push_back(reduced_factor(m % p, k % p, pm));
    m /= p;
    k /= p;
  } while (m != 0 || k != 0);
  for (const auto& factor : f.factors) {
    if (factor.zero) {
      f.value = Residue(0, pm);
      return f;
    }
    f.value = f.value * factor.value_mod(table);
  }
  return f;
}

LucasFactorization extended_lucas_mod(std::uint64_t m, std::uint64_t k, PrimeModulus p) {
  return extended_lucas_mod(m, k, *FactorialTable::shared(p));
}

}  // namespace lucaskit::lucas

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lucaskit/modarith.hpp"

namespace lucaskit::symmetry {

using modarith::FactorialTable;
using modarith::PrimeModulus;
using modarith::Residue;

/// +-C(top,bottom), or exactly zero. The sign is carried symbolically so
/// reduction traces stay readable and the (-1)^t bookkeeping can be tested
/// on its own.
struct SignedBinom {
  int sign = +1;  // -1 or +1; ignored when zero is set
  std::uint64_t top = 0;
  std::uint64_t bottom = 0;
  bool zero = false;

  static SignedBinom zero_value() { return SignedBinom{+1, 0, 0, true}; }

  BigInt value() const;
  /// Residue of value() mod the table's prime; requires top < p.
  Residue value_mod(const FactorialTable& table) const;
  std::string str() const;  // "+C(16,3)", "-C(16,3)" or "0"

  friend bool operator==(const SignedBinom& a, const SignedBinom& b) noexcept {
    if (a.zero || b.zero) return a.zero == b.zero;
    return a.sign == b.sign && a.top == b.top && a.bottom == b.bottom;
  }
};

/// Membership in the closed regions A, B, C of the first p rows of the mod-p
/// triangle, plus the three symmetry lines. Region tests run on the
/// S0-normalized column k' = min(k, m-k); the regions are defined on the
/// left half only. Line flags use the raw (m, k) so that rendered lines
/// follow the geometry (the right-half continuation of S1 mirrors onto S2
/// and vice versa).
struct RegionMembership {
  bool in_A = false, in_B = false, in_C = false;
  bool on_S0 = false, on_S1 = false, on_S2 = false;

  std::string region_letters() const;  // "A", "AB", "ABC", ...
  std::string line_labels() const;     // "S0", "S1S2", ... ("" off-line)
};

enum class Rule { S0, S1, S2 };
std::string_view rule_name(Rule r);

/// Rewrite path taking C(m,k) into the fundamental region A.
struct ReductionTrace {
  SignedBinom start;
  std::vector<std::pair<Rule, SignedBinom>> steps;

  const SignedBinom& final_state() const {
    return steps.empty() ? start : steps.back().second;
  }
};

/// C(m,k) = C(m,m-k), exact. Zero when k > m.
SignedBinom sym_s0(std::uint64_t m, std::uint64_t k);

/// C(k,s) == (-1)^{k+s} C(p-1-s, k-s)  (mod p), for 0 <= s <= k < p.
/// Returns the right-hand side; its value is congruent to C(k,s).
SignedBinom semi_sym_s1(std::uint64_t k, std::uint64_t s, PrimeModulus p);

/// C(k,s) == (-1)^s C(p-1-k+s, s)  (mod p), for 0 <= s <= k < p.
SignedBinom semi_sym_s2(std::uint64_t k, std::uint64_t s, PrimeModulus p);

/// C(p-i, k) == (-1)^k C(i-1+k, i-1)  (mod p), for 1 <= i <= p, 0 <= k <= p-i.
SignedBinom corollary_form(std::uint64_t i, std::uint64_t k, PrimeModulus p);

RegionMembership classify_region(std::uint64_t m, std::uint64_t k, PrimeModulus p);

/// One-shot reduction: with t = min(k, m-k),
///   (-1)^t C(p-1-m+t, p-1-m)  when m+t > p-1,
///   (-1)^t C(p-1-m+t, t)      when m+t <= p-1 and 2m > p-1+t,
///   +C(m, t)                  otherwise.
/// The result is congruent to C(m,k) mod p and lies in closed region A.
SignedBinom reduce_canonical(std::uint64_t m, std::uint64_t k, PrimeModulus p);

/// Step-by-step S0/S1/S2 path; the final state equals reduce_canonical(m,k,p).
ReductionTrace reduce_trace(std::uint64_t m, std::uint64_t k, PrimeModulus p);

}  // namespace lucaskit::symmetry

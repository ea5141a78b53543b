#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "lucaskit/bignum.hpp"

namespace lucaskit::identities {

/// The five verified summation identities.
///   thm31(n):    sum_j (-1)^j C(n,j) C(2n-j,n)            = 1
///   thm32(m,s):  sum_j (-1)^j C(m+s+j,s) C(s,j)           = (-1)^s
///   thm33(m,s):  sum_j (-1)^j C(m,j) / C(s+j,s)           = s/(s+m)
///   thm34(s):    sum_j (-1)^j j C(s+j,s) C(s,j)           = (-1)^s (s+1) s
///   thm35(s,n):  sum_{j=1..n} (-1)^j C(s-1,j-1) / j       = (-1)^n C(s-1,n)/s - 1/s
enum class IdentityId { thm31, thm32, thm33, thm34, thm35 };

std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);
int identity_arity(IdentityId id);

struct IdentityReport {
  IdentityId id;
  std::vector<std::int64_t> params;
  Rational lhs;                      // first printed form
  Rational rhs;
  std::optional<Rational> lhs_alt;   // second printed form, when the theorem has one
  bool holds = false;
  std::optional<BigInt> lift_prime;  // set by the duality checks
};

IdentityReport eval_thm31(std::int64_t n);
IdentityReport eval_thm32(std::int64_t m, std::int64_t s);
IdentityReport eval_thm33(std::int64_t m, std::int64_t s);
IdentityReport eval_thm34(std::int64_t s);
IdentityReport eval_thm35(std::int64_t s, std::int64_t n);
IdentityReport evaluate(IdentityId id, const std::vector<std::int64_t>& params);

/// Bound the lift prime must strictly exceed: 2 * sum of absolute term values
/// plus |rhs| after clearing denominators, raised to the minimum the rewrite
/// chain itself needs (all rewritten indices must stay below p) and to the
/// denominator lcm (all cleared inverses must exist mod p).
BigInt lift_bound(IdentityId id, const std::vector<std::int64_t>& params);

/// Prime-lift verification: evaluate the p-dependent ancestor form at the
/// chosen prime, check each semi-symmetry rewrite mod p, check the resulting
/// congruence, and confirm p exceeds the lift bound so the congruence forces
/// equality. duality_check uses the smallest admissible prime.
IdentityReport duality_check(IdentityId id, const std::vector<std::int64_t>& params);
IdentityReport duality_check_at(IdentityId id, const std::vector<std::int64_t>& params,
                                const BigInt& prime);

}  // namespace lucaskit::identities

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lucaskit/modarith.hpp"

namespace lucaskit::congruences {

using modarith::PrimeModulus;
using modarith::Residue;

struct CongruenceReport {
  std::string theorem;
  std::uint64_t prime = 0;
  std::vector<std::int64_t> params;
  std::vector<Residue> sides;       // computed quantities, in statement order
  std::optional<Residue> expected;  // when the statement pins a value
  bool holds = false;
  std::string note;                 // e.g. "case-table skipped"
};

/// sum_{k=1..upper} 1/k mod p; requires upper < p.
Residue harmonic_mod(PrimeModulus p, std::uint64_t upper);

/// sum_{k=1..p-1-s} (1/k) C(k+s,s) == -sum_{k=1..p-1-s} 1/k  (mod p),
/// for odd p and 0 <= s < p-1. sides = {lhs, rhs}.
CongruenceReport thm41_check(PrimeModulus p, std::uint64_t s);

/// sum_{j=r..(p-1)/2} C(2j,j) C(j,r) 2^{p-1-2j} mod p, expected 0 when
/// r < (p-1)/2 and (-1)^{(p-1)/2} when r = (p-1)/2. Odd p.
CongruenceReport thm42_eval(PrimeModulus p, std::uint64_t r);

/// The Fibonacci chain mod an odd prime p:
///   F_p     == double sum of (-1)^{i+j} C(i+j,i)^2 over 0 <= i,j <= p-1
///           == sum_{j=0..(p-1)/2} (-1)^j C(2j,j)
///   F_{p+1} == 1 + double sum of (-1)^{i+j} C(i+j-1,j) C(i+j,i) over
///              0 <= i,j <= p with i+j <= p
///           == sum_{j=0..(p-1)/2} (-1)^j C(2j-1,j)      (C(-1,0) = 1)
/// plus, when p != 5, the value table: F_p == +-1 and F_{p+1} == 1 or 0
/// according to p mod 5. The second double sum runs over the triangle
/// i+j <= p where the digit rewrite behind it is valid, and the constant 1
/// restores the (i,j) = (0,p) corner term C(p,p) C(p,0) whose rewritten
/// factor C(p-1,p) vanishes; over the full square the sum would come out
/// F_{p+1} + 1 instead.
/// sides = {D1, S1, F_p, D2, S2, F_{p+1}}.
CongruenceReport thm43_eval(PrimeModulus p);

/// Exact checks of the two Fibonacci representations
///   F_{n+1} = sum over 0 <= i,j <= n of (-1)^i C(n-i,j) C(i+j,i)
///   F_n     = sum_{j=0..floor((n-1)/2)} C(n-1-j,j)
/// reduced mod p and compared against fib_mod. Desk scale: n <= 60.
CongruenceReport fib_identity_check(std::uint64_t n, PrimeModulus p);

}  // namespace lucaskit::congruences

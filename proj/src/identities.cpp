#include "lucaskit/identities.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "lucaskit/modarith.hpp"

namespace lucaskit::identities {

namespace {

using modarith::binom_exact;

int parity_sign(std::int64_t e) { return (e % 2 == 0) ? +1 : -1; }

BigInt C(const BigInt& top, const BigInt& bottom) { return binom_exact(top, bottom); }
BigInt C(std::int64_t top, std::int64_t bottom) { return binom_exact(top, bottom); }

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void check_params(IdentityId id, const std::vector<std::int64_t>& prm) {
  require(static_cast<int>(prm.size()) == identity_arity(id),
          "identity: wrong parameter count");
  switch (id) {
    case IdentityId::thm31: require(prm[0] >= 0, "thm31: requires n >= 0"); break;
    case IdentityId::thm32: require(prm[0] >= 1 && prm[1] >= 1, "thm32: requires m, s >= 1"); break;
    case IdentityId::thm33: require(prm[0] >= 1 && prm[1] >= 1, "thm33: requires m, s >= 1"); break;
    case IdentityId::thm34: require(prm[0] >= 1, "thm34: requires s >= 1"); break;
    case IdentityId::thm35: require(prm[0] >= 1 && prm[1] >= 1, "thm35: requires s, n >= 1"); break;
  }
}

Rational ratio(const BigInt& num, const BigInt& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Terms of the first printed form, exact.
std::vector<Rational> lhs_terms(IdentityId id, const std::vector<std::int64_t>& prm) {
  std::vector<Rational> terms;
  switch (id) {
    case IdentityId::thm31: {
      const std::int64_t n = prm[0];
      for (std::int64_t j = 0; j <= n; ++j)
        terms.emplace_back(parity_sign(j) * C(n, j) * C(2 * n - j, n));
      break;
    }
    case IdentityId::thm32: {
      const std::int64_t m = prm[0], s = prm[1];
      for (std::int64_t j = 0; j <= s; ++j)
        terms.emplace_back(parity_sign(j) * C(m + s + j, s) * C(s, j));
      break;
    }
    case IdentityId::thm33: {
      const std::int64_t m = prm[0], s = prm[1];
      for (std::int64_t j = 0; j <= m; ++j)
        terms.push_back(ratio(parity_sign(j) * C(m, j), C(s + j, s)));
      break;
    }
    case IdentityId::thm34: {
      const std::int64_t s = prm[0];
      for (std::int64_t j = 0; j <= s; ++j)
        terms.emplace_back(parity_sign(j) * j * C(s + j, s) * C(s, j));
      break;
    }
    case IdentityId::thm35: {
      const std::int64_t s = prm[0], n = prm[1];
      for (std::int64_t j = 1; j <= n; ++j)
        terms.push_back(ratio(parity_sign(j) * C(s - 1, j - 1), BigInt(j)));
      break;
    }
  }
  return terms;
}

Rational rhs_value(IdentityId id, const std::vector<std::int64_t>& prm) {
  switch (id) {
    case IdentityId::thm31: return Rational(1);
    case IdentityId::thm32: return Rational(parity_sign(prm[1]));
    case IdentityId::thm33: return ratio(BigInt(prm[1]), BigInt(prm[1] + prm[0]));
    case IdentityId::thm34: {
      const std::int64_t s = prm[0];
      return Rational(parity_sign(s) * BigInt(s + 1) * s);
    }
    case IdentityId::thm35: {
      const std::int64_t s = prm[0], n = prm[1];
      return ratio(parity_sign(n) * C(s - 1, n) - 1, BigInt(s));
    }
  }
  throw std::logic_error("unreachable");
}

/// Terms of the second printed form, for the theorems that have one.
std::optional<Rational> alt_form(IdentityId id, const std::vector<std::int64_t>& prm) {
  switch (id) {
    case IdentityId::thm31: {
      const std::int64_t n = prm[0];
      Rational acc(0);
      for (std::int64_t j = 0; j <= n; ++j)
        acc += Rational(parity_sign(j) * C(2 * n - j, j) * C(2 * n - 2 * j, n - j));
      return acc;
    }
    case IdentityId::thm32: {
      const std::int64_t m = prm[0], s = prm[1];
      Rational acc(0);
      for (std::int64_t j = 0; j <= s; ++j)
        acc += Rational(parity_sign(j) * C(m + s + j, j) * C(m + s, s - j));
      return acc;
    }
    default: return std::nullopt;
  }
}

struct Cleared {
  std::vector<BigInt> terms;  // integer terms after multiplying through by denom_lcm
  BigInt rhs;
  BigInt denom_lcm{1};
  BigInt min_prime{2};  // the lift prime must also strictly exceed this
};

Cleared cleared_form(IdentityId id, const std::vector<std::int64_t>& prm) {
  const auto terms = lhs_terms(id, prm);
  const Rational rhs = rhs_value(id, prm);
  Cleared c;
  for (const auto& t : terms)
    mpz_lcm(c.denom_lcm.get_mpz_t(), c.denom_lcm.get_mpz_t(), t.get_den().get_mpz_t());
  mpz_lcm(c.denom_lcm.get_mpz_t(), c.denom_lcm.get_mpz_t(), rhs.get_den().get_mpz_t());
  const Rational big_l(c.denom_lcm);
  for (const auto& t : terms) {
    const Rational cleared = t * big_l;
    assert(cleared.get_den() == 1);
    c.terms.push_back(cleared.get_num());
  }
  const Rational cleared_rhs = rhs * big_l;
  assert(cleared_rhs.get_den() == 1);
  c.rhs = cleared_rhs.get_num();
  // smallest p for which every rewritten index in the derivation stays < p
  switch (id) {
    case IdentityId::thm31: c.min_prime = 2 * prm[0]; break;
    case IdentityId::thm32: c.min_prime = prm[0] + 2 * prm[1]; break;
    case IdentityId::thm33: c.min_prime = prm[0] + prm[1]; break;
    case IdentityId::thm34: c.min_prime = 2 * prm[0]; break;
    case IdentityId::thm35: c.min_prime = std::max(prm[0], prm[1]); break;
  }
  if (c.min_prime < 2) c.min_prime = 2;
  return c;
}

bool cong(const BigInt& a, const BigInt& b, const BigInt& p) { return congruent(a, b, p); }

// Each derivation helper re-runs the proof route at the prime p: an exact
// evaluation of the p-dependent ancestor identity, then the semi-symmetry
// rewrite of every p-dependent factor.

bool derivation_thm31(std::int64_t n, const BigInt& p) {
  const BigInt top = p - 1 - n;
  BigInt ancestor = 0;
  for (std::int64_t j = 0; j <= n; ++j) ancestor += C(n, j) * C(top, BigInt(n - j));
  if (ancestor != C(p - 1, BigInt(n))) return false;  // two-row convolution instance
  for (std::int64_t j = 0; j <= n; ++j) {
    if (!cong(C(top, BigInt(n - j)), parity_sign(n + j) * C(2 * n - j, n), p)) return false;
  }
  return cong(C(p - 1, BigInt(n)), BigInt(parity_sign(n)), p);
}

bool derivation_thm32(std::int64_t m, std::int64_t s, const BigInt& p) {
  const BigInt top = p - 1 - s;
  BigInt ancestor = 0;
  for (std::int64_t j = 0; j <= s; ++j) ancestor += C(top, BigInt(m + j)) * C(s, j);
  if (ancestor != C(p - 1, p - 1 - s - m)) return false;
  for (std::int64_t j = 0; j <= s; ++j) {
    if (!cong(C(top, BigInt(m + j)), parity_sign(m + j) * C(m + s + j, s), p)) return false;
  }
  return cong(C(p - 1, p - 1 - s - m), BigInt(parity_sign(s + m)), p);
}

bool derivation_thm33(std::int64_t m, std::int64_t s, const BigInt& p) {
  const BigInt top = p - 1 - s;
  Rational ancestor(0);
  for (std::int64_t j = 0; j <= m; ++j) ancestor += ratio(C(m, j), C(top, BigInt(j)));
  if (ancestor != ratio(p - s, p - s - m)) return false;
  for (std::int64_t j = 0; j <= m; ++j) {
    if (!cong(C(top, BigInt(j)), parity_sign(j) * C(s + j, s), p)) return false;
  }
  // rhs transport, cross-multiplied: (p-s)/(p-s-m) == s/(s+m) (mod p)
  return cong((p - s) * (s + m), BigInt(s) * (p - s - m), p);
}

bool derivation_thm34(std::int64_t s, const BigInt& p) {
  const BigInt top = p - 1 - s;
  BigInt ancestor = 0;
  for (std::int64_t j = 0; j <= s; ++j) ancestor += j * C(top, BigInt(j)) * C(s, j);
  if (ancestor != s * C(p - 2, BigInt(s))) return false;
  for (std::int64_t j = 0; j <= s; ++j) {
    if (!cong(C(top, BigInt(j)), parity_sign(j) * C(s + j, s), p)) return false;
  }
  return cong(C(p - 2, BigInt(s)), BigInt(parity_sign(s)) * (s + 1), p);
}

bool derivation_thm35(std::int64_t s, std::int64_t n, const BigInt& p) {
  if (s > n) {
    const BigInt r = p - s;  // positive: p exceeds the derivation minimum
    Rational ancestor(0);
    for (std::int64_t j = 1; j <= n; ++j)
      ancestor += ratio(C(r - 1 + j, BigInt(j - 1)) * r, BigInt(j));
    if (ancestor != Rational(C(r + n, BigInt(n)) - 1)) return false;
    for (std::int64_t j = 1; j <= n; ++j) {
      if (!cong(C(s - 1, j - 1), parity_sign(j - 1) * C(r - 1 + j, BigInt(j - 1)), p))
        return false;
    }
    return cong(C(r + n, BigInt(n)), parity_sign(n) * C(s - 1, n), p);
  }
  // s <= n: the tail of the sum vanishes and the identity collapses to the
  // alternating row sum; no prime-dependent ancestor is involved.
  BigInt acc = 0;
  for (std::int64_t j = 1; j <= s; ++j) acc += parity_sign(j) * C(s, j);
  if (acc != -1) return false;
  for (std::int64_t j = 1; j <= s; ++j) {
    if (j * C(s, j) != s * C(s - 1, j - 1)) return false;
  }
  return true;
}

bool run_derivation(IdentityId id, const std::vector<std::int64_t>& prm, const BigInt& p) {
  switch (id) {
    case IdentityId::thm31: return derivation_thm31(prm[0], p);
    case IdentityId::thm32: return derivation_thm32(prm[0], prm[1], p);
    case IdentityId::thm33: return derivation_thm33(prm[0], prm[1], p);
    case IdentityId::thm34: return derivation_thm34(prm[0], p);
    case IdentityId::thm35: return derivation_thm35(prm[0], prm[1], p);
  }
  throw std::logic_error("unreachable");
}

IdentityReport build_report(IdentityId id, const std::vector<std::int64_t>& prm) {
  check_params(id, prm);
  IdentityReport rep;
  rep.id = id;
  rep.params = prm;
  Rational acc(0);
  for (const auto& t : lhs_terms(id, prm)) acc += t;
  rep.lhs = acc;
  rep.rhs = rhs_value(id, prm);
  rep.lhs_alt = alt_form(id, prm);
  rep.holds = (rep.lhs == rep.rhs) && (!rep.lhs_alt || *rep.lhs_alt == rep.rhs);
  return rep;
}

}  // namespace

std::string_view identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::thm31: return "thm31";
    case IdentityId::thm32: return "thm32";
    case IdentityId::thm33: return "thm33";
    case IdentityId::thm34: return "thm34";
    case IdentityId::thm35: return "thm35";
  }
  return "?";
}

std::optional<IdentityId> identity_from_name(std::string_view name) {
  for (IdentityId id : {IdentityId::thm31, IdentityId::thm32, IdentityId::thm33,
                        IdentityId::thm34, IdentityId::thm35}) {
    if (identity_name(id) == name) return id;
  }
  return std::nullopt;
}

int identity_arity(IdentityId id) {
  switch (id) {
    case IdentityId::thm31: return 1;   // n
    case IdentityId::thm32: return 2;   // m, s
    case IdentityId::thm33: return 2;   // m, s
    case IdentityId::thm34: return 1;   // s
    case IdentityId::thm35: return 2;   // s, n
  }
  return 0;
}

IdentityReport eval_thm31(std::int64_t n) { return build_report(IdentityId::thm31, {n}); }
IdentityReport eval_thm32(std::int64_t m, std::int64_t s) {
  return build_report(IdentityId::thm32, {m, s});
}
IdentityReport eval_thm33(std::int64_t m, std::int64_t s) {
  return build_report(IdentityId::thm33, {m, s});
}
IdentityReport eval_thm34(std::int64_t s) { return build_report(IdentityId::thm34, {s}); }
IdentityReport eval_thm35(std::int64_t s, std::int64_t n) {
  return build_report(IdentityId::thm35, {s, n});
}

IdentityReport evaluate(IdentityId id, const std::vector<std::int64_t>& params) {
  return build_report(id, params);
}

BigInt lift_bound(IdentityId id, const std::vector<std::int64_t>& params) {
  check_params(id, params);
  const Cleared c = cleared_form(id, params);
  BigInt bound = abs(c.rhs);
  for (const auto& t : c.terms) bound += 2 * abs(t);
  if (bound < c.min_prime) bound = c.min_prime;
  if (bound < c.denom_lcm) bound = c.denom_lcm;
  return bound;
}

IdentityReport duality_check_at(IdentityId id, const std::vector<std::int64_t>& params,
                                const BigInt& prime) {
  check_params(id, params);
  const Cleared c = cleared_form(id, params);
  const BigInt bound = lift_bound(id, params);
  if (prime <= bound) {
    throw std::invalid_argument("duality_check_at: prime does not exceed the lift bound");
  }
  bool ok = run_derivation(id, params, prime);
  if (ok) {
    BigInt lhs = 0;
    for (const auto& t : c.terms) lhs += t;
    ok = cong(lhs, c.rhs, prime);  // both sides sit in (-p/2, p/2): equality follows
  }
  IdentityReport rep = build_report(id, params);
  rep.lift_prime = prime;
  rep.holds = rep.holds && ok;
  return rep;
}

IdentityReport duality_check(IdentityId id, const std::vector<std::int64_t>& params) {
  const BigInt bound = lift_bound(id, params);
  const BigInt prime = next_prime_above(bound);
  if (prime > 2 * bound + 2) {  // Bertrand: cannot happen
    throw std::runtime_error("duality_check: no admissible prime below the search cap");
  }
  return duality_check_at(id, params, prime);
}

}  // namespace lucaskit::identities

#include "lucaskit/symmetry.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace lucaskit::symmetry {

namespace {

using u128 = unsigned __int128;  // the region tests can overflow 64 bits for huge p

int parity_sign(std::uint64_t e) { return (e % 2 == 0) ? +1 : -1; }

void require_row(std::uint64_t m, std::uint64_t k, PrimeModulus p, const char* who) {
  if (m >= p.value()) throw std::invalid_argument(std::string(who) + ": requires m < p");
  if (k > m) throw std::invalid_argument(std::string(who) + ": requires k <= m");
}

}  // namespace

BigInt SignedBinom::value() const {
  if (zero) return 0;
  return sign * modarith::binom_exact(BigInt(top), BigInt(bottom));
}

Residue SignedBinom::value_mod(const FactorialTable& table) const {
  if (zero) return Residue(0, table.modulus());
  const Residue c = modarith::binom_mod_table(top, bottom, table);
  return sign < 0 ? -c : c;
}

std::string SignedBinom::str() const {
  if (zero) return "0";
  std::string s(sign < 0 ? "-" : "+");
  s += "C(" + std::to_string(top) + "," + std::to_string(bottom) + ")";
  return s;
}

std::string RegionMembership::region_letters() const {
  std::string s;
  if (in_A) s += 'A';
  if (in_B) s += 'B';
  if (in_C) s += 'C';
  return s;
}

std::string RegionMembership::line_labels() const {
  std::string s;
  if (on_S0) s += "S0";
  if (on_S1) s += "S1";
  if (on_S2) s += "S2";
  return s;
}

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::S0: return "S0";
    case Rule::S1: return "S1";
    case Rule::S2: return "S2";
  }
  return "?";
}

SignedBinom sym_s0(std::uint64_t m, std::uint64_t k) {
  if (k > m) return SignedBinom::zero_value();
  return SignedBinom{+1, m, m - k, false};
}

SignedBinom semi_sym_s1(std::uint64_t k, std::uint64_t s, PrimeModulus p) {
  if (k >= p.value() || s > k) throw std::invalid_argument("semi_sym_s1: requires 0 <= s <= k < p");
  return SignedBinom{parity_sign(k + s), p.value() - 1 - s, k - s, false};
}

SignedBinom semi_sym_s2(std::uint64_t k, std::uint64_t s, PrimeModulus p) {
  if (k >= p.value() || s > k) throw std::invalid_argument("semi_sym_s2: requires 0 <= s <= k < p");
  return SignedBinom{parity_sign(s), p.value() - 1 - k + s, s, false};
}

SignedBinom corollary_form(std::uint64_t i, std::uint64_t k, PrimeModulus p) {
  if (i < 1 || i > p.value() || k > p.value() - i) {
    throw std::invalid_argument("corollary_form: requires 1 <= i <= p and 0 <= k <= p-i");
  }
  return SignedBinom{parity_sign(k), i - 1 + k, i - 1, false};
}

RegionMembership classify_region(std::uint64_t m, std::uint64_t k, PrimeModulus pm) {
  require_row(m, k, pm, "classify_region");
  const std::uint64_t p = pm.value();
  const std::uint64_t kp = std::min(k, m - k);  // regions are defined on the left half
  RegionMembership r;
  r.in_A = u128(2) * m <= u128(p - 1) + kp;
  r.in_B = (u128(m) + kp <= p - 1) && (u128(2) * m >= u128(p - 1) + kp);
  r.in_C = u128(m) + kp >= p - 1;
  r.on_S0 = u128(2) * k == m;
  r.on_S1 = u128(m) + k == p - 1;
  r.on_S2 = u128(2) * m == u128(p - 1) + k;
  return r;
}

SignedBinom reduce_canonical(std::uint64_t m, std::uint64_t k, PrimeModulus pm) {
  require_row(m, k, pm, "reduce_canonical");
  const std::uint64_t p = pm.value();
  const std::uint64_t t = std::min(k, m - k);
  if (u128(m) + t > p - 1) return SignedBinom{parity_sign(t), p - 1 - m + t, p - 1 - m, false};
  if (u128(2) * m > u128(p - 1) + t) return SignedBinom{parity_sign(t), p - 1 - m + t, t, false};
  return SignedBinom{+1, m, t, false};
}

ReductionTrace reduce_trace(std::uint64_t m, std::uint64_t k, PrimeModulus pm) {
  require_row(m, k, pm, "reduce_trace");
  const std::uint64_t p = pm.value();
  ReductionTrace trace{SignedBinom{+1, m, k, false}, {}};
  SignedBinom cur = trace.start;

  if (k > m - k) {
    cur = SignedBinom{+1, m, m - k, false};
    trace.steps.emplace_back(Rule::S0, cur);
  }
  bool s1_applied = false;
  if (u128(cur.top) + cur.bottom > p - 1) {
    // C(m,k) -> (-1)^{m+k} C(p-1-k, p-1-m); moves region C into A or B
    cur = SignedBinom{cur.sign * parity_sign(cur.top % 2 + cur.bottom % 2), p - 1 - cur.bottom,
                      p - 1 - cur.top, false};
    trace.steps.emplace_back(Rule::S1, cur);
    s1_applied = true;
  }
  if (u128(2) * cur.top > u128(p - 1) + cur.bottom) {
    // C(m,k) -> (-1)^k C(p-1-m+k, k); moves region B into A
    cur = SignedBinom{cur.sign * parity_sign(cur.bottom), p - 1 - cur.top + cur.bottom,
                      cur.bottom, false};
    trace.steps.emplace_back(Rule::S2, cur);
  } else if (s1_applied) {
    // After S1 the state is strictly inside B except on the S2 line itself,
    // where the reflection is the identity (the bottom index is even there
    // for odd p, so no sign is lost).
    assert(u128(2) * cur.top == u128(p - 1) + cur.bottom);
  }
  assert(trace.final_state() == reduce_canonical(m, k, pm));
  return trace;
}

}  // namespace lucaskit::symmetry

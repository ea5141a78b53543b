#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lucaskit/bench.hpp"
#include "lucaskit/congruences.hpp"
#include "lucaskit/identities.hpp"
#include "lucaskit/lucas.hpp"
#include "lucaskit/modarith.hpp"
#include "lucaskit/render.hpp"
#include "lucaskit/symmetry.hpp"

namespace {

namespace modarith = lucaskit::modarith;
namespace symmetry = lucaskit::symmetry;
namespace lucas = lucaskit::lucas;
namespace identities = lucaskit::identities;
namespace congruences = lucaskit::congruences;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadModulus = 2;
constexpr int kExitPrecondition = 3;

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// "7" or "3..101"
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = std::stoll(text);
  } else {
    r.lo = std::stoll(text.substr(0, dots));
    r.hi = std::stoll(text.substr(dots + 2));
  }
  if (r.hi < r.lo) throw CLI::ValidationError("range", "empty range: " + text);
  return r;
}

std::vector<std::uint64_t> primes_in(const Range& r) {
  std::vector<std::uint64_t> ps;
  for (std::int64_t n = std::max<std::int64_t>(r.lo, 2); n <= r.hi; ++n) {
    if (modarith::is_prime(static_cast<std::uint64_t>(n))) ps.push_back(n);
  }
  return ps;
}

std::string rat_str(const lucaskit::Rational& q) { return q.get_str(); }

void emit(std::ostream& out, const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_file, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + out_file);
  f << text;
}

struct VerifyStats {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  void line(bool ok, const std::string& text) {
    std::cout << (ok ? "PASS " : "FAIL ") << text << "\n";
    (ok ? pass : fail)++;
  }
  int exit_code() const { return fail == 0 ? kExitOk : kExitVerifyFailed; }
};

int run_verify_identity(const std::string& name, const std::string& n_opt,
                        const std::string& m_opt, const std::string& s_opt, bool duality) {
  const auto id = identities::identity_from_name(name);
  if (!id) throw CLI::ValidationError("name", "unknown identity: " + name);

  // default sweeps, overridable per flag
  Range n{0, 20}, m{1, 10}, s{1, 10};
  if (*id == identities::IdentityId::thm34) s = {1, 20};
  if (*id == identities::IdentityId::thm35) n = {1, 10};
  if (!n_opt.empty()) n = parse_range(n_opt);
  if (!m_opt.empty()) m = parse_range(m_opt);
  if (!s_opt.empty()) s = parse_range(s_opt);

  std::vector<std::vector<std::int64_t>> points;
  std::vector<std::string> labels;
  const auto label1 = [](const char* a, std::int64_t x) {
    return std::string(a) + "=" + std::to_string(x);
  };
  switch (*id) {
    case identities::IdentityId::thm31:
      for (auto i = n.lo; i <= n.hi; ++i) {
        points.push_back({i});
        labels.push_back(label1("n", i));
      }
      break;
    case identities::IdentityId::thm32:
    case identities::IdentityId::thm33:
      for (auto a = m.lo; a <= m.hi; ++a)
        for (auto b = s.lo; b <= s.hi; ++b) {
          points.push_back({a, b});
          labels.push_back(label1("m", a) + " " + label1("s", b));
        }
      break;
    case identities::IdentityId::thm34:
      for (auto b = s.lo; b <= s.hi; ++b) {
        points.push_back({b});
        labels.push_back(label1("s", b));
      }
      break;
    case identities::IdentityId::thm35:
      for (auto b = s.lo; b <= s.hi; ++b)
        for (auto i = n.lo; i <= n.hi; ++i) {
          points.push_back({b, i});
          labels.push_back(label1("s", b) + " " + label1("n", i));
        }
      break;
  }

  VerifyStats stats;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto rep = duality ? identities::duality_check(*id, points[i])
                             : identities::evaluate(*id, points[i]);
    std::string text = name + " " + labels[i] + " lhs=" + rat_str(rep.lhs) +
                       " rhs=" + rat_str(rep.rhs);
    if (rep.lift_prime) text += " lift_prime=" + rep.lift_prime->get_str();
    stats.line(rep.holds, text);
  }
  return stats.exit_code();
}

int run_verify_congruence(const std::string& name, const std::string& prime_opt,
                          const std::string& primes_opt, const std::string& s_opt,
                          const std::string& r_opt, const std::string& n_opt) {
  std::vector<std::uint64_t> primes;
  if (!prime_opt.empty()) {
    primes.push_back(std::stoull(prime_opt));
  } else if (!primes_opt.empty()) {
    primes = primes_in(parse_range(primes_opt));
  }

  VerifyStats stats;
  const auto res_str = [](modarith::Residue r) { return std::to_string(r.value()); };

  if (name == "thm41") {
    if (primes.empty()) primes = primes_in({3, 199});
    for (auto p : primes) {
      const modarith::PrimeModulus pm(p);
      const Range srange = s_opt.empty() ? Range{0, static_cast<std::int64_t>(p) - 2}
                                         : parse_range(s_opt);
      for (auto s = srange.lo; s <= srange.hi; ++s) {
        const auto rep = congruences::thm41_check(pm, s);
        stats.line(rep.holds, "thm41 p=" + std::to_string(p) + " s=" + std::to_string(s) +
                                  " lhs=" + res_str(rep.sides[0]) +
                                  " rhs=" + res_str(rep.sides[1]));
      }
    }
  } else if (name == "thm42") {
    if (primes.empty()) primes = primes_in({3, 101});
    for (auto p : primes) {
      const modarith::PrimeModulus pm(p);
      const Range rrange = r_opt.empty() ? Range{0, static_cast<std::int64_t>((p - 1) / 2)}
                                         : parse_range(r_opt);
      for (auto r = rrange.lo; r <= rrange.hi; ++r) {
        const auto rep = congruences::thm42_eval(pm, r);
        stats.line(rep.holds, "thm42 p=" + std::to_string(p) + " r=" + std::to_string(r) +
                                  " sum=" + res_str(rep.sides[0]) +
                                  " expected=" + res_str(*rep.expected));
      }
    }
  } else if (name == "thm43") {
    if (primes.empty()) primes = primes_in({3, 101});
    for (auto p : primes) {
      const auto rep = congruences::thm43_eval(modarith::PrimeModulus(p));
      std::string text = "thm43 p=" + std::to_string(p) + " F_p=" + res_str(rep.sides[2]) +
                         " F_p+1=" + res_str(rep.sides[5]);
      if (!rep.note.empty()) text += " (" + rep.note + ")";
      stats.line(rep.holds, text);
    }
  } else if (name == "harmonic") {
    if (primes.empty()) primes = primes_in({3, 499});
    for (auto p : primes) {
      const modarith::PrimeModulus pm(p);
      const auto sum = congruences::harmonic_mod(pm, p - 1);
      stats.line(sum.value() == 0,
                 "harmonic p=" + std::to_string(p) + " sum=" + res_str(sum));
    }
  } else if (name == "fib") {
    const std::uint64_t p = primes.empty() ? 10007 : primes.front();
    const modarith::PrimeModulus pm(p);
    const Range nrange = n_opt.empty() ? Range{1, 30} : parse_range(n_opt);
    for (auto n = nrange.lo; n <= nrange.hi; ++n) {
      const auto rep = congruences::fib_identity_check(n, pm);
      stats.line(rep.holds, "fib n=" + std::to_string(n) + " p=" + std::to_string(p) +
                                " F_{n+1}=" + res_str(rep.sides[1]) +
                                " F_n=" + res_str(rep.sides[3]));
    }
  } else {
    throw CLI::ValidationError("name", "unknown congruence: " + name);
  }
  return stats.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lucaskit: binomial coefficients modulo a prime via symmetry reductions"};
  app.require_subcommand(1);

  std::uint64_t arg_m = 0, arg_k = 0, arg_mod = 0;
  std::string method = "lucas";
  bool trace = false, annotate = false;
  std::string format = "ascii", out_file;
  std::uint64_t bench_count = 100000, bench_seed = 1;
  unsigned bench_bits = 40;
  std::string v_name, v_n, v_m, v_s, v_r, v_prime, v_primes;
  bool v_duality = false;

  auto* binom = app.add_subcommand("binom", "Compute C(m,k) mod a prime");
  binom->add_option("m", arg_m, "top index")->required();
  binom->add_option("k", arg_k, "bottom index")->required();
  binom->add_option("--mod", arg_mod, "prime modulus")->required();
  binom->add_option("--method", method, "table|lucas|extended")
      ->check(CLI::IsMember({"table", "lucas", "extended"}))
      ->capture_default_str();

  auto* reduce = app.add_subcommand("reduce", "Reduce C(m,k) into the fundamental region");
  reduce->add_option("m", arg_m, "top index")->required();
  reduce->add_option("k", arg_k, "bottom index")->required();
  reduce->add_option("--mod", arg_mod, "prime modulus")->required();
  reduce->add_flag("--trace", trace, "print the S0/S1/S2 step trace");

  auto* region = app.add_subcommand("region", "Classify C(m,k) in the mod-p triangle");
  region->add_option("m", arg_m, "top index")->required();
  region->add_option("k", arg_k, "bottom index")->required();
  region->add_option("--mod", arg_mod, "prime modulus")->required();

  auto* tri = app.add_subcommand("triangle", "Render the first p rows of the mod-p triangle");
  tri->add_option("--mod", arg_mod, "prime modulus")->required();
  tri->add_option("--format", format, "ascii|csv")
      ->check(CLI::IsMember({"ascii", "csv"}))
      ->capture_default_str();
  tri->add_flag("--annotate", annotate, "mark regions A/B/C and lines S0/S1/S2");
  tri->add_option("--out", out_file, "write to a file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Verify identities and congruences");
  verify->require_subcommand(1);
  auto* v_ident = verify->add_subcommand("identity", "thm31|thm32|thm33|thm34|thm35");
  v_ident->add_option("name", v_name, "identity name")->required();
  v_ident->add_option("--n", v_n, "value or range A..B");
  v_ident->add_option("--m", v_m, "value or range A..B");
  v_ident->add_option("--s", v_s, "value or range A..B");
  v_ident->add_flag("--duality", v_duality, "run the prime-lift duality check");
  auto* v_cong = verify->add_subcommand("congruence", "thm41|thm42|thm43|harmonic|fib");
  v_cong->add_option("name", v_name, "congruence name")->required();
  v_cong->add_option("--prime", v_prime, "single prime");
  v_cong->add_option("--primes", v_primes, "prime range A..B");
  v_cong->add_option("--s", v_s, "value or range A..B");
  v_cong->add_option("--r", v_r, "value or range A..B");
  v_cong->add_option("--n", v_n, "value or range A..B");

  auto* bench_cmd = app.add_subcommand("bench", "Compare the table/lucas/extended paths");
  bench_cmd->add_option("--mod", arg_mod, "prime modulus")->required();
  bench_cmd->add_option("--count", bench_count, "number of samples")->capture_default_str();
  bench_cmd->add_option("--bits", bench_bits, "bit width of the top index")->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed, "RNG seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (binom->parsed()) {
      const modarith::PrimeModulus p(arg_mod);
      if (method == "table") {
        const auto table = modarith::FactorialTable::shared(p);
        std::cout << modarith::binom_mod_table(arg_m, arg_k, *table).value() << "\n";
      } else if (method == "lucas") {
        std::cout << lucas::lucas_mod(arg_m, arg_k, p).value() << "\n";
      } else {
        const auto table = modarith::FactorialTable::shared(p);
        const auto f = lucas::extended_lucas_mod(arg_m, arg_k, *table);
        std::cout << f.value.value() << "\n";
        std::string factors, residues;
        for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) {
          if (!factors.empty()) {
            factors += " * ";
            residues += " * ";
          }
          factors += it->str();
          residues += std::to_string(it->value_mod(*table).value());
        }
        std::cout << "factors: " << factors << "\n";
        std::cout << "residues: " << residues << "\n";
      }
    } else if (reduce->parsed()) {
      const modarith::PrimeModulus p(arg_mod);
      const auto tr = symmetry::reduce_trace(arg_m, arg_k, p);
      if (trace) {
        for (const auto& [rule, state] : tr.steps) {
          std::cout << symmetry::rule_name(rule) << ": " << state.str() << "\n";
        }
      }
      const auto table = modarith::FactorialTable::shared(p);
      const auto& fin = tr.final_state();
      std::cout << fin.str() << " = " << fin.value_mod(*table).value() << " (mod " << arg_mod
                << ")\n";
    } else if (region->parsed()) {
      const modarith::PrimeModulus p(arg_mod);
      const auto r = symmetry::classify_region(arg_m, arg_k, p);
      std::cout << r.region_letters();
      const auto lines = r.line_labels();
      if (!lines.empty()) {
        std::cout << " (on";
        if (r.on_S0) std::cout << " S0";
        if (r.on_S1) std::cout << " S1";
        if (r.on_S2) std::cout << " S2";
        std::cout << ")";
      }
      std::cout << "\n";
    } else if (tri->parsed()) {
      const modarith::PrimeModulus p(arg_mod);
      const auto fmt = format == "csv" ? lucaskit::render::Format::csv
                                       : lucaskit::render::Format::ascii;
      emit(std::cout, lucaskit::render::triangle(p, fmt, annotate), out_file);
    } else if (v_ident->parsed()) {
      return run_verify_identity(v_name, v_n, v_m, v_s, v_duality);
    } else if (v_cong->parsed()) {
      return run_verify_congruence(v_name, v_prime, v_primes, v_s, v_r, v_n);
    } else if (bench_cmd->parsed()) {
      lucaskit::bench::Options options;
      options.prime = arg_mod;
      options.count = bench_count;
      options.bits = bench_bits;
      options.seed = bench_seed;
      const auto result = lucaskit::bench::run(options);
      std::cout << lucaskit::bench::format(options, result);
      if (!result.agree || result.factors_top_ge_p != 0) return kExitVerifyFailed;
    }
  } catch (const modarith::not_prime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadModulus;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  }
  return kExitOk;
}

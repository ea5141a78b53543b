#include "lucaskit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>
#include <vector>

#include "lucaskit/lucas.hpp"

namespace lucaskit::bench {

namespace {

using Clock = std::chrono::steady_clock;

double per_op_ns(Clock::time_point start, Clock::time_point stop, std::uint64_t ops) {
  if (ops == 0) return 0.0;
  const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
  return static_cast<double>(ns) / static_cast<double>(ops);
}

}  // namespace

Result run(const Options& options) {
  const modarith::PrimeModulus p(options.prime);
  const auto table = modarith::FactorialTable::shared(p);
  const unsigned bits = options.bits == 0 ? 1 : std::min(options.bits, 62u);

  std::mt19937_64 rng(options.seed);
  const std::uint64_t mask = (bits >= 64) ? ~0ull : ((1ull << bits) - 1);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;
  samples.reserve(options.count);
  for (std::uint64_t i = 0; i < options.count; ++i) {
    const std::uint64_t m = rng() & mask;
    const std::uint64_t k = (m == 0) ? 0 : rng() % (m + 1);
    samples.emplace_back(m, k);
  }

  Result result;
  result.samples = samples.size();

  std::vector<std::uint64_t> lucas_values(samples.size());
  const auto t0 = Clock::now();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    lucas_values[i] = lucas::lucas_mod(samples[i].first, samples[i].second, *table).value();
  }
  const auto t1 = Clock::now();
  result.lucas_ns = per_op_ns(t0, t1, samples.size());

  const auto t2 = Clock::now();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto f = lucas::extended_lucas_mod(samples[i].first, samples[i].second, *table);
    for (const auto& factor : f.factors) {
      if (factor.zero) continue;
      if (factor.top >= p.value()) ++result.factors_top_ge_p;
      if (factor.bottom > result.max_reduced_bottom) result.max_reduced_bottom = factor.bottom;
    }
    if (f.value.value() != lucas_values[i]) result.agree = false;
  }
  const auto t3 = Clock::now();
  result.extended_ns = per_op_ns(t2, t3, samples.size());

  const auto t4 = Clock::now();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].first >= p.value()) continue;
    ++result.table_samples;
    const auto r = modarith::binom_mod_table(samples[i].first, samples[i].second, *table);
    if (r.value() != lucas_values[i]) result.agree = false;
  }
  const auto t5 = Clock::now();
  result.table_ns = per_op_ns(t4, t5, result.table_samples);

  return result;
}

std::string format(const Options& options, const Result& result) {
  std::ostringstream out;
  out << "prime " << options.prime << ", samples " << result.samples << ", bits "
      << options.bits << ", seed " << options.seed << "\n";
  const auto row = [&out](const char* name, double ns, std::uint64_t n) {
    out << std::left << std::setw(10) << name;
    if (n == 0) {
      out << std::right << std::setw(10) << "n/a";
    } else {
      out << std::right << std::setw(10) << std::fixed << std::setprecision(1) << ns;
    }
    out << std::setw(12) << n << "\n";
  };
  out << std::left << std::setw(10) << "method" << std::right << std::setw(10) << "ns/op"
      << std::setw(12) << "samples" << "\n";
  row("table", result.table_ns, result.table_samples);
  row("lucas", result.lucas_ns, result.samples);
  row("extended", result.extended_ns, result.samples);
  out << "max reduced bottom: " << result.max_reduced_bottom << "\n";
  out << "factors with top >= p: " << result.factors_top_ge_p << "\n";
  out << "agreement: " << (result.agree ? "OK" : "MISMATCH") << "\n";
  return out.str();
}

}  // namespace lucaskit::bench

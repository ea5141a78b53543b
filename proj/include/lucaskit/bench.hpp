#pragma once

#include <cstdint>
#include <string>

#include "lucaskit/modarith.hpp"

namespace lucaskit::bench {

struct Options {
  std::uint64_t prime = 251;
  std::uint64_t count = 100000;
  unsigned bits = 40;  // top indices drawn uniformly from [0, 2^bits)
  std::uint64_t seed = 1;
};

struct Result {
  double table_ns = 0.0;   // per-op, over the samples with m < p
  double lucas_ns = 0.0;
  double extended_ns = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t table_samples = 0;
  std::uint64_t max_reduced_bottom = 0;   // over all non-zero extended factors
  std::uint64_t factors_top_ge_p = 0;     // structural violation counter; must stay 0
  bool agree = true;                      // all methods agree wherever applicable
};

/// Deterministic input stream from the seed; times the table / classic /
/// extended paths and cross-checks their results.
Result run(const Options& options);

std::string format(const Options& options, const Result& result);

}  // namespace lucaskit::bench

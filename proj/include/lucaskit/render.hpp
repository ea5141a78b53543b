#pragma once

#include <string>

#include "lucaskit/modarith.hpp"

namespace lucaskit::render {

using modarith::PrimeModulus;

enum class Format { ascii, csv };

/// Rows 0..p-1 of the mod-p triangle, deterministic byte-for-byte for a
/// given (p, format, annotate). Annotated cells carry the region letters
/// and, where present, the S0/S1/S2 line labels:
///   ascii:  10[AB|S2]
///   csv:    10:AB:S2
/// Render cap: p <= 1009.
std::string triangle(PrimeModulus p, Format format, bool annotate);

}  // namespace lucaskit::render

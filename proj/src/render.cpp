#include "lucaskit/render.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lucaskit/symmetry.hpp"

namespace lucaskit::render {

namespace {

constexpr std::uint64_t kRenderCap = 1009;

std::string cell_text(std::uint64_t value, std::uint64_t m, std::uint64_t k, PrimeModulus p,
                      Format format, bool annotate) {
  std::string s = std::to_string(value);
  if (!annotate) return s;
  const auto region = symmetry::classify_region(m, k, p);
  const std::string letters = region.region_letters();
  const std::string lines = region.line_labels();
  if (format == Format::csv) {
    s += ':' + letters;
    if (!lines.empty()) s += ':' + lines;
  } else {
    s += '[' + letters;
    if (!lines.empty()) s += '|' + lines;
    s += ']';
  }
  return s;
}

}  // namespace

std::string triangle(PrimeModulus p, Format format, bool annotate) {
  const std::uint64_t n = p.value();
  if (n > kRenderCap) {
    throw std::invalid_argument("triangle: prime exceeds the render cap " +
                                std::to_string(kRenderCap));
  }
  const auto table = modarith::FactorialTable::shared(p);

  std::vector<std::vector<std::string>> rows(n);
  std::size_t width = 0;
  for (std::uint64_t m = 0; m < n; ++m) {
    rows[m].reserve(m + 1);
    for (std::uint64_t k = 0; k <= m; ++k) {
      const std::uint64_t v = modarith::binom_mod_table(m, k, *table).value();
      rows[m].push_back(cell_text(v, m, k, p, format, annotate));
      width = std::max(width, rows[m].back().size());
    }
  }

  std::string out;
  if (format == Format::csv) {
    for (const auto& row : rows) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (k > 0) out += ',';
        out += row[k];
      }
      out += '\n';
    }
    return out;
  }

  for (std::uint64_t m = 0; m < n; ++m) {
    std::string line((n - 1 - m) * (width + 1) / 2, ' ');
    for (std::size_t k = 0; k < rows[m].size(); ++k) {
      if (k > 0) line += ' ';
      line += rows[m][k];
      if (k + 1 < rows[m].size()) line.append(width - rows[m][k].size(), ' ');
    }
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace lucaskit::render

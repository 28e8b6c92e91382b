#pragma once

// Tabular export of every gap at every Farey fraction up to a denominator
// bound: edges, width and both regimes' Hall conductances.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hofstadter {

struct GapRecord {
  std::int64_t p = 0;
  std::int64_t q = 1;
  int j = 0;
  double e_lo = 0.0;
  double e_hi = 0.0;
  double width = 0.0;
  std::int64_t sigma_tb = 0;
  std::optional<std::int64_t> sigma_landau;  // empty for p = 0
  std::optional<bool> ambiguous_landau;

  friend bool operator==(const GapRecord&, const GapRecord&) = default;
};

inline constexpr const char* kGapCsvHeader = "p,q,j,e_lo,e_hi,width,sigma_tb,sigma_landau,ambiguous_landau";

/// Formats a float to 12 significant digits ("%.12g").
std::string format_real(double value);

/// Rows for every gap of every fraction in farey_sequence(q_max), sorted by
/// (q, p, j). Floats are rounded to 12 significant digits.
std::vector<GapRecord> build_gap_table(std::int64_t q_max);

std::string gap_table_csv(const std::vector<GapRecord>& rows);
std::string gap_table_json(const std::vector<GapRecord>& rows);

/// Inverse of the writers above; throw std::invalid_argument on malformed input.
std::vector<GapRecord> parse_gap_table_csv(const std::string& text);
std::vector<GapRecord> parse_gap_table_json(const std::string& text);

}  // namespace hofstadter

#pragma once

// Exact rational arithmetic for magnetic flux values: reduced fractions,
// the extended Euclid algorithm, Farey enumeration and best rational
// approximation. Everything here is integer-exact.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hofstadter {

/// Largest denominator accepted by the enumeration and approximation routines.
/// Keeps every intermediate product comfortably inside 64 bits.
inline constexpr std::int64_t kMaxDenominator = 1'000'000;

/// Flux p/q in lowest terms. p >= 0, q >= 1, gcd(p, q) == 1.
class ReducedFraction {
 public:
  /// 0/1.
  constexpr ReducedFraction() = default;

  /// Throws std::invalid_argument unless p >= 0, q >= 1 and gcd(p, q) == 1.
  ReducedFraction(std::int64_t p, std::int64_t q);

  /// Reduces p/q to lowest terms first. Throws on p < 0 or q < 1.
  static ReducedFraction reduce(std::int64_t p, std::int64_t q);

  [[nodiscard]] constexpr std::int64_t p() const noexcept { return p_; }
  [[nodiscard]] constexpr std::int64_t q() const noexcept { return q_; }
  [[nodiscard]] double value() const noexcept {
    return static_cast<double>(p_) / static_cast<double>(q_);
  }
  [[nodiscard]] std::string to_string() const;

  friend constexpr bool operator==(const ReducedFraction&, const ReducedFraction&) = default;

  /// Orders by numeric value (cross multiplication, exact).
  friend std::strong_ordering operator<=>(const ReducedFraction& a, const ReducedFraction& b) noexcept {
    return a.p_ * b.q_ <=> b.p_ * a.q_;
  }

 private:
  std::int64_t p_ = 0;
  std::int64_t q_ = 1;
};

std::ostream& operator<<(std::ostream& os, const ReducedFraction& f);

/// Solution (m, n) of p*m - q*n = 1 with m in [0, q).
struct DiophantinePair {
  std::int64_t m = 0;
  std::int64_t n = 0;
  friend constexpr bool operator==(const DiophantinePair&, const DiophantinePair&) = default;
};

struct GcdResult {
  std::int64_t g = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;
};

/// g = gcd(a, b) together with Bezout coefficients a*x + b*y = g.
/// Throws std::invalid_argument when a or b is negative or both are zero.
GcdResult extended_gcd(std::int64_t a, std::int64_t b);

/// Conjugate pair of a coprime flux. For q == 1 the result is m = 0.
DiophantinePair conjugate_pair(const ReducedFraction& f);

/// Overload for raw integers; throws std::invalid_argument if gcd(p, q) != 1.
DiophantinePair conjugate_pair(std::int64_t p, std::int64_t q);

/// All reduced fractions in [0, 1] with denominator <= q_max, increasing.
std::vector<ReducedFraction> farey_sequence(std::int64_t q_max);

/// Closest fraction in [0, 1] with denominator <= q_max. Ties go to the
/// smaller denominator, then the smaller numerator.
ReducedFraction best_approximant(double x, std::int64_t q_max);

/// Same rule for an exact rational target num/den in [0, 1]; comparisons are
/// carried out in 128-bit integer arithmetic, so ties are resolved exactly.
ReducedFraction best_approximant(std::int64_t num, std::int64_t den, std::int64_t q_max);

}  // namespace hofstadter

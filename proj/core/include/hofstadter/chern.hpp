#pragma once

// Gap labels from the Diophantine equation p m - q n = 1.
//
// Tight-binding regime (weak field splitting a Bloch band): the Hall
// conductance of gap j is k_j = j m mod q, taken in (-q/2, q/2].
// Split-Landau regime (strong field, weak potential): the same rule with p
// and q interchanged, so the residue is taken modulo p.

#include <cstdint>
#include <string_view>
#include <vector>

#include "hofstadter/rationals.hpp"

namespace hofstadter {

enum class Regime { TightBinding, LandauSplit };

std::string_view to_string(Regime r) noexcept;

/// Parses "tb" / "landau" (also the long names). Throws std::invalid_argument.
Regime parse_regime(std::string_view text);

struct CenteredResidue {
  std::int64_t value = 0;
  /// True when modulus is even and value == modulus / 2, where both signs
  /// satisfy |k| <= modulus / 2.
  bool ambiguous = false;
};

/// r = a (mod modulus) with r in (-modulus/2, modulus/2]. Throws on modulus < 1.
CenteredResidue centered_residue(std::int64_t a, std::int64_t modulus);

struct GapLabel {
  int index = 0;           // j = 1..q-1
  std::int64_t sigma = 0;  // Hall conductance in units of e^2/h
  Regime regime = Regime::TightBinding;
  bool ambiguous = false;
};

/// One label per gap, j = 1..q-1, including gaps of zero width.
/// LandauSplit requires p >= 1.
std::vector<GapLabel> gap_labels(const ReducedFraction& f, Regime regime);

/// Per-band Chern numbers C_r = k_r - k_(r-1), with k_0 = 0 and k_q the
/// endpoint residue of the regime (0 for TightBinding).
std::vector<std::int64_t> band_cherns(const std::vector<GapLabel>& labels, const ReducedFraction& f,
                                      Regime regime);

}  // namespace hofstadter

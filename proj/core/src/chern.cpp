#include "hofstadter/chern.hpp"

#include <stdexcept>
#include <string>

namespace hofstadter {

std::string_view to_string(Regime r) noexcept {
  return r == Regime::TightBinding ? "tb" : "landau";
}

Regime parse_regime(std::string_view text) {
  if (text == "tb" || text == "tight-binding") return Regime::TightBinding;
  if (text == "landau" || text == "landau-split") return Regime::LandauSplit;
  throw std::invalid_argument("unknown regime '" + std::string(text) + "' (expected tb or landau)");
}

CenteredResidue centered_residue(std::int64_t a, std::int64_t modulus) {
  if (modulus < 1) throw std::invalid_argument("centered_residue: modulus must be >= 1");
  std::int64_t r = a % modulus;
  if (r < 0) r += modulus;
  // r in [0, modulus); shift the upper half down.
  if (2 * r > modulus) r -= modulus;
  return {r, modulus % 2 == 0 && 2 * r == modulus};
}

namespace {

// Multiplier and modulus of k_j = j * m mod modulus for the given regime.
struct LabelRule {
  std::int64_t m;
  std::int64_t modulus;
};

LabelRule label_rule(const ReducedFraction& f, Regime regime) {
  if (regime == Regime::TightBinding) {
    return {conjugate_pair(f).m, f.q()};
  }
  if (f.p() == 0) {
    throw std::invalid_argument("split-Landau labels are undefined at inverse flux 0");
  }
  // Interchanged roles: q m~ - p n~ = 1, m~ determined modulo p.
  return {conjugate_pair(ReducedFraction(f.q(), f.p())).m, f.p()};
}

}  // namespace

std::vector<GapLabel> gap_labels(const ReducedFraction& f, Regime regime) {
  const LabelRule rule = label_rule(f, regime);
  std::vector<GapLabel> labels;
  labels.reserve(static_cast<std::size_t>(f.q() - 1));
  for (std::int64_t j = 1; j < f.q(); ++j) {
    const CenteredResidue k = centered_residue(j * rule.m, rule.modulus);
    labels.push_back({static_cast<int>(j), k.value, regime, k.ambiguous});
  }
  return labels;
}

std::vector<std::int64_t> band_cherns(const std::vector<GapLabel>& labels, const ReducedFraction& f,
                                      Regime regime) {
  if (labels.size() + 1 != static_cast<std::size_t>(f.q())) {
    throw std::invalid_argument("band_cherns: expected q-1 labels for " + f.to_string());
  }
  const LabelRule rule = label_rule(f, regime);
  const std::int64_t last = centered_residue(f.q() * rule.m, rule.modulus).value;

  std::vector<std::int64_t> cherns;
  cherns.reserve(labels.size() + 1);
  std::int64_t below = 0;
  for (const GapLabel& label : labels) {
    cherns.push_back(label.sigma - below);
    below = label.sigma;
  }
  cherns.push_back(last - below);
  return cherns;
}

}  // namespace hofstadter
